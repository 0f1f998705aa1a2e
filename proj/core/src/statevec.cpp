// Copyright 2026 The qsr Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsr/statevec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "qsr/error.hpp"
#include "qsr/rng.hpp"

namespace qsr {

namespace {

constexpr Complex kI{0.0, 1.0};

bool is_power_of_two(std::size_t n) noexcept { return n >= 2 && (n & (n - 1)) == 0; }

} // namespace

double canonical_angle(double radians) noexcept {
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a value just below a multiple of 2pi can round up to 2pi itself.
    if (r >= kTwoPi) {
        r = 0.0;
    }
    return r;
}

Mat2 Mat2::identity() {
    Mat2 out;
    out(0, 0) = 1.0;
    out(1, 1) = 1.0;
    return out;
}

Mat2 Mat2::operator*(const Mat2& rhs) const {
    Mat2 out;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            out(r, c) = (*this)(r, 0) * rhs(0, c) + (*this)(r, 1) * rhs(1, c);
        }
    }
    return out;
}

Mat2 Mat2::adjoint() const {
    Mat2 out;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            out(r, c) = std::conj((*this)(c, r));
        }
    }
    return out;
}

double Mat2::max_abs_diff(const Mat2& rhs) const {
    double worst = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        worst = std::max(worst, std::abs(m[k] - rhs.m[k]));
    }
    return worst;
}

Mat2 Gate::matrix() const {
    Mat2 u;
    const double half = angle_ / 2.0;
    switch (kind_) {
    case GateKind::I:
        return Mat2::identity();
    case GateKind::X:
        u(0, 1) = 1.0;
        u(1, 0) = 1.0;
        return u;
    case GateKind::Z:
        u(0, 0) = 1.0;
        u(1, 1) = -1.0;
        return u;
    case GateKind::H: {
        const double s = 1.0 / std::sqrt(2.0);
        u(0, 0) = s;
        u(0, 1) = s;
        u(1, 0) = s;
        u(1, 1) = -s;
        return u;
    }
    case GateKind::RX:
        u(0, 0) = std::cos(half);
        u(0, 1) = -kI * std::sin(half);
        u(1, 0) = -kI * std::sin(half);
        u(1, 1) = std::cos(half);
        return u;
    case GateKind::RY:
        u(0, 0) = std::cos(half);
        u(0, 1) = -std::sin(half);
        u(1, 0) = std::sin(half);
        u(1, 1) = std::cos(half);
        return u;
    case GateKind::RZ:
        u(0, 0) = std::exp(-kI * half);
        u(1, 1) = std::exp(kI * half);
        return u;
    case GateKind::CZ:
        break;
    }
    throw Error(ErrorKind::ArityError, "CZ is a two-qubit gate");
}

std::array<Complex, 16> Gate::matrix4() const {
    if (kind_ != GateKind::CZ) {
        throw Error(ErrorKind::ArityError, "single-qubit gate has no 4x4 form");
    }
    std::array<Complex, 16> out{};
    for (std::size_t k = 0; k < 4; ++k) {
        out[5 * k] = (k == 3) ? -1.0 : 1.0;
    }
    return out;
}

Statevector::Statevector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw Error(ErrorKind::InvalidArity,
                    "qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                        std::to_string(num_qubits));
    }
    amps_.assign(std::size_t{1} << num_qubits, Complex{});
    amps_[0] = 1.0;
}

Statevector::Statevector(std::size_t num_qubits, std::vector<Complex> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {}

Statevector Statevector::from_amplitudes(std::vector<Complex> amps) {
    if (!is_power_of_two(amps.size())) {
        throw Error(ErrorKind::DimensionError,
                    "amplitude count must be a power of two >= 2, got " + std::to_string(amps.size()));
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(amps.size()));
    if (n > kMaxQubits) {
        throw Error(ErrorKind::InvalidArity, "too many qubits");
    }
    double norm = 0.0;
    for (const auto& a : amps) {
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > 1e-9) {
        throw Error(ErrorKind::DimensionError, "amplitudes are not normalized");
    }
    return Statevector(n, std::move(amps));
}

Statevector Statevector::from_amplitudes(std::initializer_list<Complex> amps) {
    return from_amplitudes(std::vector<Complex>(amps));
}

Statevector Statevector::product(std::span<const Statevector> factors) {
    if (factors.empty()) {
        throw Error(ErrorKind::InvalidArity, "empty tensor product");
    }
    std::size_t total = 0;
    for (const auto& f : factors) {
        total += f.num_qubits();
    }
    if (total > kMaxQubits) {
        throw Error(ErrorKind::InvalidArity, "tensor product exceeds qubit limit");
    }
    std::vector<Complex> amps = factors[0].amps_;
    for (std::size_t k = 1; k < factors.size(); ++k) {
        const auto& high = factors[k].amps_;
        std::vector<Complex> next(amps.size() * high.size());
        for (std::size_t h = 0; h < high.size(); ++h) {
            for (std::size_t l = 0; l < amps.size(); ++l) {
                next[h * amps.size() + l] = high[h] * amps[l];
            }
        }
        amps = std::move(next);
    }
    return Statevector(total, std::move(amps));
}

double Statevector::norm_squared() const noexcept {
    double norm = 0.0;
    for (const auto& a : amps_) {
        norm += std::norm(a);
    }
    return norm;
}

void Statevector::check_target(std::size_t target) const {
    if (target >= num_qubits_) {
        throw Error(ErrorKind::IndexError, "qubit " + std::to_string(target) + " out of range for " +
                                               std::to_string(num_qubits_) + " qubits");
    }
}

void Statevector::apply_1q(const Gate& gate, std::size_t target) {
    if (gate.is_two_qubit()) {
        throw Error(ErrorKind::ArityError, "apply_1q given a two-qubit gate");
    }
    apply_matrix(gate.matrix(), target);
}

void Statevector::apply_matrix(const Mat2& u, std::size_t target) {
    check_target(target);
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + stride;
            const Complex a0 = amps_[i0];
            const Complex a1 = amps_[i1];
            amps_[i0] = u(0, 0) * a0 + u(0, 1) * a1;
            amps_[i1] = u(1, 0) * a0 + u(1, 1) * a1;
        }
    }
}

void Statevector::apply_cz(std::size_t a, std::size_t b) {
    check_target(a);
    check_target(b);
    if (a == b) {
        throw Error(ErrorKind::IndexError, "CZ needs two distinct qubits");
    }
    const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == mask) {
            amps_[i] = -amps_[i];
        }
    }
}

void Statevector::apply_controlled_swap(std::size_t control, std::size_t a, std::size_t b) {
    check_target(control);
    check_target(a);
    check_target(b);
    if (control == a || control == b || a == b) {
        throw Error(ErrorKind::IndexError, "controlled swap needs three distinct qubits");
    }
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t abit = std::size_t{1} << a;
    const std::size_t bbit = std::size_t{1} << b;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        // Visit each swapped pair once, from its |a=1, b=0> member.
        if ((i & cbit) && (i & abit) && !(i & bbit)) {
            std::swap(amps_[i], amps_[(i ^ abit) | bbit]);
        }
    }
}

double Statevector::probability(std::size_t target, Basis basis, int bit) const {
    check_target(target);
    const std::size_t mask = std::size_t{1} << target;
    const std::size_t want = bit ? mask : 0;
    double p = 0.0;
    if (basis == Basis::Z) {
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & mask) == want) {
                p += std::norm(amps_[i]);
            }
        }
        return p;
    }
    const double s = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == 0) {
            const Complex a0 = amps_[i];
            const Complex a1 = amps_[i | mask];
            p += std::norm(bit ? s * (a0 - a1) : s * (a0 + a1));
        }
    }
    return p;
}

void Statevector::project(std::size_t target, int bit) {
    const std::size_t mask = std::size_t{1} << target;
    const std::size_t want = bit ? mask : 0;
    double norm = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) != want) {
            amps_[i] = 0.0;
        } else {
            norm += std::norm(amps_[i]);
        }
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& a : amps_) {
        a *= scale;
    }
}

Measurement Statevector::measure(std::size_t target, Basis basis, const OutcomePolicy& policy) {
    check_target(target);
    const double p0 = probability(target, basis, 0);
    const double p1 = probability(target, basis, 1);
    int outcome = 0;
    if (const auto* forced = std::get_if<Forced>(&policy)) {
        if (forced->bit != 0 && forced->bit != 1) {
            throw Error(ErrorKind::ImpossibleOutcome, "forced outcome must be 0 or 1");
        }
        outcome = forced->bit;
        if ((outcome ? p1 : p0) < kImpossibleBranch) {
            throw Error(ErrorKind::ImpossibleOutcome,
                        "forced branch " + std::to_string(outcome) + " has probability " +
                            std::to_string(outcome ? p1 : p0));
        }
    } else {
        Rng rng(std::get<Sample>(policy).seed);
        outcome = rng.uniform() < p0 / (p0 + p1) ? 0 : 1;
    }
    const Gate h = Gate::h();
    if (basis == Basis::X) {
        apply_1q(h, target);
    }
    project(target, outcome);
    if (basis == Basis::X) {
        apply_1q(h, target);
    }
    return {outcome, outcome ? p1 : p0};
}

Statevector Statevector::contract(std::size_t target, const Statevector& bra) const {
    check_target(target);
    if (bra.num_qubits() != 1) {
        throw Error(ErrorKind::DimensionError, "contraction needs a single-qubit bra");
    }
    if (num_qubits_ == 1) {
        throw Error(ErrorKind::InvalidArity, "cannot contract the only qubit");
    }
    const std::size_t mask = std::size_t{1} << target;
    const std::size_t low = mask - 1;
    std::vector<Complex> out(amps_.size() / 2);
    for (std::size_t j = 0; j < out.size(); ++j) {
        const std::size_t i0 = ((j & ~low) << 1) | (j & low);
        out[j] = std::conj(bra[0]) * amps_[i0] + std::conj(bra[1]) * amps_[i0 | mask];
    }
    double norm = 0.0;
    for (const auto& a : out) {
        norm += std::norm(a);
    }
    if (norm < kImpossibleBranch) {
        throw Error(ErrorKind::DimensionError, "contraction annihilates the state");
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& a : out) {
        a *= scale;
    }
    return Statevector(num_qubits_ - 1, std::move(out));
}

void Statevector::scale_phase(Complex phase) {
    for (auto& a : amps_) {
        a *= phase;
    }
}

Statevector basis_state(Basis basis, int bit) {
    const double s = 1.0 / std::sqrt(2.0);
    if (basis == Basis::Z) {
        return bit ? Statevector::from_amplitudes({0.0, 1.0}) : Statevector::from_amplitudes({1.0, 0.0});
    }
    return bit ? Statevector::from_amplitudes({s, -s}) : Statevector::from_amplitudes({s, s});
}

double fidelity_up_to_phase(const Statevector& a, const Statevector& b) {
    if (a.dimension() != b.dimension()) {
        throw Error(ErrorKind::DimensionError, "fidelity of states with different qubit counts");
    }
    Complex inner{};
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        inner += std::conj(a[i]) * b[i];
    }
    return std::min(1.0, std::norm(inner));
}

double max_amplitude_diff(const Statevector& a, const Statevector& b) {
    if (a.dimension() != b.dimension()) {
        throw Error(ErrorKind::DimensionError, "comparing states with different qubit counts");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

std::string to_string(const Statevector& state) {
    std::ostringstream os;
    os.precision(6);
    os << '[';
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        if (i) {
            os << ", ";
        }
        os << '(' << state[i].real() << (state[i].imag() < 0 ? "" : "+") << state[i].imag() << "i)";
    }
    os << ']';
    return os.str();
}

} // namespace qsr
