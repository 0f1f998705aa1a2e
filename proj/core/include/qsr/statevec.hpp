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

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qsr {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Reduces an angle in radians to [0, 2pi).
double canonical_angle(double radians) noexcept;

/// Dense row-major 2x2 complex matrix.
struct Mat2 {
    std::array<Complex, 4> m{};

    Complex operator()(std::size_t row, std::size_t col) const { return m[2 * row + col]; }
    Complex& operator()(std::size_t row, std::size_t col) { return m[2 * row + col]; }

    static Mat2 identity();
    Mat2 operator*(const Mat2& rhs) const;
    [[nodiscard]] Mat2 adjoint() const;
    /// Largest absolute entry difference.
    [[nodiscard]] double max_abs_diff(const Mat2& rhs) const;
};

enum class GateKind { I, X, Z, H, RX, RY, RZ, CZ };

/// One of the fixed gate set. Rotation angles are stored canonicalized to
/// [0, 2pi); the rotation matrices use the symmetric e^{-i t/2} form.
class Gate {
public:
    static Gate i() { return Gate(GateKind::I, 0.0); }
    static Gate x() { return Gate(GateKind::X, 0.0); }
    static Gate z() { return Gate(GateKind::Z, 0.0); }
    static Gate h() { return Gate(GateKind::H, 0.0); }
    static Gate rx(double radians) { return Gate(GateKind::RX, canonical_angle(radians)); }
    static Gate ry(double radians) { return Gate(GateKind::RY, canonical_angle(radians)); }
    static Gate rz(double radians) { return Gate(GateKind::RZ, canonical_angle(radians)); }
    static Gate cz() { return Gate(GateKind::CZ, 0.0); }

    [[nodiscard]] GateKind kind() const noexcept { return kind_; }
    [[nodiscard]] double angle() const noexcept { return angle_; }
    [[nodiscard]] bool is_two_qubit() const noexcept { return kind_ == GateKind::CZ; }

    /// 2x2 matrix of a single-qubit gate; ArityError for CZ.
    [[nodiscard]] Mat2 matrix() const;
    /// 4x4 matrix in the |b1 b0> basis order (index = b0 + 2 b1).
    [[nodiscard]] std::array<Complex, 16> matrix4() const;

private:
    Gate(GateKind kind, double angle) : kind_(kind), angle_(angle) {}

    GateKind kind_;
    double angle_;
};

enum class Basis { Z, X };

struct Sample {
    std::uint64_t seed;
};
struct Forced {
    int bit;
};
using OutcomePolicy = std::variant<Sample, Forced>;

/// Branches below this probability cannot be forced.
inline constexpr double kImpossibleBranch = 1e-12;

struct Measurement {
    int outcome;
    double probability;
};

/// Dense amplitude vector. Qubit k is bit k of the basis index (qubit 0 is
/// the least-significant bit).
class Statevector {
public:
    static constexpr std::size_t kMaxQubits = 24;

    /// |0...0> on num_qubits qubits; InvalidArity when num_qubits is 0 or too large.
    explicit Statevector(std::size_t num_qubits);

    /// Takes ownership of the amplitudes; the size must be a power of two >= 2
    /// and the vector normalized within 1e-9.
    static Statevector from_amplitudes(std::vector<Complex> amps);
    static Statevector from_amplitudes(std::initializer_list<Complex> amps);

    /// Tensor product; factors[0] occupies the lowest qubits.
    static Statevector product(std::span<const Statevector> factors);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] Complex operator[](std::size_t index) const { return amps_[index]; }
    [[nodiscard]] double norm_squared() const noexcept;

    void apply_1q(const Gate& gate, std::size_t target);
    void apply_matrix(const Mat2& u, std::size_t target);
    void apply_cz(std::size_t a, std::size_t b);
    void apply_controlled_swap(std::size_t control, std::size_t a, std::size_t b);

    /// P(outcome = bit) for a measurement of target in the given basis.
    [[nodiscard]] double probability(std::size_t target, Basis basis, int bit) const;

    /// Projective measurement. The measured qubit stays in the outcome state
    /// (|0>/|1> or |+>/|->) and the state is renormalized.
    Measurement measure(std::size_t target, Basis basis, const OutcomePolicy& policy);

    /// Contracts qubit `target` with <bra| and returns the normalized state of
    /// the remaining qubits (relative order kept). DimensionError if the
    /// contraction vanishes.
    [[nodiscard]] Statevector contract(std::size_t target, const Statevector& bra) const;

    /// Multiplies every amplitude by a unit-modulus scalar.
    void scale_phase(Complex phase);

private:
    Statevector(std::size_t num_qubits, std::vector<Complex> amps);

    void check_target(std::size_t target) const;
    void project(std::size_t target, int bit);

    std::size_t num_qubits_ = 0;
    std::vector<Complex> amps_;
};

inline Statevector new_state(std::size_t num_qubits) { return Statevector(num_qubits); }

/// Single-qubit computational or Hadamard basis state.
Statevector basis_state(Basis basis, int bit);

/// |<a|b>|^2; DimensionError on mismatched sizes.
double fidelity_up_to_phase(const Statevector& a, const Statevector& b);

/// Largest per-component distance; DimensionError on mismatched sizes.
double max_amplitude_diff(const Statevector& a, const Statevector& b);

std::string to_string(const Statevector& state);

} // namespace qsr
