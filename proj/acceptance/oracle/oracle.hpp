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

// Reference linear algebra for checking the simulator. Dense Kronecker
// products, first factor = most significant index bit. Shares no code with
// the library.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Vec = std::vector<C>;

struct Mat {
    std::size_t dim = 0;
    std::vector<C> a;

    explicit Mat(std::size_t d) : dim(d), a(d * d) {}
    Mat(std::size_t d, std::initializer_list<C> v) : dim(d), a(v) {}

    C& operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    C operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

inline constexpr double pi = std::numbers::pi;
inline const C I{0.0, 1.0};

inline Mat eye(std::size_t d) {
    Mat m(d);
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

inline Mat mul(const Mat& x, const Mat& y) {
    Mat out(x.dim);
    for (std::size_t r = 0; r < x.dim; ++r) {
        for (std::size_t k = 0; k < x.dim; ++k) {
            for (std::size_t c = 0; c < x.dim; ++c) {
                out(r, c) += x(r, k) * y(k, c);
            }
        }
    }
    return out;
}

inline Vec apply(const Mat& m, const Vec& v) {
    Vec out(m.dim);
    for (std::size_t r = 0; r < m.dim; ++r) {
        for (std::size_t c = 0; c < m.dim; ++c) {
            out[r] += m(r, c) * v[c];
        }
    }
    return out;
}

inline Mat kron(const Mat& x, const Mat& y) {
    Mat out(x.dim * y.dim);
    for (std::size_t r1 = 0; r1 < x.dim; ++r1)
        for (std::size_t c1 = 0; c1 < x.dim; ++c1)
            for (std::size_t r2 = 0; r2 < y.dim; ++r2)
                for (std::size_t c2 = 0; c2 < y.dim; ++c2)
                    out(r1 * y.dim + r2, c1 * y.dim + c2) = x(r1, c1) * y(r2, c2);
    return out;
}

inline Vec kron(const Vec& x, const Vec& y) {
    Vec out;
    out.reserve(x.size() * y.size());
    for (const C& a : x)
        for (const C& b : y)
            out.push_back(a * b);
    return out;
}

inline Vec kron(std::initializer_list<Vec> factors) {
    Vec out{1.0};
    for (const auto& f : factors) {
        out = kron(out, f);
    }
    return out;
}

inline Vec scale(C s, Vec v) {
    for (auto& x : v) {
        x *= s;
    }
    return v;
}

inline Vec add(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += b[i];
    }
    return a;
}

inline Mat X() { return Mat(2, {0.0, 1.0, 1.0, 0.0}); }
inline Mat Z() { return Mat(2, {1.0, 0.0, 0.0, -1.0}); }
inline Mat H() {
    const double r = 1.0 / std::sqrt(2.0);
    return Mat(2, {r, r, r, -r});
}
inline Mat RX(double t) {
    return Mat(2, {std::cos(t / 2), -I * std::sin(t / 2), -I * std::sin(t / 2), std::cos(t / 2)});
}
inline Mat RY(double t) { return Mat(2, {std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2)}); }
inline Mat RZ(double t) { return Mat(2, {std::exp(-I * (t / 2)), 0.0, 0.0, std::exp(I * (t / 2))}); }

/// Single-qubit gate on qubit k of an nq-qubit register, qubit 0 leftmost.
inline Mat on(const Mat& g, std::size_t k, std::size_t nq) {
    Mat out = eye(1);
    for (std::size_t q = 0; q < nq; ++q) {
        out = kron(out, q == k ? g : eye(2));
    }
    return out;
}

inline Mat CZ(std::size_t a, std::size_t b, std::size_t nq) {
    Mat out = eye(std::size_t{1} << nq);
    for (std::size_t i = 0; i < out.dim; ++i) {
        const bool ba = (i >> (nq - 1 - a)) & 1;
        const bool bb = (i >> (nq - 1 - b)) & 1;
        if (ba && bb) {
            out(i, i) = -1.0;
        }
    }
    return out;
}

inline Vec ket0() { return {1.0, 0.0}; }
inline Vec ket1() { return {0.0, 1.0}; }
inline Vec plus_phi(double w) {
    const double r = 1.0 / std::sqrt(2.0);
    return {r * std::exp(-I * (w / 2)), r * std::exp(I * (w / 2))};
}
inline Vec minus_phi(double w) {
    const double r = 1.0 / std::sqrt(2.0);
    return {r * std::exp(-I * (w / 2)), -r * std::exp(I * (w / 2))};
}
inline Vec plus() { return plus_phi(0.0); }
inline Vec minus() { return minus_phi(0.0); }

inline C inner(const Vec& a, const Vec& b) {
    C s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

inline double fidelity(const Vec& a, const Vec& b) { return std::norm(inner(a, b)); }

/// Reorders an MSB-first vector so qubit k sits at index bit k.
inline Vec to_lsb(const Vec& msb) {
    std::size_t nq = 0;
    while ((std::size_t{1} << nq) < msb.size()) {
        ++nq;
    }
    Vec out(msb.size());
    for (std::size_t i = 0; i < msb.size(); ++i) {
        std::size_t j = 0;
        for (std::size_t q = 0; q < nq; ++q) {
            if ((i >> (nq - 1 - q)) & 1) {
                j |= std::size_t{1} << q;
            }
        }
        out[j] = msb[i];
    }
    return out;
}

inline double encode(std::uint64_t s, std::uint64_t k, std::uint64_t q) {
    return 2.0 * pi * static_cast<double>((s % q) * (k % q) % q) / static_cast<double>(q);
}

/// The seven register states of the worked example, particles (A, 1, 2).
inline std::vector<Vec> worked_example_rows() {
    const C a = C(1.0, -3.0) / 4.0;
    const C b = C(std::sqrt(3.0), -std::sqrt(3.0)) / 4.0;
    const C e = std::exp(-I * (pi / 12));
    const C ec = std::exp(I * (pi / 12));
    const double r = 1.0 / std::sqrt(2.0);
    const Vec pp = plus_phi(pi);
    const Vec mp = minus_phi(pi);

    std::vector<Vec> rows;
    rows.push_back(kron({{a, b}, plus_phi(pi / 6), pp}));

    Vec ent = add(add(scale(a * e * r, kron({ket0(), ket0(), pp})), scale(a * ec * r, kron({ket0(), ket1(), mp}))),
                  add(scale(b * e * r, kron({ket1(), ket0(), pp})), scale(-b * ec * r, kron({ket1(), ket1(), mp}))));
    rows.push_back(ent);

    Vec pair = add(add(scale(a * e * r, kron(ket0(), pp)), scale(a * ec * r, kron(ket1(), mp))),
                   add(scale(b * e * r, kron(ket0(), pp)), scale(-b * ec * r, kron(ket1(), mp))));
    rows.push_back(kron(plus(), pair));

    const C mi = std::exp(-I * (pi / 2));
    Vec pair2 = add(scale(mi * std::sqrt(3.0) / 2.0, kron(ket0(), pp)), scale(mi * 0.5, kron(ket1(), mp)));
    rows.push_back(kron(plus(), pair2));

    Vec last = add(scale(mi * std::sqrt(3.0) / 2.0, pp), scale(-mi * 0.5, mp));
    rows.push_back(kron({plus(), minus(), last}));

    Vec psi_prime{C(-std::sqrt(3.0), -std::sqrt(3.0)) / 4.0, C(-3.0, -1.0) / 4.0};
    rows.push_back(kron({plus(), minus(), psi_prime}));

    Vec recovered = scale(std::exp(-I * pi), Vec{0.5, std::sqrt(3.0) / 2.0});
    rows.push_back(kron({plus(), minus(), recovered}));
    return rows;
}

} // namespace oracle
