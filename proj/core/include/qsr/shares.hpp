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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qsr {

/// Moduli are capped so s*k fits comfortably in 128-bit intermediates.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 61;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) noexcept;
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) noexcept;
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t q) noexcept;
/// Inverse modulo a prime q; a must be non-zero mod q.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q);

/// BadModulus unless q is a prime with 2 < q <= kMaxModulus.
void check_modulus(std::uint64_t q);

/// Dealer secret, shareholder shares and the combiner share for one
/// reconstruction, plus the session randomizer s. Shareholders are
/// numbered 1..n-1; the combiner is shareholder n.
struct ShareConfig {
    std::uint64_t q = 3;
    std::uint64_t k_A = 0;
    std::vector<std::uint64_t> shares;
    std::uint64_t k_C = 0;
    std::uint64_t s = 1;

    /// Number of shareholders including the combiner.
    [[nodiscard]] std::size_t n() const noexcept { return shares.size() + 1; }

    /// BadModulus, BadRandomizer, InvalidArity or NotConsistent when the
    /// config breaks (k_A + sum k_i + k_C) mod q = 0 or a range rule.
    void validate() const;

    /// Share held by agent 1..n (agent n is the combiner slot).
    [[nodiscard]] std::uint64_t agent_share(std::size_t agent) const;

    /// Same shares with agent `agent` moved into the combiner slot; the former
    /// combiner takes the vacated shareholder slot.
    [[nodiscard]] ShareConfig with_combiner(std::size_t agent) const;
};

/// Draws k_1..k_{n-1} and s from the seed and closes the sum with k_C.
ShareConfig split_secret(std::uint64_t k_A, std::size_t n, std::uint64_t q, std::uint64_t seed);

/// Closes an explicit share list: k_C = -(k_A + sum shares) mod q.
ShareConfig complete_shares(std::uint64_t k_A, std::vector<std::uint64_t> shares, std::uint64_t q,
                            std::uint64_t s);

/// (s*k/q)*2pi reduced to [0, 2pi), computed from the exact residue s*k mod q.
double encode_angle(std::uint64_t s, std::uint64_t k, std::uint64_t q);

struct AngleSet {
    double phi_A = 0.0;
    std::vector<double> phi;
    double phi_C = 0.0;
    std::vector<double> masks;
    std::vector<double> thetas;
    std::vector<int> outcomes;
    long r = 0;
};

/// Encodes every party's share under config.s; masks/thetas/outcomes stay empty.
AngleSet derive_angles(const ShareConfig& config);

/// Integer r with |phi_A + sum phi_i + phi_C - 2 pi r| < 1e-9, else NotConsistent.
long check_angle_sum(const AngleSet& angles);

struct SharePoint {
    std::uint64_t x;
    std::uint64_t y;
};

/// lambda_i = prod_{j != i} x_j (x_j - x_i)^{-1} mod q.
std::vector<std::uint64_t> lagrange_weights(std::span<const std::uint64_t> xs, std::uint64_t q);

/// k'_i = y_i * lambda_i mod q, so sum k'_i is the polynomial's constant term.
std::vector<std::uint64_t> lagrange_reduce(std::span<const SharePoint> points, std::uint64_t q);

/// Shamir (t, n) split of `secret` with a seeded degree t-1 polynomial;
/// points are evaluated at x = 1..n.
std::vector<SharePoint> shamir_split(std::uint64_t secret, std::size_t t, std::size_t n, std::uint64_t q,
                                     std::uint64_t seed);

/// Additive reconstruction config for a chosen set of t Shamir points: the
/// dealer encodes -secret, the first t-1 points become shareholders and the
/// last one the combiner.
ShareConfig threshold_config(std::uint64_t secret, std::span<const SharePoint> points, std::uint64_t q,
                             std::uint64_t s);

} // namespace qsr
