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

#include "qsr/shares.hpp"

#include <cmath>
#include <string>

#include "qsr/error.hpp"
#include "qsr/rng.hpp"
#include "qsr/statevec.hpp"

namespace qsr {

__extension__ using u128 = unsigned __int128;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) noexcept {
    return static_cast<std::uint64_t>((static_cast<u128>(a) + b) % q);
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) noexcept {
    return add_mod(a % q, q - b % q, q);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) noexcept {
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % q);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t q) noexcept {
    std::uint64_t result = 1 % q;
    base %= q;
    while (exp) {
        if (exp & 1) {
            result = mul_mod(result, base, q);
        }
        base = mul_mod(base, base, q);
        exp >>= 1;
    }
    return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) {
    if (a % q == 0) {
        throw Error(ErrorKind::DegenerateInterpolation, "zero has no inverse mod q");
    }
    return pow_mod(a, q - 2, q);
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
        return false;
    }
    static constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto p : kWitnesses) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (auto a : kWitnesses) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

void check_modulus(std::uint64_t q) {
    if (q <= 2 || q > kMaxModulus || !is_prime(q)) {
        throw Error(ErrorKind::BadModulus, "q = " + std::to_string(q) + " is not a prime in (2, 2^61]");
    }
}

void ShareConfig::validate() const {
    check_modulus(q);
    if (shares.empty()) {
        throw Error(ErrorKind::InvalidArity, "need at least two shareholders");
    }
    if (s == 0 || s >= q) {
        throw Error(ErrorKind::BadRandomizer, "s must lie in {1, ..., q-1}");
    }
    std::uint64_t sum = 0;
    auto accumulate = [&](std::uint64_t k, const char* who) {
        if (k >= q) {
            throw Error(ErrorKind::NotConsistent, std::string(who) + " is not reduced mod q");
        }
        sum = add_mod(sum, k, q);
    };
    accumulate(k_A, "k_A");
    for (auto k : shares) {
        accumulate(k, "share");
    }
    accumulate(k_C, "k_C");
    if (sum != 0) {
        throw Error(ErrorKind::NotConsistent, "secret and shares do not sum to 0 mod q");
    }
}

std::uint64_t ShareConfig::agent_share(std::size_t agent) const {
    if (agent == 0 || agent > n()) {
        throw Error(ErrorKind::IndexError, "agent " + std::to_string(agent) + " out of range");
    }
    return agent == n() ? k_C : shares[agent - 1];
}

ShareConfig ShareConfig::with_combiner(std::size_t agent) const {
    ShareConfig out = *this;
    if (agent == n()) {
        return out;
    }
    out.k_C = agent_share(agent);
    out.shares[agent - 1] = k_C;
    return out;
}

ShareConfig complete_shares(std::uint64_t k_A, std::vector<std::uint64_t> shares, std::uint64_t q,
                            std::uint64_t s) {
    check_modulus(q);
    if (shares.empty()) {
        throw Error(ErrorKind::InvalidArity, "need at least two shareholders");
    }
    if (k_A >= q) {
        throw Error(ErrorKind::NotConsistent, "k_A must be reduced mod q");
    }
    std::uint64_t sum = k_A;
    for (auto k : shares) {
        if (k >= q) {
            throw Error(ErrorKind::NotConsistent, "shares must be reduced mod q");
        }
        sum = add_mod(sum, k, q);
    }
    ShareConfig config{q, k_A, std::move(shares), sub_mod(0, sum, q), s};
    config.validate();
    return config;
}

ShareConfig split_secret(std::uint64_t k_A, std::size_t n, std::uint64_t q, std::uint64_t seed) {
    check_modulus(q);
    if (n < 2) {
        throw Error(ErrorKind::InvalidArity, "need at least two shareholders, got " + std::to_string(n));
    }
    Rng rng(derive_seed(seed, "split"));
    std::vector<std::uint64_t> shares(n - 1);
    for (auto& k : shares) {
        k = rng.below(q);
    }
    const std::uint64_t s = 1 + rng.below(q - 1);
    return complete_shares(k_A, std::move(shares), q, s);
}

double encode_angle(std::uint64_t s, std::uint64_t k, std::uint64_t q) {
    check_modulus(q);
    if (s == 0 || s >= q) {
        throw Error(ErrorKind::BadRandomizer, "s = " + std::to_string(s) + " outside {1, ..., q-1}");
    }
    const std::uint64_t residue = mul_mod(s, k % q, q);
    if (residue == 0) {
        return 0.0;
    }
    return canonical_angle(static_cast<double>(residue) / static_cast<double>(q) * kTwoPi);
}

AngleSet derive_angles(const ShareConfig& config) {
    config.validate();
    AngleSet angles;
    angles.phi_A = encode_angle(config.s, config.k_A, config.q);
    for (auto k : config.shares) {
        angles.phi.push_back(encode_angle(config.s, k, config.q));
    }
    angles.phi_C = encode_angle(config.s, config.k_C, config.q);
    return angles;
}

long check_angle_sum(const AngleSet& angles) {
    double total = angles.phi_A + angles.phi_C;
    for (double p : angles.phi) {
        total += p;
    }
    const double turns = std::round(total / kTwoPi);
    const double residual = std::abs(total - kTwoPi * turns);
    if (residual >= 1e-9) {
        throw Error(ErrorKind::NotConsistent,
                    "angle sum misses a multiple of 2pi by " + std::to_string(residual));
    }
    return static_cast<long>(turns);
}

std::vector<std::uint64_t> lagrange_weights(std::span<const std::uint64_t> xs, std::uint64_t q) {
    check_modulus(q);
    if (xs.empty()) {
        throw Error(ErrorKind::InvalidArity, "no interpolation points");
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] % q == 0) {
            throw Error(ErrorKind::DegenerateInterpolation, "abscissa must be non-zero mod q");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (xs[i] % q == xs[j] % q) {
                throw Error(ErrorKind::DegenerateInterpolation, "duplicate abscissa " + std::to_string(xs[i]));
            }
        }
    }
    std::vector<std::uint64_t> weights(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::uint64_t num = 1;
        std::uint64_t den = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) {
                continue;
            }
            num = mul_mod(num, xs[j] % q, q);
            den = mul_mod(den, sub_mod(xs[j], xs[i], q), q);
        }
        weights[i] = mul_mod(num, inv_mod(den, q), q);
    }
    return weights;
}

std::vector<std::uint64_t> lagrange_reduce(std::span<const SharePoint> points, std::uint64_t q) {
    std::vector<std::uint64_t> xs;
    xs.reserve(points.size());
    for (const auto& p : points) {
        xs.push_back(p.x);
    }
    const auto weights = lagrange_weights(xs, q);
    std::vector<std::uint64_t> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        out[i] = mul_mod(points[i].y % q, weights[i], q);
    }
    return out;
}

std::vector<SharePoint> shamir_split(std::uint64_t secret, std::size_t t, std::size_t n, std::uint64_t q,
                                     std::uint64_t seed) {
    check_modulus(q);
    if (t == 0 || t > n || n >= q) {
        throw Error(ErrorKind::InvalidArity, "need 1 <= t <= n < q");
    }
    Rng rng(derive_seed(seed, "shamir"));
    std::vector<std::uint64_t> coeffs{secret % q};
    for (std::size_t d = 1; d < t; ++d) {
        coeffs.push_back(rng.below(q));
    }
    std::vector<SharePoint> points;
    for (std::uint64_t x = 1; x <= n; ++x) {
        std::uint64_t y = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            y = add_mod(mul_mod(y, x, q), *it, q);
        }
        points.push_back({x, y});
    }
    return points;
}

ShareConfig threshold_config(std::uint64_t secret, std::span<const SharePoint> points, std::uint64_t q,
                             std::uint64_t s) {
    if (points.size() < 2) {
        throw Error(ErrorKind::InvalidArity, "threshold reconstruction needs at least two agents");
    }
    auto additive = lagrange_reduce(points, q);
    const std::uint64_t k_C = additive.back();
    additive.pop_back();
    ShareConfig config{q, sub_mod(0, secret, q), std::move(additive), k_C, s};
    config.validate();
    return config;
}

} // namespace qsr
