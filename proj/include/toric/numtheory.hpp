#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace toric {

/// Deterministic trial-division primality; adequate for desk-scale inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::uint64_t next_prime_above(std::uint64_t n) {
    std::uint64_t c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

/// Prime factorization by trial division, as (prime, exponent) pairs
/// in increasing prime order.
inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// Decompose q = p^k with p prime, k >= 1; nullopt if q is not a prime power.
inline std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    auto f = factorize(q);
    if (f.size() != 1) return std::nullopt;
    return std::make_pair(f[0].first, f[0].second);
}

}  // namespace toric
