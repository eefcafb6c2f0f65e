#include "toric/combinatorics.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace toric::comb {

namespace {

constexpr std::int64_t kMaxEnumeration = 10'000'000;

void check_args(int n, int s) {
    if (n < 1) throw UsageError("dimension n must be >= 1");
    if (s < 0) throw UsageError("degree must be >= 0");
}

/// All compositions of s into n nonnegative parts, lexicographic order.
std::vector<std::vector<int>> compositions(int n, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    // Position i receives what remains after positions < i.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            cur[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, s);
    return out;
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

BigInt crystal_ball(int n, int t) {
    check_args(n, t);
    BigInt total = 0;
    for (int i = 0; i <= t; ++i) {
        BigInt c = binomial(n - 1, i);
        total += c * c * binomial(n - i + t - 1, t - i);
    }
    return total;
}

BigInt min_design_size(int n, int t) {
    if (t < 1) throw UsageError("design degree t must be >= 1");
    return crystal_ball(n, t / 2);
}

std::vector<ExponentVector> enumerate_pst(int n, int s) {
    check_args(n, s);
    if (crystal_ball(n, s) > kMaxEnumeration) {
        throw ResourceError("|P_s| exceeds the 10^7 enumeration guard (n=" +
                            std::to_string(n) + ", s=" + std::to_string(s) + ")");
    }
    auto comps = compositions(n, s);
    std::set<ExponentVector> dedup;
    ExponentVector diff(static_cast<std::size_t>(n));
    for (const auto& q : comps) {
        for (const auto& r : comps) {
            for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = q[i] - r[i];
            dedup.insert(diff);
        }
    }
    return {dedup.begin(), dedup.end()};
}

std::vector<ExponentVector> pst_representatives(int n, int s) {
    auto all = enumerate_pst(n, s);
    std::vector<ExponentVector> reps;
    reps.reserve(all.size() / 2);
    for (auto& k : all) {
        // Keep the representative whose first nonzero entry is positive;
        // this picks exactly one of {k, -k} and drops the zero vector.
        auto it = std::find_if(k.begin(), k.end(), [](int v) { return v != 0; });
        if (it != k.end() && *it > 0) reps.push_back(std::move(k));
    }
    return reps;
}

}  // namespace toric::comb
