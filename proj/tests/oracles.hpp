#pragma once

// Brute-force reference implementations used only by tests. Each oracle
// computes its answer by a route independent of the library code it checks.

#include "toric/rational.hpp"
#include "toric/toric_designs.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

/// P_s^(n) by direct membership characterization (entries sum to zero and
/// the positive entries sum to at most s), enumerated by depth-first search.
/// Independent of the composition-pair enumeration in the library.
inline std::set<std::vector<int>> pst_dfs(int n, int s) {
    std::set<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int sum, int possum) -> void {
        if (pos == n) {
            if (sum == 0) out.insert(cur);
            return;
        }
        for (int v = -s; v <= s; ++v) {
            int np = possum + std::max(v, 0);
            if (np > s) break;
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, sum + v, np);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, 0, 0);
    return out;
}

/// B_t condition straight from the definition: all t-fold multiset sums
/// distinct mod m.
inline bool is_bt(const std::vector<std::uint64_t>& z, std::uint64_t m, int t) {
    std::set<std::uint64_t> sums;
    std::uint64_t count = 0;
    std::vector<std::size_t> idx(static_cast<std::size_t>(t), 0);
    while (true) {
        std::uint64_t s = 0;
        for (auto i : idx) s = (s + z[i]) % m;
        sums.insert(s);
        ++count;
        std::size_t k = idx.size();
        while (k > 0 && idx[k - 1] == z.size() - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < idx.size(); ++j) idx[j] = idx[k - 1];
    }
    return sums.size() == count;
}

/// All canonical Sidon sets (containing 0, increasing) of size n mod m,
/// by filtering every subset with the definition above.
inline std::vector<std::vector<std::uint64_t>> sidon_brute(int n, std::uint64_t m) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> cur{0};
    auto rec = [&](auto&& self, std::uint64_t from) -> void {
        if (cur.size() == static_cast<std::size_t>(n)) {
            if (is_bt(cur, m, 2)) out.push_back(cur);
            return;
        }
        for (std::uint64_t c = from; c < m; ++c) {
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    if (n == 1) {
        if (is_bt(cur, m, 2)) out.push_back(cur);
    } else {
        rec(rec, 1);
    }
    return out;
}

/// Irreducibility over Z_p by trial division with every monic polynomial of
/// degree 1..deg/2.
inline bool irreducible_trial_division(std::uint64_t p, std::vector<std::uint32_t> f) {
    auto degree = [](const std::vector<std::uint32_t>& a) {
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i]) return static_cast<int>(i);
        }
        return -1;
    };
    auto divides = [&](std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b) {
        int db = degree(b);
        while (degree(a) >= db) {
            int da = degree(a);
            // b is monic, so the quotient digit is just the leading coeff.
            std::uint64_t q = a[static_cast<std::size_t>(da)];
            for (int j = 0; j <= db; ++j) {
                auto& c = a[static_cast<std::size_t>(da - db + j)];
                c = static_cast<std::uint32_t>((c + p - q * b[static_cast<std::size_t>(j)] % p) % p);
            }
        }
        return degree(a) < 0;
    };
    int d = degree(f);
    for (int dd = 1; dd <= d / 2; ++dd) {
        std::vector<std::uint32_t> b(static_cast<std::size_t>(dd) + 1, 0);
        b.back() = 1;
        std::uint64_t total = 1;
        for (int i = 0; i < dd; ++i) total *= p;
        for (std::uint64_t v = 0; v < total; ++v) {
            std::uint64_t rest = v;
            for (int i = 0; i < dd; ++i) {
                b[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            if (divides(f, b)) return false;
        }
    }
    return true;
}

/// Delete one coordinate of a design and renormalize to the first-zero
/// representative, merging any coincident points.
inline toric::designs::WeightedPhaseSet project_out(const toric::designs::WeightedPhaseSet& X,
                                                    std::size_t coord) {
    using toric::Rat;
    const auto& d = X.rat();
    std::map<std::vector<Rat>, Rat> merged;
    for (std::size_t j = 0; j < d.points.size(); ++j) {
        std::vector<Rat> pt;
        for (std::size_t i = 0; i < d.points[j].size(); ++i) {
            if (i != coord) pt.push_back(d.points[j][i]);
        }
        const Rat shift = pt[0];
        for (auto& c : pt) c = toric::mod_one(c - shift);
        merged[pt] += d.weights[j];
    }
    toric::designs::RationalData out;
    for (auto& [pt, w] : merged) {
        out.points.push_back(pt);
        out.weights.push_back(w);
    }
    toric::designs::WeightedPhaseSet Y;
    Y.n = X.n - 1;
    Y.data = std::move(out);
    Y.construction = "projection";
    return Y;
}

}  // namespace oracle
