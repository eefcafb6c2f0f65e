#include "toric/difference_sets.hpp"

#include "toric/errors.hpp"
#include "toric/numtheory.hpp"
#include "toric/threading.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace toric::ds {

namespace {

constexpr std::uint64_t kMaxMultisetEnumeration = 100'000'000;
constexpr std::uint64_t kSumListCap = 1'000'000;  // emit the sum set only below this modulus

void check_well_formed(const BtSet& z) {
    if (z.t < 1) throw UsageError("t must be >= 1");
    if (z.m < 1) throw UsageError("modulus must be >= 1");
    if (z.elements.empty()) throw UsageError("set must be nonempty");
    for (std::size_t i = 0; i < z.elements.size(); ++i) {
        if (z.elements[i] >= z.m) throw UsageError("element out of range [0, m)");
        if (i > 0 && z.elements[i] <= z.elements[i - 1]) {
            throw UsageError("elements must be strictly increasing");
        }
    }
}

/// Visit all nondecreasing index tuples of length t over [0, n); calls
/// visit(indices, sum mod m). Returns false if visit stopped the walk.
template <typename Visit>
bool for_each_multiset(std::size_t n, int t, const std::vector<std::uint64_t>& z,
                       std::uint64_t m, Visit&& visit) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(t), 0);
    while (true) {
        std::uint64_t sum = 0;
        for (auto i : idx) sum = (sum + z[i]) % m;
        if (!visit(idx, sum)) return false;
        std::size_t k = idx.size();
        while (k > 0 && idx[k - 1] == n - 1) --k;
        if (k == 0) return true;
        ++idx[k - 1];
        for (std::size_t j = k; j < idx.size(); ++j) idx[j] = idx[k - 1];
    }
}

std::vector<std::uint64_t> values_of(const std::vector<std::size_t>& idx,
                                     const std::vector<std::uint64_t>& z) {
    std::vector<std::uint64_t> vals;
    vals.reserve(idx.size());
    for (auto i : idx) vals.push_back(z[i]);
    return vals;
}

ff::FieldSpec validated_override(const ff::FieldSpec& field, std::uint64_t p, int m) {
    if (field.p != p || field.m != m) {
        throw UsageError("field override must describe GF(" + std::to_string(p) + "^" +
                         std::to_string(m) + ")");
    }
    return ff::make_field(field.p, field.m, field.modulus, field.generator);
}

}  // namespace

BtVerifyResult verify_bt(const BtSet& z) {
    check_well_formed(z);
    const std::size_t n = z.elements.size();
    comb::BigInt expected_big = comb::binomial(static_cast<std::int64_t>(n) + z.t - 1, z.t);
    if (expected_big > kMaxMultisetEnumeration) {
        throw ResourceError("C(n+t-1, t) exceeds the 10^8 multiset enumeration guard");
    }
    const auto expected = static_cast<std::uint64_t>(expected_big);

    BtVerifyResult res;
    res.expected_sums = expected;

    const bool dense = z.m <= (1u << 22);
    std::vector<std::uint8_t> seen_dense(dense ? z.m : 0, 0);
    std::unordered_set<std::uint64_t> seen_sparse;
    std::uint64_t distinct = 0;
    for_each_multiset(n, z.t, z.elements, z.m, [&](const auto&, std::uint64_t sum) {
        bool fresh = dense ? !seen_dense[sum] : seen_sparse.insert(sum).second;
        if (dense && fresh) seen_dense[sum] = 1;
        if (fresh) ++distinct;
        return true;
    });
    res.distinct_sums = distinct;
    res.valid = (distinct == expected);

    if (res.valid) {
        if (z.m <= kSumListCap) {
            res.sums.reserve(distinct);
            if (dense) {
                for (std::uint64_t s = 0; s < z.m; ++s) {
                    if (seen_dense[s]) res.sums.push_back(s);
                }
            } else {
                res.sums.assign(seen_sparse.begin(), seen_sparse.end());
                std::sort(res.sums.begin(), res.sums.end());
            }
        }
        return res;
    }

    // Failure path: rerun and stop at the first colliding pair of multisets.
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> first;
    for_each_multiset(n, z.t, z.elements, z.m, [&](const auto& idx, std::uint64_t sum) {
        auto [it, fresh] = first.try_emplace(sum, idx);
        if (!fresh) {
            res.witness = std::make_pair(values_of(it->second, z.elements),
                                         values_of(idx, z.elements));
            return false;
        }
        return true;
    });
    return res;
}

SingerResult singer_bt_set(std::uint64_t q, int t, std::optional<ff::FieldSpec> field) {
    if (t < 1) throw UsageError("t must be >= 1");
    auto pp = prime_power(q);
    if (!pp) throw UsageError("q must be a prime power (q = " + std::to_string(q) + ")");
    auto [p, k] = *pp;
    const int mext = k * (t + 1);

    ff::FieldSpec F = field ? validated_override(*field, p, mext) : ff::make_field(p, mext);
    const std::uint64_t group = F.group_order();  // q^(t+1) - 1
    const std::uint64_t modulus = group / (q - 1);

    // Subfield F_q = {0} u {y^j}, y the designated subfield generator.
    const ff::FieldElement theta = F.generator;
    const ff::FieldElement y = ff::pow(F, theta, modulus);
    std::unordered_set<std::uint64_t> subfield;
    subfield.insert(0);
    ff::FieldElement e = ff::one(F);
    for (std::uint64_t j = 0; j + 1 < q; ++j) {
        subfield.insert(ff::encode(F, e));
        e = ff::mul(F, e, y);
    }
    if (subfield.size() != q) {
        throw std::logic_error("subfield embedding produced " + std::to_string(subfield.size()) +
                               " elements, expected " + std::to_string(q));
    }

    std::vector<std::uint64_t> T{0};
    ff::FieldElement cur = theta;
    for (std::uint64_t a = 1; a < group; ++a) {
        if (subfield.count(ff::encode(F, ff::sub(F, cur, theta)))) T.push_back(a);
        cur = ff::mul(F, cur, theta);
    }
    if (T.size() != q + 1) {
        throw std::logic_error("Singer exponent set has size " + std::to_string(T.size()) +
                               ", expected q+1");
    }

    std::set<std::uint64_t> residues;
    for (auto a : T) residues.insert(a % modulus);
    if (residues.size() != q + 1) {
        throw std::logic_error("Singer residues collide mod " + std::to_string(modulus));
    }

    BtSet z;
    z.t = t;
    z.m = modulus;
    z.elements.assign(residues.begin(), residues.end());
    z.provenance = Provenance{"singer", q, F};
    auto check = verify_bt(z);
    if (!check.valid) {
        throw std::logic_error("Singer output failed B_t verification (bug)");
    }
    z.verified = true;
    return SingerResult{std::move(z), std::move(T), std::move(F)};
}

namespace {

/// Sequential DFS under one fixed branch. Differences of the current set
/// are marked in `used`; marks always come in (d, m-d) pairs, so testing one
/// direction suffices. A candidate at distance d with 2d == 0 (mod m) is
/// rejected outright: it would collide with itself (2a == 2b mod m).
class BranchSearch {
public:
    BranchSearch(int n, std::uint64_t m, SearchMode mode,
                 std::vector<std::vector<std::uint64_t>>& out, const std::atomic<bool>& stop)
        : n_(n), m_(m), mode_(mode), out_(out), stop_(stop), used_(m, 0) {}

    void run(std::uint64_t second) {
        cur_ = {0};
        if (!push(second)) return;
        dfs(second + 1);
        pop(second);
    }

private:
    bool push(std::uint64_t c) {
        std::size_t marked = 0;
        for (auto e : cur_) {
            std::uint64_t d1 = (c - e) % m_;
            std::uint64_t d2 = m_ - d1;
            if (d1 == d2 || used_[d1]) {
                for (std::size_t i = 0; i < marked; ++i) {
                    std::uint64_t u1 = (c - cur_[i]) % m_;
                    used_[u1] = 0;
                    used_[m_ - u1] = 0;
                }
                return false;
            }
            used_[d1] = 1;
            used_[d2] = 1;
            ++marked;
        }
        cur_.push_back(c);
        return true;
    }

    void pop(std::uint64_t c) {
        cur_.pop_back();
        for (auto e : cur_) {
            std::uint64_t d1 = (c - e) % m_;
            used_[d1] = 0;
            used_[m_ - d1] = 0;
        }
    }

    // True = stop exploring this branch.
    bool dfs(std::uint64_t from) {
        if (stop_.load(std::memory_order_relaxed)) return true;
        if (cur_.size() == static_cast<std::size_t>(n_)) {
            out_.push_back(cur_);
            return mode_ != SearchMode::All;
        }
        std::uint64_t slots = static_cast<std::uint64_t>(n_) - cur_.size();
        if (from + slots > m_) return false;  // not enough residues left
        for (std::uint64_t c = from; c + slots <= m_; ++c) {
            if (!push(c)) continue;
            bool done = dfs(c + 1);
            pop(c);
            if (done) return true;
        }
        return false;
    }

    int n_;
    std::uint64_t m_;
    SearchMode mode_;
    std::vector<std::vector<std::uint64_t>>& out_;
    const std::atomic<bool>& stop_;
    std::vector<std::uint8_t> used_;
    std::vector<std::uint64_t> cur_;
};

}  // namespace

SidonSearchResult search_sidon(int n, std::uint64_t m, SearchMode mode,
                               const SearchProgress& progress) {
    if (n < 1) throw UsageError("set size n must be >= 1");
    if (m < 1) throw UsageError("modulus must be >= 1");

    SidonSearchResult result;
    if (n == 1) {
        result.sets = {{0}};
        result.found = true;
        if (mode == SearchMode::Exists) result.sets.clear();
        return result;
    }
    if (static_cast<std::uint64_t>(n) > m) return result;  // not enough residues

    // Top-level branches: the second element of the canonical set.
    const std::uint64_t branches = m - 1;
    std::vector<std::vector<std::vector<std::uint64_t>>> per_branch(branches);
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> best_branch{branches};  // First mode: skip higher branches
    std::atomic<std::uint64_t> done{0};
    std::mutex progress_mutex;

    parallel::run_chunked(branches, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t b = begin; b < end; ++b) {
            std::uint64_t second = static_cast<std::uint64_t>(b) + 1;
            bool skip = stop.load(std::memory_order_relaxed) ||
                        (mode == SearchMode::First &&
                         b >= best_branch.load(std::memory_order_relaxed));
            if (!skip) {
                BranchSearch search(n, m, mode, per_branch[b], stop);
                search.run(second);
                if (!per_branch[b].empty()) {
                    if (mode == SearchMode::Exists) {
                        stop.store(true, std::memory_order_relaxed);
                    } else if (mode == SearchMode::First) {
                        std::uint64_t cur = best_branch.load(std::memory_order_relaxed);
                        while (b < cur &&
                               !best_branch.compare_exchange_weak(cur, b,
                                                                  std::memory_order_relaxed)) {
                        }
                    }
                }
            }
            std::uint64_t d = done.fetch_add(1, std::memory_order_relaxed) + 1;
            if (progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                progress(d, branches);
            }
        }
    });

    for (auto& sets : per_branch) {
        for (auto& s : sets) {
            result.sets.push_back(std::move(s));
            if (mode == SearchMode::First) break;
        }
        if (mode == SearchMode::First && !result.sets.empty()) break;
    }
    result.found = !result.sets.empty() || (mode == SearchMode::Exists && stop.load());
    if (mode == SearchMode::Exists) result.sets.clear();
    return result;
}

BoundCheck bt_size_bound_check(const BtSet& z) {
    if (!z.verified) {
        auto check = verify_bt(z);
        if (!check.valid) throw UsageError("bt_size_bound_check requires a verified set");
    }
    BoundCheck out;
    out.bound = comb::crystal_ball(static_cast<int>(z.elements.size()), z.t / 2);
    comb::BigInt m = z.m;
    out.satisfied = (m >= out.bound);
    out.saturated = (m == out.bound);
    return out;
}

}  // namespace toric::ds
