#pragma once

#include "toric/combinatorics.hpp"
#include "toric/finite_field.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toric::ds {

/// How a BtSet came to exist; carried through serialization so results can
/// be reproduced (the field choice matters for the Singer construction).
struct Provenance {
    std::string construction;  // "explicit", "singer", "search"
    std::optional<std::uint64_t> q;
    std::optional<ff::FieldSpec> field;
};

/// A candidate B_t mod m set: residues whose t-fold multiset sums are all
/// distinct mod m. `verified` is set by the constructing code after a
/// successful verify_bt run.
struct BtSet {
    int t = 2;
    std::uint64_t m = 1;
    std::vector<std::uint64_t> elements;  // strictly increasing, in [0, m)
    bool verified = false;
    Provenance provenance{"explicit", std::nullopt, std::nullopt};

    std::size_t size() const { return elements.size(); }
};

struct BtVerifyResult {
    bool valid = false;
    std::uint64_t distinct_sums = 0;
    std::uint64_t expected_sums = 0;  // C(n+t-1, t)
    /// On failure: two distinct multisets (element values) with equal sums.
    std::optional<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> witness;
    /// The distinct sums themselves, sorted (omitted when m is huge).
    std::vector<std::uint64_t> sums;
};

/// Exact verification: counts distinct t-fold multiset sums mod m and
/// compares with C(n+t-1, t). Guarded at 10^8 enumerated multisets.
BtVerifyResult verify_bt(const BtSet& z);

struct SingerResult {
    BtSet set;
    std::vector<std::uint64_t> exponents;  // T_t, before reduction mod m
    ff::FieldSpec field;
};

/// Singer's construction of a B_t mod (q^(t+1)-1)/(q-1) set of size q+1 from
/// a generator theta of GF(q^(t+1))^x: collect {0} and all exponents a with
/// theta^a - theta in the subfield F_q, then reduce mod (q^(t+1)-1)/(q-1).
/// F_q is embedded via the subfield generator theta^((q^(t+1)-1)/(q-1)).
/// The field (modulus and generator) may be overridden; it must describe
/// GF(q^(t+1)).
SingerResult singer_bt_set(std::uint64_t q, int t,
                           std::optional<ff::FieldSpec> field = std::nullopt);

enum class SearchMode { First, All, Exists };

struct SidonSearchResult {
    /// Valid sets found, lexicographically sorted. Empty means none exist
    /// (the canonical tree was exhausted) except in Exists mode, where the
    /// search stops at the first hit.
    std::vector<std::vector<std::uint64_t>> sets;
    bool found = false;
};

/// Called after each finished top-level branch with (done, total).
using SearchProgress = std::function<void(std::uint64_t, std::uint64_t)>;

/// Exhaustive search for Sidon (B_2 mod m) sets of size n over canonical
/// representatives: sets containing 0 with strictly increasing elements.
/// Pruning maintains a difference-occurrence mask, so a candidate element is
/// extended only if it repeats no pairwise difference. Parallelizes over
/// top-level branches; results are identical at any thread count.
SidonSearchResult search_sidon(int n, std::uint64_t m, SearchMode mode,
                               const SearchProgress& progress = nullptr);

struct BoundCheck {
    comb::BigInt bound;     // G_{n-1}(floor(t/2))
    bool satisfied = false; // m >= bound
    bool saturated = false; // m == bound
};

/// Size bound on verified B_t sets: the modulus must be at least
/// G_{n-1}(floor(t/2)). A verified set violating this indicates a bug.
BoundCheck bt_size_bound_check(const BtSet& z);

}  // namespace toric::ds
