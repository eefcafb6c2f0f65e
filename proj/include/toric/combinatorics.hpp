#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace toric::comb {

using BigInt = boost::multiprecision::cpp_int;

/// Integer lattice vector of exponents; entries sum to zero for members
/// of the difference sets enumerated below.
using ExponentVector = std::vector<int>;

BigInt binomial(std::int64_t n, std::int64_t k);

/// Crystal ball number G_{n-1}(t) of the root lattice A_{n-1}, evaluated as
/// the exact binomial sum  sum_i C(n-1,i)^2 C(n-i+t-1, t-i).
BigInt crystal_ball(int n, int t);

/// Lower bound on the size of any finite projective toric t-design on n
/// coordinates: G_{n-1}(floor(t/2)).
BigInt min_design_size(int n, int t);

/// The set { q - r : q, r compositions of s into n nonnegative parts },
/// deduplicated, in lexicographic order. Guarded at 10^7 elements.
std::vector<ExponentVector> enumerate_pst(int n, int s);

/// One representative per {k, -k} pair of enumerate_pst(n, s) with the zero
/// vector removed; representatives have positive leading nonzero entry and
/// are in lexicographic order. Size (G_{n-1}(s) - 1) / 2.
std::vector<ExponentVector> pst_representatives(int n, int s);

}  // namespace toric::comb
