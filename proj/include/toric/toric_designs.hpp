#pragma once

#include "toric/combinatorics.hpp"
#include "toric/difference_sets.hpp"
#include "toric/rational.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace toric::designs {

/// Weighted point set on the projective torus P(T^n). Points are stored as
/// representatives with first coordinate exactly 0. A design is either
/// exact (phases and weights are rationals; a phase fraction f means the
/// angle 2*pi*f) or real (angles in radians, double weights); the two
/// encodings are never mixed within one design.
struct RationalData {
    std::vector<std::vector<Rat>> points;  // each of length n, first coord 0
    std::vector<Rat> weights;              // positive, sum exactly 1
};

struct RealData {
    std::vector<std::vector<double>> points;  // angles in [0, 2pi)
    std::vector<double> weights;
};

struct WeightedPhaseSet {
    int n = 0;
    std::variant<RationalData, RealData> data;
    std::string construction = "explicit";

    bool rational() const { return std::holds_alternative<RationalData>(data); }
    const RationalData& rat() const { return std::get<RationalData>(data); }
    const RealData& real() const { return std::get<RealData>(data); }
    std::size_t size() const;
};

struct VerificationReport {
    int t = 0;
    double max_deviation = 0.0;
    comb::ExponentVector worst_exponent;  // all-zero when nothing was checked
    bool pass = false;
    double tolerance = 0.0;
};

/// Default pass/fail tolerance. Exact constructions land below 1e-12 in
/// double precision at desk scale; genuine violations are Theta(1/|X|) or
/// larger, so 1e-9 separates the two regimes with margin.
inline constexpr double kDefaultTolerance = 1e-9;

/// The (t+1)^(n-1) lattice points (0, 2pi d_1/(t+1), ..., 2pi d_(n-1)/(t+1))
/// with uniform weights; an exact t-design for every n >= 2, t >= 1.
WeightedPhaseSet grid_design(int n, int t);

/// 2-design on p^2 quadratic-residue phases, p the smallest prime strictly
/// above max(2, n): points (0, 2pi(q1+q2)/p, ..., 2pi((n-1)q1+(n-1)^2 q2)/p)
/// over q1, q2 in Z_p. Coincident points are merged with weights summed
/// (for n = 2 this collapses to p points).
WeightedPhaseSet quadratic_prime_design(int n);

/// Orbit {(2pi d z_1/m, ..., 2pi d z_n/m) : d in Z_m} with uniform weights;
/// z is normalized so z_1 = 0 first. Coincident points are merged. Makes no
/// claim of design validity; pair with verify_design or use
/// group_design_from_bt.
WeightedPhaseSet cyclic_orbit_design(const std::vector<std::uint64_t>& z, std::uint64_t m);

/// The cyclic-group design of a verified B_t set (orbit of z under Z_m).
/// Throws UsageError if z fails verification.
WeightedPhaseSet group_design_from_bt(const ds::BtSet& z);

/// Check structural invariants (arity, normalization, positive weights
/// summing to 1 — exactly in rational mode, within 1e-9 in real mode,
/// pairwise-distinct points in rational mode). Throws UsageError.
void validate(const WeightedPhaseSet& X);

/// Weighted monomial sum  sum_j w_j e^(i k . phi_j). The building block of
/// all verification; exact designs evaluate the dot product as a reduced
/// rational so equal phases contribute bit-identical terms.
std::complex<double> monomial_sum(const WeightedPhaseSet& X, const comb::ExponentVector& k);

/// Check |monomial_sum(X, k)| <= tolerance for every nonzero k with
/// |k|_+ <= t (one representative per +-k pair). Reports the worst exponent.
VerificationReport verify_design(const WeightedPhaseSet& X, int t,
                                 double tolerance = kDefaultTolerance);

/// Equivalent design test for even t: the Gram matrix of the vectors
/// (sqrt(w_j) e^(i k . phi_j))_j over k with |k|_+ <= t/2 must be the
/// identity within tolerance.
bool gram_check(const WeightedPhaseSet& X, int t, double tolerance);

/// True iff X (which must pass verify_design at t) meets the size lower
/// bound with equality.
bool is_minimal(const WeightedPhaseSet& X, int t);

}  // namespace toric::designs
