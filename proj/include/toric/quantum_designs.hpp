#pragma once

#include "toric/rational.hpp"
#include "toric/toric_designs.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace toric::quantum {

/// Weighted points on the probability simplex with a certified cubature
/// degree.
struct SimplexDesign {
    int d = 0;
    std::vector<std::vector<Rat>> points;  // nonnegative entries summing to 1
    std::vector<Rat> weights;              // positive, sum 1
    int degree = 0;
};

/// Amplitude sqrt(mag2) * e^(2*pi*i*phase) with exact rational data.
struct ExactAmp {
    Rat mag2;   // |amplitude|^2
    Rat phase;  // fraction of a full turn, in [0, 1); 0 when mag2 == 0
    friend bool operator==(const ExactAmp&, const ExactAmp&) = default;
};

struct ExactStateData {
    std::vector<std::vector<ExactAmp>> states;
    std::vector<Rat> weights;
};

/// Weighted unit vectors in C^d. Complex amplitudes are always available
/// for numerical verification; the exact payload is kept when every state
/// arises from rational data (and is what gets serialized losslessly).
struct StateDesign {
    int d = 0;
    std::vector<std::vector<std::complex<double>>> states;
    std::vector<double> weights;
    std::optional<ExactStateData> exact;
    std::string construction = "explicit";

    std::size_t size() const { return states.size(); }
};

/// Build a state design from exact data; derives the complex amplitudes and
/// validates normalization (magnitudes and weights sum to 1 exactly).
StateDesign make_exact_state_design(int d, ExactStateData data,
                                    std::string construction = "explicit");

/// Build a state design from complex amplitudes; validates unit norms
/// (within 1e-12) and weights (positive, summing to 1 within 1e-9).
StateDesign make_complex_state_design(int d,
                                      std::vector<std::vector<std::complex<double>>> states,
                                      std::vector<double> weights,
                                      std::string construction = "explicit");

/// The vertices-plus-centroid simplex 2-design: d extremal points weighted
/// 1/(d(d+1)) each and the centroid weighted d/(d+1). These weights are the
/// unique solution of the degree-<=2 moment equations against the flat
/// simplex measure, whose moments are E[p_a p_b] = (1 + delta_ab)/(d(d+1)).
SimplexDesign simplex_two_design(int d);

/// Concatenate a simplex design with a projective toric design: every pair
/// (p, phi) contributes the state sum_n sqrt(p_n) e^(i phi_n) |n> with the
/// product weight. States are canonicalized (zero-amplitude phases dropped,
/// leading phase rotated to zero) and coincident states merged, so vertex
/// points collapse to bare basis states. Requires S.d == X.n, S.degree >= t,
/// and X passing verify_design at t.
StateDesign concatenate(const SimplexDesign& S, const designs::WeightedPhaseSet& X, int t);

/// sum_{i,j} w_i w_j |<psi_i|psi_j>|^(2t). Equals 1/C(d+t-1, t) exactly when
/// the set is a t-design and exceeds it otherwise (Welch bound).
double frame_potential(const StateDesign& D, int t);

struct MomentReport {
    int t = 0;
    double max_deviation = 0.0;
    std::vector<int> worst_row;  // index tuple a
    std::vector<int> worst_col;  // index tuple b
    bool pass = false;
    double tolerance = 0.0;
};

/// Entrywise check of the t-th moment tensor against the normalized
/// symmetric-subspace projector: for all index tuples a, b in I_d^t,
///   sum_i w_i prod_k psi_i[a_k] conj(psi_i[b_k]) = Pi_t(a;b) / C(d+t-1, t),
/// where Pi_t(a;b) = (1/t!) sum_{sigma in S_t} prod_k [a_k == b_sigma(k)].
/// Guarded at d^(2t) <= 10^7 entries.
MomentReport moment_tensor_check(const StateDesign& D, int t, double tolerance);

/// The size-(d^2+1) state 2-design: concatenation of simplex_two_design(d)
/// with the cyclic design of the Singer set for q = d-1 (modulus d^2-d+1).
/// Requires d-1 to be a prime power.
StateDesign almost_minimal_2design(int d);

}  // namespace toric::quantum
