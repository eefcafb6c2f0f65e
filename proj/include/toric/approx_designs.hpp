#pragma once

#include "toric/combinatorics.hpp"
#include "toric/toric_designs.hpp"

#include <cstdint>
#include <vector>

namespace toric::approx {

/// Configuration of a Monte Carlo run: `trials` independent draws of M
/// uniformly random points each, tested against the deviation threshold
/// epsilon. Fully determined by `seed`.
struct ApproxExperiment {
    int n = 2;
    int t = 1;
    double epsilon = 0.5;
    double delta = 0.1;
    std::uint64_t M = 1;
    int trials = 1000;
    std::uint64_t seed = 0;
};

/// Monomial exponents relevant for approximate-design checking: one
/// representative per +-pair, zero excluded. |S_t^(n)| = (G_{n-1}(t) - 1)/2.
std::vector<comb::ExponentVector> enumerate_St(int n, int t);

/// M i.i.d. uniform points on P(T^n) (coordinate 1 fixed to 0, the rest
/// uniform on [0, 2pi)), uniform weights 1/M. Platform-stable and
/// reproducible: std::mt19937_64 seeded with `seed`, one 53-bit mantissa
/// per coordinate in point-major order.
designs::WeightedPhaseSet sample_uniform(int n, std::uint64_t M, std::uint64_t seed);

struct DeviationResult {
    double value = 0.0;
    comb::ExponentVector worst;
};

/// max over p in S_t^(n) of |mean over C of e^(i p . phi)|. C is an
/// epsilon-approximate t-design iff the value is <= epsilon.
DeviationResult max_deviation(const designs::WeightedPhaseSet& C, int t);

/// Sample-count bound ceil((G_{n-1}(t) - 1) / (2 delta epsilon^2)): with M
/// at least this, a uniform draw is an epsilon-approximate t-design with
/// probability at least 1 - delta.
std::uint64_t required_M(int n, int t, double epsilon, double delta);

/// Deterministic per-trial sub-seed derivation (splitmix64 finalizer over
/// seed and index), so parallel runs are schedule-independent.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct TrialRecord {
    int trial = 0;
    double max_deviation = 0.0;
    bool pass = false;
};

struct ExperimentResult {
    double success_rate = 0.0;
    double mean_deviation = 0.0;
    std::vector<TrialRecord> per_trial;
};

/// Run the experiment. Trials are independent and parallelized with derived
/// sub-seeds; memory stays flat in M * |S_t| (points are streamed into the
/// per-monomial accumulators, never stored).
ExperimentResult run_experiment(const ApproxExperiment& cfg);

}  // namespace toric::approx
