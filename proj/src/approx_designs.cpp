#include "toric/approx_designs.hpp"

#include "toric/errors.hpp"
#include "toric/kahan.hpp"
#include "toric/threading.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace toric::approx {

namespace {

constexpr double kInv2Pow53 = 1.0 / 9007199254740992.0;  // 2^-53

double next_angle(std::mt19937_64& eng) {
    return 2.0 * std::numbers::pi * (static_cast<double>(eng() >> 11) * kInv2Pow53);
}

void check_experiment(const ApproxExperiment& cfg) {
    if (cfg.n < 1) throw UsageError("n must be >= 1");
    if (cfg.t < 0) throw UsageError("t must be >= 0");
    // Deviations never exceed 1, so epsilon >= 1 passes trivially; any
    // positive threshold is accepted.
    if (!(cfg.epsilon > 0.0)) throw UsageError("epsilon must be positive");
    if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) throw UsageError("delta must lie in (0, 1)");
    if (cfg.M < 1) throw UsageError("M must be >= 1");
    if (cfg.trials < 1) throw UsageError("trials must be >= 1");
}

/// One trial: stream M points through per-monomial accumulators. The terms
/// match designs::monomial_sum exactly (same expressions, same order), so a
/// trial equals max_deviation(sample_uniform(n, M, seed), t).
double trial_max_deviation(int n, std::uint64_t M, std::uint64_t seed,
                           const std::vector<comb::ExponentVector>& reps) {
    std::mt19937_64 eng(seed);
    std::vector<KahanComplexSum> acc(reps.size());
    std::vector<double> point(static_cast<std::size_t>(n), 0.0);
    const double w = 1.0 / static_cast<double>(M);
    for (std::uint64_t j = 0; j < M; ++j) {
        for (int i = 1; i < n; ++i) point[static_cast<std::size_t>(i)] = next_angle(eng);
        for (std::size_t r = 0; r < reps.size(); ++r) {
            double dot = 0.0;
            for (std::size_t i = 0; i < reps[r].size(); ++i) {
                if (reps[r][i] != 0) dot += reps[r][i] * point[i];
            }
            acc[r].add({w * std::cos(dot), w * std::sin(dot)});
        }
    }
    double worst = 0.0;
    for (auto& a : acc) worst = std::max(worst, std::abs(a.value()));
    return worst;
}

}  // namespace

std::vector<comb::ExponentVector> enumerate_St(int n, int t) {
    return comb::pst_representatives(n, t);
}

designs::WeightedPhaseSet sample_uniform(int n, std::uint64_t M, std::uint64_t seed) {
    if (n < 1) throw UsageError("n must be >= 1");
    if (M < 1) throw UsageError("M must be >= 1");
    std::mt19937_64 eng(seed);
    designs::RealData data;
    data.points.reserve(M);
    data.weights.assign(M, 1.0 / static_cast<double>(M));
    for (std::uint64_t j = 0; j < M; ++j) {
        std::vector<double> pt(static_cast<std::size_t>(n), 0.0);
        for (int i = 1; i < n; ++i) pt[static_cast<std::size_t>(i)] = next_angle(eng);
        data.points.push_back(std::move(pt));
    }
    designs::WeightedPhaseSet X;
    X.n = n;
    X.data = std::move(data);
    X.construction = "uniform-sample";
    return X;
}

DeviationResult max_deviation(const designs::WeightedPhaseSet& C, int t) {
    auto reps = comb::pst_representatives(C.n, t);
    DeviationResult out;
    out.worst.assign(static_cast<std::size_t>(C.n), 0);
    if (reps.empty()) return out;

    struct ChunkMax {
        double value = -1.0;
        std::size_t index = std::numeric_limits<std::size_t>::max();
    };
    std::vector<ChunkMax> chunk(parallel::chunk_count(reps.size()));
    parallel::run_chunked(reps.size(), [&](std::size_t begin, std::size_t end, std::size_t c) {
        ChunkMax local;
        for (std::size_t i = begin; i < end; ++i) {
            double dev = std::abs(designs::monomial_sum(C, reps[i]));
            if (dev > local.value) {
                local.value = dev;
                local.index = i;
            }
        }
        chunk[c] = local;
    });
    ChunkMax best;
    for (const auto& c : chunk) {
        if (c.index != std::numeric_limits<std::size_t>::max() && c.value > best.value) best = c;
    }
    out.value = best.value;
    out.worst = reps[best.index];
    return out;
}

std::uint64_t required_M(int n, int t, double epsilon, double delta) {
    if (!(epsilon > 0.0)) throw UsageError("epsilon must be positive");
    if (!(delta > 0.0 && delta <= 1.0)) throw UsageError("delta must lie in (0, 1]");
    double g = comb::crystal_ball(n, t).convert_to<double>();
    double m = std::ceil((g - 1.0) / (2.0 * delta * epsilon * epsilon));
    return static_cast<std::uint64_t>(m);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ull * (index + 1));
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

ExperimentResult run_experiment(const ApproxExperiment& cfg) {
    check_experiment(cfg);
    const auto reps = comb::pst_representatives(cfg.n, cfg.t);
    const auto trials = static_cast<std::size_t>(cfg.trials);

    ExperimentResult result;
    result.per_trial.resize(trials);
    parallel::run_chunked(trials, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t i = begin; i < end; ++i) {
            double dev = trial_max_deviation(cfg.n, cfg.M,
                                             derive_seed(cfg.seed, static_cast<std::uint64_t>(i)),
                                             reps);
            result.per_trial[i] =
                TrialRecord{static_cast<int>(i), dev, dev <= cfg.epsilon};
        }
    });

    KahanSum dev_sum;
    std::size_t passes = 0;
    for (const auto& rec : result.per_trial) {
        dev_sum.add(rec.max_deviation);
        if (rec.pass) ++passes;
    }
    result.success_rate = static_cast<double>(passes) / static_cast<double>(trials);
    result.mean_deviation = dev_sum.value() / static_cast<double>(trials);
    return result;
}

}  // namespace toric::approx
