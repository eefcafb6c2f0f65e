#include "toric/quantum_designs.hpp"

#include "toric/errors.hpp"
#include "toric/kahan.hpp"
#include "toric/numtheory.hpp"
#include "toric/threading.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

namespace toric::quantum {

namespace {

constexpr std::uint64_t kMaxMomentEntries = 10'000'000;
constexpr int kMaxMomentDegree = 6;

void validate_simplex(const SimplexDesign& S) {
    if (S.d < 2) throw UsageError("simplex dimension must be >= 2");
    if (S.points.size() != S.weights.size() || S.points.empty()) {
        throw UsageError("simplex points/weights mismatch");
    }
    Rat wsum(0);
    for (const auto& w : S.weights) {
        if (w <= Rat(0)) throw UsageError("simplex weights must be positive");
        wsum += w;
    }
    if (wsum != Rat(1)) throw UsageError("simplex weights must sum to 1");
    for (const auto& pt : S.points) {
        if (pt.size() != static_cast<std::size_t>(S.d)) {
            throw UsageError("simplex point arity mismatch");
        }
        Rat psum(0);
        for (const auto& c : pt) {
            if (c < Rat(0)) throw UsageError("simplex coordinates must be nonnegative");
            psum += c;
        }
        if (psum != Rat(1)) throw UsageError("simplex point must sum to 1");
    }
}

std::complex<double> amp_to_complex(const ExactAmp& a) {
    double mag = std::sqrt(to_double(a.mag2));
    double angle = turn_to_angle(a.phase);
    return {mag * std::cos(angle), mag * std::sin(angle)};
}

StateDesign finalize_exact(int d, ExactStateData exact, std::string construction) {
    StateDesign D;
    D.d = d;
    D.construction = std::move(construction);
    D.states.reserve(exact.states.size());
    D.weights.reserve(exact.weights.size());
    for (const auto& st : exact.states) {
        Rat norm(0);
        std::vector<std::complex<double>> row;
        row.reserve(st.size());
        for (const auto& amp : st) {
            norm += amp.mag2;
            row.push_back(amp_to_complex(amp));
        }
        if (norm != Rat(1)) throw UsageError("state magnitudes must sum to exactly 1");
        D.states.push_back(std::move(row));
    }
    Rat wsum(0);
    for (const auto& w : exact.weights) {
        if (w <= Rat(0)) throw UsageError("state weights must be positive");
        wsum += w;
        D.weights.push_back(to_double(w));
    }
    if (wsum != Rat(1)) throw UsageError("state weights must sum to exactly 1");
    D.exact = std::move(exact);
    return D;
}

/// All index tuples in [0, d)^t, lexicographic.
std::vector<std::vector<int>> index_tuples(int d, int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(t), 0);
    while (true) {
        out.push_back(cur);
        std::size_t k = cur.size();
        while (k > 0 && cur[k - 1] == d - 1) --k;
        if (k == 0) return out;
        ++cur[k - 1];
        for (std::size_t j = k; j < cur.size(); ++j) cur[j] = 0;
    }
}

/// Pi_t(a;b) = (1/t!) sum_sigma prod_k [a_k == b_sigma(k)].
double projector_entry(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t matches = 0;
    std::uint64_t total = 0;
    do {
        ++total;
        bool ok = true;
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k] != b[static_cast<std::size_t>(perm[k])]) {
                ok = false;
                break;
            }
        }
        if (ok) ++matches;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return static_cast<double>(matches) / static_cast<double>(total);
}

}  // namespace

StateDesign make_exact_state_design(int d, ExactStateData data, std::string construction) {
    if (d < 1) throw UsageError("state dimension must be >= 1");
    if (data.states.empty() || data.states.size() != data.weights.size()) {
        throw UsageError("states/weights mismatch");
    }
    for (const auto& st : data.states) {
        if (st.size() != static_cast<std::size_t>(d)) throw UsageError("state arity mismatch");
        for (const auto& amp : st) {
            if (amp.mag2 < Rat(0)) throw UsageError("squared magnitudes must be nonnegative");
            if (amp.phase < Rat(0) || amp.phase >= Rat(1)) {
                throw UsageError("phase fractions must lie in [0, 1)");
            }
        }
    }
    return finalize_exact(d, std::move(data), std::move(construction));
}

StateDesign make_complex_state_design(int d,
                                      std::vector<std::vector<std::complex<double>>> states,
                                      std::vector<double> weights, std::string construction) {
    if (d < 1) throw UsageError("state dimension must be >= 1");
    if (states.empty() || states.size() != weights.size()) {
        throw UsageError("states/weights mismatch");
    }
    KahanSum wsum;
    for (double w : weights) {
        if (!(w > 0.0)) throw UsageError("state weights must be positive");
        wsum.add(w);
    }
    if (std::abs(wsum.value() - 1.0) > 1e-9) throw UsageError("state weights must sum to 1");
    for (const auto& st : states) {
        if (st.size() != static_cast<std::size_t>(d)) throw UsageError("state arity mismatch");
        KahanSum norm;
        for (const auto& a : st) norm.add(std::norm(a));
        if (std::abs(norm.value() - 1.0) > 1e-12) {
            throw UsageError("states must have unit norm within 1e-12");
        }
    }
    StateDesign D;
    D.d = d;
    D.states = std::move(states);
    D.weights = std::move(weights);
    D.construction = std::move(construction);
    return D;
}

SimplexDesign simplex_two_design(int d) {
    if (d < 2) throw UsageError("simplex design needs d >= 2");
    const auto dd = static_cast<std::int64_t>(d);
    SimplexDesign S;
    S.d = d;
    S.degree = 2;
    for (int c = 0; c < d; ++c) {
        std::vector<Rat> vertex(static_cast<std::size_t>(d), Rat(0));
        vertex[static_cast<std::size_t>(c)] = Rat(1);
        S.points.push_back(std::move(vertex));
        S.weights.emplace_back(1, dd * (dd + 1));
    }
    S.points.emplace_back(static_cast<std::size_t>(d), Rat(1, dd));
    S.weights.emplace_back(dd, dd + 1);
    validate_simplex(S);
    return S;
}

StateDesign concatenate(const SimplexDesign& S, const designs::WeightedPhaseSet& X, int t) {
    validate_simplex(S);
    if (S.d != X.n) throw UsageError("simplex dimension and torus dimension must match");
    if (S.degree < t) throw UsageError("simplex design does not certify the requested degree");
    if (!X.rational()) throw UsageError("concatenation requires an exact (rational) toric design");
    auto report = designs::verify_design(X, t);
    if (!report.pass) {
        throw UsageError("toric design fails verification at degree " + std::to_string(t));
    }

    const auto& tor = X.rat();
    using Key = std::pair<std::vector<Rat>, std::vector<Rat>>;  // (mag2s, phases)
    std::map<Key, Rat> merged;
    for (std::size_t si = 0; si < S.points.size(); ++si) {
        const auto& pvec = S.points[si];
        for (std::size_t xi = 0; xi < tor.points.size(); ++xi) {
            std::vector<Rat> phases(pvec.size(), Rat(0));
            // Zero-amplitude coordinates carry no phase; rotate so the first
            // populated coordinate has phase 0 (global-phase normal form).
            std::size_t lead = pvec.size();
            for (std::size_t i = 0; i < pvec.size(); ++i) {
                if (pvec[i] != Rat(0)) {
                    lead = i;
                    break;
                }
            }
            const Rat shift = tor.points[xi][lead];
            for (std::size_t i = 0; i < pvec.size(); ++i) {
                if (pvec[i] != Rat(0)) phases[i] = mod_one(tor.points[xi][i] - shift);
            }
            merged[Key(pvec, std::move(phases))] += S.weights[si] * tor.weights[xi];
        }
    }

    ExactStateData exact;
    exact.states.reserve(merged.size());
    exact.weights.reserve(merged.size());
    for (auto& [key, w] : merged) {
        const auto& [mag2s, phases] = key;
        std::vector<ExactAmp> st(mag2s.size());
        for (std::size_t i = 0; i < mag2s.size(); ++i) st[i] = ExactAmp{mag2s[i], phases[i]};
        exact.states.push_back(std::move(st));
        exact.weights.push_back(w);
    }
    return finalize_exact(S.d, std::move(exact), "concatenate");
}

double frame_potential(const StateDesign& D, int t) {
    if (t < 1) throw UsageError("frame potential needs t >= 1");
    if (D.states.empty()) throw UsageError("empty state design");
    KahanSum acc;
    for (std::size_t i = 0; i < D.states.size(); ++i) {
        for (std::size_t j = 0; j < D.states.size(); ++j) {
            KahanComplexSum ip;
            for (int k = 0; k < D.d; ++k) {
                ip.add(std::conj(D.states[i][static_cast<std::size_t>(k)]) *
                       D.states[j][static_cast<std::size_t>(k)]);
            }
            acc.add(D.weights[i] * D.weights[j] *
                    std::pow(std::norm(ip.value()), static_cast<double>(t)));
        }
    }
    return acc.value();
}

MomentReport moment_tensor_check(const StateDesign& D, int t, double tolerance) {
    if (t < 1) throw UsageError("moment check needs t >= 1");
    if (t > kMaxMomentDegree) throw ResourceError("moment degree exceeds the guard t <= 6");
    if (D.states.empty()) throw UsageError("empty state design");
    double entries = std::pow(static_cast<double>(D.d), 2.0 * t);
    if (entries > static_cast<double>(kMaxMomentEntries)) {
        throw ResourceError("d^(2t) exceeds the 10^7 moment-entry guard");
    }

    const auto tuples = index_tuples(D.d, t);
    const std::size_t nt = tuples.size();
    const std::size_t ns = D.states.size();
    const double tr_pi =
        static_cast<double>(comb::binomial(static_cast<std::int64_t>(D.d) + t - 1, t));

    // prod[a][i] = prod_k psi_i[a_k]
    std::vector<std::vector<std::complex<double>>> prod(nt);
    for (std::size_t a = 0; a < nt; ++a) {
        prod[a].resize(ns);
        for (std::size_t i = 0; i < ns; ++i) {
            std::complex<double> v{1.0, 0.0};
            for (int k : tuples[a]) v *= D.states[i][static_cast<std::size_t>(k)];
            prod[a][i] = v;
        }
    }

    struct ChunkMax {
        double value = -1.0;
        std::size_t a = 0, b = 0;
    };
    std::vector<ChunkMax> chunk(parallel::chunk_count(nt));
    parallel::run_chunked(nt, [&](std::size_t begin, std::size_t end, std::size_t c) {
        ChunkMax local;
        for (std::size_t a = begin; a < end; ++a) {
            for (std::size_t b = 0; b < nt; ++b) {
                KahanComplexSum lhs;
                for (std::size_t i = 0; i < ns; ++i) {
                    lhs.add(D.weights[i] * prod[a][i] * std::conj(prod[b][i]));
                }
                double target = projector_entry(tuples[a], tuples[b]) / tr_pi;
                double dev = std::abs(lhs.value() - std::complex<double>(target, 0.0));
                if (dev > local.value) {
                    local.value = dev;
                    local.a = a;
                    local.b = b;
                }
            }
        }
        chunk[c] = local;
    });
    ChunkMax best;
    for (const auto& c : chunk) {
        if (c.value > best.value) best = c;
    }

    MomentReport report;
    report.t = t;
    report.max_deviation = best.value;
    report.worst_row = tuples[best.a];
    report.worst_col = tuples[best.b];
    report.tolerance = tolerance;
    report.pass = best.value <= tolerance;
    return report;
}

StateDesign almost_minimal_2design(int d) {
    if (d < 2) throw UsageError("state design needs d >= 2");
    if (!prime_power(static_cast<std::uint64_t>(d) - 1)) {
        throw UsageError("d - 1 must be a prime power (d = " + std::to_string(d) +
                         " is not supported)");
    }
    auto singer = ds::singer_bt_set(static_cast<std::uint64_t>(d) - 1, 2);
    auto X = designs::group_design_from_bt(singer.set);
    auto D = concatenate(simplex_two_design(d), X, 2);
    D.construction = "almost-minimal-2design";
    return D;
}

}  // namespace toric::quantum
