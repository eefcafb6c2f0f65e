#include "toric/toric_designs.hpp"

#include "toric/errors.hpp"
#include "toric/kahan.hpp"
#include "toric/numtheory.hpp"
#include "toric/threading.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <string>

namespace toric::designs {

namespace {

constexpr std::uint64_t kMaxPoints = 10'000'000;

void validate_real(const WeightedPhaseSet& X) {
    const auto& d = X.real();
    if (d.points.size() != d.weights.size()) {
        throw UsageError("points/weights length mismatch");
    }
    if (d.points.empty()) throw UsageError("design must contain at least one point");
    KahanSum total;
    for (double w : d.weights) {
        if (!(w > 0.0)) throw UsageError("weights must be positive");
        total.add(w);
    }
    if (std::abs(total.value() - 1.0) > 1e-9) throw UsageError("weights must sum to 1");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (const auto& pt : d.points) {
        if (pt.size() != static_cast<std::size_t>(X.n)) {
            throw UsageError("point arity does not match n");
        }
        if (pt[0] != 0.0) {
            throw UsageError("points must be normalized with first coordinate 0");
        }
        for (double c : pt) {
            if (!(c >= 0.0 && c < two_pi)) throw UsageError("angles must lie in [0, 2pi)");
        }
    }
}

void validate_rational(const WeightedPhaseSet& X) {
    const auto& d = X.rat();
    if (d.points.size() != d.weights.size()) {
        throw UsageError("points/weights length mismatch");
    }
    if (d.points.empty()) throw UsageError("design must contain at least one point");
    Rat total(0);
    for (const auto& w : d.weights) {
        if (w <= Rat(0)) throw UsageError("weights must be positive");
        total += w;
    }
    if (total != Rat(1)) throw UsageError("weights must sum to exactly 1");
    for (const auto& pt : d.points) {
        if (pt.size() != static_cast<std::size_t>(X.n)) {
            throw UsageError("point arity does not match n");
        }
        if (pt[0] != Rat(0)) {
            throw UsageError("points must be normalized with first coordinate 0");
        }
        for (const auto& c : pt) {
            if (c < Rat(0) || c >= Rat(1)) {
                throw UsageError("phase fractions must lie in [0, 1)");
            }
        }
    }
    std::vector<std::size_t> order(d.points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return d.points[a] < d.points[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (d.points[order[i - 1]] == d.points[order[i]]) {
            throw UsageError("points must be pairwise distinct");
        }
    }
}

WeightedPhaseSet from_merged(int n, std::map<std::vector<Rat>, Rat> merged,
                             std::string construction) {
    RationalData data;
    data.points.reserve(merged.size());
    data.weights.reserve(merged.size());
    for (auto& [pt, w] : merged) {
        data.points.push_back(pt);
        data.weights.push_back(w);
    }
    WeightedPhaseSet X;
    X.n = n;
    X.data = std::move(data);
    X.construction = std::move(construction);
    validate_rational(X);
    return X;
}

struct ChunkMax {
    double value = -1.0;
    std::size_t index = std::numeric_limits<std::size_t>::max();
};

}  // namespace

std::size_t WeightedPhaseSet::size() const {
    return rational() ? rat().points.size() : real().points.size();
}

void validate(const WeightedPhaseSet& X) {
    if (X.n < 1) throw UsageError("dimension n must be >= 1");
    if (X.rational()) {
        validate_rational(X);
    } else {
        validate_real(X);
    }
}

WeightedPhaseSet grid_design(int n, int t) {
    if (n < 2) throw UsageError("grid design needs n >= 2");
    if (t < 1) throw UsageError("grid design needs t >= 1");
    const std::uint64_t base = static_cast<std::uint64_t>(t) + 1;
    std::uint64_t count = 1;
    for (int i = 0; i < n - 1; ++i) {
        if (count > kMaxPoints / base) {
            throw ResourceError("(t+1)^(n-1) exceeds the 10^7 point guard");
        }
        count *= base;
    }

    RationalData data;
    data.points.reserve(count);
    data.weights.assign(count, Rat(1, static_cast<std::int64_t>(count)));
    std::vector<std::int64_t> digits(static_cast<std::size_t>(n - 1), 0);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::vector<Rat> pt;
        pt.reserve(static_cast<std::size_t>(n));
        pt.emplace_back(0);
        for (auto d : digits) pt.emplace_back(d, static_cast<std::int64_t>(base));
        data.points.push_back(std::move(pt));
        for (std::size_t k = digits.size(); k-- > 0;) {
            if (++digits[k] < static_cast<std::int64_t>(base)) break;
            digits[k] = 0;
        }
    }
    WeightedPhaseSet X;
    X.n = n;
    X.data = std::move(data);
    X.construction = "grid";
    validate_rational(X);
    return X;
}

WeightedPhaseSet quadratic_prime_design(int n) {
    if (n < 2) throw UsageError("quadratic design needs n >= 2");
    const std::uint64_t p = next_prime_above(std::max<std::uint64_t>(2, static_cast<std::uint64_t>(n)));
    if (p * p > kMaxPoints) throw ResourceError("p^2 exceeds the 10^7 point guard");

    const auto ip = static_cast<std::int64_t>(p);
    std::map<std::vector<Rat>, Rat> merged;
    const Rat w(1, ip * ip);
    std::vector<Rat> pt(static_cast<std::size_t>(n));
    for (std::int64_t q1 = 0; q1 < ip; ++q1) {
        for (std::int64_t q2 = 0; q2 < ip; ++q2) {
            for (std::int64_t j = 0; j < n; ++j) {
                pt[static_cast<std::size_t>(j)] = Rat((j * q1 + j * j * q2) % ip, ip);
            }
            merged[pt] += w;
        }
    }
    return from_merged(n, std::move(merged), "quadratic-prime");
}

WeightedPhaseSet cyclic_orbit_design(const std::vector<std::uint64_t>& z, std::uint64_t m) {
    if (m < 1) throw UsageError("modulus must be >= 1");
    if (z.empty()) throw UsageError("generator tuple must be nonempty");
    if (m > kMaxPoints) throw ResourceError("orbit size exceeds the 10^7 point guard");

    // Normalize so the first coordinate of every orbit point is 0.
    std::vector<std::uint64_t> zz(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        zz[i] = (z[i] % m + m - z[0] % m) % m;
    }
    const auto im = static_cast<std::int64_t>(m);
    std::map<std::vector<Rat>, Rat> merged;
    const Rat w(1, im);
    std::vector<Rat> pt(z.size());
    for (std::uint64_t d = 0; d < m; ++d) {
        for (std::size_t j = 0; j < zz.size(); ++j) {
            pt[j] = Rat(static_cast<std::int64_t>(d * zz[j] % m), im);
        }
        merged[pt] += w;
    }
    return from_merged(static_cast<int>(z.size()), std::move(merged), "cyclic-orbit");
}

WeightedPhaseSet group_design_from_bt(const ds::BtSet& z) {
    if (!z.verified) {
        auto check = ds::verify_bt(z);
        if (!check.valid) {
            throw UsageError("group design requires a verified B_t set (verification failed)");
        }
    }
    auto X = cyclic_orbit_design(z.elements, z.m);
    X.construction = "group-bt";
    return X;
}

std::complex<double> monomial_sum(const WeightedPhaseSet& X, const comb::ExponentVector& k) {
    if (k.size() != static_cast<std::size_t>(X.n)) {
        throw UsageError("exponent vector arity does not match the design");
    }
    KahanComplexSum acc;
    if (X.rational()) {
        const auto& d = X.rat();
        for (std::size_t j = 0; j < d.points.size(); ++j) {
            Rat dot(0);
            for (std::size_t i = 0; i < k.size(); ++i) {
                if (k[i] != 0) dot += Rat(k[i]) * d.points[j][i];
            }
            double angle = turn_to_angle(mod_one(dot));
            double w = to_double(d.weights[j]);
            acc.add({w * std::cos(angle), w * std::sin(angle)});
        }
    } else {
        const auto& d = X.real();
        for (std::size_t j = 0; j < d.points.size(); ++j) {
            double dot = 0.0;
            for (std::size_t i = 0; i < k.size(); ++i) {
                if (k[i] != 0) dot += k[i] * d.points[j][i];
            }
            double w = d.weights[j];
            acc.add({w * std::cos(dot), w * std::sin(dot)});
        }
    }
    return acc.value();
}

VerificationReport verify_design(const WeightedPhaseSet& X, int t, double tolerance) {
    if (t < 0) throw UsageError("degree t must be >= 0");
    auto reps = comb::pst_representatives(X.n, t);

    VerificationReport report;
    report.t = t;
    report.tolerance = tolerance;
    report.worst_exponent.assign(static_cast<std::size_t>(X.n), 0);
    if (reps.empty()) {
        report.pass = true;
        return report;
    }

    std::vector<ChunkMax> chunk(parallel::chunk_count(reps.size()));
    parallel::run_chunked(reps.size(), [&](std::size_t begin, std::size_t end, std::size_t c) {
        ChunkMax local;
        for (std::size_t i = begin; i < end; ++i) {
            double dev = std::abs(monomial_sum(X, reps[i]));
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
    report.max_deviation = best.value;
    report.worst_exponent = reps[best.index];
    report.pass = best.value <= tolerance;
    return report;
}

bool gram_check(const WeightedPhaseSet& X, int t, double tolerance) {
    if (t < 0 || t % 2 != 0) throw UsageError("gram check requires even t");
    auto basis = comb::enumerate_pst(X.n, t / 2);
    comb::ExponentVector diff(static_cast<std::size_t>(X.n));
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = basis[b][i] - basis[a][i];
            std::complex<double> g = monomial_sum(X, diff);
            double target = (a == b) ? 1.0 : 0.0;
            if (std::abs(g - std::complex<double>(target, 0.0)) > tolerance) return false;
        }
    }
    return true;
}

bool is_minimal(const WeightedPhaseSet& X, int t) {
    auto report = verify_design(X, t);
    if (!report.pass) {
        throw UsageError("is_minimal requires a design that verifies at degree t");
    }
    return comb::BigInt(X.size()) == comb::min_design_size(X.n, t);
}

}  // namespace toric::designs
