#include "toric/repro.hpp"

#include "toric/approx_designs.hpp"
#include "toric/difference_sets.hpp"
#include "toric/quantum_designs.hpp"
#include "toric/toric_designs.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace toric::repro {

namespace {

using Check = std::function<bool(std::string&)>;

Item timed(const std::string& name, const Check& check) {
    Item item;
    item.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
        item.pass = check(item.detail);
    } catch (const std::exception& e) {
        item.pass = false;
        item.detail = std::string("exception: ") + e.what();
    }
    item.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return item;
}

std::string join_u64(const std::vector<std::uint64_t>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

bool check_singer_gf64(std::string& detail) {
    auto field = ff::make_field(2, 6, std::vector<std::uint32_t>{1, 0, 0, 0, 0, 1, 1},
                                ff::FieldElement{{0, 1, 0, 0, 0, 0}});
    auto singer = ds::singer_bt_set(4, 2, field);
    const std::vector<std::uint64_t> want_T{0, 1, 14, 25, 58};
    const std::vector<std::uint64_t> want_S{0, 1, 4, 14, 16};
    const std::vector<std::uint64_t> want_sums{0, 1, 2,  4,  5,  7,  8, 9,
                                               11, 14, 15, 16, 17, 18, 20};
    auto verify = ds::verify_bt(singer.set);
    bool ok = singer.exponents == want_T && singer.set.elements == want_S &&
              singer.set.m == 21 && verify.valid && verify.sums == want_sums;
    detail = "S_2 = " + join_u64(singer.set.elements) + " mod " + std::to_string(singer.set.m);
    return ok;
}

bool check_dense_sidon_31(std::string& detail) {
    ds::BtSet z;
    z.t = 2;
    z.m = 31;
    z.elements = {0, 1, 3, 8, 12, 18};
    auto verify = ds::verify_bt(z);
    if (!verify.valid) {
        detail = "verification failed";
        return false;
    }
    z.verified = true;
    auto X = designs::group_design_from_bt(z);
    auto report = designs::verify_design(X, 2, 1e-12);
    bool minimal = designs::is_minimal(X, 2);
    std::ostringstream os;
    os << "size " << X.size() << ", deviation " << std::scientific << std::setprecision(2)
       << report.max_deviation << ", minimal=" << (minimal ? "yes" : "no");
    detail = os.str();
    return report.pass && minimal;
}

bool check_sidon_7_43(std::string& detail) {
    auto result = ds::search_sidon(7, 43, ds::SearchMode::All);
    detail = "found " + std::to_string(result.sets.size()) + " sets";
    return result.sets.empty();
}

bool check_crystal_ball(std::string& detail) {
    for (int n = 1; n <= 6; ++n) {
        for (int s = 0; s <= 4; ++s) {
            if (comb::BigInt(comb::enumerate_pst(n, s).size()) != comb::crystal_ball(n, s)) {
                detail = "count mismatch at n=" + std::to_string(n) + ", s=" + std::to_string(s);
                return false;
            }
        }
    }
    for (int n = 1; n <= 50; ++n) {
        if (comb::crystal_ball(n, 1) != comb::BigInt(n) * (n - 1) + 1) {
            detail = "G(n,1) mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    for (int t = 0; t <= 20; ++t) {
        if (comb::crystal_ball(2, t) != 2 * t + 1) {
            detail = "G(2,t) mismatch at t=" + std::to_string(t);
            return false;
        }
    }
    detail = "enumeration and closed form agree";
    return true;
}

bool check_constructions(std::string& detail) {
    double worst = 0.0;
    for (int n = 2; n <= 4; ++n) {
        for (int t = 1; t <= 3; ++t) {
            auto report = designs::verify_design(designs::grid_design(n, t), t, 1e-12);
            worst = std::max(worst, report.max_deviation);
            if (!report.pass) {
                detail = "grid n=" + std::to_string(n) + " t=" + std::to_string(t) + " failed";
                return false;
            }
        }
    }
    for (int n = 2; n <= 6; ++n) {
        auto X = designs::quadratic_prime_design(n);
        auto report = designs::verify_design(X, 2, 1e-12);
        worst = std::max(worst, report.max_deviation);
        if (!report.pass) {
            detail = "quadratic n=" + std::to_string(n) + " failed";
            return false;
        }
    }
    auto X2 = designs::quadratic_prime_design(2);
    designs::RationalData want;
    want.points = {{Rat(0), Rat(0)}, {Rat(0), Rat(1, 3)}, {Rat(0), Rat(2, 3)}};
    want.weights = {Rat(1, 3), Rat(1, 3), Rat(1, 3)};
    if (!(X2.rat().points == want.points && X2.rat().weights == want.weights)) {
        detail = "n=2 quadratic design differs from the 3-point reference";
        return false;
    }
    std::ostringstream os;
    os << "worst deviation " << std::scientific << std::setprecision(2) << worst;
    detail = os.str();
    return true;
}

bool check_state_designs(std::string& detail) {
    for (int d = 3; d <= 6; ++d) {
        auto D = quantum::almost_minimal_2design(d);
        if (D.size() != static_cast<std::size_t>(d) * d + 1) {
            detail = "d=" + std::to_string(d) + ": size " + std::to_string(D.size());
            return false;
        }
        double target = 2.0 / (static_cast<double>(d) * (d + 1));
        if (std::abs(quantum::frame_potential(D, 2) - target) > 1e-12) {
            detail = "d=" + std::to_string(d) + ": frame potential off target";
            return false;
        }
        if (!quantum::moment_tensor_check(D, 2, 1e-10).pass) {
            detail = "d=" + std::to_string(d) + ": moment check failed";
            return false;
        }
        if (d == 3) {
            int light = 0, heavy = 0;
            for (const auto& w : D.exact->weights) {
                if (w == Rat(1, 12)) ++light;
                if (w == Rat(3, 28)) ++heavy;
            }
            if (light != 3 || heavy != 7) {
                detail = "d=3 weights differ from 1/12 x3 + 3/28 x7";
                return false;
            }
        }
    }
    detail = "d=3..6 all pass (sizes 10, 17, 26, 37)";
    return true;
}

}  // namespace

std::vector<Item> run_suite() {
    return {
        timed("singer q=4 t=2 reproduces {0,1,4,14,16} mod 21", check_singer_gf64),
        timed("dense Sidon set mod 31 gives a minimal 2-design", check_dense_sidon_31),
        timed("no size-7 Sidon set mod 43 (exhaustive)", check_sidon_7_43),
        timed("crystal-ball counts match enumeration", check_crystal_ball),
        timed("grid and quadratic constructions verify", check_constructions),
        timed("almost-minimal state 2-designs d=3..6", check_state_designs),
    };
}

bool print_table(const std::vector<Item>& items, std::ostream& out) {
    std::size_t width = 0;
    for (const auto& it : items) width = std::max(width, it.name.size());
    bool all = true;
    for (const auto& it : items) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << it.name
            << (it.pass ? "PASS" : "FAIL") << "  " << std::fixed << std::setprecision(3)
            << it.seconds << "s";
        if (!it.detail.empty()) out << "  " << it.detail;
        out << '\n';
        all = all && it.pass;
    }
    out << (all ? "all checks passed" : "SOME CHECKS FAILED") << '\n';
    return all;
}

}  // namespace toric::repro
