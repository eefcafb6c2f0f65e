#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toric/errors.hpp"
#include "toric/finite_field.hpp"

#include "oracles.hpp"

#include <random>
#include <set>

using namespace toric;
using namespace toric::ff;

namespace {

FieldSpec paper_field() {
    return make_field(2, 6, std::vector<std::uint32_t>{1, 0, 0, 0, 0, 1, 1},
                      FieldElement{{0, 1, 0, 0, 0, 0}});
}

FieldElement rand_element(const FieldSpec& F, std::mt19937_64& eng) {
    return decode(F, eng() % F.order());
}

}  // namespace

TEST_CASE("powers of x in GF(2^6) with modulus 1+x^5+x^6") {
    auto F = paper_field();
    auto x = element(F, {0, 1});
    CHECK(sub(F, pow(F, x, 14), x) == element(F, {0, 0, 0, 1, 1, 1}));
    CHECK(sub(F, pow(F, x, 25), x) == element(F, {1, 0, 0, 1, 1, 1}));
    CHECK(sub(F, pow(F, x, 58), x) == one(F));
    // x^21 generates the 4-element subfield; its square is x^42
    auto y = pow(F, x, 21);
    CHECK(mul(F, y, y) == pow(F, x, 42));
}

TEST_CASE("multiplicative identity and inverses") {
    auto F = paper_field();
    std::mt19937_64 eng(7);
    for (int i = 0; i < 50; ++i) {
        auto a = rand_element(F, eng);
        CHECK(mul(F, a, one(F)) == a);
        if (a != zero(F)) {
            CHECK(mul(F, a, inv(F, a)) == one(F));
        }
    }
    CHECK_THROWS_AS(inv(F, zero(F)), DomainError);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 eng(42);
    for (auto [p, m] : {std::pair<std::uint64_t, int>{2, 6}, {3, 3}, {7, 1}, {5, 2}}) {
        auto F = make_field(p, m);
        for (int i = 0; i < 200; ++i) {
            auto a = rand_element(F, eng);
            auto b = rand_element(F, eng);
            auto c = rand_element(F, eng);
            CHECK(mul(F, a, add(F, b, c)) == add(F, mul(F, a, b), mul(F, a, c)));
            CHECK(mul(F, mul(F, a, b), c) == mul(F, a, mul(F, b, c)));
            CHECK(mul(F, a, b) == mul(F, b, a));
            CHECK(add(F, a, sub(F, b, b)) == a);
        }
    }
}

TEST_CASE("element arity and range are enforced") {
    auto F = paper_field();
    CHECK_THROWS_AS(mul(F, FieldElement{{1, 0, 0}}, one(F)), UsageError);
    CHECK_THROWS_AS(element(F, {2, 0, 0, 0, 0, 0}), UsageError);
    CHECK_THROWS_AS(element(F, {0, 0, 0, 0, 0, 0, 1}), UsageError);
}

TEST_CASE("irreducibility examples") {
    CHECK(is_irreducible(2, {1, 0, 0, 0, 0, 1, 1}));  // 1 + x^5 + x^6
    CHECK_FALSE(is_irreducible(2, {0, 0, 1}));        // x^2 = x * x
    CHECK(is_irreducible(2, {1, 1, 1}));              // x^2 + x + 1
    CHECK(is_irreducible(2, {1, 1, 0, 1}));
    CHECK(is_irreducible(5, {0, 1}));  // degree 1
}

TEST_CASE("irreducibility agrees with trial division") {
    auto scan = [](std::uint64_t p, int deg) {
        std::vector<std::uint32_t> f(static_cast<std::size_t>(deg) + 1, 0);
        f.back() = 1;
        std::uint64_t total = 1;
        for (int i = 0; i < deg; ++i) total *= p;
        for (std::uint64_t v = 0; v < total; ++v) {
            std::uint64_t rest = v;
            for (int i = 0; i < deg; ++i) {
                f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            CHECK(is_irreducible(p, f) == oracle::irreducible_trial_division(p, f));
        }
    };
    scan(2, 2);
    scan(2, 3);
    scan(2, 4);
    scan(2, 6);
    scan(3, 2);
    scan(3, 3);
    scan(5, 2);
}

TEST_CASE("irreducibility input validation") {
    CHECK_THROWS_AS(is_irreducible(2, {1, 2, 1}), UsageError);  // coefficient >= p
    CHECK_THROWS_AS(is_irreducible(2, {0, 1, 0}), UsageError);  // not monic
    CHECK_THROWS_AS(is_irreducible(2, {1}), UsageError);        // degree 0
    CHECK_THROWS_AS(is_irreducible(4, {1, 1, 1}), UsageError);  // p not prime
}

TEST_CASE("find_irreducible scans constant-first lexicographic order") {
    CHECK(find_irreducible(2, 6) == std::vector<std::uint32_t>{1, 0, 0, 0, 0, 1, 1});
    CHECK(find_irreducible(2, 1) == std::vector<std::uint32_t>{0, 1});
    for (auto [p, m] : {std::pair<std::uint64_t, int>{2, 1}, {2, 2}, {2, 5}, {2, 8},
                        {3, 1}, {3, 4}, {5, 3}, {7, 2}, {11, 2}}) {
        auto f = find_irreducible(p, m);
        CHECK(f.size() == static_cast<std::size_t>(m) + 1);
        CHECK(is_irreducible(p, f));
    }
}

TEST_CASE("find_primitive picks the smallest primitive element by encoding") {
    // GF(2^6) with the reference modulus: x itself generates.
    auto g = find_primitive(2, 6, {1, 0, 0, 0, 0, 1, 1});
    CHECK(g == FieldElement{{0, 1, 0, 0, 0, 0}});
    // Prime fields.
    CHECK(find_primitive(3, 1, {0, 1}) == FieldElement{{2}});
    CHECK(find_primitive(2, 1, {0, 1}) == FieldElement{{1}});
    CHECK(find_primitive(7, 1, {0, 1}) == FieldElement{{3}});  // 3 generates Z_7^x
}

TEST_CASE("generated field specs have full-order generators") {
    for (auto [p, m] : {std::pair<std::uint64_t, int>{2, 1}, {2, 4}, {2, 8}, {2, 12},
                        {3, 2}, {3, 5}, {5, 3}, {7, 3}, {13, 2}}) {
        auto F = make_field(p, m);
        CHECK(element_order(F, F.generator) == F.group_order());
    }
}

TEST_CASE("make_field validation") {
    CHECK_THROWS_AS(make_field(4, 2), UsageError);                             // p not prime
    CHECK_THROWS_AS(make_field(2, 0), UsageError);                             // m < 1
    CHECK_THROWS_AS(make_field(2, 3, std::vector<std::uint32_t>{1, 1, 1, 1}),  // reducible
                    UsageError);
    CHECK_THROWS_AS(make_field(2, 3, std::nullopt, FieldElement{{1, 0, 0}}),   // order 1
                    UsageError);
    CHECK_THROWS_AS(make_field(2, 25), ResourceError);  // 2^25 over the guard
}

TEST_CASE("discrete logarithm table") {
    auto F = paper_field();
    DlogTable table(F);
    CHECK(table.size() == 63);
    CHECK(table.exponent_of(one(F)) == 0);
    // x^14 = x + (x^14 - x) = x + x^3 + x^4 + x^5
    CHECK(table.exponent_of(element(F, {0, 1, 0, 1, 1, 1})) == 14);
    CHECK_THROWS_AS(table.exponent_of(zero(F)), DomainError);

    auto F4 = make_field(2, 2);
    DlogTable t4(F4);
    CHECK(t4.size() == 3);
    std::set<std::uint64_t> exps;
    for (std::uint64_t v = 1; v < F4.order(); ++v) {
        exps.insert(t4.exponent_of(decode(F4, v)));
    }
    CHECK(exps == std::set<std::uint64_t>{0, 1, 2});
}

TEST_CASE("dlog table is a bijection") {
    auto F = make_field(3, 3);
    DlogTable table(F);
    std::set<std::uint64_t> exps;
    for (std::uint64_t v = 1; v < F.order(); ++v) {
        auto a = table.exponent_of(decode(F, v));
        CHECK(a < F.group_order());
        exps.insert(a);
        CHECK(table.element_of(a) == decode(F, v));
    }
    CHECK(exps.size() == F.group_order());
}

TEST_CASE("encode/decode round trip") {
    auto F = make_field(3, 3);
    for (std::uint64_t v = 0; v < F.order(); ++v) {
        CHECK(encode(F, decode(F, v)) == v);
    }
    CHECK_THROWS_AS(decode(F, F.order()), UsageError);
}
