#include "toric/finite_field.hpp"

#include "toric/errors.hpp"
#include "toric/numtheory.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace toric::ff {

namespace {

using Poly = std::vector<std::uint32_t>;  // dense coefficients, constant term first

constexpr std::uint64_t kMaxFieldSize = 1u << 20;  // desk-scale guard

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
    return powmod_u64(a, p - 2, p);  // p prime, a != 0
}

int degree(const Poly& a) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != 0) return static_cast<int>(i);
    }
    return -1;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// (a * b) mod f over Z_p, f monic of degree d >= 1.
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    int d = static_cast<int>(f.size()) - 1;
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
        }
    }
    for (std::size_t i = prod.size(); i-- > static_cast<std::size_t>(d);) {
        std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        // x^i = -sum_j f_j x^(i-d+j)
        for (int j = 0; j < d; ++j) {
            std::uint64_t sub = c * f[static_cast<std::size_t>(j)] % p;
            std::size_t k = i - static_cast<std::size_t>(d) + static_cast<std::size_t>(j);
            prod[k] = (prod[k] + p - sub) % p;
        }
    }
    prod.resize(std::max<std::size_t>(prod.size(), static_cast<std::size_t>(d)), 0);
    Poly out(prod.begin(), prod.begin() + d);
    trim(out);
    return out;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly r = {1};
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

// Remainder of a by b over Z_p; b nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
    trim(a);
    int db = degree(b);
    std::uint64_t lead_inv = inv_mod_p(b[static_cast<std::size_t>(db)], p);
    while (degree(a) >= db) {
        int da = degree(a);
        std::uint64_t q = a[static_cast<std::size_t>(da)] * lead_inv % p;
        for (int j = 0; j <= db; ++j) {
            std::uint64_t sub = q * b[static_cast<std::size_t>(j)] % p;
            std::size_t k = static_cast<std::size_t>(da - db + j);
            a[k] = static_cast<std::uint32_t>((a[k] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    // normalize monic
    if (!a.empty()) {
        std::uint64_t s = inv_mod_p(a.back(), p);
        for (auto& c : a) c = static_cast<std::uint32_t>(c * s % p);
    }
    return a;
}

std::uint64_t checked_pow_u64(std::uint64_t base, int exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / base) {
            throw ResourceError("field size p^m exceeds the desk-scale guard 2^20");
        }
        r *= base;
    }
    return r;
}

void check_element(const FieldSpec& spec, const FieldElement& a, const char* what) {
    if (a.coeffs.size() != static_cast<std::size_t>(spec.m)) {
        throw UsageError(std::string(what) + ": element does not belong to this field "
                         "(coefficient count mismatch)");
    }
    for (auto c : a.coeffs) {
        if (c >= spec.p) {
            throw UsageError(std::string(what) + ": element does not belong to this field "
                             "(coefficient out of range)");
        }
    }
}

FieldElement from_poly(const FieldSpec& spec, const Poly& poly) {
    FieldElement e;
    e.coeffs.assign(static_cast<std::size_t>(spec.m), 0);
    std::copy(poly.begin(), poly.end(), e.coeffs.begin());
    return e;
}

bool is_one(const FieldElement& a) {
    if (a.coeffs.empty() || a.coeffs[0] != 1) return false;
    return std::all_of(a.coeffs.begin() + 1, a.coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

bool is_zero(const FieldElement& a) {
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

bool order_is_maximal(const FieldSpec& spec, const FieldElement& g,
                      const std::vector<std::pair<std::uint64_t, int>>& factors) {
    if (is_zero(g)) return false;
    std::uint64_t n = spec.group_order();
    for (const auto& [prime, exp] : factors) {
        (void)exp;
        if (is_one(pow(spec, g, n / prime))) return false;
    }
    return true;
}

}  // namespace

std::uint64_t FieldSpec::order() const {
    std::uint64_t r = 1;
    for (int i = 0; i < m; ++i) r *= p;
    return r;
}

std::uint64_t FieldSpec::group_order() const { return order() - 1; }

bool is_irreducible(std::uint64_t p, const std::vector<std::uint32_t>& coeffs) {
    if (!is_prime(p)) throw UsageError("characteristic must be prime");
    if (coeffs.size() < 2) throw UsageError("polynomial must have degree >= 1");
    if (coeffs.back() != 1) throw UsageError("polynomial must be monic");
    for (auto c : coeffs) {
        if (c >= p) throw UsageError("coefficient out of range [0, p)");
    }
    int d = static_cast<int>(coeffs.size()) - 1;
    if (d == 1) return true;

    // Frobenius chain: frob[k] = x^(p^k) mod f.
    Poly x = {0, 1};
    std::vector<Poly> frob(static_cast<std::size_t>(d) + 1);
    frob[0] = x;
    for (int k = 1; k <= d; ++k) {
        frob[static_cast<std::size_t>(k)] =
            poly_powmod(frob[static_cast<std::size_t>(k - 1)], p, coeffs, p);
    }
    if (frob[static_cast<std::size_t>(d)] != x) return false;
    for (const auto& [prime, exp] : factorize(static_cast<std::uint64_t>(d))) {
        (void)exp;
        int k = d / static_cast<int>(prime);
        Poly diff = frob[static_cast<std::size_t>(k)];
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);  // subtract x
        trim(diff);
        Poly g = poly_gcd(coeffs, diff, p);
        if (degree(g) != 0) return false;
    }
    return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint64_t p, int m) {
    if (!is_prime(p)) throw UsageError("characteristic must be prime");
    if (m < 1) throw UsageError("extension degree must be >= 1");
    checked_pow_u64(p, m, kMaxFieldSize);
    // Scan lower-coefficient lists (c_0, ..., c_{m-1}) in lexicographic
    // order with c_0 most significant.
    std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(m) + 1, 0);
    coeffs.back() = 1;
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) total *= p;
    for (std::uint64_t v = 0; v < total; ++v) {
        std::uint64_t rest = v;
        for (int i = m - 1; i >= 0; --i) {
            coeffs[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        if (is_irreducible(p, coeffs)) return coeffs;
    }
    throw DomainError("no irreducible polynomial found");  // unreachable
}

FieldElement find_primitive(std::uint64_t p, int m, const std::vector<std::uint32_t>& modulus) {
    FieldSpec spec;
    spec.p = p;
    spec.m = m;
    spec.modulus = modulus;
    auto factors = factorize(spec.group_order());
    // Scan by integer encoding (constant term least significant).
    for (std::uint64_t v = 1; v < spec.order(); ++v) {
        FieldElement g = decode(spec, v);
        if (order_is_maximal(spec, g, factors)) return g;
    }
    throw DomainError("no primitive element found");  // unreachable for valid fields
}

FieldSpec make_field(std::uint64_t p, int m,
                     std::optional<std::vector<std::uint32_t>> modulus,
                     std::optional<FieldElement> generator) {
    if (!is_prime(p)) throw UsageError("p must be prime");
    if (m < 1) throw UsageError("extension degree must be >= 1");
    checked_pow_u64(p, m, kMaxFieldSize);

    FieldSpec spec;
    spec.p = p;
    spec.m = m;
    if (modulus) {
        if (modulus->size() != static_cast<std::size_t>(m) + 1) {
            throw UsageError("modulus must have degree exactly m");
        }
        if (!is_irreducible(p, *modulus)) {
            throw UsageError("modulus is not irreducible over Z_p");
        }
        spec.modulus = std::move(*modulus);
    } else {
        spec.modulus = find_irreducible(p, m);
    }
    if (generator) {
        check_element(spec, *generator, "generator");
        if (!order_is_maximal(spec, *generator, factorize(spec.group_order()))) {
            throw UsageError("generator does not have multiplicative order p^m - 1");
        }
        spec.generator = std::move(*generator);
    } else {
        spec.generator = find_primitive(p, m, spec.modulus);
    }
    return spec;
}

FieldElement zero(const FieldSpec& spec) {
    return FieldElement{std::vector<std::uint32_t>(static_cast<std::size_t>(spec.m), 0)};
}

FieldElement one(const FieldSpec& spec) {
    auto e = zero(spec);
    e.coeffs[0] = 1 % static_cast<std::uint32_t>(spec.p);
    return e;
}

FieldElement element(const FieldSpec& spec, const std::vector<std::uint32_t>& coeffs) {
    if (coeffs.size() > static_cast<std::size_t>(spec.m)) {
        throw UsageError("element has more coefficients than the extension degree");
    }
    FieldElement e = zero(spec);
    std::copy(coeffs.begin(), coeffs.end(), e.coeffs.begin());
    check_element(spec, e, "element");
    return e;
}

FieldElement add(const FieldSpec& spec, const FieldElement& a, const FieldElement& b) {
    check_element(spec, a, "add");
    check_element(spec, b, "add");
    FieldElement r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        r.coeffs[i] = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(r.coeffs[i]) + b.coeffs[i]) % spec.p);
    }
    return r;
}

FieldElement neg(const FieldSpec& spec, const FieldElement& a) {
    check_element(spec, a, "neg");
    FieldElement r = a;
    for (auto& c : r.coeffs) {
        c = static_cast<std::uint32_t>((spec.p - c) % spec.p);
    }
    return r;
}

FieldElement sub(const FieldSpec& spec, const FieldElement& a, const FieldElement& b) {
    return add(spec, a, neg(spec, b));
}

FieldElement mul(const FieldSpec& spec, const FieldElement& a, const FieldElement& b) {
    check_element(spec, a, "mul");
    check_element(spec, b, "mul");
    return from_poly(spec, poly_mulmod(a.coeffs, b.coeffs, spec.modulus, spec.p));
}

FieldElement pow(const FieldSpec& spec, const FieldElement& a, std::uint64_t e) {
    check_element(spec, a, "pow");
    return from_poly(spec, poly_powmod(a.coeffs, e, spec.modulus, spec.p));
}

FieldElement inv(const FieldSpec& spec, const FieldElement& a) {
    check_element(spec, a, "inv");
    if (is_zero(a)) throw DomainError("inverse of zero");
    return pow(spec, a, spec.order() - 2);
}

std::uint64_t encode(const FieldSpec& spec, const FieldElement& a) {
    check_element(spec, a, "encode");
    std::uint64_t v = 0;
    for (std::size_t i = a.coeffs.size(); i-- > 0;) {
        v = v * spec.p + a.coeffs[i];
    }
    return v;
}

FieldElement decode(const FieldSpec& spec, std::uint64_t value) {
    if (value >= spec.order()) throw UsageError("encoded value out of range");
    FieldElement e = zero(spec);
    for (int i = 0; i < spec.m; ++i) {
        e.coeffs[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(value % spec.p);
        value /= spec.p;
    }
    return e;
}

std::uint64_t element_order(const FieldSpec& spec, const FieldElement& a) {
    check_element(spec, a, "element_order");
    if (is_zero(a)) throw DomainError("order of zero is undefined");
    std::uint64_t ord = spec.group_order();
    for (const auto& [prime, exp] : factorize(spec.group_order())) {
        for (int i = 0; i < exp; ++i) {
            if (ord % prime == 0 && is_one(pow(spec, a, ord / prime))) {
                ord /= prime;
            } else {
                break;
            }
        }
    }
    return ord;
}

DlogTable::DlogTable(const FieldSpec& spec)
    : spec_(spec), group_order_(spec.group_order()) {
    exp_by_value_.assign(spec.order(), group_order_);  // sentinel = group order
    elem_by_exp_.reserve(group_order_);
    FieldElement e = one(spec_);
    for (std::uint64_t a = 0; a < group_order_; ++a) {
        std::uint64_t v = encode(spec_, e);
        if (exp_by_value_[v] != group_order_) {
            throw UsageError("generator does not generate the full multiplicative group");
        }
        exp_by_value_[v] = a;
        elem_by_exp_.push_back(e);
        e = mul(spec_, e, spec_.generator);
    }
    if (!is_one(e)) {
        throw UsageError("generator order does not divide p^m - 1 (invalid field spec)");
    }
}

std::uint64_t DlogTable::exponent_of(const FieldElement& a) const {
    std::uint64_t v = encode(spec_, a);
    if (v == 0) throw DomainError("discrete logarithm of zero");
    return exp_by_value_[v];
}

FieldElement DlogTable::element_of(std::uint64_t exponent) const {
    return elem_by_exp_[exponent % group_order_];
}

}  // namespace toric::ff
