#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace toric::ff {

/// Element of GF(p^m) in polynomial representation: coefficient of x^0
/// first, m residues mod p.
struct FieldElement {
    std::vector<std::uint32_t> coeffs;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// Description of GF(p^m): a monic irreducible modulus of degree m over Z_p
/// (coefficients constant-term first, length m+1) and a primitive element.
///
/// Immutable after construction through make_field(); safe to share across
/// threads.
struct FieldSpec {
    std::uint64_t p = 0;
    int m = 0;
    std::vector<std::uint32_t> modulus;
    FieldElement generator;

    /// p^m.
    std::uint64_t order() const;
    /// Size of the multiplicative group, p^m - 1.
    std::uint64_t group_order() const;
};

/// True iff the monic polynomial (constant-term-first coefficients, degree
/// >= 1) is irreducible over Z_p. Uses the Frobenius/gcd criterion:
/// x^(p^m) = x mod f and gcd(x^(p^(m/l)) - x, f) = 1 for prime l | m.
bool is_irreducible(std::uint64_t p, const std::vector<std::uint32_t>& coeffs);

/// First irreducible monic polynomial of degree m over Z_p, scanning
/// coefficient lists (constant term first) in lexicographic order.
/// Deterministic, so downstream constructions are reproducible.
std::vector<std::uint32_t> find_irreducible(std::uint64_t p, int m);

/// Smallest element of multiplicative order p^m - 1, scanning in order of
/// the integer encoding sum_i c_i p^i. Order is certified by checking
/// g^((p^m-1)/l) != 1 for every prime l | p^m - 1.
FieldElement find_primitive(std::uint64_t p, int m, const std::vector<std::uint32_t>& modulus);

/// Assemble and fully validate a field description. Missing modulus or
/// generator are filled in with find_irreducible / find_primitive.
FieldSpec make_field(std::uint64_t p, int m,
                     std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                     std::optional<FieldElement> generator = std::nullopt);

FieldElement zero(const FieldSpec& spec);
FieldElement one(const FieldSpec& spec);
/// Build an element from residues (constant term first); shorter lists are
/// zero-padded to length m.
FieldElement element(const FieldSpec& spec, const std::vector<std::uint32_t>& coeffs);

FieldElement add(const FieldSpec& spec, const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldSpec& spec, const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldSpec& spec, const FieldElement& a);
FieldElement mul(const FieldSpec& spec, const FieldElement& a, const FieldElement& b);
FieldElement pow(const FieldSpec& spec, const FieldElement& a, std::uint64_t e);
/// Multiplicative inverse; throws DomainError on zero.
FieldElement inv(const FieldSpec& spec, const FieldElement& a);

/// Integer encoding sum_i coeffs[i] * p^i, a bijection onto [0, p^m).
std::uint64_t encode(const FieldSpec& spec, const FieldElement& a);
FieldElement decode(const FieldSpec& spec, std::uint64_t value);

/// Multiplicative order of a nonzero element.
std::uint64_t element_order(const FieldSpec& spec, const FieldElement& a);

/// Discrete logarithm table base spec.generator: table of all p^m - 1
/// exponents, exponent_of(g^a) = a.
class DlogTable {
public:
    explicit DlogTable(const FieldSpec& spec);

    /// Exponent in [0, p^m - 1); throws DomainError for the zero element.
    std::uint64_t exponent_of(const FieldElement& a) const;
    FieldElement element_of(std::uint64_t exponent) const;
    std::uint64_t size() const { return group_order_; }

private:
    FieldSpec spec_;
    std::uint64_t group_order_;
    std::vector<std::uint64_t> exp_by_value_;   // indexed by encode()
    std::vector<FieldElement> elem_by_exp_;
};

}  // namespace toric::ff
