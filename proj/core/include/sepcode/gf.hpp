#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sepcode {

/// Immutable description of a finite field GF(p^k): prime characteristic p,
/// extension degree k, and a monic irreducible modulus of degree k over Z_p
/// (coefficients stored low degree first, length k+1).
struct FieldSpec {
    int64_t p = 0;
    int k = 0;
    std::vector<int64_t> modulus;
    int64_t order = 0; // p^k

    FieldSpec(int64_t p_, int k_, std::vector<int64_t> modulus_);
};

using Field = std::shared_ptr<const FieldSpec>;

bool same_field(const FieldSpec& a, const FieldSpec& b);

/// Build GF(p^k). When no modulus is given the canonical one is used: monic
/// polynomials are enumerated with the coefficient tuple read as a base-p
/// counter (constant term least significant) and the first irreducible wins.
/// A user-supplied modulus must be monic of degree k and irreducible.
Field make_field(int64_t p, int k);
Field make_field(int64_t p, int k, std::vector<int64_t> modulus);

/// Element of GF(p^k) as the canonical residue representative: a length-k
/// coefficient vector over [0, p), low degree first. Equality is structural.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(Field field, std::vector<int64_t> coeffs);

    const std::vector<int64_t>& coeffs() const { return coeffs_; }
    const Field& field() const { return field_; }
    bool valid() const { return field_ != nullptr; }
    bool is_zero() const;
    bool is_one() const;

    /// Canonical integer encoding sum(c_i * p^i), in [0, order).
    int64_t index() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;

  private:
    Field field_;
    std::vector<int64_t> coeffs_;
};

FieldElement zero(const Field& f);
FieldElement one(const Field& f);

/// Element from an arbitrary coefficient list: reduced mod the modulus, then
/// mod p. Lists longer than k are allowed (polynomial reduction applies).
FieldElement element(const Field& f, std::vector<int64_t> coeffs);

/// The residue class of the integer c (constant polynomial c mod p).
FieldElement from_integer(const Field& f, int64_t c);

/// Inverse of FieldElement::index(): element with base-p digits of v.
FieldElement from_index(const Field& f, int64_t v);

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, int64_t e);

/// a^q for q = p^d, d <= k.
FieldElement frobenius(const FieldElement& a, int64_t q);

/// True iff a lies in the q-element subfield, i.e. a^q = a. Requires q = p^d
/// with d a divisor of k.
bool in_subfield(const FieldElement& a, int64_t q);

/// All p^k elements in index order (base-p digit counter, constant term
/// least significant). Stable across runs.
std::vector<FieldElement> enumerate(const Field& f);

std::string to_string(const FieldElement& a);

bool is_prime(int64_t n);

/// p^e as int64, throwing on overflow of the supported desk-scale range.
int64_t ipow(int64_t base, int e);

} // namespace sepcode
