#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sepcode/gf.hpp"

namespace sepcode {

/// Plane curve A(Y) = B(X) over GF(q), q = p^n, with A additive:
/// A(Y) = sum_j a_j Y^(p^j) for j = 0..n, B(X) = sum_j b_j X^j of degree m.
/// The representation enforces additivity: a_coeffs[j] multiplies Y^(p^j).
/// Coefficients are integers taken mod p.
struct CurveSpec {
    int64_t p = 0;
    int n = 0;
    int64_t q = 0; // p^n
    int64_t m = 0;
    std::vector<int64_t> a_coeffs; // length n+1
    std::vector<int64_t> b_coeffs; // length m+1
};

/// Defaults A = Y^q + Y, B = X^m.
CurveSpec make_curve(int64_t p, int n, int64_t m);
CurveSpec make_curve(int64_t p, int n, int64_t m, std::vector<int64_t> a_coeffs,
                     std::vector<int64_t> b_coeffs);

/// An affine point (x, y) with A(y) = B(x), or the distinguished place at
/// infinity (the common pole of x and y).
class Place {
  public:
    static Place infinity();
    static Place affine(FieldElement x, FieldElement y);

    bool is_infinity() const { return infinity_; }
    const FieldElement& x() const;
    const FieldElement& y() const;

    friend bool operator==(const Place& a, const Place& b);
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }

  private:
    Place() = default;
    bool infinity_ = true;
    FieldElement x_, y_;
};

/// G_set: places rational over the q-element subfield, infinity included.
/// D_set: affine places rational over GF(q^2) but not over the subfield,
/// in enumeration order (x major, then y).
struct PointSets {
    std::vector<Place> g_set;
    std::vector<Place> d_set;
};

struct Violation {
    int condition = 0; // 1..5
    std::string detail;
};

/// Checks the defining conditions; violations are data, not failures:
/// (1) max(deg A, deg B) >= 4, (2) a_0 != 0 and a_n != 0, (3) b_m != 0,
/// (4) m not divisible by p, (5) n >= 1 and m >= 2.
std::vector<Violation> validate(const CurveSpec& spec);

/// (q - 1)(m - 1) / 2.
int64_t genus(const CurveSpec& spec);

/// True iff |m - q| = 1, which guarantees a non-singular model.
bool nonsingular_guaranteed(const CurveSpec& spec);

FieldElement eval_additive(const CurveSpec& spec, const FieldElement& y);
FieldElement eval_b(const CurveSpec& spec, const FieldElement& x);

/// True iff A(y) = B(x) for an affine place (false for infinity).
bool on_curve(const CurveSpec& spec, const Place& pl);

/// The quadratic extension GF(p^(2n)) in which all point and code
/// computation happens; GF(q) sits inside it as the Frobenius-fixed
/// subfield.
Field ambient_field(const CurveSpec& spec);

/// All (x, y) in field^2 with A(y) = B(x), x major then y, both in index
/// order. The field may be any extension of GF(p), e.g. GF(q) or GF(q^2).
std::vector<Place> affine_points(const CurveSpec& spec, const Field& field);

/// Splits the affine GF(q^2)-points by subfield rationality; the claimed
/// size of D_set is checked elsewhere, never assumed.
PointSets point_sets(const CurveSpec& spec, const Field& fq2);

/// Every affine GF(q^2)-rational point: the zero set of t = x^(q^2) - x on
/// the curve.
std::vector<Place> full_affine_points(const CurveSpec& spec, const Field& fq2);

/// 1 + q^2 + 2gq, the upper bound on |X(GF(q^2))|.
int64_t hasse_weil_max(const CurveSpec& spec);

/// True iff the GF(q^2) point count (affine + infinity) attains the bound.
bool is_maximal(const CurveSpec& spec, const Field& fq2);

} // namespace sepcode
