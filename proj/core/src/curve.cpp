#include "sepcode/curve.hpp"

#include <stdexcept>

namespace sepcode {

CurveSpec make_curve(int64_t p, int n, int64_t m) {
    std::vector<int64_t> a(static_cast<size_t>(n) + 1, 0);
    a.front() = 1;
    a.back() = 1; // Y^q + Y
    std::vector<int64_t> b(static_cast<size_t>(m) + 1, 0);
    b.back() = 1; // X^m
    return make_curve(p, n, m, std::move(a), std::move(b));
}

CurveSpec make_curve(int64_t p, int n, int64_t m, std::vector<int64_t> a_coeffs,
                     std::vector<int64_t> b_coeffs) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (a_coeffs.size() != static_cast<size_t>(n) + 1)
        throw std::invalid_argument("a_coeffs must have length n+1");
    if (b_coeffs.size() != static_cast<size_t>(m) + 1)
        throw std::invalid_argument("b_coeffs must have length m+1");
    CurveSpec spec;
    spec.p = p;
    spec.n = n;
    spec.q = ipow(p, n);
    spec.m = m;
    spec.a_coeffs = std::move(a_coeffs);
    spec.b_coeffs = std::move(b_coeffs);
    for (auto& c : spec.a_coeffs) c = ((c % p) + p) % p;
    for (auto& c : spec.b_coeffs) c = ((c % p) + p) % p;
    return spec;
}

Place Place::infinity() { return Place(); }

Place Place::affine(FieldElement x, FieldElement y) {
    Place pl;
    pl.infinity_ = false;
    pl.x_ = std::move(x);
    pl.y_ = std::move(y);
    return pl;
}

const FieldElement& Place::x() const {
    if (infinity_) throw std::logic_error("place at infinity has no affine coordinates");
    return x_;
}

const FieldElement& Place::y() const {
    if (infinity_) throw std::logic_error("place at infinity has no affine coordinates");
    return y_;
}

bool operator==(const Place& a, const Place& b) {
    if (a.infinity_ != b.infinity_) return false;
    if (a.infinity_) return true;
    return a.x_ == b.x_ && a.y_ == b.y_;
}

std::vector<Violation> validate(const CurveSpec& spec) {
    std::vector<Violation> out;
    const int64_t deg_a = ipow(spec.p, spec.n);
    const int64_t deg = std::max(deg_a, spec.m);
    if (deg < 4)
        out.push_back({1, "curve degree " + std::to_string(deg) + " < 4"});
    if (spec.a_coeffs.front() % spec.p == 0 || spec.a_coeffs.back() % spec.p == 0)
        out.push_back({2, "additive polynomial needs a_0 != 0 and a_n != 0"});
    if (spec.b_coeffs.back() % spec.p == 0)
        out.push_back({3, "leading coefficient b_m vanishes"});
    if (spec.m % spec.p == 0)
        out.push_back({4, "m = " + std::to_string(spec.m) + " is divisible by p"});
    if (spec.n < 1 || spec.m < 2)
        out.push_back({5, "need n >= 1 and m >= 2"});
    return out;
}

int64_t genus(const CurveSpec& spec) { return (spec.q - 1) * (spec.m - 1) / 2; }

bool nonsingular_guaranteed(const CurveSpec& spec) {
    int64_t d = spec.m - spec.q;
    return d == 1 || d == -1;
}

FieldElement eval_additive(const CurveSpec& spec, const FieldElement& y) {
    FieldElement acc = zero(y.field());
    FieldElement term = y; // y^(p^j)
    for (size_t j = 0; j < spec.a_coeffs.size(); ++j) {
        if (spec.a_coeffs[j] != 0)
            acc = add(acc, mul(from_integer(y.field(), spec.a_coeffs[j]), term));
        if (j + 1 < spec.a_coeffs.size()) term = pow(term, spec.p);
    }
    return acc;
}

FieldElement eval_b(const CurveSpec& spec, const FieldElement& x) {
    FieldElement acc = zero(x.field());
    for (size_t j = spec.b_coeffs.size(); j-- > 0;) {
        acc = mul(acc, x);
        if (spec.b_coeffs[j] != 0) acc = add(acc, from_integer(x.field(), spec.b_coeffs[j]));
    }
    return acc;
}

bool on_curve(const CurveSpec& spec, const Place& pl) {
    if (pl.is_infinity()) return false;
    return eval_additive(spec, pl.y()) == eval_b(spec, pl.x());
}

Field ambient_field(const CurveSpec& spec) { return make_field(spec.p, 2 * spec.n); }

std::vector<Place> affine_points(const CurveSpec& spec, const Field& field) {
    if (field->p != spec.p) throw std::invalid_argument("field characteristic mismatch");
    const auto elems = enumerate(field);
    std::vector<FieldElement> a_vals, b_vals;
    a_vals.reserve(elems.size());
    b_vals.reserve(elems.size());
    for (const auto& e : elems) {
        a_vals.push_back(eval_additive(spec, e));
        b_vals.push_back(eval_b(spec, e));
    }
    std::vector<Place> out;
    for (size_t xi = 0; xi < elems.size(); ++xi)
        for (size_t yi = 0; yi < elems.size(); ++yi)
            if (a_vals[yi] == b_vals[xi]) out.push_back(Place::affine(elems[xi], elems[yi]));
    return out;
}

PointSets point_sets(const CurveSpec& spec, const Field& fq2) {
    PointSets ps;
    for (const auto& pl : affine_points(spec, fq2)) {
        if (in_subfield(pl.x(), spec.q) && in_subfield(pl.y(), spec.q))
            ps.g_set.push_back(pl);
        else
            ps.d_set.push_back(pl);
    }
    ps.g_set.push_back(Place::infinity());
    return ps;
}

std::vector<Place> full_affine_points(const CurveSpec& spec, const Field& fq2) {
    return affine_points(spec, fq2);
}

int64_t hasse_weil_max(const CurveSpec& spec) {
    return 1 + spec.q * spec.q + 2 * genus(spec) * spec.q;
}

bool is_maximal(const CurveSpec& spec, const Field& fq2) {
    const int64_t count = static_cast<int64_t>(affine_points(spec, fq2).size()) + 1;
    return count == hasse_weil_max(spec);
}

} // namespace sepcode
