#include "sepcode/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace sepcode {

namespace {

// Dense polynomials over Z_p, low degree first, no trailing zeros.
using Poly = std::vector<int64_t>;

int64_t mod_p(int64_t v, int64_t p) {
    int64_t r = v % p;
    return r < 0 ? r + p : r;
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; } // -1 for zero

Poly poly_mul(const Poly& a, const Poly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = mod_p(c[i + j] + a[i] * b[j], p);
    trim(c);
    return c;
}

// Remainder of a by monic f.
Poly poly_mod(Poly a, const Poly& f, int64_t p) {
    const int df = deg(f);
    while (deg(a) >= df) {
        int64_t c = a.back();
        int shift = deg(a) - df;
        for (int i = 0; i <= df; ++i) a[i + shift] = mod_p(a[i + shift] - c * f[i], p);
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int64_t p) {
    return poly_mod(poly_mul(a, b, p), f, p);
}

Poly poly_powmod(Poly base, int64_t e, const Poly& f, int64_t p) {
    Poly r{1};
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

int64_t int_inv_mod(int64_t a, int64_t p) {
    // Fermat; p prime and a != 0 mod p.
    int64_t r = 1, b = mod_p(a, p), e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // reduce a by b after making b monic
        int64_t lc = b.back();
        if (lc != 1) {
            int64_t il = int_inv_mod(lc, p);
            for (auto& c : b) c = mod_p(c * il, p);
        }
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Monic degree-k f over Z_p: irreducible iff X^(p^k) = X mod f and
// gcd(f, X^(p^d) - X) = 1 for every proper divisor d of k.
bool poly_irreducible(const Poly& f, int64_t p) {
    const int k = deg(f);
    if (k < 1) return false;
    Poly x{0, 1};
    Poly r = poly_mod(x, f, p); // X^(p^0) mod f
    for (int d = 1; d <= k; ++d) {
        r = poly_powmod(r, p, f, p); // X^(p^d) mod f
        if (d == k) break;
        if (k % d != 0) continue;
        Poly diff = r;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = mod_p(diff[1] - 1, p);
        trim(diff);
        Poly g = poly_gcd(f, diff, p);
        if (deg(g) != 0) return false;
    }
    Poly xmodf = poly_mod(x, f, p);
    return r == xmodf;
}

void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.valid() || !b.valid()) throw std::invalid_argument("uninitialized field element");
    if (!same_field(*a.field(), *b.field())) throw std::invalid_argument("field mismatch");
}

} // namespace

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int64_t ipow(int64_t base, int e) {
    int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (int64_t{1} << 40)) throw std::overflow_error("field order out of supported range");
        r *= base;
    }
    return r;
}

FieldSpec::FieldSpec(int64_t p_, int k_, std::vector<int64_t> modulus_)
    : p(p_), k(k_), modulus(std::move(modulus_)), order(ipow(p_, k_)) {}

bool same_field(const FieldSpec& a, const FieldSpec& b) {
    return &a == &b || (a.p == b.p && a.modulus == b.modulus);
}

Field make_field(int64_t p, int k, std::vector<int64_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    for (auto& c : modulus) c = mod_p(c, p);
    trim(modulus);
    if (deg(modulus) != k || modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree k");
    if (!poly_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible");
    return std::make_shared<const FieldSpec>(p, k, std::move(modulus));
}

Field make_field(int64_t p, int k) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    const int64_t count = ipow(p, k);
    for (int64_t v = 0; v < count; ++v) {
        Poly f(k + 1, 0);
        int64_t t = v;
        for (int i = 0; i < k; ++i) {
            f[i] = t % p;
            t /= p;
        }
        f[k] = 1;
        if (poly_irreducible(f, p)) return std::make_shared<const FieldSpec>(p, k, std::move(f));
    }
    throw std::logic_error("no irreducible modulus found"); // unreachable
}

FieldElement::FieldElement(Field field, std::vector<int64_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    const int64_t p = field_->p;
    for (auto& c : coeffs_) c = mod_p(c, p);
    Poly tmp = coeffs_;
    trim(tmp);
    if (deg(tmp) >= field_->k) tmp = poly_mod(std::move(tmp), field_->modulus, p);
    tmp.resize(field_->k, 0);
    coeffs_ = std::move(tmp);
}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int64_t c) { return c == 0; });
}

bool FieldElement::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](int64_t c) { return c == 0; });
}

int64_t FieldElement::index() const {
    int64_t v = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) v = v * field_->p + coeffs_[i];
    return v;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!a.valid() || !b.valid()) return a.valid() == b.valid();
    return same_field(*a.field_, *b.field_) && a.coeffs_ == b.coeffs_;
}

FieldElement zero(const Field& f) { return FieldElement(f, {}); }
FieldElement one(const Field& f) { return FieldElement(f, {1}); }

FieldElement element(const Field& f, std::vector<int64_t> coeffs) {
    return FieldElement(f, std::move(coeffs));
}

FieldElement from_integer(const Field& f, int64_t c) { return FieldElement(f, {c}); }

FieldElement from_index(const Field& f, int64_t v) {
    if (v < 0 || v >= f->order) throw std::out_of_range("element index out of range");
    std::vector<int64_t> c(f->k, 0);
    for (int i = 0; i < f->k; ++i) {
        c[i] = v % f->p;
        v /= f->p;
    }
    return FieldElement(f, std::move(c));
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    const int64_t p = a.field()->p;
    std::vector<int64_t> c(a.coeffs());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod_p(c[i] + b.coeffs()[i], p);
    return FieldElement(a.field(), std::move(c));
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    const int64_t p = a.field()->p;
    std::vector<int64_t> c(a.coeffs());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod_p(c[i] - b.coeffs()[i], p);
    return FieldElement(a.field(), std::move(c));
}

FieldElement neg(const FieldElement& a) {
    if (!a.valid()) throw std::invalid_argument("uninitialized field element");
    const int64_t p = a.field()->p;
    std::vector<int64_t> c(a.coeffs());
    for (auto& x : c) x = mod_p(-x, p);
    return FieldElement(a.field(), std::move(c));
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    const int64_t p = a.field()->p;
    Poly prod = poly_mul(a.coeffs(), b.coeffs(), p);
    return FieldElement(a.field(), poly_mod(std::move(prod), a.field()->modulus, p));
}

FieldElement inv(const FieldElement& a) {
    if (!a.valid()) throw std::invalid_argument("uninitialized field element");
    if (a.is_zero()) throw std::invalid_argument("inverse of zero");
    // extended Euclid on (a, modulus) over Z_p
    const int64_t p = a.field()->p;
    const Poly& f = a.field()->modulus;
    Poly r0 = f, r1 = a.coeffs();
    trim(r1);
    Poly t0{}, t1{1};
    while (!r1.empty()) {
        // make r1 monic, fold the scalar into t1
        int64_t lc = r1.back();
        if (lc != 1) {
            int64_t il = int_inv_mod(lc, p);
            for (auto& c : r1) c = mod_p(c * il, p);
            for (auto& c : t1) c = mod_p(c * il, p);
        }
        // r0 = q*r1 + r; t accordingly
        Poly r = r0;
        Poly tacc = t0;
        while (deg(r) >= deg(r1)) {
            int64_t c = r.back();
            int shift = deg(r) - deg(r1);
            for (int i = 0; i <= deg(r1); ++i) r[i + shift] = mod_p(r[i + shift] - c * r1[i], p);
            trim(r);
            Poly shifted(t1.size() + shift, 0);
            for (size_t i = 0; i < t1.size(); ++i) shifted[i + shift] = t1[i];
            if (tacc.size() < shifted.size()) tacc.resize(shifted.size(), 0);
            for (size_t i = 0; i < shifted.size(); ++i) tacc[i] = mod_p(tacc[i] - c * shifted[i], p);
            trim(tacc);
        }
        r0 = std::move(r1);
        t0 = std::move(t1);
        r1 = std::move(r);
        t1 = std::move(tacc);
    }
    // r0 is the (monic) gcd = 1 since the modulus is irreducible
    return FieldElement(a.field(), std::move(t0));
}

FieldElement pow(const FieldElement& a, int64_t e) {
    if (!a.valid()) throw std::invalid_argument("uninitialized field element");
    if (e < 0) throw std::invalid_argument("negative exponent");
    FieldElement r = one(a.field());
    FieldElement base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElement frobenius(const FieldElement& a, int64_t q) {
    if (!a.valid()) throw std::invalid_argument("uninitialized field element");
    const int64_t p = a.field()->p;
    int64_t t = q;
    int d = 0;
    while (t > 1 && t % p == 0) {
        t /= p;
        ++d;
    }
    if (t != 1 || d < 1 || d > a.field()->k) throw std::invalid_argument("q is not a power of p within the field");
    return pow(a, q);
}

bool in_subfield(const FieldElement& a, int64_t q) {
    if (!a.valid()) throw std::invalid_argument("uninitialized field element");
    const int64_t p = a.field()->p;
    int64_t t = q;
    int d = 0;
    while (t > 1 && t % p == 0) {
        t /= p;
        ++d;
    }
    if (t != 1 || d < 1 || a.field()->k % d != 0)
        throw std::invalid_argument("no subfield of that order");
    return pow(a, q) == a;
}

std::vector<FieldElement> enumerate(const Field& f) {
    std::vector<FieldElement> out;
    out.reserve(static_cast<size_t>(f->order));
    for (int64_t v = 0; v < f->order; ++v) out.push_back(from_index(f, v));
    return out;
}

std::string to_string(const FieldElement& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.coeffs()[i]);
    }
    return s + ")";
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const { return sepcode::add(*this, rhs); }
FieldElement FieldElement::operator-(const FieldElement& rhs) const { return sepcode::sub(*this, rhs); }
FieldElement FieldElement::operator-() const { return sepcode::neg(*this); }
FieldElement FieldElement::operator*(const FieldElement& rhs) const { return sepcode::mul(*this, rhs); }
FieldElement FieldElement::operator/(const FieldElement& rhs) const { return sepcode::mul(*this, sepcode::inv(rhs)); }

} // namespace sepcode
