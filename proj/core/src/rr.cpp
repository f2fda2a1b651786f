#include "sepcode/rr.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sepcode/curve.hpp"

namespace sepcode {

int64_t pole_order(int64_t i, int64_t j, int64_t q, int64_t m) {
    if (i < 0 || j < 0) throw std::invalid_argument("exponents must be non-negative");
    return i * q + j * m;
}

int64_t pole_order(int64_t i, int64_t j, const CurveSpec& spec) {
    return pole_order(i, j, spec.q, spec.m);
}

std::vector<int64_t> gaps(int64_t q, int64_t m) {
    if (q < 1 || m < 1) throw std::invalid_argument("generators must be positive");
    if (std::gcd(q, m) != 1) throw std::invalid_argument("semigroup generators are not coprime");
    const int64_t g2 = (q - 1) * (m - 1); // 2g; largest gap is 2g - 1
    std::vector<bool> rep(static_cast<size_t>(g2), false);
    rep[0] = true;
    for (int64_t i = 0; i * q < g2; ++i)
        for (int64_t j = 0; i * q + j * m < g2; ++j) rep[static_cast<size_t>(i * q + j * m)] = true;
    std::vector<int64_t> out;
    for (int64_t v = 1; v < g2; ++v)
        if (!rep[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<int64_t> gaps(const CurveSpec& spec) { return gaps(spec.q, spec.m); }

Semigroup semigroup(int64_t q, int64_t m) { return Semigroup{q, m, gaps(q, m)}; }

MonomialBasis monomial_basis(int64_t q, int64_t m, int64_t s) {
    if (q < 1 || m < 1) throw std::invalid_argument("generators must be positive");
    MonomialBasis b;
    b.s = s;
    for (int64_t j = 0; j <= q - 1 && j * m <= s; ++j)
        for (int64_t i = 0; i * q + j * m <= s; ++i) b.entries.push_back({i, j, i * q + j * m});
    std::sort(b.entries.begin(), b.entries.end(), [](const BasisEntry& a, const BasisEntry& c) {
        return a.pole != c.pole ? a.pole < c.pole : a.j < c.j;
    });
    return b;
}

MonomialBasis monomial_basis(const CurveSpec& spec, int64_t s) {
    return monomial_basis(spec.q, spec.m, s);
}

int64_t monomial_count(int64_t q, int64_t m, int64_t s) {
    return static_cast<int64_t>(monomial_basis(q, m, s).entries.size());
}

int64_t monomial_count(const CurveSpec& spec, int64_t s) {
    return monomial_count(spec.q, spec.m, s);
}

} // namespace sepcode
