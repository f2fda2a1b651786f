#pragma once

#include <cstdint>
#include <vector>

namespace sepcode {

struct CurveSpec;

/// Numerical semigroup <q, m> attached to the common pole of x and y:
/// x has pole order q there, y has pole order m.
struct Semigroup {
    int64_t q = 0;
    int64_t m = 0;
    std::vector<int64_t> gaps; // sorted positive non-representable integers
};

struct BasisEntry {
    int64_t i = 0;    // exponent of x
    int64_t j = 0;    // exponent of y, 0 <= j <= q-1
    int64_t pole = 0; // i*q + j*m
};

/// Monomials x^i y^j with pole order at most s, sorted by pole order then j.
struct MonomialBasis {
    int64_t s = 0;
    std::vector<BasisEntry> entries;
};

int64_t pole_order(int64_t i, int64_t j, int64_t q, int64_t m);
int64_t pole_order(int64_t i, int64_t j, const CurveSpec& spec);

/// Positive integers not representable as iq + jm (i, j >= 0). With
/// gcd(q, m) = 1 the largest gap is qm - q - m = 2g - 1, so the exhaustive
/// sieve up to 2g - 1 is complete. Throws when gcd(q, m) != 1.
std::vector<int64_t> gaps(int64_t q, int64_t m);
std::vector<int64_t> gaps(const CurveSpec& spec);

Semigroup semigroup(int64_t q, int64_t m);

MonomialBasis monomial_basis(int64_t q, int64_t m, int64_t s);
MonomialBasis monomial_basis(const CurveSpec& spec, int64_t s);

/// Number of basis monomials with pole order <= s; 0 for s < 0.
int64_t monomial_count(int64_t q, int64_t m, int64_t s);
int64_t monomial_count(const CurveSpec& spec, int64_t s);

} // namespace sepcode
