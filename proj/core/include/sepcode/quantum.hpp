#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sepcode/code.hpp"

namespace sepcode {

/// Stabilizer code parameters [[n, k_q, d_q]]_base.
struct QuantumParams {
    int64_t base = 0; // stabilizer alphabet q
    int64_t r = -1;   // formula parameter when applicable, else -1
    int64_t n = 0;
    int64_t k_q = 0;
    int64_t d_q = 0;
    bool d_is_lower_bound = false; // distance search degraded to an interval
    bool out_of_range = false;     // r outside the stated formula range
};

/// [[n, n-2k, d_perp]] from a Hermitian self-orthogonal [n, k] code over
/// GF(q^2); d_perp is the computed distance of the Hermitian dual. Refuses
/// codes that are not Hermitian self-orthogonal.
QuantumParams hermitian_construction(const EvalCode& code,
                                     uint64_t budget = kDefaultDistanceBudget);

/// Pure arithmetic [[q^3, q^3+q^2-3q-2r, r+2q-q^2]]_q; flagged when r is
/// not a positive value in [q^2-2, q^2+q-3].
QuantumParams formula_params(int64_t q, int64_t r);

std::pair<int64_t, int64_t> formula_range(int64_t q); // [q^2-2, q^2+q-3]

/// r-range of the worked example tables: the formula range, except q = 5
/// whose tabulated rows run r = 18..22 (below the formula range; rows come
/// back flagged).
std::pair<int64_t, int64_t> example_range(int64_t q);

/// formula_params over example_range(q); always q rows.
std::vector<QuantumParams> example_table(int64_t q);

/// Expands the generator rows of a Hermitian self-orthogonal code over
/// GF(q^2) into a 2k x 2n symplectic check matrix over the q-element
/// subfield, using the basis {1, g} with g the canonical root of the field
/// modulus. Row order: expand(v_1), expand(g v_1), expand(v_2), ...
/// where v_t are the RREF basis rows. Entries are subfield elements.
Matrix stabilizer_check_matrix(const EvalCode& code);

/// True iff all row pairs (a|b), (a'|b') satisfy sum a_i b'_i - a'_i b_i = 0.
bool symplectic_rows_orthogonal(const Matrix& m);

} // namespace sepcode
