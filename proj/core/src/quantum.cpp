#include "sepcode/quantum.hpp"

#include <stdexcept>

namespace sepcode {

QuantumParams hermitian_construction(const EvalCode& code, uint64_t budget) {
    if (!is_hermitian_self_orthogonal(code))
        throw std::invalid_argument("code is not Hermitian self-orthogonal");
    const LinearCode dual = hermitian_dual(code);
    const DistanceResult d = min_distance(dual, budget);
    QuantumParams qp;
    qp.base = code.spec.q;
    qp.n = code.length();
    qp.k_q = code.length() - 2 * code.dim;
    qp.d_q = d.lower;
    qp.d_is_lower_bound = !d.exact();
    return qp;
}

QuantumParams formula_params(int64_t q, int64_t r) {
    QuantumParams qp;
    qp.base = q;
    qp.r = r;
    qp.n = q * q * q;
    qp.k_q = q * q * q + q * q - 3 * q - 2 * r;
    qp.d_q = r + 2 * q - q * q;
    qp.out_of_range = !(r > 0 && r >= q * q - 2 && r <= q * q + q - 3);
    return qp;
}

std::pair<int64_t, int64_t> formula_range(int64_t q) { return {q * q - 2, q * q + q - 3}; }

std::pair<int64_t, int64_t> example_range(int64_t q) {
    if (q == 5) return {18, 22}; // tabulated rows sit below the formula range
    return formula_range(q);
}

std::vector<QuantumParams> example_table(int64_t q) {
    const auto [lo, hi] = example_range(q);
    std::vector<QuantumParams> out;
    for (int64_t r = lo; r <= hi; ++r) out.push_back(formula_params(q, r));
    return out;
}

Matrix stabilizer_check_matrix(const EvalCode& code) {
    if (!is_hermitian_self_orthogonal(code))
        throw std::invalid_argument("code is not Hermitian self-orthogonal");
    const Field& f = code.field;
    const int64_t q = hermitian_base_order(f);
    const size_t n = code.gen.cols();

    // g is the canonical root of the modulus; {1, g} is a basis of the field
    // over the q-element subfield since g generates the full extension.
    const FieldElement g = element(f, {0, 1});
    const FieldElement split = inv(sub(g, frobenius(g, q))); // 1/(g - g^q)

    const Matrix basis = row_space_basis(code.gen);
    const size_t k = basis.rows();
    Matrix out(f, 2 * k, 2 * n);
    for (size_t t = 0; t < k; ++t) {
        for (int half = 0; half < 2; ++half) {
            for (size_t c = 0; c < n; ++c) {
                FieldElement v = basis.at(t, c);
                if (half == 1) v = mul(g, v);
                // v = a + g b with a, b in the subfield
                const FieldElement b = mul(sub(v, frobenius(v, q)), split);
                const FieldElement a = sub(v, mul(g, b));
                out.set(2 * t + half, c, a);
                out.set(2 * t + half, n + c, b);
            }
        }
    }
    return out;
}

bool symplectic_rows_orthogonal(const Matrix& m) {
    if (m.cols() % 2 != 0) throw std::invalid_argument("matrix must have 2n columns");
    const size_t n = m.cols() / 2;
    for (size_t r1 = 0; r1 < m.rows(); ++r1)
        for (size_t r2 = 0; r2 < m.rows(); ++r2) {
            FieldElement acc = zero(m.field());
            for (size_t i = 0; i < n; ++i) {
                acc = add(acc, mul(m.at(r1, i), m.at(r2, n + i)));
                acc = sub(acc, mul(m.at(r2, i), m.at(r1, n + i)));
            }
            if (!acc.is_zero()) return false;
        }
    return true;
}

} // namespace sepcode
