#include "sepcode/matrix.hpp"

#include <stdexcept>

namespace sepcode {

Matrix::Matrix(Field field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, zero(field_)) {}

void Matrix::set(size_t r, size_t c, FieldElement v) {
    if (!same_field(*v.field(), *field_)) throw std::invalid_argument("field mismatch");
    a_[r * cols_ + c] = std::move(v);
}

bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && same_field(*x.field_, *y.field_) && x.a_ == y.a_;
}

Echelon rref(const Matrix& m) {
    Matrix w = m;
    std::vector<size_t> pivots;
    size_t pr = 0; // next pivot row
    for (size_t c = 0; c < w.cols() && pr < w.rows(); ++c) {
        size_t sel = w.rows();
        for (size_t r = pr; r < w.rows(); ++r) {
            if (!w.at(r, c).is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel == w.rows()) continue;
        if (sel != pr) {
            for (size_t j = 0; j < w.cols(); ++j) {
                FieldElement t = w.at(pr, j);
                w.set(pr, j, w.at(sel, j));
                w.set(sel, j, std::move(t));
            }
        }
        FieldElement piv_inv = inv(w.at(pr, c));
        for (size_t j = c; j < w.cols(); ++j) w.set(pr, j, mul(w.at(pr, j), piv_inv));
        for (size_t r = 0; r < w.rows(); ++r) {
            if (r == pr || w.at(r, c).is_zero()) continue;
            FieldElement f = w.at(r, c);
            for (size_t j = c; j < w.cols(); ++j) w.set(r, j, sub(w.at(r, j), mul(f, w.at(pr, j))));
        }
        pivots.push_back(c);
        ++pr;
    }
    return {std::move(w), std::move(pivots)};
}

size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

Matrix row_space_basis(const Matrix& m) {
    Echelon e = rref(m);
    Matrix out(m.field(), e.pivot_cols.size(), m.cols());
    for (size_t r = 0; r < e.pivot_cols.size(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) out.set(r, c, e.m.at(r, c));
    return out;
}

Matrix nullspace(const Matrix& m) {
    Echelon e = rref(m);
    const size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix out(m.field(), free_cols.size(), n);
    for (size_t i = 0; i < free_cols.size(); ++i) {
        const size_t fc = free_cols[i];
        out.set(i, fc, one(m.field()));
        for (size_t r = 0; r < e.pivot_cols.size(); ++r)
            out.set(i, e.pivot_cols[r], neg(e.m.at(r, fc)));
    }
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
    Matrix out(a.field(), a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const FieldElement& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols(); ++j)
                out.set(i, j, add(out.at(i, j), mul(aik, b.at(k, j))));
        }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.field(), m.cols(), m.rows());
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) out.set(c, r, m.at(r, c));
    return out;
}

Matrix frobenius_entrywise(const Matrix& m, int64_t q) {
    Matrix out(m.field(), m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) out.set(r, c, frobenius(m.at(r, c), q));
    return out;
}

bool is_zero_matrix(const Matrix& m) {
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero()) return false;
    return true;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() || !same_field(*a.field(), *b.field())) return false;
    return row_space_basis(a) == row_space_basis(b);
}

bool row_in_span(const Matrix& m, const std::vector<FieldElement>& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("dimension mismatch");
    Matrix aug(m.field(), m.rows() + 1, m.cols());
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m.at(r, c));
    for (size_t c = 0; c < m.cols(); ++c) aug.set(m.rows(), c, v[c]);
    return rank(aug) == rank(m);
}

Matrix gram(const Matrix& m) { return matmul(m, transpose(m)); }

Matrix hermitian_gram(const Matrix& m, int64_t q) {
    return matmul(m, transpose(frobenius_entrywise(m, q)));
}

} // namespace sepcode
