#pragma once

#include <cstddef>
#include <vector>

#include "sepcode/gf.hpp"

namespace sepcode {

/// Dense rectangular matrix with entries in one finite field.
class Matrix {
  public:
    Matrix(Field field, size_t rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const FieldElement& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    void set(size_t r, size_t c, FieldElement v);

    friend bool operator==(const Matrix& x, const Matrix& y);

  private:
    Field field_;
    size_t rows_, cols_;
    std::vector<FieldElement> a_;
};

struct Echelon {
    Matrix m;                       // reduced row echelon form
    std::vector<size_t> pivot_cols; // ascending
};

/// Reduced row echelon form by Gaussian elimination; pivot is always the
/// first row with a nonzero entry in the current column (deterministic).
Echelon rref(const Matrix& m);

size_t rank(const Matrix& m);

/// Nonzero rows of the RREF: a canonical basis of the row space.
Matrix row_space_basis(const Matrix& m);

/// Rows form a basis of { v : m v^T = 0 }, ordered by free column.
Matrix nullspace(const Matrix& m);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

/// Entrywise a -> a^q.
Matrix frobenius_entrywise(const Matrix& m, int64_t q);

bool is_zero_matrix(const Matrix& m);

bool same_row_space(const Matrix& a, const Matrix& b);

/// True iff v (length = m.cols()) lies in the row space of m.
bool row_in_span(const Matrix& m, const std::vector<FieldElement>& v);

/// m * m^T.
Matrix gram(const Matrix& m);

/// m * (m^(q))^T, the Gram matrix of the form <u,v> = sum u_i v_i^q.
Matrix hermitian_gram(const Matrix& m, int64_t q);

} // namespace sepcode
