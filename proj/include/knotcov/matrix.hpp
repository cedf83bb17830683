#pragma once
// Dense big-integer matrices, determinants, Smith normal form.

#include <gmpxx.h>

#include <vector>

namespace knotcov {

class IntegerMatrix {
 public:
  size_t rows = 0, cols = 0;
  std::vector<mpz_class> data;  // row-major

  IntegerMatrix() = default;
  IntegerMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, mpz_class(0)) {}
  static IntegerMatrix identity(size_t n);

  mpz_class& at(size_t i, size_t j) { return data[i * cols + j]; }
  const mpz_class& at(size_t i, size_t j) const { return data[i * cols + j]; }

  IntegerMatrix operator*(const IntegerMatrix& o) const;
  bool operator==(const IntegerMatrix& o) const {
    return rows == o.rows && cols == o.cols && data == o.data;
  }

  IntegerMatrix submatrix(const std::vector<size_t>& row_idx,
                          const std::vector<size_t>& col_idx) const;
  IntegerMatrix delete_column(size_t j) const;
};

mpz_class determinant(const IntegerMatrix& m);  // Bareiss, exact
size_t matrix_rank(const IntegerMatrix& m);

struct SmithForm {
  std::vector<mpz_class> diagonal;  // nonzero entries d1 | d2 | ..., ones included
  size_t rank = 0;                  // number of nonzero diagonal entries
  size_t rows = 0, cols = 0;
  // Nontrivial invariant factors (> 1), i.e. the torsion of coker.
  std::vector<mpz_class> torsion() const;
  // Rank of the cokernel's free part, cols - rank.
  size_t free_rank() const { return cols - rank; }
};

SmithForm smith_normal_form(const IntegerMatrix& m);
// Also produces unimodular L, R with L*m*R = D (D diagonal, Smith).
SmithForm smith_normal_form(const IntegerMatrix& m, IntegerMatrix& L, IntegerMatrix& R);

// Primitive integer kernel vector of m, for matrices of rank cols-1.
// Sign fixed by first nonzero entry positive. Throws if kernel rank != 1.
std::vector<mpz_class> kernel_vector(const IntegerMatrix& m);

}  // namespace knotcov
