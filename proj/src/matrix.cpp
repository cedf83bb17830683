#include "knotcov/matrix.hpp"

#include <stdexcept>

namespace knotcov {

IntegerMatrix IntegerMatrix::identity(size_t n) {
  IntegerMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("dimension mismatch");
  IntegerMatrix r(rows, o.cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < cols; ++k) {
      const mpz_class& a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < o.cols; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntegerMatrix IntegerMatrix::submatrix(const std::vector<size_t>& ri,
                                       const std::vector<size_t>& ci) const {
  IntegerMatrix r(ri.size(), ci.size());
  for (size_t i = 0; i < ri.size(); ++i)
    for (size_t j = 0; j < ci.size(); ++j) r.at(i, j) = at(ri[i], ci[j]);
  return r;
}

IntegerMatrix IntegerMatrix::delete_column(size_t jdel) const {
  IntegerMatrix r(rows, cols - 1);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0, jj = 0; j < cols; ++j)
      if (j != jdel) r.at(i, jj++) = at(i, j);
  return r;
}

mpz_class determinant(const IntegerMatrix& m0) {
  if (m0.rows != m0.cols) throw std::invalid_argument("matrix not square");
  size_t n = m0.rows;
  if (n == 0) return 1;
  IntegerMatrix m = m0;
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      size_t piv = k;
      while (piv < n && m.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  mpz_class d = m.at(n - 1, n - 1);
  return sign < 0 ? mpz_class(-d) : d;
}

size_t matrix_rank(const IntegerMatrix& m) { return smith_normal_form(m).rank; }

namespace {

struct SnfWork {
  IntegerMatrix D, L, R;
  bool track;

  void swap_rows(size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < D.cols; ++j) std::swap(D.at(a, j), D.at(b, j));
    if (track)
      for (size_t j = 0; j < L.cols; ++j) std::swap(L.at(a, j), L.at(b, j));
  }
  void swap_cols(size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < D.rows; ++i) std::swap(D.at(i, a), D.at(i, b));
    if (track)
      for (size_t i = 0; i < R.rows; ++i) std::swap(R.at(i, a), R.at(i, b));
  }
  void add_row(size_t dst, size_t src, const mpz_class& f) {
    for (size_t j = 0; j < D.cols; ++j) D.at(dst, j) += f * D.at(src, j);
    if (track)
      for (size_t j = 0; j < L.cols; ++j) L.at(dst, j) += f * L.at(src, j);
  }
  void add_col(size_t dst, size_t src, const mpz_class& f) {
    for (size_t i = 0; i < D.rows; ++i) D.at(i, dst) += f * D.at(i, src);
    if (track)
      for (size_t i = 0; i < R.rows; ++i) R.at(i, dst) += f * R.at(i, src);
  }
  void negate_row(size_t i) {
    for (size_t j = 0; j < D.cols; ++j) D.at(i, j) = -D.at(i, j);
    if (track)
      for (size_t j = 0; j < L.cols; ++j) L.at(i, j) = -L.at(i, j);
  }
};

SmithForm snf_impl(const IntegerMatrix& m, IntegerMatrix* Lout, IntegerMatrix* Rout) {
  SnfWork w;
  w.D = m;
  w.track = (Lout != nullptr);
  if (w.track) {
    w.L = IntegerMatrix::identity(m.rows);
    w.R = IntegerMatrix::identity(m.cols);
  }
  size_t nmin = std::min(m.rows, m.cols);
  for (size_t s = 0; s < nmin; ++s) {
    for (;;) {
      // locate minimal nonzero |entry| in the lower-right block
      size_t pi = s, pj = s;
      mpz_class best = 0;
      for (size_t i = s; i < w.D.rows; ++i)
        for (size_t j = s; j < w.D.cols; ++j) {
          const mpz_class& v = w.D.at(i, j);
          if (v == 0) continue;
          mpz_class a = abs(v);
          if (best == 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) goto done;  // block is zero
      w.swap_rows(s, pi);
      w.swap_cols(s, pj);
      bool clean = true;
      for (size_t i = s + 1; i < w.D.rows; ++i)
        if (w.D.at(i, s) != 0) {
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), w.D.at(i, s).get_mpz_t(), w.D.at(s, s).get_mpz_t());
          w.add_row(i, s, -q);
          if (w.D.at(i, s) != 0) clean = false;
        }
      for (size_t j = s + 1; j < w.D.cols; ++j)
        if (w.D.at(s, j) != 0) {
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), w.D.at(s, j).get_mpz_t(), w.D.at(s, s).get_mpz_t());
          w.add_col(j, s, -q);
          if (w.D.at(s, j) != 0) clean = false;
        }
      if (!clean) continue;
      // pivot is lone; enforce divisibility into the remaining block
      bool divides_all = true;
      for (size_t i = s + 1; i < w.D.rows && divides_all; ++i)
        for (size_t j = s + 1; j < w.D.cols; ++j)
          if (w.D.at(i, j) % w.D.at(s, s) != 0) {
            w.add_row(s, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (w.D.at(s, s) < 0) w.negate_row(s);
  }
done:
  SmithForm f;
  f.rows = m.rows;
  f.cols = m.cols;
  for (size_t s = 0; s < nmin; ++s)
    if (w.D.at(s, s) != 0) f.diagonal.push_back(w.D.at(s, s));
  f.rank = f.diagonal.size();
  if (Lout) *Lout = w.L;
  if (Rout) *Rout = w.R;
  return f;
}

}  // namespace

std::vector<mpz_class> SmithForm::torsion() const {
  std::vector<mpz_class> t;
  for (auto& d : diagonal)
    if (d > 1) t.push_back(d);
  return t;
}

SmithForm smith_normal_form(const IntegerMatrix& m) { return snf_impl(m, nullptr, nullptr); }

SmithForm smith_normal_form(const IntegerMatrix& m, IntegerMatrix& L, IntegerMatrix& R) {
  return snf_impl(m, &L, &R);
}

std::vector<mpz_class> kernel_vector(const IntegerMatrix& m) {
  IntegerMatrix L, R;
  SmithForm f = smith_normal_form(m, L, R);
  if (f.rank + 1 != m.cols) throw std::domain_error("kernel rank is not 1");
  // D = L*m*R diagonal; column f.rank of R spans the kernel.
  std::vector<mpz_class> v(m.cols);
  mpz_class g = 0;
  for (size_t i = 0; i < m.cols; ++i) {
    v[i] = R.at(i, f.rank);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
  }
  if (g == 0) throw std::domain_error("degenerate kernel vector");
  int sign = 0;
  for (auto& x : v) {
    if (x == 0) continue;
    sign = (x > 0) ? 1 : -1;
    break;
  }
  for (auto& x : v) {
    x /= g;
    if (sign < 0) x = -x;
  }
  return v;
}

}  // namespace knotcov
