#include "knotcov/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace knotcov {

void LaurentPolynomial::add_term(long e, const mpz_class& c) {
  if (c == 0) return;
  auto it = coeffs.find(e);
  if (it == coeffs.end()) {
    coeffs.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  for (auto& [e, c] : o.coeffs) r.add_term(e, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  for (auto& [e, c] : o.coeffs) r.add_term(e, -c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r;
  for (auto& [e, c] : coeffs) r.coeffs[e] = -c;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial r;
  for (auto& [e1, c1] : coeffs)
    for (auto& [e2, c2] : o.coeffs) r.add_term(e1 + e2, c1 * c2);
  return r;
}

mpz_class LaurentPolynomial::eval_int(const mpz_class& x) const {
  mpz_class s = 0;
  for (auto& [e, c] : coeffs) {
    if (e < 0) {
      if (x == 1)
        s += c;
      else if (x == -1)
        s += (e % 2 ? -c : c);
      else
        throw std::domain_error("negative exponent at non-unit argument");
      continue;
    }
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e));
    s += c * p;
  }
  return s;
}

LaurentPolynomial LaurentPolynomial::unit_normal() const {
  if (is_zero()) return *this;
  long shift = min_exp();
  bool flip = coeffs.begin()->second < 0;
  LaurentPolynomial r;
  for (auto& [e, c] : coeffs) r.coeffs[e - shift] = flip ? mpz_class(-c) : c;
  return r;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : coeffs) {
    if (!first) os << (c > 0 ? " + " : " - ");
    mpz_class a = first ? c : mpz_class(abs(c));
    first = false;
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1 && a != -1)
        os << a.get_str() << "*";
      else if (a == -1)
        os << "-";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::vector<std::pair<long, std::string>> LaurentPolynomial::terms_decimal() const {
  std::vector<std::pair<long, std::string>> v;
  for (auto& [e, c] : coeffs) v.emplace_back(e, c.get_str());
  return v;
}

namespace {

// Dense ordinary polynomials over Z, coefficient of t^i at index i.
using Dense = std::vector<mpz_class>;

Dense to_dense(const LaurentPolynomial& p, long& shift) {
  if (p.is_zero()) {
    shift = 0;
    return {};
  }
  shift = p.min_exp();
  Dense d(static_cast<size_t>(p.max_exp() - shift) + 1, mpz_class(0));
  for (auto& [e, c] : p.coeffs) d[static_cast<size_t>(e - shift)] = c;
  return d;
}

LaurentPolynomial from_dense(const Dense& d, long shift) {
  LaurentPolynomial p;
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) p.coeffs[static_cast<long>(i) + shift] = d[i];
  return p;
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

mpz_class content(const Dense& d) {
  mpz_class g = 0;
  for (auto& c : d) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Dense scalar_div(const Dense& d, const mpz_class& s) {
  Dense r(d.size());
  for (size_t i = 0; i < d.size(); ++i) r[i] = d[i] / s;
  return r;
}

// Pseudo-remainder of a by b (b nonzero), primitive-PRS style.
Dense pseudo_rem(Dense a, const Dense& b) {
  trim(a);
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    mpz_class la = a.back();
    size_t k = a.size() - b.size();
    // a := lb*a - la * t^k * b
    for (auto& c : a) c *= lb;
    for (size_t i = 0; i < b.size(); ++i) a[i + k] -= la * b[i];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  mpz_class ca = content(a), cb = content(b), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = scalar_div(a, ca);
  b = scalar_div(b, cb);
  while (!b.empty()) {
    Dense r = pseudo_rem(a, b);
    if (!r.empty()) {
      mpz_class cr = content(r);
      r = scalar_div(r, cr);
    }
    a = std::move(b);
    b = std::move(r);
  }
  for (auto& c : a) c *= cg;
  return a;
}

}  // namespace

LaurentPolynomial laurent_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  long sa, sb;
  Dense da = to_dense(a, sa), db = to_dense(b, sb);
  Dense g = dense_gcd(da, db);
  return from_dense(g, 0).unit_normal();
}

LaurentPolynomial laurent_exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  long sa, sb;
  Dense da = to_dense(a, sa), db = to_dense(b, sb);
  if (da.size() < db.size()) throw std::domain_error("not divisible");
  Dense q(da.size() - db.size() + 1, mpz_class(0));
  for (size_t k = q.size(); k-- > 0;) {
    size_t top = k + db.size() - 1;
    mpz_class r;
    mpz_class num = da[top];
    mpz_tdiv_qr(q[k].get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), db.back().get_mpz_t());
    if (r != 0) throw std::domain_error("not divisible");
    for (size_t i = 0; i < db.size(); ++i) da[i + k] -= q[k] * db[i];
  }
  for (auto& c : da)
    if (c != 0) throw std::domain_error("not divisible");
  return from_dense(q, sa - sb);
}

LaurentPolynomial laurent_determinant(std::vector<std::vector<LaurentPolynomial>> m) {
  size_t n = m.size();
  if (n == 0) return LaurentPolynomial(mpz_class(1));
  for (auto& row : m)
    if (row.size() != n) throw std::invalid_argument("matrix not square");
  LaurentPolynomial prev(mpz_class(1));
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t piv = k;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = laurent_exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  LaurentPolynomial d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

}  // namespace knotcov
