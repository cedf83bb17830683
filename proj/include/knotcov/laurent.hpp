#pragma once
// Exact integer Laurent polynomials in one variable t.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace knotcov {

class LaurentPolynomial {
 public:
  // exponent -> nonzero coefficient
  std::map<long, mpz_class> coeffs;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(const mpz_class& c) {
    if (c != 0) coeffs[0] = c;
  }
  static LaurentPolynomial monomial(const mpz_class& c, long e) {
    LaurentPolynomial p;
    if (c != 0) p.coeffs[e] = c;
    return p;
  }
  static LaurentPolynomial t_power(long e) { return monomial(1, e); }

  bool is_zero() const { return coeffs.empty(); }
  long min_exp() const { return coeffs.begin()->first; }
  long max_exp() const { return coeffs.rbegin()->first; }
  // degree span (max - min); 0 for constants and for the zero polynomial
  long span() const { return is_zero() ? 0 : max_exp() - min_exp(); }

  void add_term(long e, const mpz_class& c);

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  bool operator==(const LaurentPolynomial& o) const { return coeffs == o.coeffs; }

  mpz_class eval_int(const mpz_class& x) const;  // requires min_exp >= 0 or x | 1

  // Canonical associate: lowest exponent shifted to 0, lowest coefficient positive.
  LaurentPolynomial unit_normal() const;
  // Equality up to multiplication by +-t^k.
  bool unit_equal(const LaurentPolynomial& o) const {
    return unit_normal() == o.unit_normal();
  }

  std::string to_string() const;
  std::vector<std::pair<long, std::string>> terms_decimal() const;
};

// gcd in Z[t, t^-1], returned unit-normalized.
LaurentPolynomial laurent_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

// Exact division (throws if not divisible).
LaurentPolynomial laurent_exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b);

// Determinant of a square matrix of Laurent polynomials (fraction-free Bareiss).
LaurentPolynomial laurent_determinant(std::vector<std::vector<LaurentPolynomial>> m);

}  // namespace knotcov
