#pragma once
// Bound formulas: A, B, D, Phi, Mahler measure, heights, tower bounds.
// BoundValue is a sign plus an iterated-exponential magnitude
// sign * exp^level(mantissa) with level in {0,1,2}.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "knotcov/bigfloat.hpp"
#include "knotcov/laurent.hpp"

namespace knotcov {

class BoundValue {
 public:
  BoundValue() = default;
  explicit BoundValue(double x) : BoundValue(BigFloat(x)) {}
  explicit BoundValue(const mpz_class& x) : BoundValue(BigFloat(x)) {}
  explicit BoundValue(const mpq_class& x) : BoundValue(BigFloat(x)) {}
  explicit BoundValue(const BigFloat& x);

  static BoundValue from_level(int sign, int level, BigFloat mantissa);

  int sign() const { return sign_; }
  int level() const { return level_; }
  const BigFloat& mantissa() const { return m_; }

  BoundValue operator+(const BoundValue& o) const;
  BoundValue operator-(const BoundValue& o) const;
  BoundValue operator*(const BoundValue& o) const;
  BoundValue operator/(const BoundValue& o) const;
  BoundValue operator-() const;

  // natural log / exp; exp throws beyond level 2
  BoundValue log_value() const;
  BoundValue exp_value() const;
  // this^e for positive base
  BoundValue pow(const BoundValue& e) const;

  int cmp(const BoundValue& o) const;
  bool operator<(const BoundValue& o) const { return cmp(o) < 0; }
  bool operator<=(const BoundValue& o) const { return cmp(o) <= 0; }
  bool operator>(const BoundValue& o) const { return cmp(o) > 0; }
  bool operator>=(const BoundValue& o) const { return cmp(o) >= 0; }

  double to_double() const;  // +-inf when beyond double range
  std::string describe() const;

 private:
  void normalize();
  int sign_ = 0;
  int level_ = 0;
  BigFloat m_;
};

using ExactRational = mpq_class;

// A(n) = (n^2-n+1)! / (n^2 ((n-1)!)^n), exact; requires n^2-n+1 <= 10^4.
ExactRational a_of(long n);
// B(n) = (n^3-n^2)/(n^2-n+1), exact.
ExactRational b_of(long n);
// log A(n) via lngamma, any n >= 1.
BigFloat a_log(long n);

// A(n) * (sum deg) * ((sum M_i/deg_i) + B(n) log 2)
BoundValue zhang_bound(const std::vector<BoundValue>& degrees,
                       const std::vector<BoundValue>& measures, long n);

double mahler_univariate(const LaurentPolynomial& p);
double quadratic_norm(const std::vector<mpz_class>& coefficients);
double quadratic_norm(const LaurentPolynomial& p);
bool coef_bound_check(const LaurentPolynomial& p);

double height_of_rational(const mpq_class& x);
inline double height_prod_bound(double h1, double h2) { return h1 + h2; }
double height_sum_bound(double h1, double h2);
double matrix_height_bound(long k, double h);

BoundValue dube_degree_bound(long n);   // 2 (8n^2+4n)^(2^(4n+4))
BoundValue field_degree_bound(long n);  // 2^(4n+4) (8n^2+4n)^((4n+4) 2^(4n+4))
mpz_class sl2_exact_order(const mpz_class& q);  // q(q^2-1)
BoundValue sl2_size_bound(const mpz_class& p, long n);  // p^(3 field_degree_bound(n))

BoundValue log_d_of(long n);  // log D(n)
BoundValue d_of(long n);
BoundValue phi_of(long c);  // with n := 100c inside the formula

mpz_class torus_uv_bound(long c);       // exact, c <= 1000
BoundValue torus_uv_bound_log(long c);  // any c

mpz_class prime_outside(const mpz_class& x, const std::vector<mpz_class>& excluded);
bool is_prime(const mpz_class& n);

}  // namespace knotcov
