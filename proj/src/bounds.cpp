#include "knotcov/bounds.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace knotcov {

std::string BigFloat::str(size_t digits) const {
  if (is_nan()) return "nan";
  if (is_inf()) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  std::string sign_part;
  if (!mant.empty() && mant[0] == '-') {
    sign_part = "-";
    mant = mant.substr(1);
  }
  // strip trailing zeros but keep at least one digit
  size_t last = mant.find_last_not_of('0');
  mant = mant.substr(0, std::max<size_t>(last + 1, 1));
  std::ostringstream os;
  os << sign_part << mant[0];
  if (mant.size() > 1) os << '.' << mant.substr(1);
  os << 'e' << (e - 1);
  return os.str();
}

namespace {

const double kLevelCap = 1000.0;  // mantissa below this renormalizes downward

BigFloat cap_float() { return BigFloat(kLevelCap); }
BigFloat cap_exp() { return cap_float().exp(); }  // e^1000

}  // namespace

BoundValue::BoundValue(const BigFloat& x) {
  if (x.is_nan()) throw std::domain_error("nan bound value");
  sign_ = x.sign();
  m_ = x.abs_value();
  level_ = 0;
  normalize();
}

BoundValue BoundValue::from_level(int sign, int level, BigFloat mantissa) {
  BoundValue b;
  b.sign_ = sign;
  b.level_ = level;
  b.m_ = std::move(mantissa);
  b.normalize();
  return b;
}

void BoundValue::normalize() {
  if (m_.is_nan()) throw std::domain_error("nan bound value");
  if (sign_ == 0 || (level_ == 0 && m_.is_zero())) {
    sign_ = (level_ == 0 && m_.is_zero()) ? 0 : sign_;
    if (sign_ == 0) {
      level_ = 0;
      m_ = BigFloat();
      return;
    }
  }
  while (level_ > 0 && m_ < cap_float()) {
    m_ = m_.exp();
    --level_;
  }
  while (level_ < 2 && m_ >= cap_exp()) {
    m_ = m_.log();
    ++level_;
  }
}

namespace {

// log of the magnitude as a plain float; may be +-inf
BigFloat logmag1(const BoundValue& x) {
  switch (x.level()) {
    case 0:
      return x.mantissa().log();
    case 1:
      return x.mantissa();
    default:
      return x.mantissa().exp();  // may overflow to +inf
  }
}

// positive value from its log-magnitude
BoundValue from_log1(int sign, const BigFloat& lr) {
  if (lr.is_nan()) throw std::domain_error("nan bound value");
  if (lr.is_inf()) {
    if (lr.sign() < 0) return BoundValue();
    throw std::overflow_error("magnitude beyond level-2 representation");
  }
  if (lr < cap_float()) return BoundValue::from_level(sign, 0, lr.exp());
  if (lr < cap_exp()) return BoundValue::from_level(sign, 1, lr);
  return BoundValue::from_level(sign, 2, lr.log());
}

int cmp_mag(const BoundValue& a, const BoundValue& b) {
  if (a.level() != b.level()) return a.level() < b.level() ? -1 : 1;
  return a.mantissa().cmp(b.mantissa());
}

BoundValue add_mag(const BoundValue& a, const BoundValue& b) {
  if (a.sign() == 0) return b;
  if (b.sign() == 0) return a;
  if (a.level() == 0 && b.level() == 0)
    return BoundValue(a.mantissa() + b.mantissa());
  const BoundValue& hi = cmp_mag(a, b) >= 0 ? a : b;
  const BoundValue& lo = cmp_mag(a, b) >= 0 ? b : a;
  BigFloat la = logmag1(hi), lb = logmag1(lo);
  if (!la.is_inf() && !lb.is_inf())
    return from_log1(1, la + (lb - la).exp().log1p());
  if (la.is_inf() && lb.is_inf() && hi.level() == 2 && lo.level() == 2) {
    // log(la+lb) at one more log depth; the sum only matters through its log
    BigFloat mr = hi.mantissa() + (lo.mantissa() - hi.mantissa()).exp().log1p();
    return BoundValue::from_level(1, 2, mr);
  }
  return BoundValue::from_level(1, hi.level(), hi.mantissa());
}

// |a| > |b| required
BoundValue sub_mag(const BoundValue& a, const BoundValue& b) {
  if (b.sign() == 0) return a;
  if (a.level() == 0 && b.level() == 0)
    return BoundValue(a.mantissa() - b.mantissa());
  BigFloat la = logmag1(a), lb = logmag1(b);
  if (!la.is_inf() && !lb.is_inf()) {
    BigFloat d = -(lb - la).exp();
    return from_log1(1, la + d.log1p());
  }
  return BoundValue::from_level(1, a.level(), a.mantissa());
}

}  // namespace

BoundValue BoundValue::operator-() const {
  return from_level(-sign_, level_, m_);
}

BoundValue BoundValue::operator+(const BoundValue& o) const {
  if (sign_ == 0) return o;
  if (o.sign() == 0) return *this;
  if (sign_ == o.sign()) {
    BoundValue m = add_mag(*this, o);
    return from_level(sign_, m.level(), m.mantissa());
  }
  int c = cmp_mag(*this, o);
  if (c == 0) return BoundValue();
  const BoundValue& hi = c > 0 ? *this : o;
  const BoundValue& lo = c > 0 ? o : *this;
  BoundValue m = sub_mag(hi, lo);
  return from_level(m.sign() == 0 ? 0 : hi.sign(), m.level(), m.mantissa());
}

BoundValue BoundValue::operator-(const BoundValue& o) const { return *this + (-o); }

BoundValue BoundValue::operator*(const BoundValue& o) const {
  int s = sign_ * o.sign();
  if (s == 0) return BoundValue();
  if (level_ == 0 && o.level() == 0) {
    BoundValue r(m_ * o.mantissa());
    return from_level(s, r.level(), r.mantissa());
  }
  BigFloat la = logmag1(*this), lb = logmag1(o);
  if (!la.is_inf() && !lb.is_inf()) return from_log1(s, la + lb);
  if (la.is_inf() && lb.is_inf()) {
    const BoundValue& hi = cmp_mag(*this, o) >= 0 ? *this : o;
    const BoundValue& lo = cmp_mag(*this, o) >= 0 ? o : *this;
    BigFloat mr = hi.mantissa() + (lo.mantissa() - hi.mantissa()).exp().log1p();
    return from_level(s, 2, mr);
  }
  const BoundValue& big = la.is_inf() ? *this : o;
  return from_level(s, big.level(), big.mantissa());
}

BoundValue BoundValue::operator/(const BoundValue& o) const {
  if (o.sign() == 0) throw std::domain_error("division by zero");
  int s = sign_ * o.sign();
  if (s == 0) return BoundValue();
  if (level_ == 0 && o.level() == 0) {
    BoundValue r(m_ / o.mantissa());
    return from_level(s, r.level(), r.mantissa());
  }
  BigFloat la = logmag1(*this), lb = logmag1(o);
  if (!la.is_inf() && !lb.is_inf()) return from_log1(s, la - lb);
  if (la.is_inf() && !lb.is_inf()) return from_level(s, level_, m_);
  if (!la.is_inf() && lb.is_inf()) return BoundValue();
  // both astronomically large: decide by the deeper logs
  int c = cmp_mag(*this, o);
  if (c == 0) return from_log1(s, BigFloat(0.0));
  if (c < 0) return BoundValue();
  return from_level(s, level_, m_);
}

BoundValue BoundValue::log_value() const {
  if (sign_ <= 0) throw std::domain_error("log of nonpositive value");
  switch (level_) {
    case 0:
      return BoundValue(m_.log());
    case 1:
      return BoundValue(m_);
    default:
      return from_log1(1, m_);
  }
}

BoundValue BoundValue::exp_value() const {
  if (sign_ == 0) return BoundValue(BigFloat(1.0));
  if (sign_ < 0) {
    if (level_ > 0) return BoundValue();  // underflows to zero
    return BoundValue((-m_).exp());
  }
  switch (level_) {
    case 0:
      return from_log1(1, m_);
    case 1: {
      BigFloat l = m_.exp();
      if (!l.is_inf()) return from_log1(1, l);
      return from_level(1, 2, m_);
    }
    default:
      throw std::overflow_error("exp beyond level-2 representation");
  }
}

BoundValue BoundValue::pow(const BoundValue& e) const {
  if (sign_ == 0) return e.sign() == 0 ? BoundValue(BigFloat(1.0)) : BoundValue();
  if (sign_ < 0) throw std::domain_error("pow of negative base");
  if (e.sign() == 0) return BoundValue(BigFloat(1.0));
  if (e.sign() < 0) return BoundValue(BigFloat(1.0)) / pow(-e);
  BigFloat la = logmag1(*this);
  if (la.is_zero()) return BoundValue(BigFloat(1.0));
  BigFloat ev = e.level() == 0 ? e.mantissa() : logmag1(e).exp();  // may be inf
  if (!la.is_inf() && !ev.is_inf()) {
    BigFloat lr = ev * la;
    if (!lr.is_inf()) return from_log1(1, lr);
  }
  if (la.sign() < 0) return BoundValue();  // base < 1, huge exponent
  // one more log depth: log(log result) = log e + log(log base)
  BigFloat le = logmag1(e);
  BigFloat lla = la.is_inf() ? (level_ == 2 ? m_ : la.log()) : la.log();
  if (le.is_inf() || lla.is_inf())
    throw std::overflow_error("pow beyond level-2 representation");
  return from_level(1, 2, le + lla);
}

int BoundValue::cmp(const BoundValue& o) const {
  if (sign_ != o.sign()) return sign_ < o.sign() ? -1 : 1;
  if (sign_ == 0) return 0;
  int c = cmp_mag(*this, o);
  return sign_ > 0 ? c : -c;
}

double BoundValue::to_double() const {
  double m = m_.to_double();
  for (int i = 0; i < level_; ++i) m = std::exp(m);
  return sign_ < 0 ? -m : sign_ == 0 ? 0.0 : m;
}

std::string BoundValue::describe() const {
  std::ostringstream os;
  if (sign_ == 0) return "0";
  if (sign_ < 0) os << "-";
  for (int i = 0; i < level_; ++i) os << "exp(";
  os << m_.str();
  for (int i = 0; i < level_; ++i) os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

mpz_class factorial(unsigned long k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

BoundValue bv(long x) { return BoundValue(mpz_class(x)); }
BoundValue pow2(long e) { return bv(2).pow(bv(e)); }

}  // namespace

ExactRational a_of(long n) {
  if (n < 1) throw std::domain_error("A(n) needs n >= 1");
  long k = n * n - n + 1;
  if (k > 10000) throw std::domain_error("A(n) exact evaluation capped at n^2-n+1 <= 10^4");
  mpz_class num = factorial(static_cast<unsigned long>(k));
  mpz_class den = mpz_class(n) * n;
  mpz_class f = factorial(static_cast<unsigned long>(n - 1));
  mpz_class fp;
  mpz_pow_ui(fp.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(n));
  den *= fp;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

ExactRational b_of(long n) {
  if (n < 1) throw std::domain_error("B(n) needs n >= 1");
  mpq_class q(mpz_class(n) * n * n - mpz_class(n) * n, mpz_class(n) * n - n + 1);
  q.canonicalize();
  return q;
}

BigFloat a_log(long n) {
  if (n < 1) throw std::domain_error("A(n) needs n >= 1");
  mpz_class k = mpz_class(n) * n - n + 1;
  BigFloat lg_num = BigFloat(mpz_class(k + 1)).lngamma();  // log (n^2-n+1)!
  BigFloat lg_n = BigFloat(mpz_class(n)).lngamma();        // log (n-1)!
  return lg_num - BigFloat(2.0) * BigFloat(mpz_class(n)).log() - BigFloat(mpz_class(n)) * lg_n;
}

BoundValue zhang_bound(const std::vector<BoundValue>& degrees,
                       const std::vector<BoundValue>& measures, long n) {
  if (degrees.size() != measures.size()) throw std::invalid_argument("length mismatch");
  if (degrees.empty()) throw std::invalid_argument("empty polynomial list");
  BoundValue a = from_log1(1, a_log(n));
  BoundValue sum_deg, ratio;
  for (size_t i = 0; i < degrees.size(); ++i) {
    sum_deg = sum_deg + degrees[i];
    ratio = ratio + measures[i] / degrees[i];
  }
  BoundValue blog2 = BoundValue(b_of(n)) * BoundValue(BigFloat::log2_const());
  return a * sum_deg * (ratio + blog2);
}

double mahler_univariate(const LaurentPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("Mahler measure of the zero polynomial");
  LaurentPolynomial q = p.unit_normal();
  long deg = q.max_exp();
  std::vector<double> c(static_cast<size_t>(deg) + 1, 0.0);
  for (auto& [e, coef] : q.coeffs) c[static_cast<size_t>(e)] = coef.get_d();
  if (deg == 0) return std::abs(c[0]);
  using Cx = std::complex<double>;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (long i = 0; i + 1 < deg; ++i) comp(i + 1, i) = 1.0;
  for (long i = 0; i < deg; ++i) comp(i, deg - 1) = -c[static_cast<size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  double m = std::abs(c.back());
  for (long i = 0; i < deg; ++i) {
    Cx r = es.eigenvalues()(i);
    // Newton refinement
    for (int it = 0; it < 8; ++it) {
      Cx f = 0, df = 0;
      for (long j = deg; j >= 0; --j) {
        df = df * r + f;
        f = f * r + c[static_cast<size_t>(j)];
      }
      if (std::abs(df) < 1e-300) break;
      Cx step = f / df;
      r -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(r))) break;
    }
    double ar = std::abs(r);
    if (ar > 1.0) m *= ar;
  }
  return m;
}

double quadratic_norm(const std::vector<mpz_class>& coefficients) {
  double s = 0;
  for (auto& c : coefficients) {
    double d = c.get_d();
    s += d * d;
  }
  return std::sqrt(s);
}

double quadratic_norm(const LaurentPolynomial& p) {
  std::vector<mpz_class> c;
  for (auto& [e, coef] : p.coeffs) c.push_back(coef);
  return quadratic_norm(c);
}

bool coef_bound_check(const LaurentPolynomial& p) {
  if (p.is_zero()) return true;
  double m = mahler_univariate(p);
  LaurentPolynomial q = p.unit_normal();
  unsigned long degree = static_cast<unsigned long>(q.max_exp());
  for (auto& [e, coef] : q.coeffs) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), degree, static_cast<unsigned long>(e));
    double bound = binom.get_d() * m;
    // tolerance covers root-finding error at multiple roots
    if (mpz_class(abs(coef)).get_d() > bound * (1.0 + 1e-7) + 1e-7) return false;
  }
  return true;
}

double height_of_rational(const mpq_class& x) {
  mpq_class q = x;
  q.canonicalize();
  mpz_class num = abs(q.get_num()), den = abs(q.get_den());
  mpz_class m = std::max(num, den);
  if (m == 0) throw std::domain_error("height of 0/0");
  return BigFloat(m).log().to_double();
}

double height_sum_bound(double h1, double h2) { return std::log(2.0) + h1 + h2; }

double matrix_height_bound(long k, double h) {
  if (k < 1) throw std::domain_error("matrix height bound needs k >= 1");
  if (h < 0) throw std::domain_error("matrix height bound needs h >= 0");
  double p = std::ldexp(1.0, static_cast<int>(k));       // 2^k
  double ph = std::ldexp(1.0, static_cast<int>(k - 1));  // 2^(k-1)
  return (ph - 1.0) * std::log(2.0) + (p + ph - 2.0) * h;
}

BoundValue dube_degree_bound(long n) {
  if (n < 1) throw std::domain_error("degree bound needs n >= 1");
  return bv(2) * bv(8 * n * n + 4 * n).pow(pow2(4 * n + 4));
}

BoundValue field_degree_bound(long n) {
  if (n < 1) throw std::domain_error("degree bound needs n >= 1");
  return pow2(4 * n + 4) * bv(8 * n * n + 4 * n).pow(bv(4 * n + 4) * pow2(4 * n + 4));
}

mpz_class sl2_exact_order(const mpz_class& q) { return q * (q * q - 1); }

BoundValue sl2_size_bound(const mpz_class& p, long n) {
  return BoundValue(p).pow(bv(3) * field_degree_bound(n));
}

BoundValue log_d_of(long n) {
  if (n < 1) throw std::domain_error("D(n) needs n >= 1");
  BoundValue log2v{BigFloat::log2_const()};
  BoundValue half_sqrt3{BigFloat(3.0).sqrt() / BigFloat(2.0)};
  BoundValue e_term = pow2(4 * n + 2) + bv(3) * pow2(3 * n + 3) +
                      (half_sqrt3 + bv(3)) * bv(n) +
                      BoundValue(b_of(4 * n + 5)) * log2v + half_sqrt3;
  BoundValue az = from_log1(1, a_log(4 * n + 5)) * bv(27 * n + 5) * e_term;
  BoundValue base = bv(8 * n * n + 4 * n);
  BoundValue term1 = bv(2) * bv(4 * n + 4) * base.pow(pow2(4 * n + 4)) * az;
  // log(16 n^2 3^(n-1))
  BoundValue log163 = BoundValue(BigFloat(mpz_class(mpz_class(16) * n * n)).log() +
                                 BigFloat(mpz_class(n - 1)) * BigFloat(3.0).log());
  BoundValue inner = bv(2) * log2v + bv(4) * log163 +
                     bv(3) * (pow2(4 * n - 1) - bv(1)) * log2v +
                     bv(3) * (pow2(4 * n) + pow2(4 * n - 1) - bv(2)) * az;
  return term1 + field_degree_bound(n) * inner;
}

BoundValue d_of(long n) { return log_d_of(n).exp_value(); }

BoundValue phi_of(long c) {
  if (c < 1) throw std::domain_error("Phi(c) needs c >= 1");
  long n = 100 * c;
  BoundValue log_c_half{(BigFloat(mpz_class(c)) / BigFloat(2.0)).log()};
  BoundValue base = bv(87) * (log_d_of(n) + bv(8 * c) * log_c_half);
  BoundValue exponent = bv(24 * c) * field_degree_bound(n);
  return base.pow(exponent);
}

mpz_class torus_uv_bound(long c) {
  if (c < 1) throw std::domain_error("bound needs c >= 1");
  if (c > 1000) throw std::domain_error("exact evaluation capped at c <= 1000");
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(100 * c + 2));
  mpz_class m = mpz_class(100 * c) * (100 * c) + 100 * c;
  return m * p + 1;
}

BoundValue torus_uv_bound_log(long c) {
  if (c < 1) throw std::domain_error("bound needs c >= 1");
  return bv(100 * c) * bv(100 * c + 1) * bv(3).pow(bv(100 * c + 2)) + bv(1);
}

bool is_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

mpz_class prime_outside(const mpz_class& x, const std::vector<mpz_class>& excluded) {
  if (x < 3) throw std::domain_error("search ceiling below 3");
  mpz_class p = 2;
  while (p <= x) {
    bool ok = true;
    for (auto& e : excluded) {
      if (e == 0 || mpz_divisible_p(e.get_mpz_t(), p.get_mpz_t())) {
        ok = false;
        break;
      }
    }
    if (ok) return p;
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  throw std::runtime_error("no admissible prime below the ceiling");
}

}  // namespace knotcov
