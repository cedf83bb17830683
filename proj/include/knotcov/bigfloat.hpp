#pragma once
// Thin RAII wrapper over MPFR reals.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace knotcov {

class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultPrec = 256;

  explicit BigFloat(mpfr_prec_t prec = kDefaultPrec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(double x, mpfr_prec_t prec = kDefaultPrec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
  BigFloat(const mpz_class& x, mpfr_prec_t prec = kDefaultPrec) { mpfr_init2(v_, prec); mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
  BigFloat(const mpq_class& x, mpfr_prec_t prec = kDefaultPrec) { mpfr_init2(v_, prec); mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

#define KNOTCOV_BF_BINOP(op, fn)                                   \
  BigFloat operator op(const BigFloat& o) const {                  \
    BigFloat r(std::max(prec(), o.prec()));                        \
    fn(r.v_, v_, o.v_, MPFR_RNDN);                                 \
    return r;                                                      \
  }
  KNOTCOV_BF_BINOP(+, mpfr_add)
  KNOTCOV_BF_BINOP(-, mpfr_sub)
  KNOTCOV_BF_BINOP(*, mpfr_mul)
  KNOTCOV_BF_BINOP(/, mpfr_div)
#undef KNOTCOV_BF_BINOP

  BigFloat operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

#define KNOTCOV_BF_UNFN(name, fn)          \
  BigFloat name() const {                  \
    BigFloat r(prec());                    \
    fn(r.v_, v_, MPFR_RNDN);               \
    return r;                              \
  }
  KNOTCOV_BF_UNFN(log, mpfr_log)
  KNOTCOV_BF_UNFN(exp, mpfr_exp)
  KNOTCOV_BF_UNFN(log1p, mpfr_log1p)
  KNOTCOV_BF_UNFN(sqrt, mpfr_sqrt)
  KNOTCOV_BF_UNFN(abs_value, mpfr_abs)
#undef KNOTCOV_BF_UNFN

  BigFloat lngamma() const {
    BigFloat r(prec());
    mpfr_lngamma(r.v_, v_, MPFR_RNDN);
    return r;
  }

  static BigFloat log2_const(mpfr_prec_t prec = kDefaultPrec) {
    BigFloat r(prec);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
  }

  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
  bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
  bool operator>(const BigFloat& o) const { return cmp(o) > 0; }
  bool operator>=(const BigFloat& o) const { return cmp(o) >= 0; }
  bool operator==(const BigFloat& o) const { return cmp(o) == 0; }

  bool is_inf() const { return mpfr_inf_p(v_); }
  bool is_nan() const { return mpfr_nan_p(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Decimal string with the given number of significant digits.
  std::string str(size_t digits = 40) const;

 private:
  mpfr_t v_;
};

}  // namespace knotcov
