#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "knotcov/bounds.hpp"
#include "knotcov/matrix.hpp"

using namespace knotcov;

namespace {

LaurentPolynomial lp(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPolynomial p;
  for (auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

TEST_CASE("exact A and B values") {
  CHECK(a_of(1) == mpq_class(1));
  CHECK(a_of(2) == mpq_class(3, 2));
  CHECK(b_of(1) == 0);
  CHECK(b_of(2) == mpq_class(4, 3));
  CHECK_THROWS(a_of(0));
  // a_log agrees with the exact value
  for (long n : {1L, 2L, 3L, 5L, 9L}) {
    double exact = std::log(mpq_class(a_of(n)).get_d());
    CHECK(std::abs(a_log(n).to_double() - exact) < 1e-9 * (1 + std::abs(exact)));
  }
}

TEST_CASE("bound value arithmetic round trips") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int i = 0; i < 200; ++i) {
    double x = u(rng);
    BoundValue v(x);
    CHECK(std::abs(v.to_double() - x) < 1e-9 * (1 + std::abs(x)));
    if (x > 0) {
      BoundValue r = v.log_value().exp_value();
      CHECK(std::abs(r.to_double() - x) < 1e-9 * (1 + std::abs(x)));
    }
  }
  // exp(log(x)) = x at high levels too
  BoundValue big = BoundValue(mpz_class(10)).pow(BoundValue(mpz_class(500)));
  BoundValue round = big.log_value().exp_value();
  CHECK(round.log_value().to_double() == doctest::Approx(500 * std::log(10.0)).epsilon(1e-9));
  CHECK(big.level() >= 1);
}

TEST_CASE("bound value comparisons across levels") {
  std::vector<BoundValue> vals = {
      BoundValue(-3.0),
      BoundValue(),
      BoundValue(2.5),
      BoundValue(mpz_class(999)),
      BoundValue(mpz_class(2)).pow(BoundValue(mpz_class(10000))),
      BoundValue(mpz_class(3)).pow(BoundValue(mpz_class(10000))),
      dube_degree_bound(3),
      field_degree_bound(3),
      phi_of(1),
  };
  for (size_t i = 0; i < vals.size(); ++i)
    for (size_t j = 0; j < vals.size(); ++j) {
      CHECK(vals[i].cmp(vals[j]) == (i == j ? 0 : (i < j ? -1 : 1)));
    }
  // transitivity spot check on sums/products
  BoundValue a = vals[4] + vals[5];
  CHECK(a.cmp(vals[5]) >= 0);
  CHECK((vals[4] * vals[5]).cmp(vals[5]) > 0);
}

TEST_CASE("zhang bound base case") {
  // one polynomial, degree 2, measure sqrt(3), n=1: value sqrt(3)
  auto v = zhang_bound({BoundValue(2.0)}, {BoundValue(std::sqrt(3.0))}, 1);
  CHECK(v.to_double() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
  auto v2 = zhang_bound({BoundValue(2.0), BoundValue(2.0)},
                        {BoundValue(std::sqrt(3.0)), BoundValue(std::sqrt(3.0))}, 2);
  CHECK(v2.to_double() > 0);
  CHECK_THROWS(zhang_bound({BoundValue(1.0)}, {}, 1));
}

TEST_CASE("mahler measure") {
  CHECK(mahler_univariate(lp({{0, 1}, {1, -1}, {2, 1}})) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(mahler_univariate(lp({{0, -4}, {1, 2}})) == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(mahler_univariate(lp({{0, 7}})) == doctest::Approx(7.0));
  CHECK_THROWS(mahler_univariate(LaurentPolynomial()));
  // Lehmer's polynomial: M slightly above 1
  auto lehmer = lp({{0, 1}, {1, 1}, {2, 0}, {3, -1}, {4, -1}, {5, -1}, {6, -1}, {7, -1}, {9, 1}, {10, 1}});
  double m = mahler_univariate(lehmer);
  CHECK(m == doctest::Approx(1.17628081825991).epsilon(1e-9));
}

TEST_CASE("measure below quadratic norm and coefficient bound, random polynomials") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> coef(-9, 9), deg(1, 6);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    LaurentPolynomial p;
    int d = deg(rng);
    for (int e = 0; e <= d; ++e) p.add_term(e, coef(rng));
    if (p.is_zero()) continue;
    ++checked;
    CHECK(mahler_univariate(p) <= quadratic_norm(p) * (1 + 1e-7));
    CHECK(coef_bound_check(p));
  }
  CHECK(checked > 900);
}

TEST_CASE("heights") {
  CHECK(height_of_rational(mpq_class(3, 2)) == doctest::Approx(std::log(3.0)));
  CHECK(height_of_rational(mpq_class(1)) == doctest::Approx(0.0));
  CHECK(height_prod_bound(std::log(2.0), std::log(3.0)) == doctest::Approx(std::log(6.0)));
  CHECK(height_sum_bound(1.0, 2.0) == doctest::Approx(std::log(2.0) + 3.0));
}

TEST_CASE("matrix height bound formula and oracle") {
  CHECK(matrix_height_bound(1, 0.7) == doctest::Approx(0.7));
  CHECK(matrix_height_bound(2, 0.5) == doctest::Approx(std::log(2.0) + 4 * 0.5));
  CHECK_THROWS(matrix_height_bound(0, 1.0));
  // products of random integer matrices: entry log-magnitudes stay below the bound
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> val(-1000, 1000);
  for (int trial = 0; trial < 50; ++trial) {
    for (long k = 1; k <= 6; ++k) {
      IntegerMatrix prod = IntegerMatrix::identity(2);
      double h = 0;
      for (long f = 0; f < k; ++f) {
        IntegerMatrix m(2, 2);
        for (auto& x : m.data) x = val(rng);
        for (auto& x : m.data) {
          double a = std::abs(x.get_d());
          if (a >= 1) h = std::max(h, std::log(a));
        }
        prod = prod * m;
      }
      double bound = matrix_height_bound(k, h);
      for (auto& x : prod.data) {
        double a = std::abs(x.get_d());
        if (a >= 1) CHECK(std::log(a) <= bound + 1e-9);
      }
    }
  }
}

TEST_CASE("tower bounds") {
  // 2 * 12^256 at n=1
  auto d1 = dube_degree_bound(1);
  CHECK(d1.log_value().to_double() ==
        doctest::Approx(256 * std::log(12.0) + std::log(2.0)).epsilon(1e-9));
  CHECK_THROWS(dube_degree_bound(0));
  auto f1 = field_degree_bound(1);
  CHECK(f1.log_value().to_double() ==
        doctest::Approx(8 * std::log(2.0) + 8 * 256 * std::log(12.0)).epsilon(1e-9));
  CHECK(sl2_exact_order(5) == 120);
  CHECK(sl2_exact_order(5) <= 125);
  auto s = sl2_size_bound(5, 1);
  CHECK((s.log_value() / f1).to_double() == doctest::Approx(3 * std::log(5.0)).epsilon(1e-9));
}

TEST_CASE("D and Phi evaluate and are monotone") {
  auto prev = log_d_of(1);
  CHECK(prev.sign() > 0);
  for (long n = 2; n <= 6; ++n) {
    auto cur = log_d_of(n);
    CHECK(cur.cmp(prev) > 0);
    prev = cur;
  }
  auto pprev = phi_of(1);
  CHECK(pprev.level() == 2);
  for (long c : {2L, 3L, 10L, 100L, 1000L}) {
    auto cur = phi_of(c);
    CHECK(cur.cmp(pprev) > 0);
    CHECK(cur.cmp(log_d_of(100 * c)) > 0);
    pprev = cur;
  }
}

TEST_CASE("torus bound") {
  mpz_class p3;
  mpz_ui_pow_ui(p3.get_mpz_t(), 3, 102);
  CHECK(torus_uv_bound(1) == mpz_class(10100) * p3 + 1);
  CHECK(torus_uv_bound(1) > p3);
  CHECK(torus_uv_bound(2) > torus_uv_bound(1));
  CHECK_THROWS(torus_uv_bound(0));
  // log variant agrees
  auto lg = torus_uv_bound_log(1).log_value().to_double();
  CHECK(lg == doctest::Approx(BigFloat(torus_uv_bound(1)).log().to_double()).epsilon(1e-9));
}

TEST_CASE("prime outside excluded divisors") {
  CHECK(prime_outside(20, {mpz_class(6)}) == 5);
  CHECK(prime_outside(10, {}) == 2);
  CHECK_THROWS(prime_outside(20, {mpz_class(2) * 3 * 5 * 7 * 11 * 13 * 17 * 19}));
  auto p = prime_outside(1000, {mpz_class(2 * 3 * 5), mpz_class(7 * 11)});
  CHECK(p == 13);
  CHECK(is_prime(p));
}
