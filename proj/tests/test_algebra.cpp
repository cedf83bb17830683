#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "knotcov/algebra.hpp"

using namespace knotcov;

namespace {

LaurentPolynomial lp(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPolynomial p;
  for (auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

GroupPresentation trefoil_wirtinger_2gen() {
  // <a,b | abab^-1a^-1b^-1>
  GroupPresentation p;
  p.generator_count = 2;
  p.relators = {{1, 2, 1, -2, -1, -2}};
  return p;
}

Word random_word(std::mt19937& rng, int gens, int len) {
  std::uniform_int_distribution<int> g(0, gens - 1), s(0, 1);
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(letter(g(rng), s(rng)));
  return w;
}

}  // namespace

TEST_CASE("laurent arithmetic and normal form") {
  auto p = lp({{0, 1}, {1, -1}, {2, 1}});
  CHECK(p.to_string() == "1 - t + t^2");
  CHECK((p * p).eval_int(2) == 9);
  CHECK(p.eval_int(-1) == 3);
  auto shifted = LaurentPolynomial::monomial(-1, -3) * p;
  CHECK(shifted.unit_normal() == p);
  CHECK(shifted.unit_equal(p));
  CHECK(lp({}).is_zero());
}

TEST_CASE("laurent gcd and exact division") {
  auto a = lp({{0, -1}, {2, 1}});            // t^2 - 1
  auto b = lp({{0, 1}, {1, 2}, {2, 1}});     // (t+1)^2
  CHECK(laurent_gcd(a, b) == lp({{0, 1}, {1, 1}}));
  auto q = laurent_exact_div(b, lp({{0, 1}, {1, 1}}));
  CHECK(q == lp({{0, 1}, {1, 1}}));
  CHECK_THROWS(laurent_exact_div(a, lp({{0, 1}, {1, 3}})));
  // gcd of coprime polynomials is a constant
  CHECK(laurent_gcd(lp({{0, 1}, {1, 1}}), lp({{0, -1}, {1, 1}})).span() == 0);
}

TEST_CASE("laurent determinant matches cofactor expansion") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    size_t n = 3;
    std::vector<std::vector<LaurentPolynomial>> m(n, std::vector<LaurentPolynomial>(n));
    for (auto& row : m)
      for (auto& e : row) e = lp({{0, coef(rng)}, {1, coef(rng)}});
    // cofactor along first row
    LaurentPolynomial det;
    for (size_t j = 0; j < n; ++j) {
      std::vector<std::vector<LaurentPolynomial>> sub(2, std::vector<LaurentPolynomial>(2));
      size_t cc = 0;
      for (size_t col = 0; col < n; ++col) {
        if (col == j) continue;
        sub[0][cc] = m[1][col];
        sub[1][cc] = m[2][col];
        ++cc;
      }
      auto minor = sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0];
      auto term = m[0][j] * minor;
      det = (j % 2) ? det - term : det + term;
    }
    CHECK(laurent_determinant(m) == det);
  }
}

TEST_CASE("smith normal form") {
  IntegerMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(1, 1) = 3;
  auto f = smith_normal_form(m);
  REQUIRE(f.diagonal.size() == 2);
  CHECK(f.diagonal[0] == 1);
  CHECK(f.diagonal[1] == 6);

  auto id = smith_normal_form(IntegerMatrix::identity(3));
  CHECK(id.rank == 3);
  CHECK(id.torsion().empty());
}

TEST_CASE("smith form determinant divisors on random matrices") {
  // product of the first k diagonal entries = gcd of all k x k minors
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> val(-9, 9), dim(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    size_t r = dim(rng), c = dim(rng);
    IntegerMatrix m(r, c);
    for (auto& x : m.data) x = val(rng);
    IntegerMatrix L, R;
    auto f = smith_normal_form(m, L, R);
    // verify the transform actually diagonalizes
    IntegerMatrix d = L * m * R;
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j)
        if (i != j)
          CHECK(d.at(i, j) == 0);
    mpz_class prod = 1;
    for (size_t k = 1; k <= std::min(r, c); ++k) {
      // brute-force k x k minor gcd
      mpz_class g = 0;
      std::vector<size_t> ri(k), ci(k);
      std::function<void(size_t, size_t)> rows = [&](size_t pos, size_t start) {
        if (pos == k) {
          std::function<void(size_t, size_t)> cols = [&](size_t p2, size_t s2) {
            if (p2 == k) {
              mpz_class det = determinant(m.submatrix(ri, ci));
              mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
              return;
            }
            for (size_t j = s2; j < c; ++j) {
              ci[p2] = j;
              cols(p2 + 1, j + 1);
            }
          };
          cols(0, 0);
          return;
        }
        for (size_t i = start; i < r; ++i) {
          ri[pos] = i;
          rows(pos + 1, i + 1);
        }
      };
      rows(0, 0);
      mpz_class expect = (k <= f.diagonal.size()) ? prod * f.diagonal[k - 1] : mpz_class(0);
      CHECK(g == expect);
      if (k <= f.diagonal.size()) prod *= f.diagonal[k - 1];
    }
  }
}

TEST_CASE("fox derivative basics") {
  // d/da (a) = 1
  auto d = fox_derivative({1}, 0);
  CHECK(d == GroupRingElement::from_word({}));
  // d/da (aba) = 1 + ab
  auto d2 = fox_derivative({1, 2, 1}, 0);
  auto expect = GroupRingElement::from_word({}) + GroupRingElement::from_word({1, 2});
  CHECK(d2 == expect);
  // d/da (a^-1) = -a^-1
  auto d3 = fox_derivative({-1}, 0);
  CHECK(d3 == GroupRingElement::from_word({-1}, -1));
  // d/db (aba) = a
  CHECK(fox_derivative({1, 2, 1}, 1) == GroupRingElement::from_word({1}));
}

TEST_CASE("fox fundamental identity on random words") {
  std::mt19937 rng(23);
  const int gens = 3;
  for (int trial = 0; trial < 1000; ++trial) {
    Word w = random_word(rng, gens, 1 + trial % 12);
    GroupRingElement lhs;
    for (int i = 0; i < gens; ++i) {
      GroupRingElement gi_minus_1 =
          GroupRingElement::from_word({letter(i)}) - GroupRingElement::from_word({});
      lhs = lhs + fox_derivative(w, i) * gi_minus_1;
    }
    GroupRingElement rhs = GroupRingElement::from_word(w) - GroupRingElement::from_word({});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("abelianization exponents") {
  auto p = trefoil_wirtinger_2gen();
  auto ev = abelianization_exponents(p);
  REQUIRE(ev.nu.size() == 2);
  CHECK(ev.nu[0] == 1);
  CHECK(ev.nu[1] == 1);

  GroupPresentation commutator;
  commutator.generator_count = 2;
  commutator.relators = {{1, 2, -1, -2}};
  CHECK_THROWS(abelianization_exponents(commutator));  // rank 2
}

TEST_CASE("alexander polynomial of the 2-generator trefoil presentation") {
  auto p = trefoil_wirtinger_2gen();
  auto delta = alexander_polynomial(p);
  CHECK(delta == lp({{0, 1}, {1, -1}, {2, 1}}));
  CHECK(delta.eval_int(1) == 1);
}

TEST_CASE("alexander polynomial of the free presentation is 1") {
  GroupPresentation p;
  p.generator_count = 1;
  CHECK(alexander_polynomial(p) == LaurentPolynomial(mpz_class(1)));
}

TEST_CASE("first homology") {
  auto h = first_homology(trefoil_wirtinger_2gen());
  CHECK(h.is_infinite_cyclic());

  GroupPresentation z2;
  z2.generator_count = 1;
  z2.relators = {{1, 1}};
  auto h2 = first_homology(z2);
  CHECK(h2.free_rank == 0);
  REQUIRE(h2.torsion.size() == 1);
  CHECK(h2.torsion[0] == 2);
}

TEST_CASE("satellite homology model") {
  for (long w : {0L, 1L, 2L, 7L}) {
    auto s = satellite_homology(w);
    CHECK(s.group.free_rank == 2);
    CHECK(s.group.torsion.empty());
    CHECK(s.l1_coefficient == w);
    CHECK(s.l0_coefficient == w);
  }
}
