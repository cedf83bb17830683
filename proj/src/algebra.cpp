#include "knotcov/algebra.hpp"

#include <numeric>
#include <stdexcept>

namespace knotcov {

void GroupPresentation::validate() const {
  if (generator_count < 0) throw std::invalid_argument("negative generator count");
  for (auto& r : relators)
    for (int l : r)
      if (l == 0 || gen_of(l) >= generator_count)
        throw std::invalid_argument("generator index out of range");
}

GroupRingElement GroupRingElement::from_word(const Word& w, const mpz_class& c) {
  GroupRingElement e;
  e.add_term(reduce(w), c);
  return e;
}

void GroupRingElement::add_term(const Word& w, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  for (auto& [w, c] : o.terms) r.add_term(w, c);
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  for (auto& [w, c] : o.terms) r.add_term(w, -c);
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  GroupRingElement r;
  for (auto& [w1, c1] : terms)
    for (auto& [w2, c2] : o.terms) r.add_term(concat(w1, w2), c1 * c2);
  return r;
}

GroupRingElement fox_derivative(const Word& w, int i) {
  if (i < 0) throw std::invalid_argument("generator index out of range");
  GroupRingElement d;
  Word prefix;
  for (int l : reduce(w)) {
    if (gen_of(l) == i) {
      if (l > 0) {
        d.add_term(prefix, 1);
      } else {
        Word p = prefix;
        push_reduced(p, l);
        d.add_term(p, -1);
      }
    }
    push_reduced(prefix, l);
  }
  return d;
}

IntegerMatrix abelianized_matrix(const GroupPresentation& p) {
  p.validate();
  IntegerMatrix b(p.relators.size(), p.generator_count);
  for (size_t j = 0; j < p.relators.size(); ++j)
    for (int i = 0; i < p.generator_count; ++i)
      b.at(j, i) = exponent_sum(p.relators[j], i);
  return b;
}

namespace {

// Greedy selection of g-1 rows of full rank g-1.
std::vector<size_t> independent_rows(const IntegerMatrix& b, size_t need) {
  std::vector<size_t> sel;
  for (size_t i = 0; i < b.rows && sel.size() < need; ++i) {
    std::vector<size_t> trial = sel;
    trial.push_back(i);
    std::vector<size_t> allc(b.cols);
    std::iota(allc.begin(), allc.end(), size_t{0});
    if (matrix_rank(b.submatrix(trial, allc)) == trial.size()) sel = trial;
  }
  if (sel.size() != need) throw std::domain_error("abelianization rank is not 1");
  return sel;
}

template <typename F>
void for_each_combination(size_t n, size_t k, F&& f) {
  std::vector<size_t> idx(k);
  std::iota(idx.begin(), idx.end(), size_t{0});
  if (k > n) return;
  for (;;) {
    f(idx);
    size_t i = k;
    while (i-- > 0) {
      if (idx[i] + (k - i) < n + 0) {
        ++idx[i];
        for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace

ExponentVector abelianization_exponents(const GroupPresentation& p) {
  IntegerMatrix b = abelianized_matrix(p);
  size_t g = p.generator_count;
  if (g == 0) throw std::domain_error("no generators");
  if (matrix_rank(b) + 1 != g) throw std::domain_error("abelianization rank is not 1");
  std::vector<size_t> rows = independent_rows(b, g - 1);
  ExponentVector ev;
  ev.pre_gcd.resize(g);
  mpz_class gcd = 0;
  for (size_t j = 0; j < g; ++j) {
    std::vector<size_t> cols;
    for (size_t i = 0; i < g; ++i)
      if (i != j) cols.push_back(i);
    mpz_class d = determinant(b.submatrix(rows, cols));
    if (j % 2) d = -d;
    ev.pre_gcd[j] = d;
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), d.get_mpz_t());
  }
  if (gcd == 0) throw std::domain_error("degenerate exponent vector");
  int sign = 0;
  ev.nu.resize(g);
  for (size_t j = 0; j < g; ++j) {
    ev.nu[j] = ev.pre_gcd[j] / gcd;
    if (sign == 0 && ev.nu[j] != 0) sign = (ev.nu[j] > 0) ? 1 : -1;
  }
  if (sign < 0)
    for (auto& x : ev.nu) x = -x;
  return ev;
}

LaurentPolynomial abelianize_to_laurent(const GroupRingElement& e,
                                        const std::vector<mpz_class>& nu) {
  LaurentPolynomial p;
  for (auto& [w, c] : e.terms) {
    mpz_class exp = 0;
    for (int l : w) exp += (l > 0 ? nu[gen_of(l)] : -nu[gen_of(l)]);
    if (!exp.fits_slong_p()) throw std::overflow_error("abelianized exponent overflow");
    p.add_term(exp.get_si(), c);
  }
  return p;
}

std::vector<std::vector<LaurentPolynomial>> alexander_matrix(const GroupPresentation& p) {
  std::vector<mpz_class> nu = abelianization_exponents(p).nu;
  std::vector<std::vector<LaurentPolynomial>> a(p.relators.size());
  for (size_t j = 0; j < p.relators.size(); ++j) {
    a[j].resize(p.generator_count);
    for (int i = 0; i < p.generator_count; ++i)
      a[j][i] = abelianize_to_laurent(fox_derivative(p.relators[j], i), nu);
  }
  return a;
}

LaurentPolynomial alexander_polynomial(const GroupPresentation& p) {
  size_t g = p.generator_count;
  if (g == 0) throw std::domain_error("no generators");
  size_t k = g - 1;
  if (k == 0) return LaurentPolynomial(mpz_class(1));
  auto a = alexander_matrix(p);
  size_t r = a.size();
  if (r < k) return {};
  LaurentPolynomial gcd;
  LaurentPolynomial unit(mpz_class(1));
  bool done = false;
  for_each_combination(r, k, [&](const std::vector<size_t>& ri) {
    if (done) return;
    for_each_combination(g, k, [&](const std::vector<size_t>& ci) {
      if (done) return;
      std::vector<std::vector<LaurentPolynomial>> sub(k);
      for (size_t i = 0; i < k; ++i) {
        sub[i].resize(k);
        for (size_t j = 0; j < k; ++j) sub[i][j] = a[ri[i]][ci[j]];
      }
      LaurentPolynomial d = laurent_determinant(std::move(sub));
      if (d.is_zero()) return;
      gcd = gcd.is_zero() ? d.unit_normal() : laurent_gcd(gcd, d);
      if (gcd == unit) done = true;
    });
  });
  return gcd.unit_normal();
}

AbelianGroup first_homology(const GroupPresentation& p) {
  SmithForm f = smith_normal_form(abelianized_matrix(p));
  AbelianGroup h;
  h.torsion = f.torsion();
  h.free_rank = p.generator_count - f.rank;
  return h;
}

SatelliteHomology satellite_homology(long w) {
  // basis [m0],[m1],[l0],[l1]; relations l1 - w m0 = 0, l0 - w m1 = 0
  IntegerMatrix rel(2, 4);
  rel.at(0, 0) = -w;
  rel.at(0, 3) = 1;
  rel.at(1, 1) = -w;
  rel.at(1, 2) = 1;
  SmithForm f = smith_normal_form(rel);
  SatelliteHomology s;
  s.group.torsion = f.torsion();
  s.group.free_rank = 4 - f.rank;
  s.l1_coefficient = w;
  s.l0_coefficient = w;
  return s;
}

}  // namespace knotcov
