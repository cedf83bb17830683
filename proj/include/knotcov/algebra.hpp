#pragma once
// Fox calculus, abelianization exponents, Alexander matrix/polynomial,
// first homology via Smith form.

#include <gmpxx.h>

#include <map>
#include <vector>

#include "knotcov/laurent.hpp"
#include "knotcov/matrix.hpp"
#include "knotcov/presentation.hpp"
#include "knotcov/words.hpp"

namespace knotcov {

// Formal integer combination of reduced free-group words.
class GroupRingElement {
 public:
  std::map<Word, mpz_class> terms;  // reduced word -> nonzero coefficient

  GroupRingElement() = default;
  static GroupRingElement from_word(const Word& w, const mpz_class& c = 1);

  void add_term(const Word& w, const mpz_class& c);
  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  bool operator==(const GroupRingElement& o) const { return terms == o.terms; }
  bool is_zero() const { return terms.empty(); }
};

// Fox derivative d w / d g_i: dg_j/dg_i = delta_ij, d(ab) = da + a db,
// d(a^-1) = -a^-1 da.
GroupRingElement fox_derivative(const Word& w, int i);

// Abelianized relation matrix: entry (j,i) = exponent sum of g_i in relator j.
IntegerMatrix abelianized_matrix(const GroupPresentation& p);

struct ExponentVector {
  std::vector<mpz_class> nu;       // primitive, first nonzero entry positive
  std::vector<mpz_class> pre_gcd;  // ((-1)^j det B_j)_j before dividing by the gcd
};

// Requires rank-1 abelianization (throws otherwise).
ExponentVector abelianization_exponents(const GroupPresentation& p);

// Image of a group-ring element under psi then phi: each word maps to
// t^(sum of signed nu exponents).
LaurentPolynomial abelianize_to_laurent(const GroupRingElement& e,
                                        const std::vector<mpz_class>& nu);

std::vector<std::vector<LaurentPolynomial>> alexander_matrix(const GroupPresentation& p);
LaurentPolynomial alexander_polynomial(const GroupPresentation& p);

struct AbelianGroup {
  std::vector<mpz_class> torsion;  // invariant factors > 1
  size_t free_rank = 0;
  bool is_infinite_cyclic() const { return torsion.empty() && free_rank == 1; }
};

AbelianGroup first_homology(const GroupPresentation& p);

// Homology of the two-piece satellite model: abelian group on
// [m0],[m1],[l0],[l1] with relations [l1] = w[m0], [l0] = w[m1].
struct SatelliteHomology {
  AbelianGroup group;        // always free of rank 2
  long l1_coefficient;       // [l1] in terms of [m0]
  long l0_coefficient;       // [l0] in terms of [m1]
};
SatelliteHomology satellite_homology(long w);

}  // namespace knotcov
