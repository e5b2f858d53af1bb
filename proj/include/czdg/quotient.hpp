#pragma once

#include <vector>

#include "czdg/ring.hpp"
#include "czdg/ring_expr.hpp"

namespace czdg {

struct QuotientPresentation {
  int modulus = 0;                      // coefficient ring Z_N
  std::vector<std::string> variables;   // distinct, ordered
  std::vector<Poly> generators;         // nonzero after reduction mod N
  int ideal_power = 1;
  int degree_bound = 0;                 // 0 = 2 * max generator degree + 2
};

// Truncated-monomial construction over Z_N:
//   1. enumerate monomials of total degree <= D (graded order, largest first)
//   2. span the relation module by all shifts g*m with deg(g*m) <= D
//   3. Howell normal form -> canonical residue per coset
//   4. finiteness witness: every degree-D monomial reduces below degree D
//   5. enumerate residues as elements; multiplication reduces products
//      recursively through the degree-D rewrite rules, then Howell-reduces
// Construction verifies the ring axioms (exhaustive up to order 512, sampled
// above) and that every expanded generator evaluates to zero.
RingPtr make_quotient(const QuotientPresentation& pres,
                      const ConstructOptions& opt = {});

// Value of p at the given ring elements (one per variable), coefficients
// taken mod the ring's characteristic behaviour via repeated addition.
int evaluate_poly(const FiniteRing& ring, const Poly& p,
                  const std::vector<int>& variable_elements);

}  // namespace czdg
