#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace czdg {

// Multivariate polynomial with integer coefficients over an ordered variable
// list; keys are exponent vectors of that length. Zero coefficients are never
// stored.
struct Poly {
  std::map<std::vector<int>, long long> terms;

  bool zero() const { return terms.empty(); }
  int total_degree() const;
  bool operator==(const Poly&) const = default;

  static Poly constant(long long c, int nvars);
  static Poly variable(int index, int nvars);
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);

// Graded order: higher total degree first, ties broken lexicographically with
// the leftmost variable dominant.
bool monomial_greater(const std::vector<int>& a, const std::vector<int>& b);

// Parsed ring-presentation expression.
// (No default member initializers in the nested structs: they would delay
// completeness past the variant member declaration.)
struct RingExpr {
  struct Cyclic {
    int n;
    bool operator==(const Cyclic&) const = default;
  };
  struct GaloisField {
    int p, k;
    bool operator==(const GaloisField&) const = default;
  };
  struct Quotient {
    int modulus;
    std::vector<std::string> variables;
    std::vector<Poly> generators;
    int ideal_power;  // (g1,...,gk)^m for m >= 2, else 1
    bool operator==(const Quotient&) const = default;
  };
  struct Product {
    std::vector<RingExpr> factors;  // >= 2
    bool operator==(const Product& o) const;
  };

  std::variant<Cyclic, GaloisField, Quotient, Product> node;

  bool operator==(const RingExpr& o) const;
};

// Canonical rendering; parse_ring_expr(format_ring_expr(e)) == e.
std::string format_ring_expr(const RingExpr& e);

// "x^2 - 2" style with spaces around binary +/-; used for presentations.
std::string format_poly(const Poly& p, const std::vector<std::string>& vars);
// "x+2" style without spaces; used for element labels.
std::string format_poly_compact(const Poly& p, const std::vector<std::string>& vars);

// Generators of (g1,...,gk)^m: all degree-m products, duplicates removed.
std::vector<Poly> expand_ideal_power(const std::vector<Poly>& gens, int power);

}  // namespace czdg
