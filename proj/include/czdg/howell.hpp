#pragma once

#include <cstdint>
#include <vector>

namespace czdg {

// Howell normal form of a submodule of (Z/N)^cols given by generator rows.
// Rows are kept with strictly increasing pivot columns; every pivot value
// divides N; entries above a pivot are reduced modulo that pivot. The span
// property makes reduce() a canonical coset representative map:
// reduce(v) == reduce(w) iff v - w lies in the row span.
struct HowellForm {
  std::int64_t modulus = 0;
  int cols = 0;
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<int> pivot_cols;            // per row
  std::vector<std::int64_t> pivot_vals;   // per row, divides modulus

  // Canonical representative of v's coset. Entries at pivot columns end up
  // in [0, pivot) ; other entries stay in [0, N).
  std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const;
  bool in_span(const std::vector<std::int64_t>& v) const;
  // Pivot value at a column, or N when the column has no pivot row
  // (digit range of canonical vectors at that column).
  std::int64_t digit_range(int col) const;
};

HowellForm howell_form(std::vector<std::vector<std::int64_t>> generators,
                       int cols, std::int64_t modulus);

// Smallest unit u mod n with u*a == gcd(a,n) (mod n); a != 0 mod n.
std::int64_t unit_multiplier(std::int64_t a, std::int64_t n);

}  // namespace czdg
