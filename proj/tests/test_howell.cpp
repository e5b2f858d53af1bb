#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "czdg/howell.hpp"

using czdg::HowellForm;
using czdg::howell_form;
using czdg::unit_multiplier;

namespace {

using Row = std::vector<std::int64_t>;

// full span by closure: start at 0, keep adding generators until stable
std::set<Row> brute_span(const std::vector<Row>& gens, int cols,
                         std::int64_t n) {
  std::set<Row> span;
  std::vector<Row> frontier;
  Row zero(cols, 0);
  span.insert(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    Row v = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      Row w(cols);
      for (int i = 0; i < cols; ++i) w[i] = (v[i] + g[i]) % n;
      if (span.insert(w).second) frontier.push_back(w);
    }
  }
  return span;
}

std::vector<Row> all_vectors(int cols, std::int64_t n) {
  std::vector<Row> out;
  Row cur(cols, 0);
  while (true) {
    out.push_back(cur);
    int i = cols - 1;
    while (i >= 0 && cur[i] == n - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

}  // namespace

TEST_CASE("unit multiplier maps to the gcd") {
  for (std::int64_t n = 2; n <= 24; ++n)
    for (std::int64_t a = 1; a < n; ++a) {
      std::int64_t u = unit_multiplier(a, n);
      CHECK(std::gcd(u, n) == 1);
      CHECK(u * a % n == std::gcd(a, n));
    }
}

TEST_CASE("single generator over Z4") {
  HowellForm h = howell_form({{2, 0, 0}}, 3, 4);
  REQUIRE(h.rows.size() == 1);
  CHECK(h.pivot_cols[0] == 0);
  CHECK(h.pivot_vals[0] == 2);
  CHECK(h.reduce({3, 1, 2}) == Row{1, 1, 2});
  CHECK(h.reduce({2, 0, 0}) == Row{0, 0, 0});
  CHECK(h.digit_range(0) == 2);
  CHECK(h.digit_range(1) == 4);
}

TEST_CASE("randomized agreement with brute-force span closure") {
  std::mt19937_64 rng(20240817);
  for (std::int64_t n : {2, 3, 4, 6, 8, 9, 12}) {
    for (int cols : {1, 2, 3}) {
      for (int trial = 0; trial < 8; ++trial) {
        std::uniform_int_distribution<int> nrows(1, 4);
        std::uniform_int_distribution<std::int64_t> entry(0, n - 1);
        std::vector<Row> gens(nrows(rng), Row(cols));
        for (auto& r : gens)
          for (auto& x : r) x = entry(rng);

        HowellForm h = howell_form(gens, cols, n);
        auto span = brute_span(gens, cols, n);

        // every basis row lies in the span, every generator reduces to zero
        for (const auto& r : h.rows) CHECK(span.count(r) == 1);
        for (const auto& g : gens) CHECK(h.in_span(g));
        for (std::size_t i = 0; i < h.pivot_vals.size(); ++i) {
          CHECK(n % h.pivot_vals[i] == 0);
          if (i) CHECK(h.pivot_cols[i] > h.pivot_cols[i - 1]);
        }

        // reduce() is a canonical coset representative map
        auto vectors = all_vectors(cols, n);
        std::set<Row> residues;
        for (const auto& v : vectors) {
          Row r = h.reduce(v);
          CHECK(h.reduce(r) == r);  // idempotent
          Row diff(cols);
          for (int i = 0; i < cols; ++i) diff[i] = ((v[i] - r[i]) % n + n) % n;
          CHECK(span.count(diff) == 1);  // v - reduce(v) in span
          residues.insert(std::move(r));
        }
        CHECK(residues.size() * span.size() == vectors.size());

        // canonical digit ranges describe exactly the residue set
        std::size_t range_product = 1;
        for (int c = 0; c < cols; ++c) range_product *= h.digit_range(c);
        CHECK(range_product == residues.size());
      }
    }
  }
}
