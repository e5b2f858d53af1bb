#include "czdg/howell.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "czdg/errors.hpp"

namespace czdg {

namespace {

using Row = std::vector<std::int64_t>;

std::int64_t mod_norm(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

int lead_col(const Row& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) return static_cast<int>(i);
  return -1;
}

void row_addmul(Row& dst, const Row& src, std::int64_t c, std::int64_t n) {
  c = mod_norm(c, n);
  if (c == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = mod_norm(dst[i] + c * src[i], n);
}

Row row_scaled(const Row& src, std::int64_t c, std::int64_t n) {
  Row out(src.size());
  c = mod_norm(c, n);
  for (std::size_t i = 0; i < src.size(); ++i)
    out[i] = mod_norm(c * src[i], n);
  return out;
}

}  // namespace

std::int64_t unit_multiplier(std::int64_t a, std::int64_t n) {
  a = mod_norm(a, n);
  const std::int64_t d = std::gcd(a, n);
  for (std::int64_t u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1 && mod_norm(u * a, n) == d) return u;
  // u = 1 handles n = 1 and a = d cases; reaching here means a = 0.
  if (a == 0) return 1;
  throw InternalError("unit_multiplier: no unit found");
}

HowellForm howell_form(std::vector<Row> generators, int cols,
                       std::int64_t modulus) {
  if (modulus < 2) throw InternalError("howell_form: modulus must be >= 2");

  std::vector<std::optional<Row>> basis(cols);
  std::vector<Row> work;
  for (auto& r : generators) {
    if (static_cast<int>(r.size()) != cols)
      throw InternalError("howell_form: row width mismatch");
    for (auto& x : r) x = mod_norm(x, modulus);
    work.push_back(std::move(r));
  }

  // Guard against a bug looping forever; the gcd chains shrink fast.
  std::size_t steps = 0;
  const std::size_t step_cap =
      4096 + 64 * work.size() * static_cast<std::size_t>(cols + 1) *
                 static_cast<std::size_t>(modulus);

  while (!work.empty()) {
    if (++steps > step_cap) throw InternalError("howell_form: no convergence");
    Row r = std::move(work.back());
    work.pop_back();
    int j = lead_col(r);
    if (j < 0) continue;
    if (!basis[j]) {
      // normalize the pivot to gcd(lead, N)
      std::int64_t u = unit_multiplier(r[j], modulus);
      Row nr = row_scaled(r, u, modulus);
      std::int64_t d = nr[j];
      if (modulus / d > 1) work.push_back(row_scaled(nr, modulus / d, modulus));
      basis[j] = std::move(nr);
      continue;
    }
    Row& b = *basis[j];
    const std::int64_t d = b[j];
    if (r[j] % d == 0) {
      row_addmul(r, b, -(r[j] / d), modulus);
      work.push_back(std::move(r));
    } else {
      // merge pivots via the extended gcd
      std::int64_t s = 0, t = 0;
      std::int64_t g = std::gcd(r[j], d);
      {
        // extended Euclid on (r[j], d)
        std::int64_t a0 = r[j], b0 = d;
        std::int64_t x0 = 1, x1 = 0, y0 = 0, y1 = 1;
        while (b0 != 0) {
          std::int64_t q = a0 / b0;
          std::int64_t tmp = a0 - q * b0; a0 = b0; b0 = tmp;
          tmp = x0 - q * x1; x0 = x1; x1 = tmp;
          tmp = y0 - q * y1; y0 = y1; y1 = tmp;
        }
        s = x0; t = y0; g = a0;
      }
      Row combo = row_scaled(r, s, modulus);
      row_addmul(combo, b, t, modulus);
      combo[j] = g;  // exact by construction; avoids g == modulus wraparound
      Row old = std::move(b);
      basis[j] = std::move(combo);
      work.push_back(std::move(old));
      if (modulus / g > 1)
        work.push_back(row_scaled(*basis[j], modulus / g, modulus));
    }
  }

  HowellForm h;
  h.modulus = modulus;
  h.cols = cols;
  for (int j = 0; j < cols; ++j)
    if (basis[j]) {
      h.rows.push_back(std::move(*basis[j]));
      h.pivot_cols.push_back(j);
      h.pivot_vals.push_back(h.rows.back()[j]);
    }
  // reduce entries above every pivot
  for (std::size_t i = 0; i < h.rows.size(); ++i)
    for (std::size_t j = i + 1; j < h.rows.size(); ++j) {
      const int c = h.pivot_cols[j];
      const std::int64_t q = h.rows[i][c] / h.pivot_vals[j];
      row_addmul(h.rows[i], h.rows[j], -q, modulus);
    }
  return h;
}

std::vector<std::int64_t> HowellForm::reduce(std::vector<std::int64_t> v) const {
  for (auto& x : v) x = mod_norm(x, modulus);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int c = pivot_cols[i];
    const std::int64_t q = v[c] / pivot_vals[i];
    row_addmul(v, rows[i], -q, modulus);
  }
  return v;
}

bool HowellForm::in_span(const std::vector<std::int64_t>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t HowellForm::digit_range(int col) const {
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (pivot_cols[i] == col) return pivot_vals[i];
  return modulus;
}

}  // namespace czdg
