#include "czdg/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "czdg/errors.hpp"
#include "czdg/howell.hpp"

namespace czdg {

namespace {

using Expvec = std::vector<int>;

int vec_degree(const Expvec& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

// all monomials of total degree <= max_deg, sorted graded-descending
std::vector<Expvec> enumerate_monomials(int nvars, int max_deg) {
  std::vector<Expvec> out;
  Expvec cur(nvars, 0);
  // depth-first over exponent vectors
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[var] = e;
      self(self, var + 1, remaining - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, max_deg);
  std::sort(out.begin(), out.end(), monomial_greater);
  return out;
}

struct MonomialIndex {
  std::vector<Expvec> monomials;  // graded-descending
  std::map<Expvec, int> position;

  int at(const Expvec& e) const {
    auto it = position.find(e);
    if (it == position.end())
      throw InternalError("monomial outside the truncation");
    return it->second;
  }
};

// sparse polynomial over Z_N keyed by exponent vector
using Spoly = std::map<Expvec, std::int64_t>;

Spoly to_sparse(const std::vector<std::int64_t>& vec, const MonomialIndex& mx) {
  Spoly out;
  for (std::size_t i = 0; i < vec.size(); ++i)
    if (vec[i] != 0) out[mx.monomials[i]] = vec[i];
  return out;
}

// splits m into (d, rest) with deg(d) == target and d dividing m
Expvec take_divisor(const Expvec& m, int target) {
  Expvec d(m.size(), 0);
  int need = target;
  for (std::size_t i = 0; i < m.size() && need > 0; ++i) {
    int t = std::min(m[i], need);
    d[i] = t;
    need -= t;
  }
  return d;
}

}  // namespace

int evaluate_poly(const FiniteRing& ring, const Poly& p,
                  const std::vector<int>& variable_elements) {
  const int zero = ring.zero();
  const int one = ring.one();
  int acc = zero;
  for (const auto& [exps, coeff] : p.terms) {
    int term = one;
    for (std::size_t v = 0; v < exps.size(); ++v)
      for (int e = 0; e < exps[v]; ++e)
        term = ring.mul(term, variable_elements[v]);
    // coeff * term by repeated doubling
    long long c = coeff % static_cast<long long>(ring.order());
    if (c < 0) c += ring.order();
    int scaled = zero;
    int base = term;
    while (c > 0) {
      if (c & 1) scaled = ring.add(scaled, base);
      base = ring.add(base, base);
      c >>= 1;
    }
    acc = ring.add(acc, scaled);
  }
  return acc;
}

RingPtr make_quotient(const QuotientPresentation& pres,
                      const ConstructOptions& opt) {
  const int N = pres.modulus;
  if (N < 2) throw InvalidPresentationError("quotient modulus must be >= 2");
  // the final order is capped separately; this bounds the linear algebra
  if (N > 1000000)
    throw SizeLimitError("quotient coefficient modulus exceeds 1000000");
  const int nvars = static_cast<int>(pres.variables.size());
  if (nvars < 1) throw InvalidPresentationError("quotient needs variables");
  if (pres.generators.empty())
    throw InvalidPresentationError("quotient needs generators");

  std::vector<Poly> gens = expand_ideal_power(pres.generators, pres.ideal_power);

  // reduce coefficients mod N; generators must survive
  for (auto& g : gens) {
    Poly r;
    for (const auto& [e, c] : g.terms) {
      std::int64_t v = c % N;
      if (v < 0) v += N;
      if (v != 0) r.terms[e] = v;
    }
    if (r.terms.empty())
      throw InvalidPresentationError("generator vanishes mod " +
                                     std::to_string(N));
    g = std::move(r);
  }

  int maxdeg = 0;
  for (const auto& g : gens) maxdeg = std::max(maxdeg, g.total_degree());
  int D = pres.degree_bound > 0 ? pres.degree_bound
                                : (opt.degree_bound > 0 ? opt.degree_bound
                                                        : 2 * maxdeg + 2);
  if (D < maxdeg)
    throw InvalidPresentationError(
        "degree bound below maximum generator degree");

  MonomialIndex mx;
  mx.monomials = enumerate_monomials(nvars, D);
  const int M = static_cast<int>(mx.monomials.size());
  if (M > 100000)
    throw SizeLimitError("monomial basis too large at this degree bound");
  for (int i = 0; i < M; ++i) mx.position[mx.monomials[i]] = i;

  // relation module: every shift g*m with deg(g*m) <= D
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& g : gens) {
    const int gd = g.total_degree();
    for (const auto& m : mx.monomials) {
      if (vec_degree(m) + gd > D) continue;
      std::vector<std::int64_t> row(M, 0);
      for (const auto& [e, c] : g.terms) {
        Expvec prod(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) prod[i] = e[i] + m[i];
        row[mx.at(prod)] = (row[mx.at(prod)] + c) % N;
      }
      rows.push_back(std::move(row));
    }
  }

  HowellForm H = howell_form(std::move(rows), M, N);

  // finiteness witness: every degree-D monomial reduces below degree D
  std::vector<Spoly> degree_rules;  // rewrite for each degree-D monomial
  std::map<Expvec, int> rule_index;
  for (int i = 0; i < M; ++i) {
    if (vec_degree(mx.monomials[i]) != D) continue;
    std::vector<std::int64_t> unit(M, 0);
    unit[i] = 1;
    auto r = H.reduce(std::move(unit));
    for (int j = 0; j < M; ++j)
      if (r[j] != 0 && vec_degree(mx.monomials[j]) >= D)
        throw QuotientNotFiniteError(
            "quotient not finite at this degree bound (D=" + std::to_string(D) +
            "); raise the degree bound if a finite ring is expected");
    rule_index[mx.monomials[i]] = static_cast<int>(degree_rules.size());
    degree_rules.push_back(to_sparse(r, mx));
  }

  // canonical digit ranges per column; degree-D columns are forced to zero
  std::vector<std::int64_t> range(M);
  long long order = 1;
  for (int i = 0; i < M; ++i) {
    range[i] = H.digit_range(i);
    order *= range[i];
    if (order > opt.max_order)
      throw SizeLimitError("quotient order exceeds max order " +
                           std::to_string(opt.max_order));
  }
  const int n = static_cast<int>(order);
  if (n < 2) throw InvalidPresentationError("ideal contains 1 (trivial ring)");

  // element <-> canonical vector, odometer with the constant monomial fastest
  auto decode = [&](int idx) {
    std::vector<std::int64_t> v(M, 0);
    for (int i = M - 1; i >= 0; --i) {
      if (range[i] == 1) continue;
      v[i] = idx % range[i];
      idx = static_cast<int>(idx / range[i]);
    }
    return v;
  };
  auto encode = [&](const std::vector<std::int64_t>& v) {
    long long idx = 0;
    for (int i = 0; i < M; ++i) {
      if (range[i] == 1) continue;
      idx = idx * range[i] + v[i];
    }
    return static_cast<int>(idx);
  };

  // reduce an arbitrary sparse product back into the canonical vector space
  auto normalize = [&](Spoly work) {
    while (true) {
      // largest monomial of degree > D, if any
      auto it = std::find_if(work.begin(), work.end(), [&](const auto& kv) {
        return vec_degree(kv.first) > D;
      });
      if (it == work.end()) break;
      // rewrite the graded-largest such monomial first
      for (auto jt = work.begin(); jt != work.end(); ++jt)
        if (vec_degree(jt->first) > D &&
            monomial_greater(jt->first, it->first))
          it = jt;
      Expvec m = it->first;
      std::int64_t c = it->second;
      work.erase(it);
      Expvec d = take_divisor(m, D);
      Expvec rest(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) rest[i] = m[i] - d[i];
      const Spoly& rule = degree_rules[rule_index.at(d)];
      for (const auto& [re, rc] : rule) {
        Expvec e(re.size());
        for (std::size_t i = 0; i < re.size(); ++i) e[i] = re[i] + rest[i];
        auto& slot = work[e];
        slot = (slot + c * rc) % N;
        if (slot == 0) work.erase(e);
      }
    }
    std::vector<std::int64_t> vec(M, 0);
    for (const auto& [e, c] : work) vec[mx.at(e)] = ((c % N) + N) % N;
    return H.reduce(std::move(vec));
  };

  // tables
  std::vector<int> add_table(static_cast<std::size_t>(n) * n);
  std::vector<int> mul_table(static_cast<std::size_t>(n) * n);
  std::vector<std::vector<std::int64_t>> canon(n);
  for (int i = 0; i < n; ++i) canon[i] = decode(i);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<std::int64_t> sum(M);
      for (int i = 0; i < M; ++i) sum[i] = canon[a][i] + canon[b][i];
      add_table[static_cast<std::size_t>(a) * n + b] =
          encode(H.reduce(std::move(sum)));
      Spoly prod;
      for (int i = 0; i < M; ++i) {
        if (canon[a][i] == 0) continue;
        for (int j = 0; j < M; ++j) {
          if (canon[b][j] == 0) continue;
          Expvec e(nvars);
          for (int v = 0; v < nvars; ++v)
            e[v] = mx.monomials[i][v] + mx.monomials[j][v];
          auto& slot = prod[e];
          slot = (slot + canon[a][i] * canon[b][j]) % N;
          if (slot == 0) prod.erase(e);
        }
      }
      mul_table[static_cast<std::size_t>(a) * n + b] =
          encode(normalize(std::move(prod)));
    }
  }

  // labels from canonical vectors
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    Poly lp;
    for (int j = 0; j < M; ++j)
      if (canon[i][j] != 0) lp.terms[mx.monomials[j]] = canon[i][j];
    labels[i] = format_poly_compact(lp, pres.variables);
  }

  RingExpr pexpr;
  pexpr.node = RingExpr::Quotient{N, pres.variables, pres.generators,
                                  pres.ideal_power};
  auto ring = std::make_shared<FiniteRing>(
      FiniteRing::TableTag{}, n, std::move(add_table), std::move(mul_table),
      std::move(labels), std::move(pexpr), 0, encode(H.reduce([&] {
        std::vector<std::int64_t> e1(M, 0);
        e1[mx.at(Expvec(nvars, 0))] = 1;
        return e1;
      }())));

  if (ring->zero() == ring->one())
    throw InvalidPresentationError("ideal contains 1 (trivial ring)");

  // certification: ring axioms plus generator vanishing
  AxiomReport rep =
      verify_ring_axioms(*ring, ring->order() <= 512 ? AxiomMode::Exhaustive
                                                     : AxiomMode::Sampled);
  if (!rep.ok)
    throw InvalidPresentationError("quotient failed axiom verification: " +
                                   rep.describe());

  auto qd = std::make_shared<QuotientData>();
  qd->modulus = N;
  qd->variables = pres.variables;
  qd->expanded_generators = gens;
  qd->degree_bound = D;
  for (int v = 0; v < nvars; ++v) {
    std::vector<std::int64_t> ev(M, 0);
    Expvec e(nvars, 0);
    e[v] = 1;
    ev[mx.at(e)] = 1;
    qd->variable_elements.push_back(encode(H.reduce(std::move(ev))));
  }
  for (const auto& g : gens)
    if (evaluate_poly(*ring, g, qd->variable_elements) != ring->zero())
      throw InvalidPresentationError(
          "generator does not vanish in the constructed quotient");
  ring->attach_quotient_data(std::move(qd));
  return ring;
}

}  // namespace czdg
