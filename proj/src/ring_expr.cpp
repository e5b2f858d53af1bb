#include "czdg/ring_expr.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace czdg {

int Poly::total_degree() const {
  int deg = 0;
  for (const auto& [exps, c] : terms)
    deg = std::max(deg, std::accumulate(exps.begin(), exps.end(), 0));
  return deg;
}

Poly Poly::constant(long long c, int nvars) {
  Poly p;
  if (c != 0) p.terms[std::vector<int>(nvars, 0)] = c;
  return p;
}

Poly Poly::variable(int index, int nvars) {
  Poly p;
  std::vector<int> e(nvars, 0);
  e[index] = 1;
  p.terms[e] = 1;
  return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [e, c] : b.terms) {
    auto it = out.terms.find(e);
    if (it == out.terms.end()) {
      out.terms[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.terms[e] += ca * cb;
    }
  std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool monomial_greater(const std::vector<int>& a, const std::vector<int>& b) {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;  // leftmost variable dominant
}

bool RingExpr::Product::operator==(const Product& o) const {
  return factors == o.factors;
}

bool RingExpr::operator==(const RingExpr& o) const { return node == o.node; }

namespace {

std::string monomial_str(const std::vector<int>& exps,
                         const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    out += vars[i];
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out;
}

std::string format_poly_impl(const Poly& p, const std::vector<std::string>& vars,
                             bool spaced) {
  if (p.terms.empty()) return "0";
  std::vector<const std::pair<const std::vector<int>, long long>*> ts;
  for (const auto& t : p.terms) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](const auto* a, const auto* b) {
    return monomial_greater(a->first, b->first);
  });
  std::string out;
  bool first = true;
  for (const auto* t : ts) {
    long long c = t->second;
    std::string mono = monomial_str(t->first, vars);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      if (spaced)
        out += (c < 0) ? " - " : " + ";
      else
        out += (c < 0) ? "-" : "+";
    }
    long long mag = std::llabs(c);
    if (mono.empty())
      out += std::to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += std::to_string(mag) + mono;
  }
  return out;
}

}  // namespace

std::string format_poly(const Poly& p, const std::vector<std::string>& vars) {
  return format_poly_impl(p, vars, /*spaced=*/true);
}

std::string format_poly_compact(const Poly& p,
                                const std::vector<std::string>& vars) {
  return format_poly_impl(p, vars, /*spaced=*/false);
}

std::string format_ring_expr(const RingExpr& e) {
  struct Visitor {
    std::string operator()(const RingExpr::Cyclic& c) const {
      return "Z" + std::to_string(c.n);
    }
    std::string operator()(const RingExpr::GaloisField& f) const {
      if (f.k == 1) return "GF(" + std::to_string(f.p) + ",1)";
      long long q = 1;
      for (int i = 0; i < f.k; ++i) q *= f.p;
      return "F" + std::to_string(q);
    }
    std::string operator()(const RingExpr::Quotient& q) const {
      std::string out = "Z" + std::to_string(q.modulus) + "[";
      for (std::size_t i = 0; i < q.variables.size(); ++i) {
        if (i) out += ",";
        out += q.variables[i];
      }
      out += "]/(";
      for (std::size_t i = 0; i < q.generators.size(); ++i) {
        if (i) out += ", ";
        out += format_poly(q.generators[i], q.variables);
      }
      out += ")";
      if (q.ideal_power >= 2) out += "^" + std::to_string(q.ideal_power);
      return out;
    }
    std::string operator()(const RingExpr::Product& p) const {
      std::string out;
      for (std::size_t i = 0; i < p.factors.size(); ++i) {
        if (i) out += " x ";
        const bool nested =
            std::holds_alternative<RingExpr::Product>(p.factors[i].node);
        if (nested) out += "(";
        out += format_ring_expr(p.factors[i]);
        if (nested) out += ")";
      }
      return out;
    }
  };
  return std::visit(Visitor{}, e.node);
}

std::vector<Poly> expand_ideal_power(const std::vector<Poly>& gens, int power) {
  if (power <= 1) return gens;
  std::vector<Poly> out;
  // multisets of size `power` over the generator list
  std::vector<int> pick(power, 0);
  const int k = static_cast<int>(gens.size());
  while (true) {
    Poly prod = gens[pick[0]];
    for (int i = 1; i < power; ++i) prod = poly_mul(prod, gens[pick[i]]);
    if (!prod.zero() &&
        std::find(out.begin(), out.end(), prod) == out.end())
      out.push_back(prod);
    // next non-decreasing index vector
    int i = power - 1;
    while (i >= 0 && pick[i] == k - 1) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < power; ++j) pick[j] = pick[i];
  }
  return out;
}

}  // namespace czdg
