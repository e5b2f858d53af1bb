#include "czdg/ring.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include "czdg/errors.hpp"
#include "czdg/quotient.hpp"

namespace czdg {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(int n, int* p_out, int* k_out) {
  if (n < 2) return false;
  int p = 0;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = n;  // n itself prime
  int k = 0, m = n;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) return false;
  if (p_out) *p_out = p;
  if (k_out) *k_out = k;
  return true;
}

FiniteRing::FiniteRing(ModularTag, int n, RingExpr pres)
    : backend_(Backend::Modular), n_(n), zero_(0), one_(1),
      presentation_(std::move(pres)) {
  presentation_text_ = format_ring_expr(presentation_);
  labels_.resize(n);
  for (int i = 0; i < n; ++i) labels_[i] = std::to_string(i);
}

FiniteRing::FiniteRing(TableTag, int n, std::vector<int> add,
                       std::vector<int> mul, std::vector<std::string> labels,
                       RingExpr pres, int zero, int one)
    : backend_(Backend::Table), n_(n), zero_(zero), one_(one),
      add_(std::move(add)), mul_(std::move(mul)), labels_(std::move(labels)),
      presentation_(std::move(pres)) {
  presentation_text_ = format_ring_expr(presentation_);
}

FiniteRing::FiniteRing(ProductTag, std::vector<RingPtr> factors, RingExpr pres)
    : backend_(Backend::Product), factors_(std::move(factors)),
      presentation_(std::move(pres)) {
  presentation_text_ = format_ring_expr(presentation_);
  n_ = 1;
  for (const auto& f : factors_) n_ *= f->order();
  strides_.assign(factors_.size(), 1);
  for (int i = static_cast<int>(factors_.size()) - 2; i >= 0; --i)
    strides_[i] = strides_[i + 1] * factors_[i + 1]->order();
  zero_ = 0;
  one_ = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    one_ += factors_[i]->one() * strides_[i];
  labels_.resize(n_);
  std::vector<int> digit(factors_.size());
  for (int idx = 0; idx < n_; ++idx) {
    int rest = idx;
    std::string lab = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      digit[i] = rest / strides_[i];
      rest %= strides_[i];
      if (i) lab += ",";
      lab += factors_[i]->label(digit[i]);
    }
    lab += ")";
    labels_[idx] = std::move(lab);
  }
}

int FiniteRing::combine(int a, int b, bool multiply) const {
  int out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int s = strides_[i];
    const int da = a / s, db = b / s;
    a %= s;
    b %= s;
    out += (multiply ? factors_[i]->mul(da, db) : factors_[i]->add(da, db)) * s;
  }
  return out;
}

RingPtr make_cyclic(int n, const ConstructOptions& opt) {
  if (n < 2) throw InvalidOrderError("cyclic ring needs order >= 2");
  if (n > opt.max_cyclic_order)
    throw SizeLimitError("cyclic ring order exceeds limit " +
                         std::to_string(opt.max_cyclic_order));
  RingExpr e;
  e.node = RingExpr::Cyclic{n};
  return std::make_shared<FiniteRing>(FiniteRing::ModularTag{}, n, std::move(e));
}

namespace {

// dense little-endian coefficient vectors over Z_p
using Pol = std::vector<int>;

Pol pol_trim(Pol a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Pol pol_mod(Pol a, const Pol& m, int p) {
  // m monic
  while (a.size() >= m.size() && !pol_trim(a).empty()) {
    a = pol_trim(std::move(a));
    if (a.size() < m.size()) break;
    int c = a.back();
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      int& t = a[shift + i];
      t = ((t - c * m[i]) % p + p) % p;
    }
    a = pol_trim(std::move(a));
  }
  return a;
}

Pol pol_mul(const Pol& a, const Pol& b, int p) {
  if (a.empty() || b.empty()) return {};
  Pol out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return pol_trim(std::move(out));
}

bool divides(const Pol& q, const Pol& f, int p) {
  return pol_mod(f, q, p).empty();
}

// lexicographically smallest monic irreducible of degree k over Z_p:
// coefficient tuples (c_{k-1},...,c_0) in increasing numeric order, tested by
// absence of monic divisors of degree <= k/2
Pol find_irreducible(int p, int k) {
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (long long code = 0; code < total; ++code) {
    Pol f(k + 1, 0);
    f[k] = 1;
    long long rest = code;
    for (int i = k - 1; i >= 0; --i) {
      // the most significant digit of `code` is the top coefficient
      long long digit = rest;
      for (int j = 0; j < i; ++j) digit /= p;
      f[i] = static_cast<int>(digit % p);
      // keep rest intact; digit extraction above is positional
    }
    bool reducible = false;
    for (int d = 1; d <= k / 2 && !reducible; ++d) {
      long long qs = 1;
      for (int i = 0; i < d; ++i) qs *= p;
      for (long long qc = 0; qc < qs && !reducible; ++qc) {
        Pol q(d + 1, 0);
        q[d] = 1;
        long long r = qc;
        for (int i = 0; i < d; ++i) {
          q[i] = static_cast<int>(r % p);
          r /= p;
        }
        if (divides(q, f, p)) reducible = true;
      }
    }
    if (!reducible) return f;
  }
  throw InternalError("no irreducible polynomial found");
}

}  // namespace

RingPtr make_galois_field(int p, int k, const ConstructOptions& opt) {
  if (!is_prime(p)) throw InvalidPrimeError("GF characteristic must be prime");
  if (k < 1) throw InvalidOrderError("GF extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > opt.max_order)
      throw SizeLimitError("field order exceeds max order " +
                           std::to_string(opt.max_order));
  }
  const int n = static_cast<int>(q);
  RingExpr pres;
  pres.node = RingExpr::GaloisField{p, k};

  if (k == 1) {
    // prime field: plain modular tables under the GF presentation
    std::vector<int> add(static_cast<std::size_t>(n) * n),
        mul(static_cast<std::size_t>(n) * n);
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
      labels[a] = std::to_string(a);
      for (int b = 0; b < n; ++b) {
        add[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
        mul[static_cast<std::size_t>(a) * n + b] = (a * b) % n;
      }
    }
    return std::make_shared<FiniteRing>(FiniteRing::TableTag{}, n,
                                        std::move(add), std::move(mul),
                                        std::move(labels), std::move(pres), 0, 1);
  }

  Pol irr = find_irreducible(p, k);
  auto decode = [&](int idx) {
    Pol a(k, 0);
    for (int i = 0; i < k; ++i) {
      a[i] = idx % p;
      idx /= p;
    }
    return pol_trim(std::move(a));
  };
  auto encode = [&](const Pol& a) {
    int idx = 0, w = 1;
    for (int i = 0; i < k; ++i) {
      idx += (i < static_cast<int>(a.size()) ? a[i] : 0) * w;
      w *= p;
    }
    return idx;
  };

  std::vector<int> add(static_cast<std::size_t>(n) * n),
      mul(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  const std::vector<std::string> varname = {"x"};
  for (int a = 0; a < n; ++a) {
    Pol pa = decode(a);
    Poly lp;
    for (std::size_t i = 0; i < pa.size(); ++i)
      if (pa[i]) lp.terms[{static_cast<int>(i)}] = pa[i];
    labels[a] = format_poly_compact(lp, varname);
    for (int b = 0; b < n; ++b) {
      Pol pb = decode(b);
      Pol sum(k, 0);
      for (int i = 0; i < k; ++i)
        sum[i] = ((i < static_cast<int>(pa.size()) ? pa[i] : 0) +
                  (i < static_cast<int>(pb.size()) ? pb[i] : 0)) %
                 p;
      add[static_cast<std::size_t>(a) * n + b] = encode(pol_trim(sum));
      mul[static_cast<std::size_t>(a) * n + b] =
          encode(pol_mod(pol_mul(pa, pb, p), irr, p));
    }
  }
  return std::make_shared<FiniteRing>(FiniteRing::TableTag{}, n, std::move(add),
                                      std::move(mul), std::move(labels),
                                      std::move(pres), 0, 1);
}

namespace {

RingPtr make_product_vec(std::vector<RingPtr> factors, RingExpr pres,
                         const ConstructOptions& opt) {
  long long order = 1;
  for (const auto& f : factors) {
    order *= f->order();
    if (order > opt.max_order)
      throw SizeLimitError("product order exceeds max order " +
                           std::to_string(opt.max_order));
  }
  return std::make_shared<FiniteRing>(FiniteRing::ProductTag{},
                                      std::move(factors), std::move(pres));
}

}  // namespace

RingPtr make_product(const RingPtr& lhs, const RingPtr& rhs,
                     const ConstructOptions& opt) {
  // flatten so (A x B) x C and A x B x C share the index encoding and labels
  std::vector<RingPtr> factors;
  for (const auto& r : {lhs, rhs}) {
    if (r->is_product())
      factors.insert(factors.end(), r->factors().begin(), r->factors().end());
    else
      factors.push_back(r);
  }
  std::vector<RingExpr> fexprs;
  for (const auto& f : factors) fexprs.push_back(f->presentation());
  RingExpr pres;
  pres.node = RingExpr::Product{std::move(fexprs)};
  return make_product_vec(std::move(factors), std::move(pres), opt);
}

RingPtr make_table_ring(std::vector<int> add, std::vector<int> mul,
                        std::vector<std::string> labels, RingExpr pres) {
  const int n = static_cast<int>(labels.size());
  if (n < 2 || add.size() != static_cast<std::size_t>(n) * n ||
      mul.size() != static_cast<std::size_t>(n) * n)
    throw InvalidPresentationError("table ring: inconsistent sizes");
  for (int v : add)
    if (v < 0 || v >= n) throw InvalidPresentationError("table ring: add out of range");
  for (int v : mul)
    if (v < 0 || v >= n) throw InvalidPresentationError("table ring: mul out of range");
  // locate identities
  int zero = -1, one = -1;
  for (int z = 0; z < n && zero < 0; ++z) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      if (add[static_cast<std::size_t>(z) * n + a] != a) ok = false;
    if (ok) zero = z;
  }
  for (int o = 0; o < n && one < 0; ++o) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      if (mul[static_cast<std::size_t>(o) * n + a] != a) ok = false;
    if (ok) one = o;
  }
  if (zero < 0 || one < 0)
    throw InvalidPresentationError("table ring: missing identity");
  if (zero == one)
    throw InvalidPresentationError("table ring: 1 = 0");
  return std::make_shared<FiniteRing>(FiniteRing::TableTag{}, n, std::move(add),
                                      std::move(mul), std::move(labels),
                                      std::move(pres), zero, one);
}

RingPtr construct_ring(const RingExpr& e, const ConstructOptions& opt) {
  struct Visitor {
    const ConstructOptions& opt;
    RingPtr operator()(const RingExpr::Cyclic& c) const {
      return make_cyclic(c.n, opt);
    }
    RingPtr operator()(const RingExpr::GaloisField& f) const {
      return make_galois_field(f.p, f.k, opt);
    }
    RingPtr operator()(const RingExpr::Quotient& q) const {
      QuotientPresentation pres;
      pres.modulus = q.modulus;
      pres.variables = q.variables;
      pres.generators = q.generators;
      pres.ideal_power = q.ideal_power;
      pres.degree_bound = opt.degree_bound;
      return make_quotient(pres, opt);
    }
    RingPtr operator()(const RingExpr::Product& p) const {
      std::vector<RingPtr> factors;
      for (const auto& f : p.factors) factors.push_back(construct_ring(f, opt));
      RingPtr acc = factors[0];
      for (std::size_t i = 1; i < factors.size(); ++i)
        acc = make_product(acc, factors[i], opt);
      return acc;
    }
  };
  return std::visit(Visitor{opt}, e.node);
}

ElementSet units(const RingPtr& r) {
  const int n = r->order();
  ElementSet out{r, Bitset(n)};
  const int one = r->one();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (r->mul(a, b) == one) {
        out.members.set(a);
        break;
      }
  return out;
}

ElementSet zero_divisors(const RingPtr& r) {
  const int n = r->order();
  ElementSet out{r, Bitset(n)};
  const int zero = r->zero();
  out.members.set(zero);
  for (int a = 0; a < n; ++a) {
    if (a == zero) continue;
    for (int b = 0; b < n; ++b)
      if (b != zero && r->mul(a, b) == zero) {
        out.members.set(a);
        break;
      }
  }
  return out;
}

ElementSet nonzero_zero_divisors(const RingPtr& r) {
  ElementSet out = zero_divisors(r);
  out.members.reset(r->zero());
  return out;
}

ElementSet annihilator(const RingPtr& r, int x) {
  const int n = r->order();
  ElementSet out{r, Bitset(n)};
  const int zero = r->zero();
  for (int y = 0; y < n; ++y)
    if (r->mul(x, y) == zero) out.members.set(y);
  return out;
}

namespace {

Bitset unit_bits(const FiniteRing& r) {
  const int n = r.order();
  Bitset u(n);
  const int one = r.one();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (r.mul(a, b) == one) {
        u.set(a);
        break;
      }
  return u;
}

}  // namespace

bool is_field(const FiniteRing& r) {
  return unit_bits(r).count() == r.order() - 1;
}

bool is_integral_domain(const FiniteRing& r) {
  const int n = r.order();
  const int zero = r.zero();
  for (int a = 0; a < n; ++a) {
    if (a == zero) continue;
    for (int b = 0; b < n; ++b)
      if (b != zero && r.mul(a, b) == zero) return false;
  }
  return true;
}

bool is_reduced(const FiniteRing& r) {
  const int n = r.order();
  const int zero = r.zero();
  for (int a = 0; a < n; ++a) {
    if (a == zero) continue;
    // a nilpotent iff a^(2^t) = 0 for 2^t >= n
    int b = a;
    for (int t = 0; (1 << t) < 2 * n; ++t) {
      b = r.mul(b, b);
      if (b == zero) return false;
      if (b == a) break;  // periodic, never reaches zero
    }
  }
  return true;
}

bool is_boolean(const FiniteRing& r) {
  for (int a = 0; a < r.order(); ++a)
    if (r.mul(a, a) != a) return false;
  return true;
}

bool is_local(const FiniteRing& r) {
  Bitset u = unit_bits(r);
  const int n = r.order();
  std::vector<int> nonunits;
  for (int a = 0; a < n; ++a)
    if (!u.test(a)) nonunits.push_back(a);
  for (std::size_t i = 0; i < nonunits.size(); ++i)
    for (std::size_t j = i; j < nonunits.size(); ++j)
      if (u.test(r.add(nonunits[i], nonunits[j]))) return false;
  return true;
}

std::string AxiomReport::describe() const {
  if (ok)
    return std::string("pass (") +
           (mode == AxiomMode::Exhaustive ? "exhaustive" : "sampled") + ", " +
           std::to_string(checks) + " checks)";
  return "FAIL " + violated_law + " at (" + std::to_string(witness[0]) + "," +
         std::to_string(witness[1]) + "," + std::to_string(witness[2]) + ")";
}

namespace {

template <class AddF, class MulF>
AxiomReport run_axioms(int n, int zero, int one, AddF add, MulF mul,
                       AxiomMode mode, std::uint64_t samples,
                       std::uint64_t seed) {
  AxiomReport rep;
  rep.mode = mode;
  auto fail = [&](const char* law, int a, int b, int c) {
    rep.ok = false;
    rep.violated_law = law;
    rep.witness = {a, b, c};
  };
  if (zero == one) {
    fail("unity-distinct (1 = 0)", zero, one, 0);
    return rep;
  }
  auto check_triple = [&](int a, int b, int c) -> bool {
    ++rep.checks;
    if (add(add(a, b), c) != add(a, add(b, c))) {
      fail("add-associativity", a, b, c);
      return false;
    }
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      fail("mul-associativity", a, b, c);
      return false;
    }
    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
      fail("distributivity", a, b, c);
      return false;
    }
    return true;
  };
  auto check_pair = [&](int a, int b) -> bool {
    ++rep.checks;
    if (add(a, b) != add(b, a)) {
      fail("add-commutativity", a, b, 0);
      return false;
    }
    if (mul(a, b) != mul(b, a)) {
      fail("mul-commutativity", a, b, 0);
      return false;
    }
    return true;
  };
  auto check_element = [&](int a) -> bool {
    ++rep.checks;
    if (add(zero, a) != a) {
      fail("additive-identity", a, 0, 0);
      return false;
    }
    if (mul(one, a) != a) {
      fail("multiplicative-identity", a, 0, 0);
      return false;
    }
    bool has_inverse = false;
    for (int b = 0; b < n; ++b)
      if (add(a, b) == zero) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) {
      fail("additive-inverse", a, 0, 0);
      return false;
    }
    return true;
  };

  if (mode == AxiomMode::Exhaustive) {
    for (int a = 0; a < n; ++a)
      if (!check_element(a)) return rep;
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        if (!check_pair(a, b)) return rep;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!check_triple(a, b, c)) return rep;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (std::uint64_t i = 0; i < samples; ++i) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (!check_element(a)) return rep;
      if (!check_pair(a, b)) return rep;
      if (!check_triple(a, b, c)) return rep;
    }
  }
  return rep;
}

}  // namespace

AxiomReport verify_ring_axioms(const FiniteRing& r, AxiomMode mode,
                               std::uint64_t sample_count, std::uint64_t seed) {
  auto add = [&r](int a, int b) { return r.add(a, b); };
  auto mul = [&r](int a, int b) { return r.mul(a, b); };
  return run_axioms(r.order(), r.zero(), r.one(), add, mul, mode, sample_count,
                    seed);
}

}  // namespace czdg
