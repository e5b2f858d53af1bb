#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "czdg/bitset.hpp"
#include "czdg/ring_expr.hpp"

namespace czdg {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

struct ConstructOptions {
  int max_order = 4096;           // table-backed rings
  int max_cyclic_order = 100000;  // modular-backed Z_n, kept cheap for scans
  int degree_bound = 0;           // 0 = per-presentation default
};

// Carried by quotient rings so generator vanishing can be re-checked from the
// outside: the expanded generator list and the ring element of each variable.
struct QuotientData {
  int modulus = 0;
  std::vector<std::string> variables;
  std::vector<Poly> expanded_generators;
  std::vector<int> variable_elements;
  int degree_bound = 0;
};

// Finite commutative ring with unity on element indices 0..order-1.
// Immutable after construction; safe to share across threads.
class FiniteRing {
 public:
  int order() const { return n_; }
  int zero() const { return zero_; }
  int one() const { return one_; }

  int add(int a, int b) const {
    switch (backend_) {
      case Backend::Modular: {
        int s = a + b;
        return s >= n_ ? s - n_ : s;
      }
      case Backend::Table:
        return add_[static_cast<std::size_t>(a) * n_ + b];
      case Backend::Product:
        return combine(a, b, /*multiply=*/false);
    }
    return 0;
  }

  int mul(int a, int b) const {
    switch (backend_) {
      case Backend::Modular:
        return static_cast<int>(static_cast<std::int64_t>(a) * b % n_);
      case Backend::Table:
        return mul_[static_cast<std::size_t>(a) * n_ + b];
      case Backend::Product:
        return combine(a, b, /*multiply=*/true);
    }
    return 0;
  }

  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  const RingExpr& presentation() const { return presentation_; }
  const std::string& presentation_text() const { return presentation_text_; }

  bool is_product() const { return backend_ == Backend::Product; }
  const std::vector<RingPtr>& factors() const { return factors_; }

  // Set for quotient rings only.
  const std::shared_ptr<const QuotientData>& quotient_data() const {
    return quotient_data_;
  }

  // Factories are free functions; see below.
  struct TableTag {};
  struct ModularTag {};
  struct ProductTag {};
  FiniteRing(ModularTag, int n, RingExpr pres);
  FiniteRing(TableTag, int n, std::vector<int> add, std::vector<int> mul,
             std::vector<std::string> labels, RingExpr pres, int zero, int one);
  FiniteRing(ProductTag, std::vector<RingPtr> factors, RingExpr pres);

  void attach_quotient_data(std::shared_ptr<const QuotientData> qd) {
    quotient_data_ = std::move(qd);
  }

 private:
  enum class Backend { Modular, Table, Product };

  int combine(int a, int b, bool multiply) const;

  Backend backend_ = Backend::Modular;
  int n_ = 0;
  int zero_ = 0, one_ = 1;
  std::vector<int> add_, mul_;       // Table
  std::vector<RingPtr> factors_;     // Product
  std::vector<int> strides_;         // Product
  std::vector<std::string> labels_;
  RingExpr presentation_;
  std::string presentation_text_;
  std::shared_ptr<const QuotientData> quotient_data_;
};

RingPtr make_cyclic(int n, const ConstructOptions& opt = {});
RingPtr make_galois_field(int p, int k, const ConstructOptions& opt = {});
RingPtr make_product(const RingPtr& lhs, const RingPtr& rhs,
                     const ConstructOptions& opt = {});
// Validates that zero/one behave as identities; full axiom checking is the
// caller's business (verify_ring_axioms).
RingPtr make_table_ring(std::vector<int> add, std::vector<int> mul,
                        std::vector<std::string> labels, RingExpr pres);
// Builds any parsed expression (delegates to make_quotient for quotients).
RingPtr construct_ring(const RingExpr& e, const ConstructOptions& opt = {});

struct ElementSet {
  RingPtr ring;
  Bitset members;

  int count() const { return members.count(); }
  bool contains(int i) const { return members.test(i); }
  std::vector<int> indices() const { return members.indices(); }
};

ElementSet units(const RingPtr& r);
ElementSet zero_divisors(const RingPtr& r);          // Z(R), includes 0
ElementSet nonzero_zero_divisors(const RingPtr& r);  // Z*(R)
ElementSet annihilator(const RingPtr& r, int x);     // {y : xy = 0}

bool is_field(const FiniteRing& r);
bool is_integral_domain(const FiniteRing& r);
bool is_reduced(const FiniteRing& r);
bool is_boolean(const FiniteRing& r);
bool is_local(const FiniteRing& r);  // non-units closed under addition

enum class AxiomMode { Exhaustive, Sampled };

struct AxiomReport {
  bool ok = true;
  std::string violated_law;     // empty when ok
  std::array<int, 3> witness{}; // elements involved in the first violation
  std::uint64_t checks = 0;
  AxiomMode mode = AxiomMode::Exhaustive;
  std::string describe() const;
};

AxiomReport verify_ring_axioms(const FiniteRing& r, AxiomMode mode,
                               std::uint64_t sample_count = 4096,
                               std::uint64_t seed = 1);

bool is_prime(int n);
bool is_prime_power(int n, int* p = nullptr, int* k = nullptr);

}  // namespace czdg
