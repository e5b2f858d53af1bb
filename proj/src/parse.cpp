#include "czdg/parse.hpp"

#include <algorithm>
#include <cctype>

#include "czdg/errors.hpp"
#include "czdg/ring.hpp"

namespace czdg {

namespace {

constexpr long long kMaxInt = 1000000000;

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos);
  }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, at);
  }

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
  }

  bool at_times_sign() const {  // UTF-8 multiplication sign
    return pos + 1 < s.size() && static_cast<unsigned char>(s[pos]) == 0xC3 &&
           static_cast<unsigned char>(s[pos + 1]) == 0x97;
  }

  long long parse_int() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected integer");
    long long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > kMaxInt) fail("integer too large");
      ++pos;
    }
    return v;
  }

  RingExpr parse_ring() {
    RingExpr first = parse_atom();
    std::vector<RingExpr> factors;
    factors.push_back(std::move(first));
    while (true) {
      std::size_t save = pos;
      std::size_t ws_start = pos;
      skip_ws();
      bool had_ws = pos > ws_start;
      if (at_times_sign()) {
        pos += 2;
        skip_ws();
        factors.push_back(parse_atom());
        continue;
      }
      // product operator: whitespace-delimited bare "x"
      if (had_ws && peek() == 'x' &&
          (pos + 1 >= s.size() ||
           std::isspace(static_cast<unsigned char>(s[pos + 1])))) {
        ++pos;
        skip_ws();
        if (done()) fail("expected ring expression after product operator");
        factors.push_back(parse_atom());
        continue;
      }
      pos = save;
      break;
    }
    if (factors.size() == 1) return std::move(factors[0]);
    RingExpr e;
    e.node = RingExpr::Product{std::move(factors)};
    return e;
  }

  RingExpr parse_atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos;
      RingExpr inner = parse_ring();
      skip_ws();
      expect(')', "to close grouping");
      return inner;
    }
    if (c == 'Z') return parse_z();
    if (c == 'G') return parse_gf();
    if (c == 'F') return parse_f();
    fail("expected ring expression");
  }

  RingExpr parse_z() {
    ++pos;  // 'Z'
    std::size_t at = pos;
    long long n = parse_int();
    if (n < 2) fail_at("ring order must be >= 2", at);
    if (peek() != '[') {
      RingExpr e;
      e.node = RingExpr::Cyclic{static_cast<int>(n)};
      return e;
    }
    return parse_quotient(static_cast<int>(n));
  }

  RingExpr parse_gf() {
    if (s.compare(pos, 3, "GF(") != 0) fail("expected GF(p,k)");
    pos += 3;
    skip_ws();
    long long p = parse_int();
    skip_ws();
    expect(',', "in GF(p,k)");
    skip_ws();
    std::size_t at = pos;
    long long k = parse_int();
    if (k < 1) fail_at("field extension degree must be >= 1", at);
    skip_ws();
    expect(')', "to close GF(p,k)");
    RingExpr e;
    e.node = RingExpr::GaloisField{static_cast<int>(p), static_cast<int>(k)};
    return e;
  }

  RingExpr parse_f() {
    ++pos;  // 'F'
    std::size_t at = pos;
    long long q = parse_int();
    int p = 0, k = 0;
    if (q < 2 || !is_prime_power(static_cast<int>(q), &p, &k))
      fail_at("F takes a prime power", at);
    RingExpr e;
    if (k == 1)
      e.node = RingExpr::Cyclic{p};
    else
      e.node = RingExpr::GaloisField{p, k};
    return e;
  }

  RingExpr parse_quotient(int modulus) {
    expect('[', "to open variable list");
    std::vector<std::string> vars;
    while (true) {
      skip_ws();
      char v = peek();
      if (!std::isalpha(static_cast<unsigned char>(v)))
        fail("expected a single-letter variable");
      std::string name(1, v);
      if (std::find(vars.begin(), vars.end(), name) != vars.end())
        fail("duplicate variable");
      vars.push_back(name);
      ++pos;
      skip_ws();
      if (eat(',')) continue;
      expect(']', "to close variable list");
      break;
    }
    if (vars.size() > 6) fail("too many variables (max 6)");
    skip_ws();
    expect('/', "after variable list");
    skip_ws();
    expect('(', "to open generator list");
    std::vector<Poly> gens;
    while (true) {
      gens.push_back(parse_poly(vars));
      skip_ws();
      if (eat(',')) continue;
      expect(')', "to close generator list");
      break;
    }
    int power = 1;
    std::size_t save = pos;
    skip_ws();
    if (eat('^')) {
      skip_ws();
      std::size_t at = pos;
      long long m = parse_int();
      if (m < 1) fail_at("ideal power must be >= 1", at);
      if (m > 8) fail_at("ideal power too large (max 8)", at);
      power = static_cast<int>(m);
    } else {
      pos = save;
    }
    RingExpr e;
    e.node = RingExpr::Quotient{modulus, std::move(vars), std::move(gens),
                                power};
    return e;
  }

  Poly parse_poly(const std::vector<std::string>& vars) {
    skip_ws();
    const std::size_t start = pos;
    Poly p;
    long long sign = 1;
    if (eat('-'))
      sign = -1;
    else
      eat('+');
    while (true) {
      skip_ws();
      // term := [int] monomial?  (juxtaposed, at least one part present)
      long long coeff = 1;
      bool have_digits = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = parse_int();
        have_digits = true;
      }
      std::vector<int> exps(vars.size(), 0);
      bool have_vars = false;
      while (std::isalpha(static_cast<unsigned char>(peek()))) {
        std::string name(1, peek());
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) fail("unknown variable");
        ++pos;
        long long e = 1;
        if (eat('^')) {
          std::size_t at = pos;
          e = parse_int();
          if (e < 1) fail_at("exponent must be >= 1", at);
          if (e > 64) fail_at("exponent too large", at);
        }
        exps[it - vars.begin()] += static_cast<int>(e);
        have_vars = true;
      }
      if (!have_digits && !have_vars) fail("expected polynomial term");
      auto [it, inserted] = p.terms.try_emplace(exps, 0);
      it->second += sign * coeff;
      if (it->second == 0) p.terms.erase(it);
      skip_ws();
      if (eat('+')) {
        sign = 1;
        continue;
      }
      if (eat('-')) {
        sign = -1;
        continue;
      }
      break;
    }
    if (p.terms.empty()) fail_at("zero polynomial", start);
    return p;
  }
};

}  // namespace

RingExpr parse_ring_expr(const std::string& text) {
  Parser p{text};
  p.skip_ws();
  if (p.done()) p.fail("empty input");
  RingExpr e = p.parse_ring();
  p.skip_ws();
  if (!p.done()) p.fail("unexpected trailing input");
  return e;
}

}  // namespace czdg
