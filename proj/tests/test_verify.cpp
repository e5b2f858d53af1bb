#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "czdg/verify.hpp"

using namespace czdg;

namespace {

VerifyConfig small_config() {
  VerifyConfig cfg;
  cfg.zn_max = 60;
  cfg.field_product_cap = 25;
  cfg.primes_2p = {3, 5, 7};
  cfg.primes_psq = {2, 3, 5};
  return cfg;
}

bool has_instance(const ClaimReport& rep, const std::string& ring_substr,
                  Verdict v) {
  return std::any_of(rep.instances.begin(), rep.instances.end(),
                     [&](const ClaimInstance& i) {
                       return i.verdict == v &&
                              i.ring.find(ring_substr) != std::string::npos;
                     });
}

}  // namespace

TEST_CASE("claim suites pass on the small corpus") {
  VerifyConfig cfg = small_config();
  auto corpus = build_corpus(cfg);
  CHECK(corpus.size() > 60);

  ClaimReport p21 = check_prop_2_1(corpus);
  CHECK(p21.ok());
  CHECK(p21.passes() > 30);
  // the complete-graph equivalence misses Z2 x Z2, reported as an erratum
  CHECK(p21.errata() == 1);
  CHECK(has_instance(p21, "F2 x F2", Verdict::Erratum));

  ClaimReport p22 = check_prop_2_2(corpus);
  CHECK(p22.ok());
  // Z16 has Mdim 1 without a complete bipartite zero-divisor graph
  CHECK(has_instance(p22, "Z16", Verdict::Pass));
  bool converse_note = std::any_of(
      p22.instances.begin(), p22.instances.end(), [](const ClaimInstance& i) {
        return i.ring == "Z16" && i.note.find("converse") != std::string::npos;
      });
  CHECK(converse_note);

  CHECK(check_thm_3_1(corpus).ok());
  CHECK(check_prop_3_1(cfg).ok());

  ClaimReport p32 = check_prop_3_2(cfg);
  CHECK(p32.ok());
  CHECK(p32.errata() == 4);
  CHECK(has_instance(p32, "Z8[x]/(2x, x^2 - 2)", Verdict::Erratum));
  CHECK(has_instance(p32, "Z4[x]/(x^2 - 2x)", Verdict::Erratum));
  CHECK(has_instance(p32, "Z2[x,y]/(x^3, xy, x^2)", Verdict::Erratum));
  CHECK(has_instance(p32, "Z16", Verdict::Erratum));
  CHECK(has_instance(p32, "F4[x]/(x^2)", Verdict::Pass));

  CHECK(check_prop_3_3(cfg).ok());
  ClaimReport figs = check_props_3_4_to_3_6(cfg);
  CHECK(figs.ok());
  CHECK(has_instance(figs, "Z[x,y]/(x^3, xy)", Verdict::Erratum));

  CHECK(check_thm_4_1_and_cor_4_1(corpus, cfg).ok());
  CHECK(check_thm_4_2(corpus, cfg).ok());

  ClaimReport st = check_structural_properties(corpus);
  CHECK(st.ok());
  CHECK(has_instance(st, "(regularity)", Verdict::Erratum));
  // Z12 already realizes diameter 3
  CHECK(has_instance(st, "(diameter)", Verdict::Erratum));

  ClaimReport er = check_errata(cfg);
  CHECK(er.ok());
  CHECK(er.errata() == 3);
}

TEST_CASE("aggregate report") {
  VerifyConfig cfg = small_config();
  cfg.zn_max = 36;
  AggregateReport rep = run_suites("all", cfg);
  CHECK(rep.ok);
  CHECK(rep.suites.size() == 11);

  auto lines = rep.erratum_lines();
  CHECK(!lines.empty());
  bool z16_listed = std::any_of(lines.begin(), lines.end(), [](const auto& l) {
    return l.find("ann(14)") != std::string::npos;
  });
  CHECK(z16_listed);

  // deterministic rendering
  CHECK(rep.render_text() == rep.render_text());
  CHECK(rep.render_json() == rep.render_json());
  AggregateReport again = run_suites("all", cfg);
  CHECK(again.render_text() == rep.render_text());
  CHECK(again.render_json() == rep.render_json());

  // single-suite selection
  AggregateReport one = run_suites("3.3", cfg);
  CHECK(one.suites.size() == 1);
  CHECK(one.suites[0].claim_id == "Prop 3.3");
  CHECK_THROWS(run_suites("nope", cfg));
}

TEST_CASE("corpus exercises every dimension verdict") {
  VerifyConfig cfg = small_config();
  auto corpus = build_corpus(cfg);
  bool undefined = false, zero = false, one = false, large_or_inf = false;
  for (const auto& e : corpus) {
    const ExtValue& d = e.analysis.mdim.dim;
    if (d.kind == ExtValue::Kind::Undefined) undefined = true;
    if (d == ExtValue::finite(0)) zero = true;
    if (d == ExtValue::finite(1)) one = true;
    if (d.kind == ExtValue::Kind::Infinite ||
        (d.is_finite() && d.value >= 3))
      large_or_inf = true;
  }
  CHECK(undefined);
  CHECK(zero);
  CHECK(one);
  CHECK(large_or_inf);
}

TEST_CASE("failures flip the aggregate") {
  AggregateReport rep;
  ClaimReport r;
  r.claim_id = "synthetic";
  r.instances.push_back({"Zx", "a", "b", Verdict::Fail, ""});
  rep.suites.push_back(r);
  rep.ok = rep.suites[0].ok();
  CHECK(!rep.ok);
  CHECK(rep.render_text().find("FAIL") != std::string::npos);
}
