// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 8 drives the installed CLI binary, passed via --cli.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "czdg/catalog.hpp"
#include "czdg/czdg.hpp"
#include "czdg/errors.hpp"
#include "czdg/invariants.hpp"
#include "czdg/parse.hpp"
#include "czdg/quotient.hpp"
#include "czdg/ring.hpp"
#include "czdg/scan.hpp"
#include "czdg/verify.hpp"
#include "support/mdim_reference.hpp"

using namespace czdg;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void info(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

RingAnalysis analyze(const std::string& expr) {
  return analyze_ring(construct_ring(parse_ring_expr(expr)));
}

std::string ext_str(const ExtValue& v) { return v.str(); }

// ---- criterion bodies ----

void criterion_1(Check& c) {
  for (int n = 2; n <= 9; ++n)
    c.expect(multiset_dimension(path_graph(n)).dim == ExtValue::finite(1),
             "P_" + std::to_string(n));
  for (int n = 3; n <= 8; ++n)
    c.expect(multiset_dimension(complete_graph(n)).dim == ExtValue::infinite(),
             "K_" + std::to_string(n));
  for (int n = 6; n <= 9; ++n)
    c.expect(multiset_dimension(cycle_graph(n)).dim == ExtValue::finite(3),
             "C_" + std::to_string(n));
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 1}})
    c.expect(multiset_dimension(complete_bipartite_graph(m, n)).dim ==
                 ExtValue::finite(1),
             "K_{" + std::to_string(m) + "," + std::to_string(n) + "}");
  for (int n = 3; n <= 6; ++n)
    c.expect(multiset_dimension(star_graph(n)).dim == ExtValue::infinite(),
             "K_{1," + std::to_string(n) + "}");
  for (int m = 2; m <= 4; ++m)
    for (int n = m; n <= 4; ++n)
      c.expect(multiset_dimension(complete_bipartite_graph(m, n)).dim ==
                   ExtValue::infinite(),
               "K_{" + std::to_string(m) + "," + std::to_string(n) + "}");
}

void criterion_2(Check& c) {
  for (int p : {3, 5, 7, 11, 13})
    c.expect(analyze("Z" + std::to_string(2 * p)).mdim.dim ==
                 ExtValue::finite(1),
             "Z" + std::to_string(2 * p));
  for (int p : {2, 3, 5, 7, 11})
    c.expect(analyze("Z" + std::to_string(p * p)).mdim.dim ==
                 ExtValue::finite(0),
             "Z" + std::to_string(p * p));
}

void criterion_3(Check& c) {
  int errata_cases = 0;
  auto run_case = [&](const catalog::PresentationCase& pc) {
    RingAnalysis a = analyze(pc.expr);
    c.expect(a.ring->order() == pc.order,
             pc.expr + " order " + std::to_string(a.ring->order()));
    c.expect(verify_ring_axioms(*a.ring, AxiomMode::Exhaustive).ok,
             pc.expr + " axioms");
    c.expect(a.mdim.dim == pc.mdim, pc.expr + " Mdim " + ext_str(a.mdim.dim));
    if (!pc.claimed.empty()) ++errata_cases;
  };
  for (const auto& pc : catalog::order_p2_cases()) run_case(pc);
  for (const auto& list :
       {catalog::order_p3_mdim1(), catalog::order_p3_mdim0(),
        catalog::order_16_mdim0(), catalog::order_16_mdim1(),
        catalog::order_16_mdim_inf()})
    for (const auto& pc : list) run_case(pc);

  // erratum policy: the discrepancies are surfaced by the claim suite and
  // never flip it to failure
  VerifyConfig cfg;
  ClaimReport rep = check_prop_3_2(cfg);
  c.expect(rep.ok(), "Prop 3.2 suite reports failures");
  c.expect(rep.errata() == errata_cases + 2,
           "Prop 3.2 suite errata count " + std::to_string(rep.errata()));
  c.info("presentation errata surfaced: " + std::to_string(rep.errata()));
}

void criterion_4(Check& c) {
  {
    RingAnalysis a = analyze("Z16");
    c.expect(a.czdg && a.czdg->vertex_count() == 3, "Z16 vertices");
    c.expect(a.mdim.dim == ExtValue::finite(1), "Z16 Mdim");
  }
  std::string split;
  for (const auto& fc : catalog::four_vertex_rings()) {
    RingAnalysis a = analyze(fc.expr);
    c.expect(a.czdg && a.czdg->vertex_count() == 4, fc.expr + " vertices");
    bool member = a.mdim.dim == ExtValue::finite(1) ||
                  a.mdim.dim.kind == ExtValue::Kind::Infinite;
    c.expect(member, fc.expr + " Mdim " + ext_str(a.mdim.dim));
    split += (split.empty() ? "" : ", ") + fc.expr + "=" + ext_str(a.mdim.dim);
  }
  c.info("four-vertex split: " + split);
  for (const auto& fc : catalog::five_vertex_rings()) {
    RingAnalysis a = analyze(fc.expr);
    c.expect(a.czdg && a.czdg->vertex_count() == 5, fc.expr + " vertices");
    c.expect(a.mdim.dim.kind == ExtValue::Kind::Infinite,
             fc.expr + " Mdim " + ext_str(a.mdim.dim));
  }
}

void criterion_5(Check& c) {
  int regular_two = 0, max_diam = 0;
  for (int n = 4; n <= 200; ++n) {
    if (is_prime(n)) continue;
    RingAnalysis a = analyze("Z" + std::to_string(n));
    const std::string name = "Z" + std::to_string(n);
    c.expect(a.czdg.has_value(), name + " missing graph");
    if (!a.czdg) continue;
    const SimpleGraph& g = *a.czdg;
    c.expect(a.czdg_diameter.is_finite(), name + " disconnected");
    c.expect(a.czdg_girth.kind == ExtValue::Kind::Infinite ||
                 a.czdg_girth == ExtValue::finite(3),
             name + " girth " + ext_str(a.czdg_girth));
    c.expect(a.czdg_diameter.is_finite() && a.czdg_diameter.value <= 3,
             name + " diameter " + ext_str(a.czdg_diameter));
    if (a.czdg_diameter.is_finite())
      max_diam = std::max(max_diam, a.czdg_diameter.value);
    bool regular = true;
    for (int v = 1; v < g.vertex_count(); ++v)
      if (g.degree(v) != g.degree(0)) regular = false;
    if (regular && g.vertex_count() == 2) ++regular_two;
    // 1-regular two-vertex graphs (K_{1,1}) exist for every Z_2p; the
    // regularity bound is enforced from three vertices on (erratum policy)
    c.expect(!(regular && g.vertex_count() >= 3), name + " regular");
    c.expect((a.mdim.dim == ExtValue::finite(0)) ==
                 (a.czdg_diameter == ExtValue::finite(0)),
             name + " Mdim/diameter mismatch");
  }
  c.info("max diam(G_E) = " + std::to_string(max_diam) +
         ", two-vertex K_{1,1} instances erratum-exempted: " +
         std::to_string(regular_two));
}

void criterion_6(Check& c) {
  for (int q1 : {2, 3, 4, 5, 7, 8, 9})
    for (int q2 : {2, 3, 4, 5, 7, 8, 9}) {
      if (q2 < q1) continue;
      std::string expr =
          "F" + std::to_string(q1) + " x F" + std::to_string(q2);
      RingAnalysis a = analyze(expr);
      c.expect(a.mdim.dim == ExtValue::finite(1),
               expr + " Mdim " + ext_str(a.mdim.dim));
      c.expect(a.czdg_diameter == ExtValue::finite(1),
               expr + " diam " + ext_str(a.czdg_diameter));
    }
}

void criterion_7(Check& c) {
  // (a) order-independence of the subset search: the lexicographic
  // enumeration agrees with an independent increasing-bitmask sweep on every
  // labeled graph with up to 7 vertices
  long long mismatches = 0, graphs = 0;
  for (int n = 1; n <= 7; ++n) {
    const int pairs = n * (n - 1) / 2;
    const std::uint32_t total = 1u << pairs;
    czdg_test::ReferenceSolver ref;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      SimpleGraph g = czdg_test::graph_from_mask(n, mask);
      ++graphs;
      if (!(multiset_dimension(g).dim == ref.multiset_dim(g))) ++mismatches;
    }
  }
  c.expect(mismatches == 0,
           "dual-enumeration mismatches: " + std::to_string(mismatches));
  c.info(std::to_string(graphs) + " labeled graphs swept");

  // (b) parser round-trip over the full catalog
  for (const auto& s : catalog::round_trip_exprs()) {
    try {
      RingExpr e = parse_ring_expr(s);
      c.expect(parse_ring_expr(format_ring_expr(e)) == e, "round-trip " + s);
    } catch (const std::exception& ex) {
      c.expect(false, "parse " + s + ": " + ex.what());
    }
  }

  // (c) exhaustive axiom verification on every corpus ring of order <= 512,
  // (d) generator vanishing on every quotient ring
  VerifyConfig cfg;
  auto corpus = build_corpus(cfg);
  int quotients = 0;
  for (const auto& entry : corpus) {
    const RingPtr& r = entry.analysis.ring;
    AxiomReport rep = verify_ring_axioms(
        *r, r->order() <= 512 ? AxiomMode::Exhaustive : AxiomMode::Sampled);
    c.expect(rep.ok, entry.expr + " axioms: " + rep.describe());
    if (auto qd = r->quotient_data()) {
      ++quotients;
      for (const auto& g : qd->expanded_generators)
        c.expect(evaluate_poly(*r, g, qd->variable_elements) == r->zero(),
                 entry.expr + " generator does not vanish");
    }
  }
  c.info(std::to_string(corpus.size()) + " rings verified, " +
         std::to_string(quotients) + " quotients");
}

std::string g_cli_path;

int run_cli(const std::string& args) {
  std::string cmd = "\"" + g_cli_path + "\" " + args;
  int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_8(Check& c) {
  namespace fs = std::filesystem;
  if (g_cli_path.empty()) {
    c.expect(false, "missing --cli <path> argument");
    return;
  }
  fs::path dir = fs::temp_directory_path() / "czdg-acceptance";
  fs::create_directories(dir);
  fs::path csv1 = dir / "scan1.csv", csv2 = dir / "scan2.csv";
  fs::path report = dir / "verify.txt";

  int rc1 = run_cli("scan --family Zn:4..100 --out " + csv1.string());
  int rc2 = run_cli("scan --family Zn:4..100 --out " + csv2.string());
  c.expect(rc1 == 0 && rc2 == 0, "scan exit codes");
  std::string a = read_file(csv1), b = read_file(csv2);
  c.expect(!a.empty() && a == b, "scan outputs differ");

  int rcv = run_cli("verify --suite all -o " + report.string());
  c.expect(rcv == 0, "verify exit code " + std::to_string(rcv));
  std::string rep = read_file(report);
  auto epos = rep.find("errata:");
  c.expect(epos != std::string::npos, "missing erratum section");
  if (epos != std::string::npos) {
    std::string tail = rep.substr(epos);
    c.expect(tail.find("ann(14)") != std::string::npos,
             "Z16 annihilator erratum not listed");
    c.expect(tail.find("(none)") == std::string::npos,
             "erratum section empty");
  }

  // exit-code contract, end to end
  c.expect(run_cli("ring-info Zbad >/dev/null 2>&1") == 2, "parse-error exit");
  c.expect(run_cli("ring-info \"Z2[x,y]/(x^2)\" >/dev/null 2>&1") == 3,
           "construction-error exit");
  c.expect(run_cli("graph F4 --kind czdg >/dev/null 2>&1") == 4,
           "undefined-graph exit");
  c.expect(run_cli("invariants Z210 --limit-subsets 10 >/dev/null 2>&1") == 6,
           "resource-limit exit");

  std::error_code ec;
  fs::remove_all(dir, ec);
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];

  const std::vector<Criterion> criteria = {
      {1, "closed-form multiset dimensions of paths, cycles, complete and "
          "complete bipartite graphs", 5.0, criterion_1},
      {2, "Z_2p and Z_p^2 dimensions", 1.0, criterion_2},
      {3, "order-p^2/p^3/2^4 presentations: order, axioms, dimension, errata",
       30.0, criterion_3},
      {4, "three/four/five-vertex compressed graphs", 60.0, criterion_4},
      {5, "structural scan of composite Z_n up to 200", 120.0, criterion_5},
      {6, "field-pair products have dimension = diameter = 1", 10.0,
       criterion_6},
      {7, "property suite: dual enumeration, round-trip, axioms, generator "
          "vanishing", 120.0, criterion_7},
      {8, "CLI determinism and verification exit status", 0.0, criterion_8},
  };

  bool all_ok = true;
  for (const auto& cr : criteria) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (cr.budget_seconds > 0 && secs >= cr.budget_seconds)
      c.expect(false, "time budget " + std::to_string(cr.budget_seconds) +
                          "s exceeded");
    all_ok = all_ok && c.ok;
    std::printf("%s  %d  (%6.2fs)  %s%s%s\n", c.ok ? "PASS" : "FAIL", cr.id,
                secs, cr.name, c.detail.empty() ? "" : " — ",
                c.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %s\n", all_ok ? "PASS" : "FAIL");
  return all_ok ? 0 : 1;
}
