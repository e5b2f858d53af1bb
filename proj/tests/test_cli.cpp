#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "czdg/commands.hpp"
#include "czdg/errors.hpp"
#include "czdg/scan.hpp"
#include "czdg/serialize.hpp"

using namespace czdg;

namespace {

std::string run_graph(const std::string& expr, const std::string& kind,
                      const std::string& format) {
  std::ostringstream out;
  cmd_graph(out, expr, kind, format, {});
  return out.str();
}

}  // namespace

TEST_CASE("ring-info text output") {
  std::ostringstream out;
  cmd_ring_info(out, "Z16", false, {});
  CHECK(out.str() ==
        "ring: Z16\n"
        "order: 16\n"
        "units: 8\n"
        "nonzero zero-divisors: 7\n"
        "annihilator classes: 3\n"
        "is_field: 0\n"
        "is_local: 1\n"
        "is_reduced: 0\n"
        "is_boolean: 0\n"
        "is_integral_domain: 0\n");

  out.str("");
  cmd_ring_info(out, "F9", false, {});
  CHECK(out.str().find("order: 9\n") != std::string::npos);
  CHECK(out.str().find("is_field: 1\n") != std::string::npos);
  CHECK(out.str().find("nonzero zero-divisors: 0\n") != std::string::npos);
  CHECK(out.str().find("annihilator classes: 0\n") != std::string::npos);

  out.str("");
  cmd_ring_info(out, "Z4[x]/(2x, x^2 - 2)", false, {});
  CHECK(out.str().find("order: 8\n") != std::string::npos);
  CHECK(out.str().find("is_local: 1\n") != std::string::npos);
}

TEST_CASE("graph export goldens") {
  CHECK(run_graph("Z16", "czdg", "edgelist") == "0 2\n1 2\n");
  CHECK(run_graph("Z8", "czdg", "edgelist") == "0 1\n");
  CHECK(run_graph("Z8", "zdg", "edgelist") == "0 1\n1 2\n");

  CHECK(run_graph("Z16", "czdg", "dot") ==
        "graph czdg {\n"
        "  \"2\" [class_size=4];\n"
        "  \"4\" [class_size=2];\n"
        "  \"8\" [class_size=1];\n"
        "  \"2\" -- \"8\";\n"
        "  \"4\" -- \"8\";\n"
        "}\n");

  CHECK(run_graph("Z16", "czdg", "json") ==
        "{\"vertices\":[{\"id\":0,\"label\":\"2\",\"class_size\":4},"
        "{\"id\":1,\"label\":\"4\",\"class_size\":2},"
        "{\"id\":2,\"label\":\"8\",\"class_size\":1}],"
        "\"edges\":[[0,2],[1,2]]}\n");

  CHECK(run_graph("Z8", "zdg", "dot") ==
        "graph zdg {\n"
        "  \"2\";\n"
        "  \"4\";\n"
        "  \"6\";\n"
        "  \"2\" -- \"4\";\n"
        "  \"4\" -- \"6\";\n"
        "}\n");

  // empty zero-divisor graph of a field is allowed
  CHECK(run_graph("F4", "zdg", "edgelist") == "");

  // the compressed graph of a domain is undefined, not empty
  CHECK_THROWS_AS(run_graph("F4", "czdg", "dot"), UndefinedGraphError);
  try {
    run_graph("F4", "czdg", "dot");
  } catch (const UndefinedGraphError& e) {
    CHECK(std::string(e.what()) ==
          "Γ_E undefined: R is an integral domain");
  }
}

TEST_CASE("invariants record") {
  std::ostringstream out;
  cmd_invariants(out, "Z10", false, {});
  CHECK(out.str() ==
        "expr: Z10\n"
        "order: 10\n"
        "num_zero_divisors: 5\n"
        "czdg_vertices: 2\n"
        "czdg_edges: 1\n"
        "mdim: 1\n"
        "metric_dim: 1\n"
        "girth: infinity\n"
        "diameter: 1\n"
        "is_local: 0\n"
        "is_field: 0\n"
        "is_reduced: 1\n"
        "is_boolean: 0\n");

  out.str("");
  cmd_invariants(out, "Z64", false, {});
  CHECK(out.str().find("mdim: infinity\n") != std::string::npos);
  CHECK(out.str().find("girth: 3\n") != std::string::npos);

  out.str("");
  cmd_invariants(out, "Z7", false, {});
  CHECK(out.str().find("mdim: undefined\n") != std::string::npos);

  out.str("");
  cmd_invariants(out, "Z10", true, {});
  CHECK(out.str() ==
        "{\"expr\":\"Z10\",\"order\":10,\"num_zero_divisors\":5,"
        "\"czdg_vertices\":2,\"czdg_edges\":1,\"mdim\":\"1\","
        "\"metric_dim\":\"1\",\"girth\":\"infinity\",\"diameter\":\"1\","
        "\"is_local\":false,\"is_field\":false,\"is_reduced\":true,"
        "\"is_boolean\":false}\n");
}

TEST_CASE("scan CSV") {
  auto exprs = expand_family("Zn:4..20");
  REQUIRE(exprs.size() == 17);
  CHECK(exprs.front() == "Z4");
  CHECK(exprs.back() == "Z20");

  std::string csv = run_scan(exprs, {}, {}, 1);
  std::istringstream lines(csv);
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 18);
  CHECK(rows[0] ==
        "expr,order,num_zero_divisors,czdg_vertices,czdg_edges,mdim,"
        "metric_dim,girth,diameter,is_local,is_field,is_reduced,is_boolean");
  CHECK(rows[1] == "Z4,4,1,1,0,0,0,infinity,0,1,0,0,0");
  CHECK(rows[2] == "Z5,5,0,0,0,undefined,undefined,undefined,undefined,1,1,1,0");
  CHECK(rows[3] == "Z6,6,3,2,1,1,1,infinity,1,0,0,1,0");
  CHECK(rows[13] == "Z16,16,7,3,2,1,1,infinity,2,1,0,0,0");

  // determinism and thread-count independence
  CHECK(run_scan(exprs, {}, {}, 1) == csv);
  CHECK(run_scan(exprs, {}, {}, 3) == csv);

  // expressions with commas are quoted; parse failures become error rows
  std::string mixed = run_scan(
      {"Z4[x]/(2x, x^2 - 2)", "Zoops", "Z4[x]/(x^2)"}, {}, {}, 1);
  CHECK(mixed.find("\"Z4[x]/(2x, x^2 - 2)\",8,") != std::string::npos);
  CHECK(mixed.find("Zoops,error:parse-error,,,,,,,,,,,\n") != std::string::npos);
  CHECK(mixed.find("Z4[x]/(x^2),16,7,4,3,infinity,2,infinity,2,1,0,0,0") !=
        std::string::npos);

  CHECK_THROWS_AS(expand_family("Zn:9..2"), ParseError);
  CHECK_THROWS_AS(expand_family("Qn:1..2"), ParseError);
  CHECK_THROWS_AS(expand_family("Zn:abc"), ParseError);
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for(ParseError("x", 0)) == 2);
  CHECK(exit_code_for(InvalidOrderError("x")) == 3);
  CHECK(exit_code_for(InvalidPrimeError("x")) == 3);
  CHECK(exit_code_for(SizeLimitError("x")) == 3);
  CHECK(exit_code_for(InvalidPresentationError("x")) == 3);
  CHECK(exit_code_for(QuotientNotFiniteError("x")) == 3);
  CHECK(exit_code_for(UndefinedGraphError("x")) == 4);
  CHECK(exit_code_for(ResourceLimitError("x", 1)) == 6);
}

TEST_CASE("csv escaping") {
  CHECK(csv_escape("Z16") == "Z16");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
}
