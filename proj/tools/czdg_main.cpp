#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "czdg/commands.hpp"
#include "czdg/errors.hpp"
#include "czdg/parse.hpp"
#include "czdg/scan.hpp"
#include "czdg/verify.hpp"

namespace {

constexpr const char* kGrammarHelp = R"HELP(Ring expressions:
  ring     := product | atom
  product  := atom ( "x" atom )+        ("x" surrounded by whitespace; the
                                         multiplication sign is an alias)
  atom     := "Z" int | "GF(" int "," int ")" | "F" int | quotient | "(" ring ")"
  quotient := "Z" int "[" var ("," var)* "]" "/" "(" poly ("," poly)* ")" [ "^" int ]
  poly     := signed sums of integer-coefficient monomials with "^" powers,
              e.g. 2x, x^2 - 2, x^2 + x + 1
  "F" int requires a prime power: F4 = GF(2,2), F5 = Z5.
  An exponent after the ideal's closing ")" is an ideal power:
  (x,y)^2 has generators x^2, xy, y^2.
Examples: Z16, Z4[x]/(2x, x^2 - 2), Z2[x,y]/(x,y)^2, Z4 x F4)HELP";

std::string slurp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw czdg::Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw czdg::Error("cannot write file: " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "czdg — finite commutative rings, zero-divisor graphs, compressed "
      "zero-divisor graphs, and exact multiset-dimension computation"};
  app.footer(kGrammarHelp);
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  czdg::CommandOptions opt;
  std::uint64_t limit_subsets = czdg::MdimOptions{}.subset_limit;
  app.add_option("--max-order", opt.construct.max_order,
                 "maximum order for table-backed rings")
      ->capture_default_str();
  app.add_option("--degree-bound", opt.construct.degree_bound,
                 "degree bound for quotient construction (0 = automatic)")
      ->capture_default_str();
  app.add_option("--limit-subsets", limit_subsets,
                 "work cap on subset tests in dimension searches")
      ->capture_default_str();
  app.add_option("--threads", opt.threads, "worker threads for scans")
      ->capture_default_str();

  std::string expr, out_path;
  bool as_json = false;

  auto* info = app.add_subcommand("ring-info", "order, units, flags, classes");
  info->add_option("expr", expr, "ring expression")->required();
  info->add_flag("--json", as_json, "structured output");

  std::string kind = "czdg", format = "dot";
  auto* graph = app.add_subcommand("graph", "export a graph");
  graph->add_option("expr", expr, "ring expression")->required();
  graph->add_option("--kind", kind, "zdg | czdg")->capture_default_str();
  graph->add_option("--format", format, "dot | json | edgelist")
      ->capture_default_str();
  graph->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* inv = app.add_subcommand("invariants", "one scan record for a ring");
  inv->add_option("expr", expr, "ring expression")->required();
  inv->add_flag("--json", as_json, "structured output");

  czdg::VerifyConfig vcfg;
  std::string suite = "all", vformat = "text";
  int max_p = 13;
  auto* verify = app.add_subcommand("verify", "run claim suites");
  verify->add_option("--suite", suite, "2.1 2.2 thm-3.1 3.1 3.2 3.3 3.4-3.6 4.1 4.2 structural errata all")
      ->capture_default_str();
  verify->add_option("--max-order", vcfg.zn_max,
                     "upper bound of the Z_n corpus")
      ->capture_default_str();
  verify->add_option("--max-p", max_p, "largest prime for the Z_2p / Z_p^2 suite")
      ->capture_default_str();
  verify->add_option("--format", vformat, "text | json")->capture_default_str();
  verify->add_option("-o,--out", out_path, "output file (default stdout)");

  std::string family, file;
  auto* scan = app.add_subcommand("scan", "CSV scan over a ring family");
  scan->add_option("--family", family, "family spec, e.g. Zn:4..100");
  scan->add_option("--file", file, "file with one ring expression per line");
  scan->add_option("--out", out_path, "output CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);
  opt.mdim.subset_limit = limit_subsets;
  vcfg.construct = opt.construct;
  vcfg.mdim = opt.mdim;
  vcfg.primes_2p.clear();
  for (int p = 3; p <= max_p; ++p)
    if (czdg::is_prime(p)) vcfg.primes_2p.push_back(p);
  // squares stop one prime earlier: defaults give 2p over {3..13} and p^2
  // over {2..11}
  vcfg.primes_psq.clear();
  for (int p = 2; p <= std::min(max_p, 11); ++p)
    if (czdg::is_prime(p)) vcfg.primes_psq.push_back(p);

  try {
    std::ostringstream out;
    if (*info) {
      czdg::cmd_ring_info(out, expr, as_json, opt);
      write_output("", out.str());
    } else if (*graph) {
      czdg::cmd_graph(out, expr, kind, format, opt);
      write_output(out_path, out.str());
    } else if (*inv) {
      czdg::cmd_invariants(out, expr, as_json, opt);
      write_output("", out.str());
    } else if (*verify) {
      bool ok = czdg::cmd_verify(out, suite, vformat, vcfg);
      write_output(out_path, out.str());
      return ok ? 0 : 5;
    } else if (*scan) {
      if (family.empty() == file.empty())
        throw czdg::ParseError("scan needs exactly one of --family / --file", 0);
      std::vector<std::string> exprs;
      if (!family.empty()) {
        exprs = czdg::expand_family(family);
      } else {
        std::istringstream lines(slurp_file(file));
        std::string line;
        while (std::getline(lines, line)) {
          while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
          if (line.empty() || line[0] == '#') continue;
          exprs.push_back(line);
        }
      }
      czdg::cmd_scan(out, exprs, opt);
      write_output(out_path, out.str());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return czdg::exit_code_for(e);
  }
  return 0;
}
