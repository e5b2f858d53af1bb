#include "czdg/commands.hpp"

#include <json.hpp>

#include "czdg/czdg.hpp"
#include "czdg/errors.hpp"
#include "czdg/parse.hpp"
#include "czdg/serialize.hpp"

namespace czdg {

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return 2;
  if (dynamic_cast<const UndefinedGraphError*>(&e)) return 4;
  if (dynamic_cast<const ResourceLimitError*>(&e)) return 6;
  if (dynamic_cast<const Error*>(&e)) return 3;
  return 3;
}

void cmd_ring_info(std::ostream& out, const std::string& expr, bool as_json,
                   const CommandOptions& opt) {
  RingPtr r = construct_ring(parse_ring_expr(expr), opt.construct);
  ElementSet u = units(r);
  ElementSet zstar = nonzero_zero_divisors(r);
  ClassPartition part = annihilator_classes(r);
  const bool fld = is_field(*r);
  const bool loc = is_local(*r);
  const bool red = is_reduced(*r);
  const bool boo = is_boolean(*r);
  const bool dom = is_integral_domain(*r);
  if (as_json) {
    nlohmann::ordered_json j;
    j["expr"] = expr;
    j["presentation"] = r->presentation_text();
    j["order"] = r->order();
    j["units"] = u.count();
    j["nonzero_zero_divisors"] = zstar.count();
    j["annihilator_classes"] = part.classes.size();
    j["is_field"] = fld;
    j["is_local"] = loc;
    j["is_reduced"] = red;
    j["is_boolean"] = boo;
    j["is_integral_domain"] = dom;
    out << j.dump() << "\n";
    return;
  }
  out << "ring: " << r->presentation_text() << "\n";
  out << "order: " << r->order() << "\n";
  out << "units: " << u.count() << "\n";
  out << "nonzero zero-divisors: " << zstar.count() << "\n";
  out << "annihilator classes: " << part.classes.size() << "\n";
  out << "is_field: " << (fld ? 1 : 0) << "\n";
  out << "is_local: " << (loc ? 1 : 0) << "\n";
  out << "is_reduced: " << (red ? 1 : 0) << "\n";
  out << "is_boolean: " << (boo ? 1 : 0) << "\n";
  out << "is_integral_domain: " << (dom ? 1 : 0) << "\n";
}

void cmd_graph(std::ostream& out, const std::string& expr,
               const std::string& kind, const std::string& format,
               const CommandOptions& opt) {
  RingPtr r = construct_ring(parse_ring_expr(expr), opt.construct);
  SimpleGraph g;
  std::vector<int> class_sizes;
  const std::vector<int>* sizes_ptr = nullptr;
  if (kind == "czdg") {
    if (is_integral_domain(*r))
      throw UndefinedGraphError("Γ_E undefined: R is an integral domain");
    ClassPartition part = annihilator_classes(r);
    g = compressed_graph(part);
    for (const auto& c : part.classes)
      class_sizes.push_back(static_cast<int>(c.members.size()));
    sizes_ptr = &class_sizes;
  } else if (kind == "zdg") {
    g = zero_divisor_graph(r);
  } else {
    throw ParseError("graph kind must be zdg or czdg", 0);
  }
  if (format == "dot")
    out << graph_to_dot(g, sizes_ptr);
  else if (format == "json")
    out << graph_to_json(g, sizes_ptr);
  else if (format == "edgelist")
    out << graph_to_edgelist(g);
  else
    throw ParseError("format must be dot, json or edgelist", 0);
}

void cmd_invariants(std::ostream& out, const std::string& expr, bool as_json,
                    const CommandOptions& opt) {
  RingPtr r = construct_ring(parse_ring_expr(expr), opt.construct);
  RingAnalysis a = analyze_ring(r, opt.mdim);
  ScanRecord rec = make_scan_record(expr, a);
  if (as_json) {
    nlohmann::ordered_json j;
    j["expr"] = rec.expr;
    j["order"] = rec.order;
    j["num_zero_divisors"] = rec.num_zero_divisors;
    j["czdg_vertices"] = rec.czdg_vertices;
    j["czdg_edges"] = rec.czdg_edges;
    j["mdim"] = rec.mdim.str();
    j["metric_dim"] = rec.metric_dim.str();
    j["girth"] = rec.girth.str();
    j["diameter"] = rec.diameter.str();
    j["is_local"] = rec.is_local;
    j["is_field"] = rec.is_field;
    j["is_reduced"] = rec.is_reduced;
    j["is_boolean"] = rec.is_boolean;
    out << j.dump() << "\n";
    return;
  }
  out << "expr: " << rec.expr << "\n";
  out << "order: " << rec.order << "\n";
  out << "num_zero_divisors: " << rec.num_zero_divisors << "\n";
  out << "czdg_vertices: " << rec.czdg_vertices << "\n";
  out << "czdg_edges: " << rec.czdg_edges << "\n";
  out << "mdim: " << rec.mdim.str() << "\n";
  out << "metric_dim: " << rec.metric_dim.str() << "\n";
  out << "girth: " << rec.girth.str() << "\n";
  out << "diameter: " << rec.diameter.str() << "\n";
  out << "is_local: " << (rec.is_local ? 1 : 0) << "\n";
  out << "is_field: " << (rec.is_field ? 1 : 0) << "\n";
  out << "is_reduced: " << (rec.is_reduced ? 1 : 0) << "\n";
  out << "is_boolean: " << (rec.is_boolean ? 1 : 0) << "\n";
}

bool cmd_verify(std::ostream& out, const std::string& suite,
                const std::string& format, const VerifyConfig& cfg) {
  AggregateReport rep = run_suites(suite, cfg);
  if (format == "json")
    out << rep.render_json();
  else if (format == "text")
    out << rep.render_text();
  else
    throw ParseError("format must be text or json", 0);
  return rep.ok;
}

void cmd_scan(std::ostream& out, const std::vector<std::string>& exprs,
              const CommandOptions& opt) {
  out << run_scan(exprs, opt.construct, opt.mdim, opt.threads);
}

}  // namespace czdg
