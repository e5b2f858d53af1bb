#include "czdg/scan.hpp"

#include <algorithm>
#include <thread>

#include "czdg/errors.hpp"
#include "czdg/parse.hpp"
#include "czdg/serialize.hpp"

namespace czdg {

RingAnalysis analyze_ring(const RingPtr& r, const MdimOptions& mopt) {
  RingAnalysis a;
  a.ring = r;
  a.zstar = nonzero_zero_divisors(r);
  a.partition = annihilator_classes(r);
  a.zdg = zero_divisor_graph(r);
  a.domain = (a.zstar.count() == 0);
  a.local = is_local(*r);
  a.field = is_field(*r);
  a.reduced = is_reduced(*r);
  a.boolean_ring = is_boolean(*r);
  if (!a.domain) {
    a.czdg = compressed_graph(a.partition);
    a.mdim = multiset_dimension(*a.czdg, mopt);
    a.metric_dim = metric_dimension(*a.czdg, mopt);
    a.czdg_girth = girth(*a.czdg);
    a.czdg_diameter = diameter(*a.czdg);
  } else {
    a.mdim = {ExtValue::undefined(), {}};
    a.metric_dim = ExtValue::undefined();
    a.czdg_girth = ExtValue::undefined();
    a.czdg_diameter = ExtValue::undefined();
  }
  return a;
}

ScanRecord make_scan_record(const std::string& expr, const RingAnalysis& a) {
  ScanRecord rec;
  rec.expr = expr;
  rec.order = a.ring->order();
  rec.num_zero_divisors = a.zstar.count();
  rec.czdg_vertices = a.czdg ? a.czdg->vertex_count() : 0;
  rec.czdg_edges = a.czdg ? a.czdg->edge_count() : 0;
  rec.mdim = a.mdim.dim;
  rec.metric_dim = a.metric_dim;
  rec.girth = a.czdg_girth;
  rec.diameter = a.czdg_diameter;
  rec.is_local = a.local;
  rec.is_field = a.field;
  rec.is_reduced = a.reduced;
  rec.is_boolean = a.boolean_ring;
  return rec;
}

std::string scan_csv_header() {
  return "expr,order,num_zero_divisors,czdg_vertices,czdg_edges,mdim,"
         "metric_dim,girth,diameter,is_local,is_field,is_reduced,is_boolean";
}

std::string scan_record_csv(const ScanRecord& rec) {
  std::string out = csv_escape(rec.expr);
  if (rec.error) {
    out += ",error:" + rec.error_slug;
    for (int i = 0; i < 11; ++i) out += ",";
    return out;
  }
  out += "," + std::to_string(rec.order);
  out += "," + std::to_string(rec.num_zero_divisors);
  out += "," + std::to_string(rec.czdg_vertices);
  out += "," + std::to_string(rec.czdg_edges);
  out += "," + rec.mdim.str();
  out += "," + rec.metric_dim.str();
  out += "," + rec.girth.str();
  out += "," + rec.diameter.str();
  out += rec.is_local ? ",1" : ",0";
  out += rec.is_field ? ",1" : ",0";
  out += rec.is_reduced ? ",1" : ",0";
  out += rec.is_boolean ? ",1" : ",0";
  return out;
}

std::vector<std::string> expand_family(const std::string& spec) {
  const std::string prefix = "Zn:";
  if (spec.rfind(prefix, 0) != 0)
    throw ParseError("family must look like Zn:a..b", 0);
  std::size_t dots = spec.find("..", prefix.size());
  if (dots == std::string::npos)
    throw ParseError("family must look like Zn:a..b", prefix.size());
  int a = 0, b = 0;
  try {
    a = std::stoi(spec.substr(prefix.size(), dots - prefix.size()));
    b = std::stoi(spec.substr(dots + 2));
  } catch (const std::exception&) {
    throw ParseError("family bounds must be integers", prefix.size());
  }
  if (a < 2 || b < a) throw ParseError("family bounds must satisfy 2 <= a <= b", prefix.size());
  std::vector<std::string> out;
  for (int n = a; n <= b; ++n) out.push_back("Z" + std::to_string(n));
  return out;
}

std::string error_slug(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse-error";
  if (dynamic_cast<const InvalidOrderError*>(&e)) return "invalid-order";
  if (dynamic_cast<const InvalidPrimeError*>(&e)) return "invalid-prime";
  if (dynamic_cast<const SizeLimitError*>(&e)) return "size-limit";
  if (dynamic_cast<const QuotientNotFiniteError*>(&e)) return "not-finite";
  if (dynamic_cast<const InvalidPresentationError*>(&e))
    return "invalid-presentation";
  if (dynamic_cast<const ResourceLimitError*>(&e)) return "resource-limit";
  if (dynamic_cast<const InternalError*>(&e)) return "internal-error";
  return "error";
}

std::string run_scan(const std::vector<std::string>& exprs,
                     const ConstructOptions& copt, const MdimOptions& mopt,
                     int threads) {
  std::vector<ScanRecord> rows(exprs.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        RingExpr e = parse_ring_expr(exprs[i]);
        RingPtr r = construct_ring(e, copt);
        rows[i] = make_scan_record(exprs[i], analyze_ring(r, mopt));
      } catch (const std::exception& ex) {
        rows[i].expr = exprs[i];
        rows[i].error = true;
        rows[i].error_slug = error_slug(ex);
      }
    }
  };
  threads = std::max(1, threads);
  if (threads == 1 || exprs.size() < 2) {
    work(0, exprs.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (exprs.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      std::size_t begin = t * chunk;
      std::size_t end = std::min(exprs.size(), begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  std::string out = scan_csv_header() + "\n";
  for (const auto& rec : rows) out += scan_record_csv(rec) + "\n";
  return out;
}

}  // namespace czdg
