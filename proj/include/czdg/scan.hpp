#pragma once

#include <optional>
#include <string>
#include <vector>

#include "czdg/czdg.hpp"
#include "czdg/invariants.hpp"
#include "czdg/ring.hpp"

namespace czdg {

// Everything the CLI and the claim suites need about one ring, derived once.
struct RingAnalysis {
  RingPtr ring;
  ElementSet zstar;                 // Z*(R)
  ClassPartition partition;
  SimpleGraph zdg;
  std::optional<SimpleGraph> czdg;  // nullopt iff R is an integral domain
  MdimResult mdim;                  // of the compressed graph
  ExtValue metric_dim;              // of the compressed graph
  ExtValue czdg_girth;
  ExtValue czdg_diameter;
  bool local = false, field = false, reduced = false, boolean_ring = false,
       domain = false;
};

RingAnalysis analyze_ring(const RingPtr& r, const MdimOptions& mopt = {});

struct ScanRecord {
  std::string expr;
  bool error = false;
  std::string error_slug;  // when error
  int order = 0;
  int num_zero_divisors = 0;  // |Z*(R)|
  int czdg_vertices = 0, czdg_edges = 0;
  ExtValue mdim, metric_dim, girth, diameter;
  bool is_local = false, is_field = false, is_reduced = false,
       is_boolean = false;
};

ScanRecord make_scan_record(const std::string& expr, const RingAnalysis& a);

std::string scan_csv_header();   // no trailing newline
std::string scan_record_csv(const ScanRecord& rec);  // no trailing newline

// "Zn:a..b" -> {"Za", ..., "Zb"}.
std::vector<std::string> expand_family(const std::string& spec);

// One CSV row per expression, construction failures become error rows.
// Workers only parallelise across rings; rows come out in input order.
std::string run_scan(const std::vector<std::string>& exprs,
                     const ConstructOptions& copt, const MdimOptions& mopt,
                     int threads);

// Stable slug for an error row ("parse-error", "size-limit", ...).
std::string error_slug(const std::exception& e);

}  // namespace czdg
