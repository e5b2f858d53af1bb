#pragma once

#include <string>
#include <vector>

#include "czdg/invariants.hpp"

namespace czdg::catalog {

// One catalogued ring presentation and what the claim suite expects of it.
// `order` and `mdim` hold the brute-force-verified values; when the source
// list assigns something else, `claimed` records the catalogued assignment
// and the suite reports the instance as an erratum instead of a pass.
struct PresentationCase {
  std::string expr;     // parseable form
  std::string display;  // catalogued spelling when it differs; empty otherwise
  int order = 0;        // verified order
  ExtValue mdim;        // verified multiset dimension of the compressed graph
  std::string claimed;  // catalogued assignment when it disagrees
};

const std::vector<PresentationCase>& order_p2_cases();   // local rings, order p^2
const std::vector<PresentationCase>& order_p3_mdim1();   // order p^3, dimension 1
const std::vector<PresentationCase>& order_p3_mdim0();
const std::vector<PresentationCase>& order_16_mdim0();   // order 2^4
const std::vector<PresentationCase>& order_16_mdim1();
const std::vector<PresentationCase>& order_16_mdim_inf();
// local rings whose compressed graph is K_{1,1}
const std::vector<PresentationCase>& k11_local_rings();

struct FigureCase {
  std::string expr;
  int vertices = 0;
};
const std::vector<FigureCase>& three_vertex_rings();
const std::vector<FigureCase>& four_vertex_rings();
const std::vector<FigureCase>& five_vertex_rings();

// every catalogued expression plus assorted grammar coverage
std::vector<std::string> round_trip_exprs();

// every catalogued presentation (deduplicated), for corpus building
std::vector<std::string> all_presentations();

}  // namespace czdg::catalog
