#include "czdg/catalog.hpp"

#include <algorithm>

namespace czdg::catalog {

namespace {
ExtValue fin(int k) { return ExtValue::finite(k); }
ExtValue inf() { return ExtValue::infinite(); }
ExtValue undef() { return ExtValue::undefined(); }
}  // namespace

const std::vector<PresentationCase>& order_p2_cases() {
  static const std::vector<PresentationCase> cases = {
      {"F4", "", 4, undef()},
      {"Z4", "", 4, fin(0)},
      {"Z2[x]/(x^2)", "", 4, fin(0)},
      {"F9", "", 9, undef()},
      {"Z9", "", 9, fin(0)},
      {"Z3[x]/(x^2)", "", 9, fin(0)},
      {"F25", "", 25, undef()},
      {"Z25", "", 25, fin(0)},
      {"Z5[x]/(x^2)", "", 25, fin(0)},
  };
  return cases;
}

const std::vector<PresentationCase>& order_p3_mdim1() {
  static const std::vector<PresentationCase> cases = {
      {"Z8", "", 8, fin(1)},
      {"Z2[x]/(x^3)", "", 8, fin(1)},
      {"Z4[x]/(2x, x^2 - 2)", "", 8, fin(1)},
      {"Z27", "", 27, fin(1)},
      {"Z3[x]/(x^3)", "", 27, fin(1)},
      {"Z9[x]/(3x, x^2 - 3)", "", 27, fin(1)},
      {"Z9[x]/(3x, x^2 - 6)", "", 27, fin(1)},
  };
  return cases;
}

const std::vector<PresentationCase>& order_p3_mdim0() {
  static const std::vector<PresentationCase> cases = {
      {"Z2[x,y]/(x,y)^2", "", 8, fin(0)},
      {"Z4[x]/(2x, x^2)", "", 8, fin(0)},
      {"Z9[x]/(3x, x^2)", "", 27, fin(0)},
      {"Z3[x,y]/(x,y)^2", "", 27, fin(0)},
  };
  return cases;
}

const std::vector<PresentationCase>& order_16_mdim0() {
  static const std::vector<PresentationCase> cases = {
      {"Z2[t,x]/(t^2 + t + 1, x^2)", "F4[x]/(x^2)", 16, fin(0)},
      {"Z2[x,y,z]/(x,y,z)^2", "", 16, fin(0)},
      {"Z4[x]/(x^2 + x + 1)", "", 16, fin(0)},
  };
  return cases;
}

const std::vector<PresentationCase>& order_16_mdim1() {
  static const std::vector<PresentationCase> cases = {
      {"Z2[x]/(x^4)", "", 16, fin(1)},
      // catalogued as (x^3, xy, x^2), which does not present a finite ring;
      // the y^2 spelling is the corrected one
      {"Z2[x,y]/(x^3, xy, y^2)", "Z2[x,y]/(x^3, xy, x^2)", 16, fin(1)},
      {"Z4[x]/(2x, x^3 - 2)", "", 16, fin(1)},
      {"Z4[x]/(x^2 - 2)", "", 16, fin(1)},
      {"Z8[x]/(2x, x^2)", "", 16, fin(1)},
      {"Z16", "", 16, fin(1)},
      {"Z4[x]/(x^2 - 2x - 2)", "", 16, fin(1)},
      // the ideal contains 4 = x*(2x) - 2*(x^2 - 2), so the quotient is the
      // order-8 chain ring already listed as Z4[x]/(2x, x^2 - 2)
      {"Z8[x]/(2x, x^2 - 2)", "", 8, fin(1), "order 16 with Mdim 1"},
      // the compressed graph is a triangle plus a pendant vertex; its two
      // adjacent twin classes defeat every resolving multiset
      {"Z4[x]/(x^2 - 2x)", "", 16, inf(), "Mdim 1"},
  };
  return cases;
}

const std::vector<PresentationCase>& order_16_mdim_inf() {
  static const std::vector<PresentationCase> cases = {
      {"Z4[x]/(x^2)", "", 16, inf()},
      {"Z2[x,y]/(x^2, y^2)", "", 16, inf()},
      {"Z2[x,y]/(x^2 - y^2, xy)", "", 16, inf()},
  };
  return cases;
}

const std::vector<PresentationCase>& k11_local_rings() {
  static const std::vector<PresentationCase> cases = {
      {"Z8", "", 8, fin(1)},
      {"Z27", "", 27, fin(1)},
      {"Z2[x]/(x^3)", "", 8, fin(1)},
      {"Z4[x]/(2x, x^2 - 2)", "", 8, fin(1)},
      {"Z2[x,y]/(x^3, xy, y^2)", "", 16, fin(1)},
      {"Z8[x]/(2x, x^2)", "", 16, fin(1)},
      {"Z4[x]/(x^3, 2x^2, 2x)", "", 16, fin(1)},
      {"Z9[x]/(3x, x^2 - 6)", "", 27, fin(1)},
      {"Z9[x]/(3x, x^2 - 3)", "", 27, fin(1)},
      {"Z3[x]/(x^3)", "", 27, fin(1)},
  };
  return cases;
}

const std::vector<FigureCase>& three_vertex_rings() {
  static const std::vector<FigureCase> cases = {{"Z16", 3}};
  return cases;
}

const std::vector<FigureCase>& four_vertex_rings() {
  static const std::vector<FigureCase> cases = {
      {"Z4 x F4", 4},
      {"Z4[x]/(x^2)", 4},
  };
  return cases;
}

const std::vector<FigureCase>& five_vertex_rings() {
  static const std::vector<FigureCase> cases = {
      {"Z9[x]/(x^2)", 5},
      {"Z64", 5},
      {"Z3[x,y]/(xy, x^3, y^3, x^2 - y^2)", 5},
      {"Z8[x,y]/(x^2, y^2, 4x, 4y, 2xy)", 5},
  };
  return cases;
}

std::vector<std::string> all_presentations() {
  std::vector<std::string> out;
  auto push = [&](const std::string& e) {
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  };
  for (const auto& c : order_p2_cases()) push(c.expr);
  for (const auto& c : order_p3_mdim1()) push(c.expr);
  for (const auto& c : order_p3_mdim0()) push(c.expr);
  for (const auto& c : order_16_mdim0()) push(c.expr);
  for (const auto& c : order_16_mdim1()) push(c.expr);
  for (const auto& c : order_16_mdim_inf()) push(c.expr);
  for (const auto& c : k11_local_rings()) push(c.expr);
  for (const auto& c : three_vertex_rings()) push(c.expr);
  for (const auto& c : four_vertex_rings()) push(c.expr);
  for (const auto& c : five_vertex_rings()) push(c.expr);
  return out;
}

std::vector<std::string> round_trip_exprs() {
  std::vector<std::string> out = all_presentations();
  for (const char* e :
       {"Z2", "Z16", "F4", "F8", "F9", "F25", "GF(2,1)", "GF(5,1)", "GF(3,2)",
        "Z2 x Z2", "Z2 x Z2 x Z2", "(Z2 x Z2) x Z2", "Z2 x (Z2 x Z2)",
        "Z4 x F4", "Z3 x Z3", "Z2 x Z3 x Z5",
        "Z9[x]/(3x, x^2 - 3)", "Z12[x,y]/(2x - 3y, x^2, y^2, xy)",
        "Z5[a,b]/(a,b)^3"})
    out.push_back(e);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace czdg::catalog
