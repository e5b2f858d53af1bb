#pragma once

#include <string>
#include <vector>

#include "czdg/graph.hpp"

namespace czdg {

// DOT, JSON and edge-list renderings are byte-deterministic: vertices in
// index order, edges as sorted (i, j) pairs with i < j.
// class_sizes may be null (plain element graphs).
std::string graph_to_dot(const SimpleGraph& g, const std::vector<int>* class_sizes);
std::string graph_to_json(const SimpleGraph& g, const std::vector<int>* class_sizes);
std::string graph_to_edgelist(const SimpleGraph& g);

// RFC-4180 style: quoted only when the field contains a comma or quote.
std::string csv_escape(const std::string& field);

}  // namespace czdg
