#pragma once

#include <string>
#include <vector>

#include "strata/composition.hpp"

namespace strata {

// One edge of the dual graph. In the multigraph variant both endpoints are
// all-ones cells and `label` is the separating wall; in the subdivided
// variant one endpoint is the wall vertex itself.
struct DualEdge {
  Composition u;
  Composition v;
  Composition label;
};

struct StrataGraph {
  int d = 0;
  bool subdivided = false;
  std::vector<Composition> vertices;
  std::vector<DualEdge> edges;
};

// Dual graph of the codimension <= 1 stratification. The multigraph
// variant keeps one labeled edge per wall; the subdivided variant keeps
// the wall vertices with two incident edges each.
StrataGraph build_dual_graph(int d, bool subdivided);

// First Betti number E - V + 1; throws on a disconnected graph.
int graph_rank(const StrataGraph& g);

// d(d-2)/4 for even d, (d-1)^2/4 for odd d.
int expected_rank(int d);

std::string to_dot(const StrataGraph& g);
std::string to_json(const StrataGraph& g);

}  // namespace strata
