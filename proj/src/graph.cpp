#include "strata/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "json.hpp"

namespace strata {

namespace {

Composition wall(int i, int j) {
  std::vector<int> parts(i, 1);
  parts.push_back(2);
  parts.insert(parts.end(), j, 1);
  return Composition(std::move(parts));
}

}  // namespace

StrataGraph build_dual_graph(int d, bool subdivided) {
  if (d < 2) throw std::invalid_argument("degree must be >= 2");
  StrataGraph g;
  g.d = d;
  g.subdivided = subdivided;
  for (int k = d % 2; k <= d; k += 2) {
    g.vertices.push_back(Composition::ones(k));
  }
  // One wall per letter index (i,j); it separates the cells with i+j and
  // i+j+2 simple roots.
  for (int s = d % 2; s <= d - 2; s += 2) {
    for (int i = 0; i <= s; ++i) {
      Composition w = wall(i, s - i);
      Composition lo = Composition::ones(s);
      Composition hi = Composition::ones(s + 2);
      if (subdivided) {
        g.vertices.push_back(w);
        g.edges.push_back({lo, w, w});
        g.edges.push_back({w, hi, w});
      } else {
        g.edges.push_back({lo, hi, w});
      }
    }
  }
  return g;
}

int graph_rank(const StrataGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::map<Composition, int> index;
  for (int k = 0; k < n; ++k) index[g.vertices[k]] = k;

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const DualEdge& e : g.edges) {
    parent[find(index.at(e.u))] = find(index.at(e.v));
  }
  int components = 0;
  for (int k = 0; k < n; ++k) {
    if (find(k) == k) ++components;
  }
  if (components != 1) {
    throw std::logic_error("dual graph is disconnected");
  }
  return static_cast<int>(g.edges.size()) - n + 1;
}

int expected_rank(int d) {
  if (d < 2) throw std::invalid_argument("degree must be >= 2");
  return d % 2 == 0 ? d * (d - 2) / 4 : (d - 1) * (d - 1) / 4;
}

std::string to_dot(const StrataGraph& g) {
  std::string out = "graph G {\n";
  for (const Composition& v : g.vertices) {
    out += "  \"" + v.str() + "\";\n";
  }
  for (const DualEdge& e : g.edges) {
    out += "  \"" + e.u.str() + "\" -- \"" + e.v.str() + "\" [label=\"" +
           e.label.str() + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string to_json(const StrataGraph& g) {
  nlohmann::json j;
  j["d"] = g.d;
  j["subdivided"] = g.subdivided;
  j["vertices"] = nlohmann::json::array();
  for (const Composition& v : g.vertices) j["vertices"].push_back(v.parts());
  j["edges"] = nlohmann::json::array();
  for (const DualEdge& e : g.edges) {
    j["edges"].push_back({e.u.parts(), e.v.parts(), e.label.parts()});
  }
  return j.dump(2) + "\n";
}

}  // namespace strata
