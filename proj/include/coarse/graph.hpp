#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "coarse/rational.hpp"

namespace coarse {

struct Edge {
  int u = 0;
  int v = 0;
  Rational w = 1;
};

// Finite undirected graph with positive rational edge weights. No self-loops,
// no duplicate edges. Connectivity is checked when a metric is built, not here.
class Graph {
 public:
  explicit Graph(int n);

  // Validates endpoints, rejects self-loops, duplicates and weights <= 0.
  void add_edge(int u, int v, Rational w = 1);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Neighbors of u sorted by vertex index.
  const std::vector<std::pair<int, Rational>>& neighbors(int u) const;

  bool has_edge(int u, int v) const;
  bool is_connected() const;
  bool is_tree() const;

  // Largest edge weight; 0 for an edgeless graph.
  Rational max_edge_weight() const;

  void check_vertex(int v, const char* what) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, Rational>>> adj_;
};

// One walkable vertex sequence; consecutive vertices must share an edge.
struct VertexPath {
  std::vector<int> vertices;

  Rational length(const Graph& g) const;
  bool empty() const { return vertices.empty(); }
};

// Text format: optional '#' comment lines, a header "n <count>", then one
// line per edge "u v w" with w a decimal or p/q rational.
Graph parse_graph(std::istream& in);
Graph load_graph(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void save_graph(const std::string& path, const Graph& g);

}  // namespace coarse
