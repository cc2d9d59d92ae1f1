#include "coarse/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "coarse/error.hpp"

namespace coarse {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 1) fail(Errc::invalid_spec, "graph needs at least one vertex");
}

void Graph::check_vertex(int v, const char* what) const {
  if (v < 0 || v >= n_)
    fail(Errc::precondition, std::string(what) + " " + std::to_string(v) + " out of range [0, " +
                                 std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v, Rational w) {
  check_vertex(u, "edge endpoint");
  check_vertex(v, "edge endpoint");
  if (u == v) fail(Errc::invalid_spec, "self-loop at vertex " + std::to_string(u));
  if (!(w > Rational(0)))
    fail(Errc::invalid_weight, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                   " has non-positive weight " + w.str());
  if (has_edge(u, v))
    fail(Errc::invalid_spec,
         "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  edges_.push_back({u, v, w});
  auto insert_sorted = [](std::vector<std::pair<int, Rational>>& list, int to, const Rational& wt) {
    auto it = std::lower_bound(list.begin(), list.end(), to,
                               [](const auto& p, int x) { return p.first < x; });
    list.insert(it, {to, wt});
  };
  insert_sorted(adj_[static_cast<std::size_t>(u)], v, w);
  insert_sorted(adj_[static_cast<std::size_t>(v)], u, w);
}

const std::vector<std::pair<int, Rational>>& Graph::neighbors(int u) const {
  check_vertex(u, "vertex");
  return adj_[static_cast<std::size_t>(u)];
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& list = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const auto& p, int x) { return p.first < x; });
  return it != list.end() && it->first == v;
}

bool Graph::is_connected() const {
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const auto& [v, w] : adj_[static_cast<std::size_t>(u)]) {
      (void)w;
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n_;
}

bool Graph::is_tree() const {
  return static_cast<int>(edges_.size()) == n_ - 1 && is_connected();
}

Rational Graph::max_edge_weight() const {
  Rational m = 0;
  for (const auto& e : edges_) m = max(m, e.w);
  return m;
}

Rational VertexPath::length(const Graph& g) const {
  if (vertices.empty()) fail(Errc::precondition, "empty vertex path");
  Rational total = 0;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    int u = vertices[i], v = vertices[i + 1];
    if (!g.has_edge(u, v))
      fail(Errc::precondition,
           "path step " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
    for (const auto& [to, w] : g.neighbors(u)) {
      if (to == v) {
        total += w;
        break;
      }
    }
  }
  return total;
}

Graph parse_graph(std::istream& in) {
  auto parse_fail = [](int line, const std::string& msg) {
    fail(Errc::parse_error, "line " + std::to_string(line) + ": " + msg);
  };
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::tuple<int, int, Rational, int>> pending;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    auto hash = sv.find('#');
    if (hash != std::string_view::npos) sv = sv.substr(0, hash);
    std::istringstream ls{std::string(sv)};
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (n < 0) {
      if (toks.size() != 2 || toks[0] != "n")
        parse_fail(lineno, "expected header 'n <count>', got '" + line + "'");
      try {
        n = std::stoi(toks[1]);
      } catch (const std::exception&) {
        parse_fail(lineno, "bad vertex count '" + toks[1] + "'");
      }
      if (n < 1) parse_fail(lineno, "vertex count must be >= 1");
      continue;
    }
    if (toks.size() != 3) parse_fail(lineno, "expected edge 'u v w', got '" + line + "'");
    int u = 0, v = 0;
    try {
      u = std::stoi(toks[0]);
      v = std::stoi(toks[1]);
    } catch (const std::exception&) {
      parse_fail(lineno, "bad vertex index in '" + line + "'");
    }
    Rational w;
    try {
      w = Rational::parse(toks[2]);
    } catch (const Error&) {
      parse_fail(lineno, "bad weight '" + toks[2] + "'");
    }
    pending.emplace_back(u, v, w, lineno);
  }
  if (n < 0) fail(Errc::parse_error, "missing header 'n <count>'");
  Graph g(n);
  for (const auto& [u, v, w, ln] : pending) {
    try {
      g.add_edge(u, v, w);
    } catch (const Error& e) {
      fail(e.code(), "line " + std::to_string(ln) + ": " + e.what());
    }
  }
  return g;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open graph file '" + path + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.n() << "\n";
  for (const auto& e : g.edges()) out << e.u << " " << e.v << " " << e.w.str() << "\n";
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot open output file '" + path + "'");
  write_graph(out, g);
  if (!out.flush()) fail(Errc::io_error, "failed writing '" + path + "'");
}

}  // namespace coarse
