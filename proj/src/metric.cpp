#include "coarse/metric.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "coarse/error.hpp"

namespace coarse {

namespace {

constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  __int128 l = (__int128)(a / std::gcd(a, b)) * b;
  if (l > std::numeric_limits<std::int64_t>::max())
    fail(Errc::overflow, "distance denominators too large to share a scale");
  return static_cast<std::int64_t>(l);
}

}  // namespace

void FiniteMetricSpace::check_point(int p, const char* what) const {
  if (p < 0 || p >= n_)
    fail(Errc::precondition, std::string(what) + " " + std::to_string(p) + " out of range [0, " +
                                 std::to_string(n_) + ")");
}

void FiniteMetricSpace::fill_rationals() {
  rdist_.resize(idist_.size());
  for (std::size_t i = 0; i < idist_.size(); ++i) rdist_[i] = Rational(idist_[i], scale_);
}

void FiniteMetricSpace::validate() const {
  std::size_t n = static_cast<std::size_t>(n_);
  for (std::size_t i = 0; i < n; ++i) {
    if (idist_[i * n + i] != 0) fail(Errc::invalid_spec, "nonzero self-distance");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (idist_[i * n + j] != idist_[j * n + i]) fail(Errc::invalid_spec, "asymmetric table");
      if (idist_[i * n + j] <= 0) fail(Errc::invalid_spec, "non-positive off-diagonal distance");
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t* dj = idist_.data() + j * n;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t dij = idist_[i * n + j];
      const std::int64_t* di = idist_.data() + i * n;
      for (std::size_t k = 0; k < n; ++k) {
        if (di[k] > dij + dj[k]) fail(Errc::invalid_spec, "triangle inequality violated");
      }
    }
  }
}

FiniteMetricSpace FiniteMetricSpace::from_table(const std::vector<std::vector<Rational>>& table) {
  int n = static_cast<int>(table.size());
  if (n < 1) fail(Errc::invalid_spec, "empty distance table");
  std::int64_t scale = 1;
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) fail(Errc::invalid_spec, "ragged distance table");
    for (const auto& r : row) scale = lcm_checked(scale, r.den());
  }
  FiniteMetricSpace s;
  s.n_ = n;
  s.scale_ = scale;
  s.idist_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& r = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      __int128 v = (__int128)r.num() * (scale / r.den());
      if (v > std::numeric_limits<std::int64_t>::max() / 8 || v < 0)
        fail(Errc::overflow, "scaled distance out of range");
      s.idist_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(j)] = static_cast<std::int64_t>(v);
    }
  s.validate();
  s.fill_rationals();
  return s;
}

FiniteMetricSpace build_space(const Graph& g) {
  const int n = g.n();
  std::int64_t scale = 1;
  for (const auto& e : g.edges()) scale = lcm_checked(scale, e.w.den());

  FiniteMetricSpace s;
  s.n_ = n;
  s.scale_ = scale;
  std::size_t nn = static_cast<std::size_t>(n);
  s.idist_.assign(nn * nn, kUnreachable);
  for (std::size_t i = 0; i < nn; ++i) s.idist_[i * nn + i] = 0;
  for (const auto& e : g.edges()) {
    __int128 w = (__int128)e.w.num() * (scale / e.w.den());
    if (w <= 0 || (__int128)w * n > kUnreachable)
      fail(Errc::overflow, "edge weights too large for exact scaling");
    auto wi = static_cast<std::int64_t>(w);
    std::size_t u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    s.idist_[u * nn + v] = std::min(s.idist_[u * nn + v], wi);
    s.idist_[v * nn + u] = std::min(s.idist_[v * nn + u], wi);
  }
  // Floyd-Warshall on the scaled integers; exact throughout.
  for (std::size_t k = 0; k < nn; ++k) {
    const std::int64_t* dk = s.idist_.data() + k * nn;
    for (std::size_t i = 0; i < nn; ++i) {
      std::int64_t dik = s.idist_[i * nn + k];
      if (dik >= kUnreachable) continue;
      std::int64_t* di = s.idist_.data() + i * nn;
      for (std::size_t j = 0; j < nn; ++j) {
        std::int64_t cand = dik + dk[j];
        if (cand < di[j]) di[j] = cand;
      }
    }
  }
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j)
      if (s.idist_[i * nn + j] >= kUnreachable)
        fail(Errc::disconnected_graph, "vertices " + std::to_string(i) + " and " +
                                           std::to_string(j) + " are not connected");
  s.fill_rationals();
  return s;
}

GeodesicEnumeration enumerate_geodesics(const Graph& g, const FiniteMetricSpace& space, int a,
                                        int b, int cap) {
  g.check_vertex(a, "geodesic endpoint");
  g.check_vertex(b, "geodesic endpoint");
  if (cap < 1) fail(Errc::precondition, "geodesic cap must be >= 1");

  GeodesicEnumeration out;
  const std::int64_t total = space.idist(a, b);
  std::int64_t scale = space.scale();
  auto weight_scaled = [&](const Rational& w) {
    if (scale % w.den() != 0)
      fail(Errc::precondition, "graph weights do not match the space's scale");
    return static_cast<std::int64_t>((__int128)w.num() * (scale / w.den()));
  };

  // Iterative DFS over the shortest-path DAG; children ascend by index, so
  // paths come out in lexicographic vertex order.
  std::vector<int> current{a};
  std::vector<std::int64_t> at_dist{0};
  struct Frame {
    int vertex;
    std::size_t next_child;
  };
  std::vector<Frame> stack{{a, 0}};
  bool overflowed = false;
  while (!stack.empty() && !overflowed) {
    Frame& f = stack.back();
    int u = f.vertex;
    std::int64_t du = at_dist.back();
    if (u == b && du == total && f.next_child == 0 && (u != a || total == 0)) {
      if (static_cast<int>(out.paths.size()) == cap) {
        overflowed = true;
        break;
      }
      out.paths.push_back(VertexPath{current});
      // A geodesic cannot extend past its far endpoint; backtrack.
      stack.pop_back();
      current.pop_back();
      at_dist.pop_back();
      continue;
    }
    const auto& nbrs = g.neighbors(u);
    bool advanced = false;
    while (f.next_child < nbrs.size()) {
      const auto& [v, w] = nbrs[f.next_child++];
      std::int64_t dv = du + weight_scaled(w);
      if (dv + space.idist(v, b) == total && dv == space.idist(a, v)) {
        current.push_back(v);
        at_dist.push_back(dv);
        stack.push_back({v, 0});
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      stack.pop_back();
      current.pop_back();
      at_dist.pop_back();
    }
  }
  out.truncated = overflowed;
  return out;
}

Rational dist_point_to_set(const FiniteMetricSpace& space, int x, std::span<const int> points) {
  if (points.empty()) fail(Errc::empty_set, "dist_point_to_set with empty set");
  space.check_point(x, "point");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  const std::int64_t* row = space.idist_row(x);
  for (int p : points) {
    space.check_point(p, "set member");
    best = std::min(best, row[p]);
  }
  return space.from_scaled(best);
}

Rational hausdorff_distance(const FiniteMetricSpace& space, std::span<const int> a,
                            std::span<const int> b) {
  if (a.empty() || b.empty()) fail(Errc::empty_set, "hausdorff_distance with empty set");
  std::int64_t worst = 0;
  auto one_sided = [&](std::span<const int> from, std::span<const int> to) {
    for (int x : from) {
      space.check_point(x, "set member");
      const std::int64_t* row = space.idist_row(x);
      std::int64_t nearest = std::numeric_limits<std::int64_t>::max();
      for (int y : to) {
        space.check_point(y, "set member");
        nearest = std::min(nearest, row[y]);
      }
      worst = std::max(worst, nearest);
    }
  };
  one_sided(a, b);
  one_sided(b, a);
  return space.from_scaled(worst);
}

bool is_geodesic(const Graph& g, const FiniteMetricSpace& space, const VertexPath& path) {
  if (path.vertices.empty()) fail(Errc::precondition, "empty path");
  return path.length(g) == space.dist(path.vertices.front(), path.vertices.back());
}

}  // namespace coarse
