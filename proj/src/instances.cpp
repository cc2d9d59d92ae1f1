#include "coarse/instances.hpp"

#include <algorithm>

#include "coarse/error.hpp"

namespace coarse {

ParamPath make_detour_path(const Graph& g, const FiniteMetricSpace& space, int from, int to,
                           std::uint64_t seed) {
  g.check_vertex(from, "path endpoint");
  g.check_vertex(to, "path endpoint");
  SplitMix64 rng(seed);

  // Walk a shortest path; before each forward step possibly bounce into a
  // random neighbor and back. The walk stays finite because every forward
  // step strictly reduces the distance to `to`.
  std::vector<int> walk{from};
  int cur = from;
  while (cur != to) {
    if (rng.next_below(3) == 0) {
      const auto& nbrs = g.neighbors(cur);
      int other = nbrs[rng.next_below(nbrs.size())].first;
      walk.push_back(other);
      walk.push_back(cur);
    }
    // Deterministic choice among neighbors that reduce distance to `to`.
    std::vector<int> closer;
    for (const auto& [v, w] : g.neighbors(cur)) {
      (void)w;
      if (space.dist(v, to) < space.dist(cur, to)) closer.push_back(v);
    }
    cur = closer[rng.next_below(closer.size())];
    walk.push_back(cur);
  }
  return ParamPath::from_vertex_path(g, VertexPath{walk});
}

std::array<int, 2> pick_far_pair(const FiniteMetricSpace& space, std::uint64_t seed,
                                 const Rational& min_dist) {
  SplitMix64 rng(seed);
  const int n = space.n();
  int best_a = 0, best_b = 0;
  Rational best(-1);
  for (int attempt = 0; attempt < 12; ++attempt) {
    int a = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    int b = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    if (space.dist(a, b) > best) {
      best = space.dist(a, b);
      best_a = a;
      best_b = b;
    }
    if (best >= min_dist) break;
  }
  return {best_a, best_b};
}

std::array<int, 3> pick_triangle(const FiniteMetricSpace& space, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int n = space.n();
  if (n < 3) fail(Errc::precondition, "triangle needs at least 3 points");
  auto draw = [&]() { return static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n))); };
  int a = draw();
  int b = a, c = a;
  Rational best(-1);
  for (int attempt = 0; attempt < 12; ++attempt) {
    int cand = draw();
    if (cand != a && space.dist(a, cand) > best) {
      best = space.dist(a, cand);
      b = cand;
    }
  }
  if (b == a) b = (a + 1) % n;
  best = Rational(-1);
  for (int attempt = 0; attempt < 12; ++attempt) {
    int cand = draw();
    if (cand == a || cand == b) continue;
    Rational score = min(space.dist(a, cand), space.dist(b, cand));
    if (score > best) {
      best = score;
      c = cand;
    }
  }
  if (c == a || c == b) {
    for (int cand = 0; cand < n; ++cand)
      if (cand != a && cand != b) {
        c = cand;
        break;
      }
  }
  return {a, b, c};
}

SpliceInstance make_splice_instance(const Graph& g, const FiniteMetricSpace& space,
                                    const Rational& delta, std::uint64_t seed, int geodesic_cap) {
  SplitMix64 rng(seed);
  const int n = space.n();
  SpliceInstance inst;
  inst.w = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
  // Endpoints drawn away from w when the graph has any spread.
  auto draw_far_from_w = [&]() {
    int best = inst.w;
    Rational best_d(-1);
    for (int attempt = 0; attempt < 8; ++attempt) {
      int cand = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
      if (space.dist(cand, inst.w) > best_d) {
        best_d = space.dist(cand, inst.w);
        best = cand;
      }
    }
    return best;
  };
  inst.a = draw_far_from_w();
  inst.b = draw_far_from_w();

  inst.qgA = make_detour_path(g, space, inst.a, inst.w, rng.next());
  inst.qgB = make_detour_path(g, space, inst.w, inst.b, rng.next());
  inst.A = Subspace(inst.qgA.image(), "A", n);
  inst.B = Subspace(inst.qgB.image(), "B", n);

  Rational fitted = max(fit_c(space, inst.qgA, Rational(1)), fit_c(space, inst.qgB, Rational(1)));
  inst.q = QGParams(Rational(1), fitted);
  inst.r = max(morse_radius(g, space, inst.qgA, geodesic_cap).r,
               morse_radius(g, space, inst.qgB, geodesic_cap).r);
  inst.delta = delta;
  return inst;
}

std::vector<int> grow_connected_subset(const Graph& g, int anchor, int target_size,
                                       std::uint64_t seed) {
  g.check_vertex(anchor, "anchor");
  SplitMix64 rng(seed);
  std::vector<int> members{anchor};
  std::vector<char> in_set(static_cast<std::size_t>(g.n()), 0);
  in_set[static_cast<std::size_t>(anchor)] = 1;
  std::vector<int> frontier;
  auto extend_frontier = [&](int v) {
    for (const auto& [u, w] : g.neighbors(v)) {
      (void)w;
      if (!in_set[static_cast<std::size_t>(u)]) frontier.push_back(u);
    }
  };
  extend_frontier(anchor);
  while (static_cast<int>(members.size()) < target_size && !frontier.empty()) {
    std::size_t pick = rng.next_below(frontier.size());
    int v = frontier[pick];
    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(pick));
    if (in_set[static_cast<std::size_t>(v)]) continue;
    in_set[static_cast<std::size_t>(v)] = 1;
    members.push_back(v);
    extend_frontier(v);
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace coarse
