#include "coarse/subspaces.hpp"

#include <algorithm>
#include <limits>

#include "coarse/error.hpp"

namespace coarse {

Subspace::Subspace(std::vector<int> pts, std::string lbl, int n)
    : points(std::move(pts)), label(std::move(lbl)) {
  if (points.empty()) fail(Errc::empty_subspace, "subspace '" + label + "' has no points");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (int p : points)
    if (p < 0 || p >= n)
      fail(Errc::precondition,
           "subspace '" + label + "' point " + std::to_string(p) + " outside the space");
}

bool Subspace::contains(int p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

namespace {

bool in_sorted(const std::vector<int>& sorted, int p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

// Induced-subgraph shortest path with deterministic reconstruction (lowest
// predecessor index). Empty result when `to` is unreachable inside `allowed`.
std::vector<int> induced_shortest_path(const Graph& g, const FiniteMetricSpace& space,
                                       const std::vector<int>& allowed, int from, int to) {
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  const std::int64_t scale = space.scale();
  auto weight_scaled = [&](const Rational& w) {
    if (scale % w.den() != 0)
      fail(Errc::precondition, "graph weights do not match the space's scale");
    return static_cast<std::int64_t>((__int128)w.num() * (scale / w.den()));
  };
  const int m = static_cast<int>(allowed.size());
  auto local_of = [&](int v) {
    auto it = std::lower_bound(allowed.begin(), allowed.end(), v);
    return it != allowed.end() && *it == v ? static_cast<int>(it - allowed.begin()) : -1;
  };
  std::vector<std::int64_t> dist(static_cast<std::size_t>(m), kInf);
  std::vector<char> done(static_cast<std::size_t>(m), 0);
  dist[static_cast<std::size_t>(local_of(from))] = 0;
  for (int round = 0; round < m; ++round) {
    int u = -1;
    std::int64_t best = kInf;
    for (int i = 0; i < m; ++i)
      if (!done[static_cast<std::size_t>(i)] && dist[static_cast<std::size_t>(i)] < best) {
        best = dist[static_cast<std::size_t>(i)];
        u = i;
      }
    if (u < 0) break;
    done[static_cast<std::size_t>(u)] = 1;
    for (const auto& [v, w] : g.neighbors(allowed[static_cast<std::size_t>(u)])) {
      int lv = local_of(v);
      if (lv < 0) continue;
      std::int64_t cand = best + weight_scaled(w);
      if (cand < dist[static_cast<std::size_t>(lv)]) dist[static_cast<std::size_t>(lv)] = cand;
    }
  }
  int lt = local_of(to);
  if (dist[static_cast<std::size_t>(lt)] >= kInf) return {};
  std::vector<int> rev{to};
  int cur = lt;
  while (allowed[static_cast<std::size_t>(cur)] != from) {
    int pick = -1;
    for (const auto& [v, w] : g.neighbors(allowed[static_cast<std::size_t>(cur)])) {
      int lv = local_of(v);
      if (lv < 0) continue;
      if (dist[static_cast<std::size_t>(lv)] + weight_scaled(w) ==
          dist[static_cast<std::size_t>(cur)]) {
        if (pick < 0 || v < allowed[static_cast<std::size_t>(pick)]) pick = lv;
      }
    }
    if (pick < 0) return {};  // unreachable in practice
    rev.push_back(allowed[static_cast<std::size_t>(pick)]);
    cur = pick;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace

QGSearchResult search_qg_within(const Graph& g, const FiniteMetricSpace& space,
                                const std::vector<int>& allowed, int from, int to,
                                const QGParams& q, long budget) {
  if (allowed.empty()) fail(Errc::empty_subspace, "search over an empty point set");
  if (!in_sorted(allowed, from) || !in_sorted(allowed, to))
    fail(Errc::precondition, "search endpoints must lie in the allowed set");
  if (budget < 1) fail(Errc::precondition, "budget must be >= 1");

  QGSearchResult result;
  if (from == to) {
    ParamPath trivial({Rational(0)}, {from});
    result.path = trivial;
    return result;
  }

  // Route one: the induced-subgraph shortest path, cumulatively parameterized.
  std::vector<int> induced = induced_shortest_path(g, space, allowed, from, to);
  if (!induced.empty()) {
    ParamPath candidate = ParamPath::from_vertex_path(g, VertexPath{induced});
    if (verify_qg(space, candidate, q).pass) {
      result.path = std::move(candidate);
      return result;
    }
  }

  // Route two: DFS over point sequences with unit parameter steps. A branch
  // dies as soon as any sample pair violates the two-sided inequality, and
  // the endpoint lower bound caps the depth.
  const Rational d_end = space.dist(from, to);
  const Rational max_t = q.lambda * (d_end + q.c);
  long work = 0;

  std::vector<int> current{from};
  struct Frame {
    std::size_t next_idx = 0;
  };
  std::vector<Frame> stack{{}};
  auto feasible_append = [&](int v) {
    const Rational tk(static_cast<std::int64_t>(current.size()));
    for (std::size_t i = 0; i < current.size(); ++i) {
      const Rational dt = tk - Rational(static_cast<std::int64_t>(i));
      const Rational d = space.dist(current[i], v);
      if (dt / q.lambda - q.c > d) return false;
      if (d > q.lambda * dt + q.c) return false;
    }
    return true;
  };
  while (!stack.empty()) {
    Frame& f = stack.back();
    bool advanced = false;
    if (Rational(static_cast<std::int64_t>(current.size())) <= max_t) {
      while (f.next_idx < allowed.size()) {
        int v = allowed[f.next_idx++];
        if (!feasible_append(v)) continue;
        if (++work > budget) {
          result.budget_exhausted = true;
          return result;
        }
        current.push_back(v);
        if (v == to) {
          std::vector<Rational> params;
          params.reserve(current.size());
          for (std::size_t i = 0; i < current.size(); ++i)
            params.emplace_back(static_cast<std::int64_t>(i));
          ParamPath candidate(std::move(params), current);
          if (verify_qg(space, candidate, q).pass) {
            result.path = std::move(candidate);
            return result;
          }
        }
        stack.push_back({});
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      stack.pop_back();
      current.pop_back();
    }
  }
  return result;
}

CertifyResult certify_qg_subspace(const Graph& g, const FiniteMetricSpace& space,
                                  const Subspace& A, const QGParams& q, long budget) {
  if (A.points.empty()) fail(Errc::empty_subspace, "cannot certify an empty subspace");
  CertifyResult result;
  for (std::size_t i = 0; i < A.points.size(); ++i) {
    for (std::size_t j = i + 1; j < A.points.size(); ++j) {
      int a = A.points[i], b = A.points[j];
      QGSearchResult search = search_qg_within(g, space, A.points, a, b, q, budget);
      if (!search.path) {
        result.status = CertifyResult::Status::unknown;
        result.undecided_pair = {a, b};
        return result;
      }
      result.certificates.push_back({a, b, std::move(*search.path)});
    }
  }
  result.status = CertifyResult::Status::certified;
  return result;
}

SpliceResult splice_union(const Graph& g, const FiniteMetricSpace& space, const Subspace& A,
                          const Subspace& B, const ParamPath& qgA, const ParamPath& qgB,
                          const QGParams& q, const Rational& delta, const Rational& r,
                          int geodesic_cap) {
  if (!A.contains(qgA.points.back()) || !B.contains(qgA.points.back()))
    fail(Errc::no_intersection, "the joint endpoint of the two quasigeodesics must lie in both "
                                "subspaces");
  const int w = qgA.points.back();
  if (qgB.points.front() != w)
    fail(Errc::precondition, "qgA must end where qgB starts (the shared point)");
  for (int p : qgA.points)
    if (!A.contains(p)) fail(Errc::precondition, "qgA leaves subspace " + A.label);
  for (int p : qgB.points)
    if (!B.contains(p)) fail(Errc::precondition, "qgB leaves subspace " + B.label);
  if (!verify_qg(space, qgA, q).pass || !verify_qg(space, qgB, q).pass)
    fail(Errc::precondition, "input paths must pass verify_qg at the stated constants");
  if (delta < Rational(0) || r < Rational(0))
    fail(Errc::precondition, "delta and r must be nonnegative");

  const int a = qgA.points.front();
  const int b = qgB.points.back();
  auto geodesics = enumerate_geodesics(g, space, a, b, geodesic_cap);

  // Best splice point: minimize max(d(a', c), d(b', c)) over enumerated
  // geodesic vertices c and sample points of both quasigeodesics. The two
  // minima are independent for fixed c. A candidate that would collapse the
  // output to a single parameter while a != b (s_a = 0 with s_b at the very
  // end) cannot realize both endpoints and is skipped.
  const std::size_t last_b = qgB.size() - 1;
  const bool distinct_ends = a != b;
  std::int64_t best_m = -1;
  int best_c = -1;
  std::size_t best_ia = 0, best_ib = 0;
  for (const auto& geo : geodesics.paths) {
    for (int cv : geo.vertices) {
      const std::int64_t* row = space.idist_row(cv);
      std::int64_t min_a = std::numeric_limits<std::int64_t>::max();
      std::int64_t min_b = min_a;
      for (int p : qgA.points) min_a = std::min(min_a, row[p]);
      for (int p : qgB.points) min_b = std::min(min_b, row[p]);
      const std::int64_t m = std::max(min_a, min_b);
      if (best_m >= 0 && m >= best_m) continue;
      // Lexicographically first admissible sample pair at threshold m.
      std::size_t ia = 0;
      while (row[qgA.points[ia]] > m) ++ia;
      std::size_t ib = 0;
      while (row[qgB.points[ib]] > m) ++ib;
      if (distinct_ends && ia == 0 && ib == last_b) {
        // ib being last_b and first admissible means it is the only b-side
        // choice, so the next pair in lexicographic order advances ia.
        std::size_t ia2 = ia + 1;
        while (ia2 < qgA.size() && row[qgA.points[ia2]] > m) ++ia2;
        if (ia2 == qgA.size()) continue;  // no admissible non-degenerate pair at this c
        ia = ia2;
      }
      best_m = m;
      best_c = cv;
      best_ia = ia;
      best_ib = ib;
    }
  }
  if (best_c < 0) fail(Errc::precondition, "no admissible splice point found");

  SpliceWitness witness;
  witness.w = w;
  witness.c = best_c;
  witness.a_prime = qgA.points[best_ia];
  witness.b_prime = qgB.points[best_ib];
  witness.s_a = qgA.params[best_ia];
  witness.s_b = qgB.params[best_ib];
  const Rational t_b = qgB.domain_length();
  witness.t = witness.s_a + t_b - witness.s_b;

  // Assemble: qgA on [0, s_a], then qgB shifted by s_a - s_b. At the junction
  // the a-side sample wins unless it is also the final parameter, where the
  // endpoint must be b.
  std::vector<Rational> params;
  std::vector<int> points;
  if (witness.t == Rational(0)) {
    params.push_back(0);
    points.push_back(a);
  } else {
    for (std::size_t i = 0; i < qgA.size() && qgA.params[i] < witness.s_a; ++i) {
      params.push_back(qgA.params[i]);
      points.push_back(qgA.points[i]);
    }
    if (witness.s_a < witness.t) {
      params.push_back(witness.s_a);
      points.push_back(witness.a_prime);
    }
    bool b_side_sampled = false;
    for (std::size_t j = 0; j < qgB.size(); ++j) {
      if (qgB.params[j] > witness.s_b) {
        params.push_back(qgB.params[j] - witness.s_b + witness.s_a);
        points.push_back(qgB.points[j]);
        b_side_sampled = true;
      }
    }
    if (!b_side_sampled) {
      params.push_back(witness.t);
      points.push_back(b);
    }
  }

  SpliceResult result;
  result.path = ParamPath(std::move(params), std::move(points));
  result.witness = witness;
  if (result.path.endpoints() != std::make_pair(a, b))
    fail(Errc::precondition, "internal: splice endpoints drifted");

  result.bound_c = Rational(4) * q.c + Rational(2) * r + Rational(2) * delta +
                   Rational(4) * g.max_edge_weight();
  result.verdict = verify_qg(space, result.path, QGParams(Rational(1), result.bound_c));
  if (!result.verdict.pass) {
    fail(Errc::bound_missed,
         "spliced path misses (1, " + result.bound_c.str() + "): worst pair (" +
             std::to_string(result.verdict.i) + ", " + std::to_string(result.verdict.j) +
             ") violates the " +
             (result.verdict.side == QGVerdict::Side::lower ? "lower" : "upper") + " bound by " +
             result.verdict.violation.str());
  }
  return result;
}

TriangleExperimentRecord triangle_experiment(const Graph& g, const FiniteMetricSpace& space, int a,
                                             int b, int c, const QGParams& q, long budget,
                                             int geodesic_cap) {
  if (a == b || b == c || a == c) fail(Errc::precondition, "triangle points must be distinct");
  space.check_point(a, "triangle point");
  space.check_point(b, "triangle point");
  space.check_point(c, "triangle point");

  auto first_geodesic = [&](int u, int v) {
    auto e = enumerate_geodesics(g, space, u, v, geodesic_cap);
    return e.paths.front();
  };
  const VertexPath side_ab = first_geodesic(a, b);
  const VertexPath side_bc = first_geodesic(b, c);
  const VertexPath side_ac = first_geodesic(a, c);

  std::vector<int> other_union = side_bc.vertices;
  other_union.insert(other_union.end(), side_ac.vertices.begin(), side_ac.vertices.end());
  std::sort(other_union.begin(), other_union.end());
  other_union.erase(std::unique(other_union.begin(), other_union.end()), other_union.end());

  TriangleExperimentRecord record;
  record.a = a;
  record.b = b;
  record.c = c;
  record.half_target = (q.c + Rational(1)) / Rational(2);
  record.bound = q.lambda * q.lambda * (Rational(2) * q.c + Rational(1)) + q.c +
                 Rational(2) * g.max_edge_weight();

  // The point of [a,b] furthest from the union of the other two sides.
  std::size_t pos_x = 0;
  Rational best_dist(-1);
  for (std::size_t i = 0; i < side_ab.vertices.size(); ++i) {
    Rational d = dist_point_to_set(space, side_ab.vertices[i], other_union);
    if (d > best_dist || (d == best_dist && side_ab.vertices[i] < side_ab.vertices[pos_x])) {
      best_dist = d;
      pos_x = i;
    }
  }
  record.x = side_ab.vertices[pos_x];
  record.x_distance = best_dist;

  const Rational c_plus_1 = q.c + Rational(1);
  if (space.dist(a, record.x) <= c_plus_1 || space.dist(b, record.x) <= c_plus_1) {
    record.status = TriangleExperimentRecord::Status::short_side;
    return record;
  }

  // Truncation points at the grid value nearest to (c+1)/2 from x, measured
  // along the geodesic; ties resolve toward x.
  auto truncate_toward = [&](bool towards_a) {
    std::size_t best_pos = pos_x;
    Rational best_gap = record.half_target;  // gap at x itself (distance 0)
    Rational along = 0;
    std::size_t steps = towards_a ? pos_x : side_ab.vertices.size() - 1 - pos_x;
    std::size_t cur = pos_x;
    for (std::size_t s = 0; s < steps; ++s) {
      std::size_t nxt = towards_a ? cur - 1 : cur + 1;
      along += space.dist(side_ab.vertices[cur], side_ab.vertices[nxt]);
      Rational gap = abs(along - record.half_target);
      if (gap < best_gap) {
        best_gap = gap;
        best_pos = nxt;
      }
      cur = nxt;
      if (along > record.half_target + record.half_target) break;  // past any closer value
    }
    return std::make_pair(best_pos, best_gap);
  };
  auto [pos_xa, gap_a] = truncate_toward(true);
  auto [pos_xb, gap_b] = truncate_toward(false);
  record.x_a = side_ab.vertices[pos_xa];
  record.x_b = side_ab.vertices[pos_xb];
  record.xa_gap = gap_a;
  record.xb_gap = gap_b;

  std::vector<int> y(side_ab.vertices.begin(), side_ab.vertices.begin() + pos_xa + 1);
  y.insert(y.end(), side_ab.vertices.begin() + pos_xb, side_ab.vertices.end());
  y.insert(y.end(), side_bc.vertices.begin(), side_bc.vertices.end());
  y.insert(y.end(), side_ac.vertices.begin(), side_ac.vertices.end());
  std::sort(y.begin(), y.end());
  y.erase(std::unique(y.begin(), y.end()), y.end());
  record.y_points = y;

  QGSearchResult search = search_qg_within(g, space, y, *record.x_a, *record.x_b, q, budget);
  if (!search.path) {
    record.status = TriangleExperimentRecord::Status::exhausted;
    return record;
  }
  record.status = TriangleExperimentRecord::Status::found;
  record.found_path = std::move(search.path);

  for (int p : record.found_path->points) {
    if (in_sorted(other_union, p)) {
      record.z = p;
      record.d_xa_z = space.dist(*record.x_a, p);
      break;
    }
  }
  record.bound_holds = record.z.has_value() && *record.d_xa_z <= record.bound;
  return record;
}

UnionCheckResult union_geodesic_check_tree(const Graph& g, const FiniteMetricSpace& space,
                                           const Subspace& A, const Subspace& B, long budget) {
  if (!g.is_tree()) fail(Errc::not_a_tree, "union check requires a tree");
  std::vector<int> inter;
  std::set_intersection(A.points.begin(), A.points.end(), B.points.begin(), B.points.end(),
                        std::back_inserter(inter));
  if (inter.empty()) fail(Errc::empty_intersection, "subspaces share no point");

  const QGParams geodesic_params(Rational(1), Rational(0));
  if (!certify_qg_subspace(g, space, A, geodesic_params, budget).is_certified())
    fail(Errc::precondition, "subspace " + A.label + " is not geodesically convex");
  if (!certify_qg_subspace(g, space, B, geodesic_params, budget).is_certified())
    fail(Errc::precondition, "subspace " + B.label + " is not geodesically convex");

  std::vector<int> union_points;
  std::set_union(A.points.begin(), A.points.end(), B.points.begin(), B.points.end(),
                 std::back_inserter(union_points));
  Subspace u(std::move(union_points), A.label + "+" + B.label, space.n());
  CertifyResult res = certify_qg_subspace(g, space, u, geodesic_params, budget);
  UnionCheckResult out;
  out.pass = res.is_certified();
  out.undecided_pair = res.undecided_pair;
  return out;
}

}  // namespace coarse
