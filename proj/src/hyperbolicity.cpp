#include "coarse/hyperbolicity.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "coarse/error.hpp"
#include "coarse/parallel.hpp"

namespace coarse {

const char* method_name(HyperbolicityReport::Method m) {
  return m == HyperbolicityReport::Method::four_point ? "four_point" : "slim";
}

Rational gromov_product(const FiniteMetricSpace& space, int x, int y, int w) {
  space.check_point(x, "point");
  space.check_point(y, "point");
  space.check_point(w, "point");
  return (space.dist(x, w) + space.dist(y, w) - space.dist(x, y)) / Rational(2);
}

namespace {

struct FourPointPartial {
  std::int64_t value2 = std::numeric_limits<std::int64_t>::min();  // 2 * scale * expr
  std::array<int, 4> witness{0, 0, 0, 0};
};

}  // namespace

HyperbolicityReport delta_four_point(const FiniteMetricSpace& space, int threads) {
  const int n = space.n();
  // One work unit per leading index; merging in x order keeps the witness
  // the lexicographically first maximizer for any thread count.
  std::vector<FourPointPartial> partials(static_cast<std::size_t>(n));
  parallel_for_index(n, threads, [&](std::int64_t xi) {
    const int x = static_cast<int>(xi);
    FourPointPartial best;
    const std::int64_t* dx = space.idist_row(x);
    for (int y = 0; y < n; ++y) {
      const std::int64_t* dy = space.idist_row(y);
      const std::int64_t dxy = dx[y];
      for (int z = 0; z < n; ++z) {
        const std::int64_t* dz = space.idist_row(z);
        const std::int64_t dyz = dy[z];
        const std::int64_t dxz = dx[z];
        for (int w = 0; w < n; ++w) {
          // Doubled Gromov products stay integral in the scaled units.
          const std::int64_t pxy = dx[w] + dy[w] - dxy;
          const std::int64_t pyz = dy[w] + dz[w] - dyz;
          const std::int64_t pxz = dx[w] + dz[w] - dxz;
          const std::int64_t v = std::min(pxy, pyz) - pxz;
          if (v > best.value2) {
            best.value2 = v;
            best.witness = {x, y, z, w};
          }
        }
      }
    }
    partials[static_cast<std::size_t>(xi)] = best;
  });

  FourPointPartial best;
  for (const auto& p : partials) {
    if (p.value2 > best.value2) best = p;
  }
  HyperbolicityReport report;
  report.method = HyperbolicityReport::Method::four_point;
  report.delta = max(Rational(0), Rational(best.value2, 2 * space.scale()));
  report.witness.assign(best.witness.begin(), best.witness.end());
  report.truncated = false;
  return report;
}

Rational reevaluate_four_point_witness(const FiniteMetricSpace& space,
                                       const std::vector<std::int64_t>& witness) {
  if (witness.size() != 4) fail(Errc::precondition, "four-point witness needs 4 points");
  int x = static_cast<int>(witness[0]), y = static_cast<int>(witness[1]);
  int z = static_cast<int>(witness[2]), w = static_cast<int>(witness[3]);
  Rational v = min(gromov_product(space, x, y, w), gromov_product(space, y, z, w)) -
               gromov_product(space, x, z, w);
  return max(Rational(0), v);
}

namespace {

struct SlimPartial {
  std::int64_t value = -1;  // scaled distance; -1 = nothing scanned
  std::array<std::int64_t, 7> witness{};
  bool truncated = false;
};

// Per-call scratch for the union-membership stamps.
struct UnionScratch {
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;
  std::vector<int> members;

  explicit UnionScratch(int n) : stamp(static_cast<std::size_t>(n), 0) {}

  void begin() {
    ++epoch;
    members.clear();
  }
  void add(int v) {
    if (stamp[static_cast<std::size_t>(v)] != epoch) {
      stamp[static_cast<std::size_t>(v)] = epoch;
      members.push_back(v);
    }
  }
  bool contains(int v) const { return stamp[static_cast<std::size_t>(v)] == epoch; }
};

}  // namespace

HyperbolicityReport delta_slim(const Graph& g, const FiniteMetricSpace& space, int geodesic_cap,
                               int threads) {
  const int n = space.n();
  HyperbolicityReport report;
  report.method = HyperbolicityReport::Method::slim;
  report.delta = Rational(0);
  report.truncated = false;
  if (n < 3) return report;

  // Geodesic enumerations for every unordered pair, computed once up front.
  std::vector<GeodesicEnumeration> pair_geodesics(static_cast<std::size_t>(n) *
                                                  static_cast<std::size_t>(n));
  std::atomic<bool> any_truncated{false};
  parallel_for_index(n, threads, [&](std::int64_t ui) {
    const int u = static_cast<int>(ui);
    for (int v = u + 1; v < n; ++v) {
      auto e = enumerate_geodesics(g, space, u, v, geodesic_cap);
      if (e.truncated) any_truncated.store(true, std::memory_order_relaxed);
      pair_geodesics[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(v)] = std::move(e);
    }
  });
  auto geodesics_of = [&](int u, int v) -> const GeodesicEnumeration& {
    if (u > v) std::swap(u, v);
    return pair_geodesics[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                          static_cast<std::size_t>(v)];
  };

  std::vector<SlimPartial> partials(static_cast<std::size_t>(n));
  parallel_for_index(n, threads, [&](std::int64_t ii) {
    const int i = static_cast<int>(ii);
    SlimPartial best;
    UnionScratch scratch(n);
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        // Every vertex of the triple takes the apex role once.
        const std::array<std::array<int, 3>, 3> roles{{{i, j, k}, {j, i, k}, {k, i, j}}};
        for (const auto& role : roles) {
          const int apex = role[0], s1 = role[1], s2 = role[2];
          const auto& g_ab = geodesics_of(apex, s1).paths;
          const auto& g_ac = geodesics_of(apex, s2).paths;
          const auto& g_bc = geodesics_of(s1, s2).paths;
          for (std::size_t ia = 0; ia < g_ab.size(); ++ia) {
            for (std::size_t ic = 0; ic < g_ac.size(); ++ic) {
              scratch.begin();
              for (int v : g_ab[ia].vertices) scratch.add(v);
              for (int v : g_ac[ic].vertices) scratch.add(v);
              for (std::size_t ib = 0; ib < g_bc.size(); ++ib) {
                for (int p : g_bc[ib].vertices) {
                  std::int64_t d = 0;
                  if (!scratch.contains(p)) {
                    d = std::numeric_limits<std::int64_t>::max();
                    const std::int64_t* row = space.idist_row(p);
                    for (int m : scratch.members) d = std::min(d, row[m]);
                  }
                  if (d > best.value) {
                    best.value = d;
                    best.witness = {apex,
                                    s1,
                                    s2,
                                    static_cast<std::int64_t>(ia),
                                    static_cast<std::int64_t>(ic),
                                    static_cast<std::int64_t>(ib),
                                    p};
                  }
                }
              }
            }
          }
        }
      }
    }
    partials[static_cast<std::size_t>(ii)] = best;
  });

  SlimPartial best;
  for (const auto& p : partials) {
    if (p.value > best.value) best = p;
  }
  if (best.value >= 0) {
    report.delta = space.from_scaled(best.value);
    report.witness.assign(best.witness.begin(), best.witness.end());
  }
  report.truncated = any_truncated.load();
  return report;
}

Rational reevaluate_slim_witness(const Graph& g, const FiniteMetricSpace& space,
                                 const std::vector<std::int64_t>& witness, int geodesic_cap) {
  if (witness.size() != 7) fail(Errc::precondition, "slim witness needs 7 entries");
  int a = static_cast<int>(witness[0]), b = static_cast<int>(witness[1]),
      c = static_cast<int>(witness[2]);
  // delta_slim enumerates each pair from its smaller endpoint; match that so
  // the stored indices resolve to the same geodesics.
  auto fetch = [&](int u, int v, std::int64_t idx) -> VertexPath {
    if (u > v) std::swap(u, v);
    auto e = enumerate_geodesics(g, space, u, v, geodesic_cap);
    if (idx < 0 || idx >= static_cast<std::int64_t>(e.paths.size()))
      fail(Errc::precondition, "geodesic index out of range for witness");
    return e.paths[static_cast<std::size_t>(idx)];
  };
  VertexPath ab = fetch(a, b, witness[3]);
  VertexPath ac = fetch(a, c, witness[4]);
  VertexPath bc = fetch(b, c, witness[5]);
  int p = static_cast<int>(witness[6]);
  if (std::find(bc.vertices.begin(), bc.vertices.end(), p) == bc.vertices.end())
    fail(Errc::precondition, "witness point does not lie on the checked side");
  std::vector<int> side_union = ab.vertices;
  side_union.insert(side_union.end(), ac.vertices.begin(), ac.vertices.end());
  return dist_point_to_set(space, p, side_union);
}

}  // namespace coarse
