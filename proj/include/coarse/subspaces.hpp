#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coarse/quasigeodesic.hpp"

namespace coarse {

// A labelled nonempty subset of the vertex set; points are kept sorted and
// deduplicated.
struct Subspace {
  std::vector<int> points;
  std::string label;

  Subspace() = default;
  Subspace(std::vector<int> pts, std::string lbl, int n);

  bool contains(int p) const;
};

// Bounded search for a (lambda, c)-quasigeodesic from `from` to `to` whose
// image stays inside `allowed` (sorted vertex list). Route one is the
// induced-subgraph shortest path with cumulative parameters; route two is a
// DFS over point sequences with unit parameter steps, pruned by the pair
// inequalities and capped by `budget` expansions. Returns the first verified
// candidate; nullopt means the search was exhausted or ran out of budget
// (`budget_exhausted` tells which).
struct QGSearchResult {
  std::optional<ParamPath> path;
  bool budget_exhausted = false;
};
QGSearchResult search_qg_within(const Graph& g, const FiniteMetricSpace& space,
                                const std::vector<int>& allowed, int from, int to,
                                const QGParams& q, long budget);

struct PairCertificate {
  int a = 0;
  int b = 0;
  ParamPath path;
};

struct CertifyResult {
  enum class Status { certified, unknown };

  Status status = Status::certified;
  std::vector<PairCertificate> certificates;          // one per unordered pair when certified
  std::optional<std::pair<int, int>> undecided_pair;  // first pair that exhausted its budget

  bool is_certified() const { return status == Status::certified; }
};

// Sound, incomplete certification that A is a (lambda, c)-quasigeodesic
// subspace: CERTIFIED comes with a verified witness path per pair, UNKNOWN
// never lies.
CertifyResult certify_qg_subspace(const Graph& g, const FiniteMetricSpace& space,
                                  const Subspace& A, const QGParams& q, long budget);

struct SpliceWitness {
  int w = 0;        // shared point of A and B
  int c = 0;        // vertex on an enumerated a-b geodesic
  int a_prime = 0;  // qgA sample near c
  int b_prime = 0;  // qgB sample near c
  Rational s_a;     // parameter of a_prime on qgA
  Rational s_b;     // parameter of b_prime on qgB
  Rational t;       // output domain length: s_a + t_b - s_b
};

struct SpliceResult {
  ParamPath path;
  SpliceWitness witness;
  QGVerdict verdict;   // verification at (1, bound_c)
  Rational bound_c;    // 4c + 2r + 2delta + 4 * max edge weight
};

// The union construction: joins qgA (a -> w inside A) and qgB (w -> b inside
// B) through the best splice point on an enumerated a-b geodesic. Throws
// BoundMissed if the result fails verify_qg at (1, bound_c).
SpliceResult splice_union(const Graph& g, const FiniteMetricSpace& space, const Subspace& A,
                          const Subspace& B, const ParamPath& qgA, const ParamPath& qgB,
                          const QGParams& q, const Rational& delta, const Rational& r,
                          int geodesic_cap = 32);

struct TriangleExperimentRecord {
  enum class Status { found, short_side, exhausted };

  int a = 0, b = 0, c = 0;
  int x = 0;                   // vertex of [a,b] furthest from the other two sides
  Rational x_distance;         // that distance
  Status status = Status::exhausted;
  std::optional<int> x_a, x_b;  // truncation points (absent in the short-side case)
  Rational half_target;         // (c+1)/2
  Rational xa_gap, xb_gap;      // achieved |d(x_*, x) - half_target|
  std::vector<int> y_points;    // the four-segment union
  std::optional<ParamPath> found_path;
  std::optional<int> z;            // first found-path point on [a,c] or [b,c]
  std::optional<Rational> d_xa_z;  // d(x_a, z) when z exists
  Rational bound;                  // lambda^2 (2c+1) + c + 2 * max edge weight
  bool bound_holds = false;
};

// The four-segment experiment: truncates [a,b] around its furthest point,
// searches the segment union for a quasigeodesic between the truncation
// points, and checks the crossing distance bound.
TriangleExperimentRecord triangle_experiment(const Graph& g, const FiniteMetricSpace& space, int a,
                                             int b, int c, const QGParams& q, long budget,
                                             int geodesic_cap = 32);

struct UnionCheckResult {
  bool pass = false;
  std::optional<std::pair<int, int>> undecided_pair;
};

// Tree analog: with A and B geodesically convex and intersecting, A U B is
// again certified (1, 0). Throws NotATree / EmptyIntersection, and
// Precondition if A or B itself fails (1, 0) certification.
UnionCheckResult union_geodesic_check_tree(const Graph& g, const FiniteMetricSpace& space,
                                           const Subspace& A, const Subspace& B,
                                           long budget = 100000);

}  // namespace coarse
