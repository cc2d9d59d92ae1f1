#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "coarse/graph.hpp"
#include "coarse/rational.hpp"

namespace coarse {

// Exact finite metric: n points and a symmetric distance table. Internally all
// distances are integers over one common scale (the lcm of denominators), so
// hot scans compare int64 and every value converts back exactly.
class FiniteMetricSpace {
 public:
  static FiniteMetricSpace from_table(const std::vector<std::vector<Rational>>& table);

  int n() const { return n_; }

  const Rational& dist(int i, int j) const {
    return rdist_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j)];
  }

  std::int64_t idist(int i, int j) const {
    return idist_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j)];
  }

  std::int64_t scale() const { return scale_; }
  const std::int64_t* idist_row(int i) const {
    return idist_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n_);
  }

  Rational from_scaled(std::int64_t v) const { return Rational(v, scale_); }

  void check_point(int p, const char* what) const;

 private:
  friend FiniteMetricSpace build_space(const Graph& g);
  FiniteMetricSpace() = default;
  void fill_rationals();
  void validate() const;

  int n_ = 0;
  std::int64_t scale_ = 1;
  std::vector<std::int64_t> idist_;
  std::vector<Rational> rdist_;
};

// All-pairs shortest-path metric of a connected graph.
// Throws DisconnectedGraph if some pair is unreachable.
FiniteMetricSpace build_space(const Graph& g);

struct GeodesicEnumeration {
  std::vector<VertexPath> paths;
  bool truncated = false;
};

// All shortest a-b paths, DFS over the shortest-path DAG with children in
// ascending vertex order. If more than cap exist, the first cap are returned
// and truncated is set.
GeodesicEnumeration enumerate_geodesics(const Graph& g, const FiniteMetricSpace& space, int a,
                                        int b, int cap);

Rational dist_point_to_set(const FiniteMetricSpace& space, int x, std::span<const int> points);
Rational hausdorff_distance(const FiniteMetricSpace& space, std::span<const int> a,
                            std::span<const int> b);

bool is_geodesic(const Graph& g, const FiniteMetricSpace& space, const VertexPath& path);

}  // namespace coarse
