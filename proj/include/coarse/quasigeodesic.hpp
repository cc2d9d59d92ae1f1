#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "coarse/metric.hpp"

namespace coarse {

// Quasigeodesic constants (lambda, c). lambda in (0,1) is normalized to 1:
// for the binding direction of each inequality such a map is also a
// (1, c)-quasigeodesic. lambda <= 0 or c < 0 is rejected.
struct QGParams {
  Rational lambda = 1;
  Rational c = 0;

  QGParams() = default;
  QGParams(Rational lambda_in, Rational c_in);
};

// A finitely sampled map from [0, t_m] into the space: strictly increasing
// parameters starting at 0, one point index per parameter. No continuity is
// required between consecutive points.
struct ParamPath {
  std::vector<Rational> params;
  std::vector<int> points;

  ParamPath() = default;
  ParamPath(std::vector<Rational> params_in, std::vector<int> points_in);

  static ParamPath from_vertex_path(const Graph& g, const VertexPath& path);

  std::size_t size() const { return points.size(); }
  std::pair<int, int> endpoints() const;
  Rational domain_length() const;
  // Distinct visited points, sorted ascending.
  std::vector<int> image() const;
};

struct QGVerdict {
  enum class Side { none, lower, upper };

  bool pass = true;
  std::size_t i = 0;
  std::size_t j = 0;
  Rational violation;  // > 0 on the worst violated pair, <= 0 slack when passing
  Side side = Side::none;
  Rational distance;  // d(p_i, p_j) at the worst pair
  Rational dt;        // t_j - t_i at the worst pair
};

// Checks lambda^-1 (t_j - t_i) - c <= d(p_i, p_j) <= lambda (t_j - t_i) + c
// over all sample pairs i <= j. Always reports the pair with the largest
// violation (or the least slack when passing).
QGVerdict verify_qg(const FiniteMetricSpace& space, const ParamPath& path, const QGParams& q);

// Least c >= 0 making verify_qg pass at the given lambda; closed form as the
// max one-sided deficit over all pairs.
Rational fit_c(const FiniteMetricSpace& space, const ParamPath& path, const Rational& lambda);

struct MorseEstimate {
  Rational r;
  VertexPath geodesic;
  bool truncated = false;
};

// Smallest Hausdorff distance between the path image and an enumerated
// geodesic joining the path's endpoints; ties keep the first geodesic in
// enumeration order.
MorseEstimate morse_radius(const Graph& g, const FiniteMetricSpace& space, const ParamPath& path,
                           int geodesic_cap);

struct TameResult {
  ParamPath path;
  MorseEstimate estimate;
};

// Replaces a quasigeodesic by a path on the minimizing geodesic's parameter
// grid whose samples are nearest points of the original image (ties to the
// lowest point index), with the original endpoints pinned. The output image
// is contained in the input image and passes verify_qg at
// (1, 2r + 2 * max edge weight).
TameResult tame(const Graph& g, const FiniteMetricSpace& space, const ParamPath& path,
                int geodesic_cap);

}  // namespace coarse
