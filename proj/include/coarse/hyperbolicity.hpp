#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coarse/metric.hpp"

namespace coarse {

// Gromov product (x . y)_w = (d(x,w) + d(y,w) - d(x,y)) / 2.
Rational gromov_product(const FiniteMetricSpace& space, int x, int y, int w);

struct HyperbolicityReport {
  enum class Method { four_point, slim };

  Rational delta;
  Method method = Method::four_point;
  // four_point: [x, y, z, w] attaining delta.
  // slim: [a, b, c, g_ab, g_ac, g_bc, p] — apex a, checked side [b,c], the
  // g_* indices select geodesics from enumerate_geodesics, p is the side
  // vertex attaining delta. Empty when the space has fewer than 3 points.
  std::vector<std::int64_t> witness;
  bool truncated = false;
};

const char* method_name(HyperbolicityReport::Method m);

// delta = max over ordered quadruples (x,y,z,w) of
//   min((x.y)_w, (y.z)_w) - (x.z)_w, floored at 0.
// Witness is the lexicographically first maximizer; result does not depend
// on the thread count.
HyperbolicityReport delta_four_point(const FiniteMetricSpace& space, int threads = 0);

// delta = max over unordered triples, all apex roles, all enumerated geodesic
// choices per side, and all vertices p on the checked side, of the distance
// from p to the union of the two apex-side geodesic images.
HyperbolicityReport delta_slim(const Graph& g, const FiniteMetricSpace& space, int geodesic_cap,
                               int threads = 0);

// Recompute the defining expression at a report's witness; must reproduce
// report.delta bit-exactly. The slim form needs the cap the report was
// computed with so geodesic indices resolve identically.
Rational reevaluate_four_point_witness(const FiniteMetricSpace& space,
                                       const std::vector<std::int64_t>& witness);
Rational reevaluate_slim_witness(const Graph& g, const FiniteMetricSpace& space,
                                 const std::vector<std::int64_t>& witness, int geodesic_cap);

}  // namespace coarse
