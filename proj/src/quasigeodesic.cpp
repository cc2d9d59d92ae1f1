#include "coarse/quasigeodesic.hpp"

#include <algorithm>
#include <limits>

#include "coarse/error.hpp"

namespace coarse {

QGParams::QGParams(Rational lambda_in, Rational c_in) : lambda(lambda_in), c(c_in) {
  if (!(lambda > Rational(0))) fail(Errc::precondition, "lambda must be > 0");
  if (lambda < Rational(1)) lambda = Rational(1);
  if (c < Rational(0)) fail(Errc::precondition, "c must be >= 0");
}

ParamPath::ParamPath(std::vector<Rational> params_in, std::vector<int> points_in)
    : params(std::move(params_in)), points(std::move(points_in)) {
  if (params.empty() || params.size() != points.size())
    fail(Errc::precondition, "path needs matching nonempty params and points");
  if (params.front() != Rational(0)) fail(Errc::precondition, "path parameters must start at 0");
  for (std::size_t i = 0; i + 1 < params.size(); ++i)
    if (!(params[i] < params[i + 1]))
      fail(Errc::precondition, "path parameters must strictly increase");
}

ParamPath ParamPath::from_vertex_path(const Graph& g, const VertexPath& path) {
  if (path.vertices.empty()) fail(Errc::precondition, "empty vertex path");
  std::vector<Rational> params;
  params.reserve(path.vertices.size());
  Rational at = 0;
  params.push_back(at);
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    int u = path.vertices[i], v = path.vertices[i + 1];
    bool found = false;
    for (const auto& [to, w] : g.neighbors(u)) {
      if (to == v) {
        at += w;
        found = true;
        break;
      }
    }
    if (!found)
      fail(Errc::precondition,
           "path step " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
    params.push_back(at);
  }
  return ParamPath(std::move(params), std::vector<int>(path.vertices));
}

std::pair<int, int> ParamPath::endpoints() const { return {points.front(), points.back()}; }

Rational ParamPath::domain_length() const { return params.back(); }

std::vector<int> ParamPath::image() const {
  std::vector<int> img(points);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

QGVerdict verify_qg(const FiniteMetricSpace& space, const ParamPath& path, const QGParams& q) {
  for (int p : path.points) space.check_point(p, "path point");
  QGVerdict verdict;
  verdict.violation = -std::numeric_limits<std::int64_t>::max() / 2;
  bool first = true;
  const std::size_t m = path.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const Rational dt = path.params[j] - path.params[i];
      const Rational d = space.dist(path.points[i], path.points[j]);
      const Rational lower_violation = dt / q.lambda - q.c - d;
      const Rational upper_violation = d - q.lambda * dt - q.c;
      const bool lower_worse = upper_violation < lower_violation;
      const Rational& worst = lower_worse ? lower_violation : upper_violation;
      if (first || worst > verdict.violation) {
        first = false;
        verdict.violation = worst;
        verdict.i = i;
        verdict.j = j;
        verdict.side = lower_worse ? QGVerdict::Side::lower : QGVerdict::Side::upper;
        verdict.distance = d;
        verdict.dt = dt;
      }
    }
  }
  verdict.pass = !(verdict.violation > Rational(0));
  if (verdict.pass) verdict.side = QGVerdict::Side::none;
  return verdict;
}

Rational fit_c(const FiniteMetricSpace& space, const ParamPath& path, const Rational& lambda) {
  if (!(lambda >= Rational(1))) fail(Errc::precondition, "fit_c needs lambda >= 1");
  for (int p : path.points) space.check_point(p, "path point");
  Rational best = 0;
  const std::size_t m = path.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Rational dt = path.params[j] - path.params[i];
      const Rational d = space.dist(path.points[i], path.points[j]);
      best = max(best, dt / lambda - d);   // lower-bound deficit
      best = max(best, d - lambda * dt);   // upper-bound deficit
    }
  }
  return best;
}

MorseEstimate morse_radius(const Graph& g, const FiniteMetricSpace& space, const ParamPath& path,
                           int geodesic_cap) {
  auto [a, b] = path.endpoints();
  auto enumeration = enumerate_geodesics(g, space, a, b, geodesic_cap);
  std::vector<int> img = path.image();
  MorseEstimate est;
  est.truncated = enumeration.truncated;
  bool first = true;
  for (const auto& geo : enumeration.paths) {
    Rational h = hausdorff_distance(space, img, geo.vertices);
    if (first || h < est.r) {
      first = false;
      est.r = h;
      est.geodesic = geo;
    }
  }
  return est;
}

TameResult tame(const Graph& g, const FiniteMetricSpace& space, const ParamPath& path,
                int geodesic_cap) {
  MorseEstimate est = morse_radius(g, space, path, geodesic_cap);
  ParamPath grid = ParamPath::from_vertex_path(g, est.geodesic);
  std::vector<int> img = path.image();

  std::vector<int> tamed_points(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i == 0) {
      tamed_points[i] = path.points.front();
      continue;
    }
    if (i + 1 == grid.size()) {
      tamed_points[i] = path.points.back();
      continue;
    }
    const std::int64_t* row = space.idist_row(grid.points[i]);
    int nearest = img.front();
    std::int64_t best = row[img.front()];
    for (int candidate : img) {
      if (row[candidate] < best) {  // ties keep the lowest index; img is sorted
        best = row[candidate];
        nearest = candidate;
      }
    }
    tamed_points[i] = nearest;
  }
  TameResult result;
  result.path = ParamPath(std::move(grid.params), std::move(tamed_points));
  result.estimate = std::move(est);
  return result;
}

}  // namespace coarse
