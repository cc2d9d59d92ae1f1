#pragma once

#include <array>
#include <cstdint>

#include "coarse/families.hpp"
#include "coarse/subspaces.hpp"

namespace coarse {

// Seeded builders for the experiment harness: quasigeodesic walks with
// detours, splice inputs, and triangle corners. All deterministic in
// (graph, seed).

// A walk from `from` to `to` following a shortest path but taking seeded
// side-step detours (out to a neighbor and back) and occasional overshoots.
// Parameterized cumulatively by walk length, so it fits (1, c) for the
// fitted c.
ParamPath make_detour_path(const Graph& g, const FiniteMetricSpace& space, int from, int to,
                           std::uint64_t seed);

struct SpliceInstance {
  Subspace A, B;
  int a = 0, w = 0, b = 0;
  ParamPath qgA, qgB;
  QGParams q;       // (1, fitted c over both paths)
  Rational r;       // max morse radius of the two paths
  Rational delta;   // caller-supplied ambient delta (delta_slim of g)
};

// Picks w, a, b seeded and far apart, builds detour quasigeodesics a->w and
// w->b, and takes A, B to be their images.
SpliceInstance make_splice_instance(const Graph& g, const FiniteMetricSpace& space,
                                    const Rational& delta, std::uint64_t seed,
                                    int geodesic_cap = 32);

// Three distinct seeded vertices, pairwise as spread out as a few seeded
// draws manage.
std::array<int, 3> pick_triangle(const FiniteMetricSpace& space, std::uint64_t seed);

// Two seeded vertices at least `min_dist` apart when the graph allows it.
std::array<int, 2> pick_far_pair(const FiniteMetricSpace& space, std::uint64_t seed,
                                 const Rational& min_dist);

// A seeded connected vertex set containing `anchor`, grown by random
// adjacency steps; on a tree such a set is geodesically convex.
std::vector<int> grow_connected_subset(const Graph& g, int anchor, int target_size,
                                       std::uint64_t seed);

}  // namespace coarse
