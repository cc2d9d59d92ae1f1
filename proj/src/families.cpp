#include "coarse/families.hpp"

#include <algorithm>
#include <limits>

#include "coarse/error.hpp"

namespace coarse {

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) fail(Errc::precondition, "next_below(0)");
  // Rejection sampling over the largest multiple of bound.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t v = next();
    if (v < limit) return v % bound;
  }
}

std::int64_t SplitMix64::next_between(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) fail(Errc::precondition, "next_between with empty range");
  return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
}

const char* family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::random_tree: return "random_tree";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::grid: return "grid";
    case FamilyKind::noisy_tree: return "noisy_tree";
    case FamilyKind::binary_tree: return "binary_tree";
  }
  return "unknown";
}

FamilyKind family_from_name(const std::string& name) {
  if (name == "random_tree") return FamilyKind::random_tree;
  if (name == "cycle") return FamilyKind::cycle;
  if (name == "grid") return FamilyKind::grid;
  if (name == "noisy_tree") return FamilyKind::noisy_tree;
  if (name == "binary_tree") return FamilyKind::binary_tree;
  fail(Errc::invalid_spec, "unknown family '" + name + "'");
}

namespace {

Graph random_tree(int n, SplitMix64& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(v)));
    g.add_edge(parent, v);
  }
  return g;
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  SplitMix64 rng(spec.seed);
  switch (spec.kind) {
    case FamilyKind::random_tree: {
      if (spec.n < 1) fail(Errc::invalid_spec, "random_tree needs n >= 1");
      return random_tree(spec.n, rng);
    }
    case FamilyKind::cycle: {
      if (spec.n < 3) fail(Errc::invalid_spec, "cycle needs n >= 3");
      Graph g(spec.n);
      for (int v = 0; v + 1 < spec.n; ++v) g.add_edge(v, v + 1);
      g.add_edge(spec.n - 1, 0);
      return g;
    }
    case FamilyKind::grid: {
      if (spec.k < 1) fail(Errc::invalid_spec, "grid needs k >= 1");
      const int k = spec.k;
      Graph g(k * k);
      for (int r = 0; r < k; ++r)
        for (int col = 0; col < k; ++col) {
          int v = r * k + col;
          if (col + 1 < k) g.add_edge(v, v + 1);
          if (r + 1 < k) g.add_edge(v, v + k);
        }
      return g;
    }
    case FamilyKind::noisy_tree: {
      if (spec.n < 1) fail(Errc::invalid_spec, "noisy_tree needs n >= 1");
      if (spec.chords < 0) fail(Errc::invalid_spec, "noisy_tree needs chords >= 0");
      const long long max_chords =
          static_cast<long long>(spec.n) * (spec.n - 1) / 2 - (spec.n - 1);
      if (spec.chords > max_chords)
        fail(Errc::invalid_spec, "noisy_tree cannot place " + std::to_string(spec.chords) +
                                     " chords on " + std::to_string(spec.n) + " vertices");
      Graph g = random_tree(spec.n, rng);
      int placed = 0;
      while (placed < spec.chords) {
        int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(spec.n)));
        int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(spec.n)));
        if (u == v || g.has_edge(u, v)) continue;
        g.add_edge(std::min(u, v), std::max(u, v));
        ++placed;
      }
      return g;
    }
    case FamilyKind::binary_tree: {
      if (spec.depth < 0) fail(Errc::invalid_spec, "binary_tree needs depth >= 0");
      if (spec.depth > 20) fail(Errc::invalid_spec, "binary_tree depth too large");
      const int n = (1 << (spec.depth + 1)) - 1;
      Graph g(n);
      for (int v = 1; v < n; ++v) g.add_edge((v - 1) / 2, v);
      return g;
    }
  }
  fail(Errc::invalid_spec, "unhandled family kind");
}

}  // namespace coarse
