#pragma once

#include <cstdint>
#include <string>

#include "coarse/graph.hpp"

namespace coarse {

// SplitMix64: the fixed generator behind every seeded construction in this
// project, so identical seeds reproduce identical graphs on any platform.
// Constants are the standard ones (Steele, Lea, Flood 2014).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t next_below(std::uint64_t bound);

  // Uniform in [lo, hi] inclusive.
  std::int64_t next_between(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

enum class FamilyKind { random_tree, cycle, grid, noisy_tree, binary_tree };

const char* family_name(FamilyKind kind);
FamilyKind family_from_name(const std::string& name);

// Deterministic seeded graph family generators; unit weights throughout.
//   random_tree: uniform random attachment on n vertices.
//   cycle:       C_n.
//   grid:        k x k lattice.
//   noisy_tree:  random tree plus `chords` distinct random chords.
//   binary_tree: complete binary tree of the given depth.
struct FamilySpec {
  FamilyKind kind = FamilyKind::random_tree;
  int n = 0;      // random_tree, cycle, noisy_tree
  int k = 0;      // grid
  int depth = 0;  // binary_tree
  int chords = 0; // noisy_tree
  std::uint64_t seed = 0;
};

Graph generate(const FamilySpec& spec);

}  // namespace coarse
