#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "simplewedge/geometry.hpp"

namespace swedge {

/// SplitMix64 (Steele, Lea, Flood).  Fully specified 64-bit sequence, so
/// random trials reproduce bit-for-bit on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next();
  /// Uniform in [lo, hi] by rejection sampling.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t state_;
};

/// Generator state for one random trial: mix(seed) ^ mix(trial + c).
SplitMix64 trial_generator(std::uint64_t seed, std::uint64_t trial);

enum class SearchMode { Random, Exhaustive };

struct ConjectureOptions {
  std::size_t n = 7;
  SearchMode mode = SearchMode::Random;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::int64_t range = 50;
  std::size_t grid = 3;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// One examined configuration.  Only wedge-free ones are ever returned.
struct ConjectureTrialResult {
  std::uint64_t seed;
  std::size_t trial;
  std::size_t n;
  std::vector<Point> points;
  bool wedge_found;
};

struct ConjectureSummary {
  std::size_t scanned = 0;    // trials run / subsets enumerated
  std::size_t rejected = 0;   // collinear samples (resampled or skipped)
  std::vector<ConjectureTrialResult> failures;  // in trial order
};

/// n distinct integer points in [-range, range]^2 for the given trial,
/// resampling the whole set while it is collinear.  Adds the number of
/// collinear rejections to *rejections when non-null.
std::vector<Point> random_trial_points(std::size_t n, std::uint64_t seed, std::size_t trial,
                                       std::int64_t range, std::size_t* rejections = nullptr);

/// Integer lattice {0..grid-1}^2 in row-major order (index = y*grid + x).
std::vector<Point> lattice_points(std::size_t grid);

/// Advances combo to the next combo.size()-subset of [0, universe) in
/// lexicographic order; returns false once exhausted.
bool next_combination(std::vector<std::size_t>& combo, std::size_t universe);

/// Searches for odd-sized interesting sets without a simple wedge.
/// Random mode samples per-trial sets; exhaustive mode walks every n-subset
/// of the grid x grid lattice (points ordered row-major) in lexicographic
/// order, skipping collinear subsets.  Throws UsageError for even n or
/// n < 3.
ConjectureSummary conjecture_search(const ConjectureOptions& options);

}  // namespace swedge
