#include "simplewedge/conjecture.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <thread>

#include "simplewedge/errors.hpp"
#include "simplewedge/wedge.hpp"

namespace swedge {
namespace {

bool all_collinear(const std::vector<Point>& points) {
  for (std::size_t k = 2; k < points.size(); ++k) {
    if (!collinear(points[0], points[1], points[k])) return false;
  }
  return true;
}

bool has_wedge(const std::vector<Point>& points) {
  return !brute_force_wedges(build_configuration(points)).empty();
}

// Runs job(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& job) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
}

// Fresh recheck of a candidate counterexample before it is reported.
void confirm_failure(const ConjectureTrialResult& result) {
  Configuration config = build_configuration(result.points);
  for (std::size_t apex = 0; apex < config.size(); ++apex) {
    std::size_t simple_through_apex = 0;
    for (std::size_t other = 0; other < config.size(); ++other) {
      if (other != apex && is_simple(config, apex, other)) ++simple_through_apex;
    }
    if (simple_through_apex >= 2) throw LemmaViolation("counterexample failed re-verification");
  }
}

ConjectureSummary random_search(const ConjectureOptions& o) {
  ConjectureSummary summary;
  std::vector<std::optional<ConjectureTrialResult>> found(o.trials);
  std::vector<std::size_t> rejections(o.trials, 0);
  parallel_for(o.trials, o.threads, [&](std::size_t trial) {
    auto points = random_trial_points(o.n, o.seed, trial, o.range, &rejections[trial]);
    if (!has_wedge(points)) {
      found[trial] = ConjectureTrialResult{o.seed, trial, o.n, std::move(points), false};
    }
  });
  summary.scanned = o.trials;
  for (std::size_t trial = 0; trial < o.trials; ++trial) {
    summary.rejected += rejections[trial];
    if (found[trial]) summary.failures.push_back(std::move(*found[trial]));
  }
  return summary;
}

ConjectureSummary exhaustive_search(const ConjectureOptions& o) {
  ConjectureSummary summary;
  const std::size_t universe = o.grid * o.grid;
  if (o.n > universe) return summary;
  const std::vector<Point> lattice = lattice_points(o.grid);

  constexpr std::size_t kBatch = 4096;
  std::vector<std::size_t> combo(o.n);
  for (std::size_t i = 0; i < o.n; ++i) combo[i] = i;
  bool more = true;
  while (more) {
    std::vector<std::vector<std::size_t>> batch;
    while (more && batch.size() < kBatch) {
      batch.push_back(combo);
      more = next_combination(combo, universe);
    }
    std::vector<std::optional<ConjectureTrialResult>> found(batch.size());
    std::vector<char> skipped(batch.size(), 0);
    const std::size_t first_trial = summary.scanned;
    parallel_for(batch.size(), o.threads, [&](std::size_t i) {
      std::vector<Point> points;
      for (std::size_t idx : batch[i]) points.push_back(lattice[idx]);
      if (all_collinear(points)) {
        skipped[i] = 1;
        return;
      }
      if (!has_wedge(points)) {
        found[i] = ConjectureTrialResult{0, first_trial + i, o.n, std::move(points), false};
      }
    });
    summary.scanned += batch.size();
    for (std::size_t i = 0; i < batch.size(); ++i) {
      summary.rejected += skipped[i];
      if (found[i]) summary.failures.push_back(std::move(*found[i]));
    }
  }
  return summary;
}

}  // namespace

std::vector<Point> lattice_points(std::size_t grid) {
  std::vector<Point> lattice;
  for (std::size_t y = 0; y < grid; ++y) {
    for (std::size_t x = 0; x < grid; ++x) {
      lattice.push_back(Point{Rational(static_cast<long long>(x)), Rational(static_cast<long long>(y))});
    }
  }
  return lattice;
}

bool next_combination(std::vector<std::size_t>& combo, std::size_t universe) {
  const std::size_t n = combo.size();
  for (std::size_t i = n; i-- > 0;) {
    if (combo[i] < universe - n + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < n; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t SplitMix64::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix(state_);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw = next();
  while (draw >= limit) draw = next();
  return lo + static_cast<std::int64_t>(draw % span);
}

SplitMix64 trial_generator(std::uint64_t seed, std::uint64_t trial) {
  return SplitMix64(SplitMix64::mix(seed) ^ SplitMix64::mix(trial + 0x632BE59BD9B4E019ULL));
}

std::vector<Point> random_trial_points(std::size_t n, std::uint64_t seed, std::size_t trial,
                                       std::int64_t range, std::size_t* rejections) {
  const auto side = static_cast<std::uint64_t>(2 * range + 1);
  if (range < 0 || side * side < n) throw UsageError("range too small for n distinct points");
  SplitMix64 gen = trial_generator(seed, trial);
  for (;;) {
    std::vector<Point> points;
    std::set<std::pair<std::int64_t, std::int64_t>> taken;
    while (points.size() < n) {
      std::int64_t x = gen.uniform(-range, range);
      std::int64_t y = gen.uniform(-range, range);
      if (!taken.emplace(x, y).second) continue;
      points.push_back(Point{Rational(static_cast<long long>(x)), Rational(static_cast<long long>(y))});
    }
    if (!all_collinear(points)) return points;
    if (rejections) ++*rejections;
  }
}

ConjectureSummary conjecture_search(const ConjectureOptions& options) {
  if (options.n < 3 || options.n % 2 == 0) {
    throw UsageError("conjecture search needs odd n >= 3");
  }
  ConjectureSummary summary =
      options.mode == SearchMode::Random ? random_search(options) : exhaustive_search(options);
  for (const auto& failure : summary.failures) confirm_failure(failure);
  return summary;
}

}  // namespace swedge
