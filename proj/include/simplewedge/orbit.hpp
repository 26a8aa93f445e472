#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simplewedge/incidence.hpp"

namespace swedge {

/// A simple line L_{a,b} used as the base of orbits.  The roles of a and b
/// are not symmetric: even positions pivot on b, odd positions (>= 3) on a.
struct BaseLine {
  std::size_t a;
  std::size_t b;
  LineKey key;

  friend bool operator==(const BaseLine&, const BaseLine&) = default;
};

/// Throws std::invalid_argument unless a != b and L_{a,b} is simple.
BaseLine make_base_line(const Configuration& config, std::size_t a, std::size_t b);

enum class OrbitKind { Open, Closed };

/// A validated orbit.  Closed orbits store x_1 again as their last entry.
struct Orbit {
  BaseLine base;
  std::vector<std::size_t> seq;
  OrbitKind kind;
  bool maximal;

  friend bool operator==(const Orbit&, const Orbit&) = default;
};

class StepOutcome {
 public:
  enum class Kind { Extend, Close, Stuck };

  static StepOutcome extend(std::size_t index) { return StepOutcome(Kind::Extend, index); }
  static StepOutcome close() { return StepOutcome(Kind::Close, 0); }
  static StepOutcome stuck() { return StepOutcome(Kind::Stuck, 0); }

  Kind kind() const noexcept { return kind_; }
  /// Meaningful only for Extend.
  std::size_t index() const noexcept { return index_; }

  friend bool operator==(const StepOutcome&, const StepOutcome&) = default;

 private:
  StepOutcome(Kind kind, std::size_t index) : kind_(kind), index_(index) {}
  Kind kind_;
  std::size_t index_;
};

/// Checks the four orbit clauses for seq over base:
///  - no entry is a or b;
///  - x_1 .. x_{t-1} pairwise distinct;
///  - x_{2m+1} lies on the line through a and x_{2m};
///  - x_{2m} lies on the line through b and x_{2m-1}.
/// A final entry equal to its predecessor is rejected as well.  Empty
/// sequences and out-of-range indices yield false.
bool verify_orbit(const Configuration& config, const BaseLine& base,
                  std::span<const std::size_t> seq);

OrbitKind classify(std::span<const std::size_t> seq);

/// One deterministic extension step.  Requires an open orbit; the line used
/// must carry at most three points (NotThreeBounded otherwise).  Throws
/// OrbitAnomaly if the third point repeats an entry other than x_1.
StepOutcome orbit_step(const Configuration& config, const BaseLine& base,
                       std::span<const std::size_t> seq);

/// Pivot for the position following a sequence of length t: b when t+1 is
/// even, a otherwise.
std::size_t pivot_for_next(const BaseLine& base, std::size_t t);

/// Extends [start] until it closes or gets stuck.  Requires a 3-bounded
/// configuration and start outside the base line.
Orbit maximal_orbit(const Configuration& config, const BaseLine& base, std::size_t start);

/// t for open orbits, t - 1 for closed ones.
std::size_t orbit_length(const Orbit& orbit);

bool orbits_disjoint(const Orbit& x, const Orbit& y);

struct Decomposition {
  std::vector<Orbit> closed;
  std::optional<Orbit> open;
};

/// Builds maximal orbits from the lowest unused index of V \ {a, b} until an
/// open orbit appears or every point is covered by closed orbits.
Decomposition decompose(const Configuration& config, const BaseLine& base);

/// Throws NotThreeBounded unless every spanned line has at most 3 points.
void require_three_bounded(const Configuration& config);

/// Human-readable step-by-step trace, one line per position followed by
/// "CLOSED length L" or "OPEN maximal length L".
std::string render_trace(const Configuration& config, const Orbit& orbit);

}  // namespace swedge
