#include "simplewedge/orbit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "simplewedge/errors.hpp"

namespace swedge {

BaseLine make_base_line(const Configuration& config, std::size_t a, std::size_t b) {
  if (a >= config.size() || b >= config.size() || a == b) {
    throw std::invalid_argument("base line needs two distinct point indices");
  }
  if (!is_simple(config, a, b)) {
    throw std::invalid_argument("line through " + std::to_string(a) + " and " +
                                std::to_string(b) + " is not simple");
  }
  return BaseLine{a, b, config.incidence().line_of(a, b).key};
}

void require_three_bounded(const Configuration& config) {
  if (config.incidence().max_line_size() > 3) {
    throw NotThreeBounded("configuration is not 3-bounded");
  }
}

OrbitKind classify(std::span<const std::size_t> seq) {
  return seq.size() > 1 && seq.front() == seq.back() ? OrbitKind::Closed : OrbitKind::Open;
}

std::size_t pivot_for_next(const BaseLine& base, std::size_t t) {
  return (t + 1) % 2 == 0 ? base.b : base.a;
}

bool verify_orbit(const Configuration& config, const BaseLine& base,
                  std::span<const std::size_t> seq) {
  const std::size_t t = seq.size();
  if (t == 0) return false;
  for (std::size_t x : seq) {
    if (x >= config.size() || x == base.a || x == base.b) return false;
  }
  std::unordered_set<std::size_t> seen;
  for (std::size_t i = 0; i + 1 < t; ++i) {
    if (!seen.insert(seq[i]).second) return false;
  }
  if (t >= 2 && seq[t - 1] == seq[t - 2]) return false;

  const auto& inc = config.incidence();
  // Positions are 1-based in the clauses; seq[p - 1] is x_p.
  for (std::size_t p = 2; p <= t; ++p) {
    const std::size_t pivot = p % 2 == 0 ? base.b : base.a;
    if (!inc.collinear(pivot, seq[p - 2], seq[p - 1])) return false;
  }
  return true;
}

namespace {

StepOutcome step_unchecked(const Configuration& config, const BaseLine& base,
                           std::span<const std::size_t> seq) {
  const std::size_t pivot = pivot_for_next(base, seq.size());
  auto k = third_point(config, pivot, seq.back());
  if (!k) return StepOutcome::stuck();
  if (*k == seq.front()) return StepOutcome::close();
  if (*k == base.a || *k == base.b ||
      std::find(seq.begin(), seq.end(), *k) != seq.end()) {
    throw OrbitAnomaly("orbit anomaly: step " + std::to_string(seq.size() + 1) +
                       " revisits point " + std::to_string(*k));
  }
  return StepOutcome::extend(*k);
}

}  // namespace

StepOutcome orbit_step(const Configuration& config, const BaseLine& base,
                       std::span<const std::size_t> seq) {
  if (!verify_orbit(config, base, seq)) throw std::invalid_argument("sequence is not an orbit");
  if (classify(seq) != OrbitKind::Open) throw std::invalid_argument("orbit is already closed");
  return step_unchecked(config, base, seq);
}

Orbit maximal_orbit(const Configuration& config, const BaseLine& base, std::size_t start) {
  require_three_bounded(config);
  if (start >= config.size() || start == base.a || start == base.b) {
    throw std::invalid_argument("orbit start must be a point off the base line");
  }
  Orbit orbit{base, {start}, OrbitKind::Open, true};
  for (std::size_t steps = 0; steps <= config.size(); ++steps) {
    StepOutcome next = step_unchecked(config, base, orbit.seq);
    switch (next.kind()) {
      case StepOutcome::Kind::Extend:
        orbit.seq.push_back(next.index());
        break;
      case StepOutcome::Kind::Close:
        orbit.seq.push_back(start);
        orbit.kind = OrbitKind::Closed;
        return orbit;
      case StepOutcome::Kind::Stuck:
        return orbit;
    }
  }
  throw LemmaViolation("orbit exceeded " + std::to_string(config.size()) + " steps");
}

std::size_t orbit_length(const Orbit& orbit) {
  return orbit.kind == OrbitKind::Closed ? orbit.seq.size() - 1 : orbit.seq.size();
}

bool orbits_disjoint(const Orbit& x, const Orbit& y) {
  for (std::size_t p : x.seq) {
    if (std::find(y.seq.begin(), y.seq.end(), p) != y.seq.end()) return false;
  }
  return true;
}

Decomposition decompose(const Configuration& config, const BaseLine& base) {
  require_three_bounded(config);
  Decomposition result;
  std::vector<bool> used(config.size(), false);
  used[base.a] = used[base.b] = true;
  for (std::size_t start = 0; start < config.size(); ++start) {
    if (used[start]) continue;
    Orbit orbit = maximal_orbit(config, base, start);
    if (orbit.kind == OrbitKind::Open) {
      result.open = std::move(orbit);
      break;
    }
    for (std::size_t p : orbit.seq) used[p] = true;
    result.closed.push_back(std::move(orbit));
  }
  return result;
}

std::string render_trace(const Configuration& config, const Orbit& orbit) {
  std::ostringstream out;
  for (std::size_t p = 1; p <= orbit.seq.size(); ++p) {
    const std::size_t x = orbit.seq[p - 1];
    out << "pos " << p << ": x_" << p << " = " << x << " " << to_string(config.point(x))
        << " via ";
    if (p == 1) {
      out << "start";
    } else {
      out << "pivot " << (p % 2 == 0 ? "b" : "a");
    }
    out << '\n';
  }
  if (orbit.kind == OrbitKind::Closed) {
    out << "CLOSED length " << orbit_length(orbit) << '\n';
  } else {
    out << "OPEN maximal length " << orbit_length(orbit) << '\n';
  }
  return out.str();
}

}  // namespace swedge
