#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "simplewedge/orbit.hpp"

namespace swedge {

/// Witness of a simple wedge: both lines from the apex to its arms are
/// simple.  Arms are stored with arm1 < arm2; key1 and key2 belong to them.
struct WedgeCertificate {
  std::size_t apex;
  std::size_t arm1;
  std::size_t arm2;
  LineKey key1;
  LineKey key2;

  bool uses_line(const LineKey& key) const { return key1 == key || key2 == key; }

  friend bool operator==(const WedgeCertificate&, const WedgeCertificate&) = default;
};

/// Orders the arms and fills in both keys.  Does not check simplicity.
WedgeCertificate make_certificate(const Configuration& config, std::size_t apex,
                                  std::size_t arm_a, std::size_t arm_b);

/// Re-checks every certificate invariant against the incidence structure.
bool certificate_valid(const Configuration& config, const WedgeCertificate& cert);

struct CoverageEntry {
  SimpleLine line;
  std::optional<WedgeCertificate> certificate;

  bool covered() const noexcept { return certificate.has_value(); }

  friend bool operator==(const CoverageEntry&, const CoverageEntry&) = default;
};

struct CoverageReport {
  std::vector<CoverageEntry> entries;

  friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

/// Turns a maximal open orbit into a wedge: for odd t the apex is b with
/// arms a and x_t, for even t the apex is a with arms b and x_t.  Throws
/// LemmaViolation if the implied line is not simple.
WedgeCertificate wedge_from_open_orbit(const Configuration& config, const BaseLine& base,
                                       const Orbit& orbit);

/// Orbit route to a wedge containing the base line.  On an odd-sized
/// configuration a missing wedge throws LemmaViolation.
std::optional<WedgeCertificate> find_wedge_from_line(const Configuration& config,
                                                     const BaseLine& base);

/// Definitional search: every pair of simple lines through a common point.
/// Works on any valid configuration.  Sorted by (apex, arm1, arm2).
std::vector<WedgeCertificate> brute_force_wedges(const Configuration& config);

CoverageReport wedge_coverage(const Configuration& config);
CoverageReport wedge_coverage(const Configuration& config,
                              const std::vector<WedgeCertificate>& wedges);

}  // namespace swedge
