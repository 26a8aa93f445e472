#include "simplewedge/wedge.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "simplewedge/errors.hpp"

namespace swedge {

WedgeCertificate make_certificate(const Configuration& config, std::size_t apex,
                                  std::size_t arm_a, std::size_t arm_b) {
  if (arm_b < arm_a) std::swap(arm_a, arm_b);
  const auto& inc = config.incidence();
  return WedgeCertificate{apex, arm_a, arm_b, inc.line_of(apex, arm_a).key,
                          inc.line_of(apex, arm_b).key};
}

bool certificate_valid(const Configuration& config, const WedgeCertificate& cert) {
  const std::size_t n = config.size();
  if (cert.apex >= n || cert.arm1 >= n || cert.arm2 >= n) return false;
  if (cert.apex == cert.arm1 || cert.apex == cert.arm2 || cert.arm1 >= cert.arm2) return false;
  const Point& apex = config.point(cert.apex);
  if (cert.key1 != line_through(apex, config.point(cert.arm1))) return false;
  if (cert.key2 != line_through(apex, config.point(cert.arm2))) return false;
  if (cert.key1 == cert.key2) return false;
  const auto& inc = config.incidence();
  for (const LineKey* key : {&cert.key1, &cert.key2}) {
    auto index = inc.find(*key);
    if (!index || inc.lines()[*index].points.size() != 2) return false;
  }
  return true;
}

WedgeCertificate wedge_from_open_orbit(const Configuration& config, const BaseLine& base,
                                       const Orbit& orbit) {
  if (orbit.kind != OrbitKind::Open || !orbit.maximal || orbit.seq.empty()) {
    throw std::invalid_argument("wedge extraction needs a maximal open orbit");
  }
  const std::size_t last = orbit.seq.back();
  const bool odd = orbit.seq.size() % 2 == 1;
  const std::size_t apex = odd ? base.b : base.a;
  const std::size_t other = odd ? base.a : base.b;
  if (!is_simple(config, apex, last)) {
    throw LemmaViolation("characterization violated: line through " + std::to_string(apex) +
                         " and " + std::to_string(last) + " is not simple");
  }
  return make_certificate(config, apex, other, last);
}

std::optional<WedgeCertificate> find_wedge_from_line(const Configuration& config,
                                                     const BaseLine& base) {
  Decomposition parts = decompose(config, base);
  if (parts.open) return wedge_from_open_orbit(config, base, *parts.open);
  if (config.size() % 2 == 1) {
    throw LemmaViolation("main claim violated: odd 3-bounded set without a wedge from line " +
                         base.key.to_string());
  }
  return std::nullopt;
}

std::vector<WedgeCertificate> brute_force_wedges(const Configuration& config) {
  const std::size_t n = config.size();
  std::vector<std::vector<std::size_t>> partners(n);
  for (const auto& line : config.incidence().lines()) {
    if (line.points.size() != 2) continue;
    partners[line.points[0]].push_back(line.points[1]);
    partners[line.points[1]].push_back(line.points[0]);
  }
  std::vector<WedgeCertificate> out;
  for (std::size_t apex = 0; apex < n; ++apex) {
    auto& arms = partners[apex];
    std::sort(arms.begin(), arms.end());
    for (std::size_t u = 0; u < arms.size(); ++u) {
      for (std::size_t v = u + 1; v < arms.size(); ++v) {
        out.push_back(make_certificate(config, apex, arms[u], arms[v]));
      }
    }
  }
  // Already in (apex, arm1, arm2) order by construction.
  return out;
}

CoverageReport wedge_coverage(const Configuration& config) {
  return wedge_coverage(config, brute_force_wedges(config));
}

CoverageReport wedge_coverage(const Configuration& config,
                              const std::vector<WedgeCertificate>& wedges) {
  CoverageReport report;
  for (auto& line : simple_lines(config)) {
    CoverageEntry entry{std::move(line), std::nullopt};
    auto it = std::find_if(wedges.begin(), wedges.end(),
                           [&](const WedgeCertificate& w) { return w.uses_line(entry.line.key); });
    if (it != wedges.end()) entry.certificate = *it;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace swedge
