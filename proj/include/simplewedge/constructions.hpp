#pragma once

#include <cstddef>

#include "simplewedge/incidence.hpp"

namespace swedge {

enum class ConstructionKind { SixPoint, NinePoint, ClosedOrbit, GExtended };

/// Which generator to run.  `parameter` is k for ClosedOrbit (k >= 2) and
/// m for GExtended (odd m >= 1); it is ignored otherwise.
struct ConstructionSpec {
  ConstructionKind kind;
  std::size_t parameter = 0;
};

/// The 3-bounded six-point set without any simple wedge, in the order
/// a, b, x1, x2, x3, y.
Configuration six_point();

/// six_point() followed by g1, g2, g3: odd and not 3-bounded, with L_{a,b}
/// simple but no other simple line through a or b.
Configuration nine_point();

/// a = (-1,0), b = (1,0) and 2k points forming one closed orbit of length
/// 2k over L_{a,b}.  Points are intersections of k lines through a with k
/// lines through b, zig-zagging A_k B_1 A_1 B_2 ... B_k A_k.  Each attempt
/// is validated; on failure the slope family is shifted and retried.
/// Throws std::invalid_argument for k < 2, ConstructionError if every
/// attempt fails.
Configuration closed_orbit_config(std::size_t k);

/// nine_point() plus (m - 1) further mirrored triples (g1', g2', g3'), each
/// keeping every line through a or b (other than L_{a,b}) non-simple.
/// Requires odd m so that 6 + 3m is odd; throws std::invalid_argument
/// otherwise.
Configuration g_extended(std::size_t m);

Configuration generate(const ConstructionSpec& spec);

}  // namespace swedge
