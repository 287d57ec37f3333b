#pragma once

// Embedded reference data for the Barnette-sphere fan and its smooth
// refinement: the ray vectors, the 19 maximal cones with their determinants,
// the ten subdivision points, the 41 subdivided cones with their signs and
// the lattice-point classification counts over the box [-40, 40]^4.
//
// Dataset note: one prose listing of sigma18 reads "d1d2e3d4". The dataset
// uses d1d2d3e4, which is what the determinant table (-9) and the cones
// produced from sigma18 (c4d2d3e4, d1c4d3e4, d1d2c4e4) agree on.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "toricfan/fan.hpp"

namespace toricfan::barnette {

/// The singular complete fan whose underlying complex is the Barnette
/// sphere: rays e1..e4, d1..d4 and cones sigma1..sigma19.
Fan delta();

struct ConeRecord {
  const char* name;
  std::array<const char*, 4> rays;
  long long determinant;
};

/// sigma1..sigma19 in order, rays in listed order, with determinants.
const std::array<ConeRecord, 19>& table_cones();

struct SubdivisionPoint {
  const char* label;
  std::array<long long, 4> vector;
};

/// c1..c10 in the order they are introduced.
const std::array<SubdivisionPoint, 10>& subdivision_points();

struct SignedCone {
  std::array<const char*, 4> rays;
  int sign;
};

/// The 41 cones replacing sigma13, sigma15, sigma17, sigma18 and sigma19,
/// rays in listed order, with the sign of their determinant.
const std::array<SignedCone, 41>& subdivided_cones();

/// Names of the Table-1 cones that survive into the refinement.
std::vector<std::string> surviving_cone_names();

struct ClassificationCounts {
  std::uint64_t interior = 0;
  std::uint64_t facet = 0;
  std::uint64_t two_face = 0;
  std::uint64_t one_face = 0;
  std::uint64_t origin = 0;
};

inline constexpr long long kScanBound = 40;
inline constexpr ClassificationCounts kScanCounts{41'315'292, 1'696'978, 34'190, 260, 1};

/// The 260 one-face lattice points in [-40, 40]^4: m*e_i and m*d4 for
/// 1 <= m <= 40, n*d1, n*d2, n*d3 for 1 <= n <= 20. Sorted.
std::vector<IntVector> expected_one_face_points();

}  // namespace toricfan::barnette
