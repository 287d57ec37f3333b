#pragma once

// Classification of the lattice points of a box by the dimension of the
// minimal cone of the fan containing them.
//
// Each max cone is turned into integer inequalities n_i . x >= 0, the rows
// of its adjugate scaled by the determinant sign; membership is then a
// handful of 64-bit dot products per point, and the minimal face dimension is
// the number of strictly positive rows.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "toricfan/fan.hpp"

namespace toricfan {

enum class PointClass { NotCovered, Origin, RelInt1Face, RelInt2Face, RelIntFacet, InteriorOfCone };

const char* to_string(PointClass c);

/// Class of a minimal face of dimension face_dim in a fan of the given
/// ambient dimension (at most 4).
PointClass class_for_face_dim(std::size_t face_dim, std::size_t ambient_dim);

/// Precomputed integer inequalities of all max cones. Immutable and safe to
/// share between threads.
class ConeInequalities {
 public:
  /// Accepts fans of ambient dimension 1..4. `bound` is the largest
  /// coordinate magnitude that will be queried; throws InvalidArgument when
  /// 64-bit dot products could overflow for it.
  ConeInequalities(const Fan& fan, std::int64_t bound);

  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t cone_count() const noexcept { return normals_.size(); }

  /// Number of strictly positive coefficients if p lies in cone c, else -1.
  int face_dim_in_cone(std::size_t c, const std::int64_t* p) const;

  /// Bitmask (over the cone's listed rays) of strictly positive
  /// coefficients, or nullopt if p is not in cone c.
  std::optional<unsigned> support_in_cone(std::size_t c, const std::int64_t* p) const;

 private:
  std::size_t dim_;
  std::vector<std::array<std::array<std::int64_t, 4>, 4>> normals_;
};

/// Classifies one point. Checks that the number of max cones containing p
/// equals the number of max cones containing its minimal face; a mismatch
/// means the input is not a fan and raises Internal.
PointClass classify_point(const Fan& fan, const IntVector& p);

struct ScanReport {
  std::int64_t bound = 0;
  std::size_t ambient_dim = 0;
  std::uint64_t total = 0;
  std::uint64_t not_covered = 0;
  /// counts_by_face_dim[k] = points whose minimal face has dimension k.
  std::vector<std::uint64_t> counts_by_face_dim;
  std::optional<std::vector<IntVector>> one_face_points;
  /// At most kMaxWitnesses uncovered points, lexicographically first.
  std::vector<IntVector> not_covered_witnesses;

  static constexpr std::size_t kMaxWitnesses = 16;

  std::uint64_t count(PointClass c) const;
  bool sum_matches() const;
};

/// Scans [-bound, bound]^n split into slabs along the first coordinate. The
/// result does not depend on the worker count.
ScanReport scan_box(const Fan& fan, std::int64_t bound, bool collect_one_face, unsigned workers = 1);

}  // namespace toricfan
