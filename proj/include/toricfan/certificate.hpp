#pragma once

// Checking a claimed convex realization of a simplicial sphere. A passing
// check certifies that the complex is the boundary complex of the convex hull
// of the given points. A failing check rejects that one realization only; it
// says nothing about whether some other realization exists.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricfan/complex.hpp"
#include "toricfan/exact.hpp"

namespace toricfan {

struct Realization {
  std::size_t dim = 0;
  std::map<std::string, RatVector> coords;
};

/// Uses each ray vector of the fan as the coordinate of its vertex.
Realization realization_from_rays(const Fan& fan);

struct RealizationViolation {
  enum class Kind { FacetNotSupporting, ExtraSupportedFacet };
  Kind kind;
  std::vector<std::string> facet;
  std::string detail;
};

struct CertificateReport {
  bool passed = false;
  std::size_t facets_checked = 0;
  std::size_t subsets_checked = 0;  // vertex subsets that are not facets
  std::size_t non_supporting_facets = 0;
  std::size_t extra_supported = 0;
  /// First violation found, facets of the complex before extra subsets.
  std::optional<RealizationViolation> violation;
};

const char* to_string(RealizationViolation::Kind kind);

/// Exact check that (a) each facet's vertices span a hyperplane with every
/// other vertex strictly on one side, and (b) no other vertex subset of the
/// same size spans such a supporting hyperplane.
/// Throws MissingCoordinates, DimensionMismatch, DegenerateFacet.
CertificateReport certify_realization(const SimplicialComplex& c, const Realization& r);

/// flags[i] is true iff points[i] is strictly separable from the other
/// points by a hyperplane (a vertex of their convex hull).
std::vector<bool> convex_position(const std::vector<RatVector>& points);

}  // namespace toricfan
