#pragma once

// Simplicial fans and the exact predicates used to certify them: cone
// membership, facet pairing, completeness by covering degree, smoothness and
// the open-orthant test.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricfan/exact.hpp"

namespace toricfan {

struct Ray {
  std::string label;
  IntVector vector;
};

/// A full-dimensional simplicial cone given by indices into Fan::rays().
/// The order of the indices fixes the determinant sign.
struct SimplicialCone {
  std::vector<std::size_t> rays;
  std::string name;  // optional, e.g. "sigma13"
};

/// Sorted ray-index set identifying a face of a simplicial fan.
using Face = std::vector<std::size_t>;

class Fan {
 public:
  /// Validates: rays nonzero, primitive, pairwise distinct with unique
  /// labels; every cone has ambient_dim distinct rays and nonzero
  /// determinant.
  Fan(std::size_t ambient_dim, std::vector<Ray> rays, std::vector<SimplicialCone> cones);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<Ray>& rays() const noexcept { return rays_; }
  const std::vector<SimplicialCone>& cones() const noexcept { return cones_; }
  const Ray& ray(std::size_t i) const { return rays_.at(i); }
  const SimplicialCone& cone(std::size_t i) const { return cones_.at(i); }

  std::optional<std::size_t> find_ray(const std::string& label) const;
  std::optional<std::size_t> find_ray(const IntVector& v) const;
  std::size_t ray_index(const std::string& label) const;  // throws MissingLabel

  /// Cone whose ray set equals the given labels (any order).
  std::optional<std::size_t> find_cone(const std::vector<std::string>& labels) const;
  std::optional<std::size_t> find_cone_by_name(const std::string& name) const;

  SquareMatrix cone_matrix(std::size_t cone) const;
  Integer cone_determinant(std::size_t cone) const;

  std::vector<std::string> cone_labels(std::size_t cone) const;
  /// Name if set, otherwise the concatenated ray labels ("e1d3e3d4").
  std::string cone_display(std::size_t cone) const;
  std::vector<std::string> face_labels(const Face& face) const;

 private:
  std::size_t ambient_dim_;
  std::vector<Ray> rays_;
  std::vector<SimplicialCone> cones_;
};

enum class Containment { Closed, Interior };

bool contains(const Fan& fan, std::size_t cone, const IntVector& p, Containment mode);

/// Rays of the cone with strictly positive coefficient for p: the face
/// containing p in its relative interior. Throws NotContained.
Face minimal_face(const Fan& fan, std::size_t cone, const IntVector& p);

/// Incidence of every codimension-one face of every max cone.
struct FacetIncidence {
  std::map<Face, std::vector<std::size_t>> cones_of_facet;

  std::vector<Face> unpaired() const;  // incidence != 2
};

FacetIncidence facet_incidence(const Fan& fan);

/// Facet -> (cone, cone). Throws UnpairedFacet naming the offending facets
/// when some incidence is not exactly two.
std::map<Face, std::pair<std::size_t, std::size_t>> facet_pairing(const Fan& fan);

/// True iff the two rays opposite the shared facet lie strictly on opposite
/// sides of the facet hyperplane. Throws DegenerateFacet.
bool opposite_sides(const Fan& fan, const Face& facet, std::pair<std::size_t, std::size_t> cones);

struct CompletenessReport {
  IntVector witness;
  std::size_t facet_count = 0;
  bool all_facets_paired = false;
  bool all_pairs_opposite = false;
  std::size_t witness_multiplicity = 0;
  bool verdict = false;
  std::vector<Face> unpaired_facets;
  std::vector<Face> same_side_facets;
};

/// Completeness via covering degree: paired facets with the two cones on
/// opposite sides make the cones cover space with constant multiplicity,
/// which the witness pins to one. Throws NonGenericWitness when the witness
/// lies on a facet hyperplane.
CompletenessReport verify_completeness(const Fan& fan, const IntVector& witness);

/// (1,1,...,1), falling back to (1,2,4,...) and (1,3,9,...) when that lies on
/// a facet hyperplane of the fan.
IntVector default_witness(const Fan& fan);

bool is_generic_witness(const Fan& fan, const IntVector& witness);

struct ConeDeterminant {
  std::size_t cone;
  Integer determinant;
};

struct SmoothnessReport {
  std::vector<ConeDeterminant> determinants;
  std::vector<std::size_t> singular_cones;
  bool smooth = false;
};

SmoothnessReport smoothness_report(const Fan& fan);

/// Is there a nonnegative combination of the cone's rays with every
/// coordinate strictly positive? Decided by exact elimination.
bool cone_meets_open_orthant(const Fan& fan, std::size_t cone);

}  // namespace toricfan
