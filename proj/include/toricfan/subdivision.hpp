#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricfan/fan.hpp"

namespace toricfan {

/// Record of one stellar subdivision.
struct SubdivisionStep {
  std::string new_ray_label;
  IntVector new_ray;
  /// Rays of the face containing the new ray in its relative interior.
  Face minimal_face;
  /// Replaced cones as they were in the input fan (labels in listed order).
  std::vector<std::string> affected_names;
  std::vector<std::vector<std::string>> affected_cones;
  std::vector<std::vector<std::string>> produced_cones;
};

struct SubdivisionResult {
  Fan fan;
  SubdivisionStep step;
};

/// Stellar subdivision at p (reduced to a primitive vector first). Every max
/// cone containing the minimal face F of p is replaced, in place, by the
/// cones obtained by substituting the new ray for each ray of F at that
/// ray's position.
SubdivisionResult stellar_subdivide(const Fan& fan, const IntVector& p, const std::string& label);

struct DesingularizationResult {
  Fan fan;
  std::vector<SubdivisionStep> steps;
  /// Fan after each step; intermediate[i] is the fan right after steps[i].
  std::vector<Fan> intermediate;
};

/// Replays the ten subdivisions at c1..c10 on the Barnette fan. Checks the
/// result against the embedded expectations and throws Internal if any of
/// them fails.
DesingularizationResult desingularize_barnette();

/// Every max cone of fine lies in some max cone of coarse.
bool refines(const Fan& fine, const Fan& coarse);

/// Index of a cone of fine contained in no cone of coarse, if any.
std::optional<std::size_t> refinement_counterexample(const Fan& fine, const Fan& coarse);

/// Adds rays N = +e_{n+1} and S = -e_{n+1}; cones are sigma+N for every
/// sigma followed by sigma+S for every sigma.
Fan suspend_fan(const Fan& fan);

struct FamilyMember {
  Fan fan;
  SubdivisionStep step;
};

/// Successive subdivisions of smooth cones at the sum of their rays. The
/// first subdivided cone is `first` when given; after that (or without it)
/// the lexicographically smallest cone by sorted ray labels among the
/// untouched cones of the base. New rays are labelled f1, f2, ...
std::vector<FamilyMember> generate_family(const Fan& base, std::size_t count,
                                          const std::optional<std::vector<std::string>>& first = std::nullopt);

/// The cone {d1, e2, d2, d4} the family starts from when the base is the
/// smooth Barnette refinement.
std::vector<std::string> barnette_family_start();

}  // namespace toricfan
