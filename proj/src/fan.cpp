#include "toricfan/fan.hpp"

#include <algorithm>
#include <set>

#include "toricfan/elimination.hpp"

namespace toricfan {

Fan::Fan(std::size_t ambient_dim, std::vector<Ray> rays, std::vector<SimplicialCone> cones)
    : ambient_dim_(ambient_dim), rays_(std::move(rays)), cones_(std::move(cones)) {
  if (ambient_dim_ == 0) throw Error(ErrorCode::InvalidArgument, "ambient dimension must be positive");
  std::set<std::string> labels;
  std::set<IntVector> vectors;
  for (const auto& r : rays_) {
    if (r.label.empty()) throw Error(ErrorCode::InvalidArgument, "ray label must not be empty");
    if (r.vector.dim() != ambient_dim_)
      throw Error(ErrorCode::DimensionMismatch, "ray " + r.label + " has wrong dimension");
    if (r.vector.is_zero()) throw Error(ErrorCode::ZeroVector, "ray " + r.label + " is zero");
    if (!is_primitive(r.vector))
      throw Error(ErrorCode::InvalidArgument, "ray " + r.label + " is not primitive");
    if (!labels.insert(r.label).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate ray label " + r.label);
    if (!vectors.insert(r.vector).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate ray vector " + r.vector.to_string());
  }
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    const auto& cone = cones_[c];
    if (cone.rays.size() != ambient_dim_)
      throw Error(ErrorCode::InvalidArgument,
                  "cone " + std::to_string(c + 1) + " is not full-dimensional");
    std::set<std::size_t> distinct(cone.rays.begin(), cone.rays.end());
    if (distinct.size() != cone.rays.size())
      throw Error(ErrorCode::InvalidArgument, "cone " + std::to_string(c + 1) + " repeats a ray");
    for (std::size_t r : cone.rays)
      if (r >= rays_.size())
        throw Error(ErrorCode::InvalidArgument, "cone " + std::to_string(c + 1) + " references unknown ray");
    if (cone_determinant(c) == 0)
      throw Error(ErrorCode::InvalidArgument, "cone " + cone_display(c) + " is degenerate");
  }
}

std::optional<std::size_t> Fan::find_ray(const std::string& label) const {
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i].label == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> Fan::find_ray(const IntVector& v) const {
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i].vector == v) return i;
  return std::nullopt;
}

std::size_t Fan::ray_index(const std::string& label) const {
  auto i = find_ray(label);
  if (!i) throw Error(ErrorCode::MissingLabel, "no ray labelled '" + label + "'");
  return *i;
}

std::optional<std::size_t> Fan::find_cone(const std::vector<std::string>& labels) const {
  Face wanted;
  for (const auto& l : labels) wanted.push_back(ray_index(l));
  std::sort(wanted.begin(), wanted.end());
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    Face have = cones_[c].rays;
    std::sort(have.begin(), have.end());
    if (have == wanted) return c;
  }
  return std::nullopt;
}

std::optional<std::size_t> Fan::find_cone_by_name(const std::string& name) const {
  for (std::size_t c = 0; c < cones_.size(); ++c)
    if (cones_[c].name == name) return c;
  return std::nullopt;
}

SquareMatrix Fan::cone_matrix(std::size_t cone) const {
  std::vector<IntVector> cols;
  for (std::size_t r : cones_.at(cone).rays) cols.push_back(rays_[r].vector);
  return SquareMatrix(std::move(cols));
}

Integer Fan::cone_determinant(std::size_t cone) const { return determinant(cone_matrix(cone)); }

std::vector<std::string> Fan::cone_labels(std::size_t cone) const {
  std::vector<std::string> out;
  for (std::size_t r : cones_.at(cone).rays) out.push_back(rays_[r].label);
  return out;
}

std::string Fan::cone_display(std::size_t cone) const {
  if (!cones_.at(cone).name.empty()) return cones_[cone].name;
  std::string s;
  for (std::size_t r : cones_[cone].rays) s += rays_[r].label;
  return s;
}

std::vector<std::string> Fan::face_labels(const Face& face) const {
  std::vector<std::string> out;
  for (std::size_t r : face) out.push_back(rays_.at(r).label);
  return out;
}

bool contains(const Fan& fan, std::size_t cone, const IntVector& p, Containment mode) {
  if (p.dim() != fan.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "point has dimension " + std::to_string(p.dim()));
  RatVector lambda = solve_coefficients(fan.cone_matrix(cone), p);
  for (const auto& l : lambda.entries()) {
    if (l < 0) return false;
    if (mode == Containment::Interior && l == 0) return false;
  }
  return true;
}

Face minimal_face(const Fan& fan, std::size_t cone, const IntVector& p) {
  if (p.dim() != fan.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "point has dimension " + std::to_string(p.dim()));
  const auto& rays = fan.cone(cone).rays;
  RatVector lambda = solve_coefficients(fan.cone_matrix(cone), p);
  Face face;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (lambda[i] < 0)
      throw Error(ErrorCode::NotContained,
                  p.to_string() + " is not in cone " + fan.cone_display(cone));
    if (lambda[i] > 0) face.push_back(rays[i]);
  }
  std::sort(face.begin(), face.end());
  return face;
}

std::vector<Face> FacetIncidence::unpaired() const {
  std::vector<Face> out;
  for (const auto& [facet, cones] : cones_of_facet)
    if (cones.size() != 2) out.push_back(facet);
  return out;
}

FacetIncidence facet_incidence(const Fan& fan) {
  FacetIncidence inc;
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    Face rays = fan.cone(c).rays;
    std::sort(rays.begin(), rays.end());
    for (std::size_t skip = 0; skip < rays.size(); ++skip) {
      Face facet;
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (i != skip) facet.push_back(rays[i]);
      inc.cones_of_facet[facet].push_back(c);
    }
  }
  return inc;
}

std::map<Face, std::pair<std::size_t, std::size_t>> facet_pairing(const Fan& fan) {
  FacetIncidence inc = facet_incidence(fan);
  auto bad = inc.unpaired();
  if (!bad.empty()) {
    std::string msg = std::to_string(bad.size()) + " facet(s) not shared by exactly two cones:";
    for (const auto& f : bad) {
      msg += ' ';
      for (const auto& l : fan.face_labels(f)) msg += l;
      msg += "(x" + std::to_string(inc.cones_of_facet[f].size()) + ")";
    }
    throw Error(ErrorCode::UnpairedFacet, msg);
  }
  std::map<Face, std::pair<std::size_t, std::size_t>> out;
  for (const auto& [facet, cones] : inc.cones_of_facet) out.emplace(facet, std::make_pair(cones[0], cones[1]));
  return out;
}

namespace {

std::size_t opposite_ray(const Fan& fan, std::size_t cone, const Face& facet) {
  for (std::size_t r : fan.cone(cone).rays)
    if (!std::binary_search(facet.begin(), facet.end(), r)) return r;
  throw Error(ErrorCode::InvalidArgument, "facet is not a face of cone " + fan.cone_display(cone));
}

IntVector facet_normal(const Fan& fan, const Face& facet) {
  std::vector<IntVector> vs;
  for (std::size_t r : facet) vs.push_back(fan.ray(r).vector);
  IntVector n = orthogonal_complement(vs);
  if (n.is_zero()) throw Error(ErrorCode::DegenerateFacet, "facet rays are linearly dependent");
  return n;
}

}  // namespace

bool opposite_sides(const Fan& fan, const Face& facet, std::pair<std::size_t, std::size_t> cones) {
  if (facet.size() + 1 != fan.ambient_dim())
    throw Error(ErrorCode::InvalidArgument, "facet must have ambient_dim - 1 rays");
  Face sorted = facet;
  std::sort(sorted.begin(), sorted.end());
  IntVector n = facet_normal(fan, sorted);
  int su = sign(dot(n, fan.ray(opposite_ray(fan, cones.first, sorted)).vector));
  int sv = sign(dot(n, fan.ray(opposite_ray(fan, cones.second, sorted)).vector));
  return su != 0 && su == -sv;
}

bool is_generic_witness(const Fan& fan, const IntVector& witness) {
  if (witness.dim() != fan.ambient_dim() || witness.is_zero()) return false;
  for (const auto& [facet, cones] : facet_incidence(fan).cones_of_facet)
    if (sign(dot(facet_normal(fan, facet), witness)) == 0) return false;
  return true;
}

IntVector default_witness(const Fan& fan) {
  const std::size_t n = fan.ambient_dim();
  // (1,1,...,1), then (1,b,b^2,...) for b = 2, 3, ...
  for (long long base = 1; base <= 16; ++base) {
    IntVector w(n);
    Integer x = 1;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = x;
      x *= base;
    }
    if (is_generic_witness(fan, w)) return w;
  }
  throw Error(ErrorCode::NonGenericWitness, "no generic witness among the default candidates");
}

CompletenessReport verify_completeness(const Fan& fan, const IntVector& witness) {
  if (witness.dim() != fan.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "witness has dimension " + std::to_string(witness.dim()));
  if (!is_generic_witness(fan, witness))
    throw Error(ErrorCode::NonGenericWitness,
                "witness " + witness.to_string() + " lies on a facet hyperplane");

  CompletenessReport rep;
  rep.witness = witness;
  FacetIncidence inc = facet_incidence(fan);
  rep.facet_count = inc.cones_of_facet.size();
  rep.unpaired_facets = inc.unpaired();
  rep.all_facets_paired = rep.unpaired_facets.empty();

  rep.all_pairs_opposite = true;
  for (const auto& [facet, cones] : inc.cones_of_facet) {
    if (cones.size() != 2) continue;
    if (!opposite_sides(fan, facet, {cones[0], cones[1]})) {
      rep.all_pairs_opposite = false;
      rep.same_side_facets.push_back(facet);
    }
  }

  for (std::size_t c = 0; c < fan.cones().size(); ++c)
    if (contains(fan, c, witness, Containment::Interior)) ++rep.witness_multiplicity;

  rep.verdict = rep.all_facets_paired && rep.all_pairs_opposite && rep.witness_multiplicity == 1;
  return rep;
}

SmoothnessReport smoothness_report(const Fan& fan) {
  SmoothnessReport rep;
  rep.smooth = true;
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    Integer d = fan.cone_determinant(c);
    if (d != 1 && d != -1) {
      rep.smooth = false;
      rep.singular_cones.push_back(c);
    }
    rep.determinants.push_back({c, std::move(d)});
  }
  return rep;
}

bool cone_meets_open_orthant(const Fan& fan, std::size_t cone) {
  const auto& rays = fan.cone(cone).rays;
  const std::size_t k = rays.size();
  const std::size_t n = fan.ambient_dim();
  // Homogeneous: sum lambda_i v_i > 0 is feasible iff sum lambda_i v_i >= 1 is.
  InequalitySystem sys(k);
  for (std::size_t i = 0; i < k; ++i) sys.add_nonnegative(i);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = Rational(fan.ray(rays[i]).vector[j]);
    sys.add_at_least(std::move(row), 1);
  }
  return is_feasible(sys);
}

}  // namespace toricfan
