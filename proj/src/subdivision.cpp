#include "toricfan/subdivision.hpp"

#include <algorithm>
#include <set>

#include "toricfan/barnette.hpp"

namespace toricfan {

namespace {

bool contains_face(const SimplicialCone& cone, const Face& face) {
  return std::all_of(face.begin(), face.end(), [&](std::size_t r) {
    return std::find(cone.rays.begin(), cone.rays.end(), r) != cone.rays.end();
  });
}

std::vector<std::string> labels_of(const std::vector<Ray>& rays, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(rays[i].label);
  return out;
}

[[noreturn]] void pipeline_failure(const std::string& what) {
  throw Error(ErrorCode::Internal, "desingularization check failed: " + what);
}

}  // namespace

SubdivisionResult stellar_subdivide(const Fan& fan, const IntVector& p, const std::string& label) {
  if (p.dim() != fan.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "point has dimension " + std::to_string(p.dim()));
  IntVector ray = make_primitive(p);
  if (auto existing = fan.find_ray(ray))
    throw Error(ErrorCode::PointIsRay, p.to_string() + " lies on ray " + fan.ray(*existing).label);
  if (fan.find_ray(label))
    throw Error(ErrorCode::InvalidArgument, "ray label '" + label + "' already in use");

  std::optional<Face> face;
  for (std::size_t c = 0; c < fan.cones().size() && !face; ++c)
    if (contains(fan, c, ray, Containment::Closed)) face = minimal_face(fan, c, ray);
  if (!face) throw Error(ErrorCode::OutsideSupport, p.to_string() + " is outside the support of the fan");

  std::vector<Ray> rays = fan.rays();
  const std::size_t new_index = rays.size();
  rays.push_back({label, ray});

  SubdivisionStep step;
  step.new_ray_label = label;
  step.new_ray = ray;
  step.minimal_face = *face;

  std::vector<SimplicialCone> cones;
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    const SimplicialCone& cone = fan.cone(c);
    if (!contains_face(cone, *face)) {
      cones.push_back(cone);
      continue;
    }
    step.affected_names.push_back(cone.name);
    step.affected_cones.push_back(labels_of(rays, cone.rays));
    for (std::size_t pos = 0; pos < cone.rays.size(); ++pos) {
      if (!std::binary_search(face->begin(), face->end(), cone.rays[pos])) continue;
      SimplicialCone produced;
      produced.rays = cone.rays;
      produced.rays[pos] = new_index;
      step.produced_cones.push_back(labels_of(rays, produced.rays));
      cones.push_back(std::move(produced));
    }
  }
  if (step.produced_cones.size() != step.affected_cones.size() * face->size())
    throw Error(ErrorCode::Internal, "stellar subdivision produced an unexpected cone count");

  return {Fan(fan.ambient_dim(), std::move(rays), std::move(cones)), std::move(step)};
}

DesingularizationResult desingularize_barnette() {
  const Fan delta = barnette::delta();
  std::vector<SubdivisionStep> steps;
  std::vector<Fan> intermediate;
  Fan current = delta;
  for (const auto& pt : barnette::subdivision_points()) {
    IntVector v{pt.vector[0], pt.vector[1], pt.vector[2], pt.vector[3]};
    if (!is_primitive(v)) pipeline_failure(std::string(pt.label) + " is not primitive");
    auto result = stellar_subdivide(current, v, pt.label);
    steps.push_back(std::move(result.step));
    intermediate.push_back(result.fan);
    current = std::move(result.fan);
  }

  if (current.rays().size() != 18) pipeline_failure("expected 18 rays");
  if (current.cones().size() != 55) pipeline_failure("expected 55 maximal cones");

  std::vector<std::string> surviving = barnette::surviving_cone_names();
  std::set<std::vector<std::string>> expected;
  for (const auto& name : surviving) {
    auto c = delta.find_cone_by_name(name);
    expected.insert(delta.cone_labels(*c));
  }
  for (const auto& sc : barnette::subdivided_cones()) {
    std::vector<std::string> labels(sc.rays.begin(), sc.rays.end());
    auto c = current.find_cone(labels);
    if (!c) pipeline_failure("missing subdivided cone");
    // Listed order may differ from the stored order only by the sign it
    // induces; compare the determinant in the listed order.
    std::vector<IntVector> cols;
    for (const auto& l : labels) cols.push_back(current.ray(current.ray_index(l)).vector);
    Integer d = determinant(SquareMatrix(std::move(cols)));
    if (d != sc.sign) pipeline_failure("subdivided cone has determinant " + d.str());
    expected.insert(labels);
  }
  std::set<std::vector<std::string>> produced;
  for (std::size_t c = 0; c < current.cones().size(); ++c) produced.insert(current.cone_labels(c));
  if (produced != expected) pipeline_failure("cone set differs from the expected refinement");
  if (!smoothness_report(current).smooth) pipeline_failure("result is not smooth");

  return {std::move(current), std::move(steps), std::move(intermediate)};
}

std::optional<std::size_t> refinement_counterexample(const Fan& fine, const Fan& coarse) {
  if (fine.ambient_dim() != coarse.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "fans live in different dimensions");
  for (std::size_t f = 0; f < fine.cones().size(); ++f) {
    bool found = false;
    for (std::size_t c = 0; c < coarse.cones().size() && !found; ++c) {
      found = std::all_of(fine.cone(f).rays.begin(), fine.cone(f).rays.end(), [&](std::size_t r) {
        return contains(coarse, c, fine.ray(r).vector, Containment::Closed);
      });
    }
    if (!found) return f;
  }
  return std::nullopt;
}

bool refines(const Fan& fine, const Fan& coarse) { return !refinement_counterexample(fine, coarse); }

Fan suspend_fan(const Fan& fan) {
  const std::size_t n = fan.ambient_dim();
  if (fan.find_ray("N") || fan.find_ray("S"))
    throw Error(ErrorCode::InvalidArgument, "fan already has a ray labelled N or S");
  std::vector<Ray> rays;
  for (const auto& r : fan.rays()) {
    std::vector<Integer> e(r.vector.entries().begin(), r.vector.entries().end());
    e.push_back(0);
    rays.push_back({r.label, IntVector(std::move(e))});
  }
  IntVector north(n + 1), south(n + 1);
  north[n] = 1;
  south[n] = -1;
  const std::size_t ni = rays.size();
  rays.push_back({"N", north});
  rays.push_back({"S", south});

  std::vector<SimplicialCone> cones;
  for (std::size_t apex : {ni, ni + 1}) {
    const char* suffix = apex == ni ? "/N" : "/S";
    for (const auto& c : fan.cones()) {
      SimplicialCone s;
      s.rays = c.rays;
      s.rays.push_back(apex);
      if (!c.name.empty()) s.name = c.name + suffix;
      cones.push_back(std::move(s));
    }
  }
  return Fan(n + 1, std::move(rays), std::move(cones));
}

std::vector<std::string> barnette_family_start() { return {"d1", "e2", "d2", "d4"}; }

std::vector<FamilyMember> generate_family(const Fan& base, std::size_t count,
                                          const std::optional<std::vector<std::string>>& first) {
  std::vector<FamilyMember> out;
  if (count == 0) return out;
  if (!smoothness_report(base).smooth)
    throw Error(ErrorCode::InvalidArgument, "family base must be smooth");

  std::set<Face> untouched;
  for (const auto& c : base.cones()) {
    Face f = c.rays;
    std::sort(f.begin(), f.end());
    untouched.insert(f);
  }

  Fan current = base;
  std::size_t label_no = 1;
  for (std::size_t step = 0; step < count; ++step) {
    std::optional<std::size_t> pick;
    if (step == 0 && first) {
      pick = current.find_cone(*first);
      if (!pick) throw Error(ErrorCode::MissingLabel, "family start cone not found in the base fan");
    } else {
      std::optional<std::vector<std::string>> best;
      for (std::size_t c = 0; c < current.cones().size(); ++c) {
        Face f = current.cone(c).rays;
        std::sort(f.begin(), f.end());
        if (!untouched.count(f)) continue;
        Integer d = current.cone_determinant(c);
        if (d != 1 && d != -1) continue;
        auto labels = current.cone_labels(c);
        std::sort(labels.begin(), labels.end());
        if (!best || labels < *best) {
          best = labels;
          pick = c;
        }
      }
      if (!pick) throw Error(ErrorCode::InvalidArgument, "no untouched smooth cone left to subdivide");
    }
    Face picked = current.cone(*pick).rays;
    std::sort(picked.begin(), picked.end());
    untouched.erase(picked);

    IntVector sum(current.ambient_dim());
    for (std::size_t r : current.cone(*pick).rays) sum += current.ray(r).vector;

    std::string label;
    do {
      label = "f" + std::to_string(label_no++);
    } while (current.find_ray(label));

    auto result = stellar_subdivide(current, sum, label);
    current = result.fan;
    out.push_back({std::move(result.fan), std::move(result.step)});
  }
  return out;
}

}  // namespace toricfan
