#include "toricfan/certificate.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>

#include "toricfan/elimination.hpp"

namespace toricfan {

const char* to_string(RealizationViolation::Kind kind) {
  switch (kind) {
    case RealizationViolation::Kind::FacetNotSupporting: return "facet_not_supporting";
    case RealizationViolation::Kind::ExtraSupportedFacet: return "extra_supported_facet";
  }
  return "unknown";
}

Realization realization_from_rays(const Fan& fan) {
  Realization r;
  r.dim = fan.ambient_dim();
  for (const auto& ray : fan.rays()) r.coords.emplace(ray.label, RatVector(ray.vector));
  return r;
}

namespace {

// Integer row proportional to (x, 1).
IntVector homogenised(const RatVector& x) {
  Integer l = 1;
  for (const auto& q : x.entries()) l = boost::multiprecision::lcm(l, Integer(denominator(q)));
  IntVector out(x.dim() + 1);
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = Integer(numerator(x[i]) * (l / denominator(x[i])));
  out[x.dim()] = l;
  return out;
}

// Normal h of the affine hull: h . (x, 1) = 0 on the spanning points. Zero
// when the points are affinely dependent.
IntVector affine_normal(const std::vector<const IntVector*>& rows) {
  std::vector<IntVector> vs;
  for (const auto* r : rows) vs.push_back(*r);
  return orthogonal_complement(vs);
}

struct SideSummary {
  std::size_t above = 0, below = 0, on = 0;
  std::string first_bad;
};

SideSummary sides(const IntVector& h, const std::vector<IntVector>& points, const std::vector<bool>& skip,
                  const std::vector<std::string>& names) {
  SideSummary s;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (skip[i]) continue;
    int sg = sign(dot(h, points[i]));
    if (sg > 0) ++s.above;
    else if (sg < 0) ++s.below;
    else {
      ++s.on;
      if (s.first_bad.empty()) s.first_bad = names[i];
    }
  }
  return s;
}

}  // namespace

CertificateReport certify_realization(const SimplicialComplex& c, const Realization& r) {
  const std::size_t d = r.dim;
  if (static_cast<std::size_t>(c.dimension() + 1) != d)
    throw Error(ErrorCode::DimensionMismatch,
                "complex of dimension " + std::to_string(c.dimension()) + " needs coordinates in dimension " +
                    std::to_string(c.dimension() + 1));
  const auto& names = c.vertex_labels();
  std::vector<IntVector> points;
  for (const auto& name : names) {
    auto it = r.coords.find(name);
    if (it == r.coords.end()) throw Error(ErrorCode::MissingCoordinates, "no coordinates for vertex " + name);
    if (it->second.dim() != d) throw Error(ErrorCode::DimensionMismatch, "coordinates of " + name + " have wrong dimension");
    points.push_back(homogenised(it->second));
  }

  CertificateReport rep;
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += x;
    return s;
  };

  for (const auto& facet : c.facets()) {
    std::vector<const IntVector*> rows;
    std::vector<bool> skip(points.size(), false);
    for (std::size_t v : facet) {
      rows.push_back(&points[v]);
      skip[v] = true;
    }
    IntVector h = affine_normal(rows);
    if (h.is_zero())
      throw Error(ErrorCode::DegenerateFacet, "vertices of facet " + join(c.labels_of(facet)) + " are affinely dependent");
    ++rep.facets_checked;
    SideSummary s = sides(h, points, skip, names);
    if (s.on == 0 && (s.above == 0 || s.below == 0)) continue;
    ++rep.non_supporting_facets;
    if (!rep.violation) {
      std::string detail;
      if (s.on) detail = "vertex " + s.first_bad + " lies on the facet hyperplane";
      else
        detail = std::to_string(s.above) + " vertices on one side, " + std::to_string(s.below) + " on the other";
      rep.violation = RealizationViolation{RealizationViolation::Kind::FacetNotSupporting, c.labels_of(facet), detail};
    }
  }

  // Every other d-subset must fail to be a supporting simplex.
  std::set<Face> facet_set(c.facets().begin(), c.facets().end());
  const std::size_t n = points.size();
  if (d <= n) {
    std::vector<bool> select(n, false);
    std::fill(select.begin(), select.begin() + static_cast<std::ptrdiff_t>(d), true);
    do {
      Face subset;
      for (std::size_t i = 0; i < n; ++i)
        if (select[i]) subset.push_back(i);
      if (facet_set.count(subset)) continue;
      ++rep.subsets_checked;
      std::vector<const IntVector*> rows;
      for (std::size_t v : subset) rows.push_back(&points[v]);
      IntVector h = affine_normal(rows);
      if (h.is_zero()) continue;
      SideSummary s = sides(h, points, select, names);
      if (s.on == 0 && (s.above == 0 || s.below == 0)) {
        ++rep.extra_supported;
        if (!rep.violation)
          rep.violation = RealizationViolation{RealizationViolation::Kind::ExtraSupportedFacet, c.labels_of(subset),
                                               "spans a supporting hyperplane but is not a facet"};
      }
    } while (std::prev_permutation(select.begin(), select.end()));
  }

  rep.passed = !rep.violation.has_value();
  return rep;
}

std::vector<bool> convex_position(const std::vector<RatVector>& points) {
  if (points.empty()) return {};
  const std::size_t d = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != d) throw Error(ErrorCode::DimensionMismatch, "points have different dimensions");
  if (points.size() < d + 1) throw Error(ErrorCode::InvalidArgument, "need at least d+1 points");

  std::vector<bool> flags(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    // Find a with a . (p_i - p_j) >= 1 for every j != i (strict separation,
    // scaled).
    InequalitySystem sys(d);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      std::vector<Rational> row(d);
      for (std::size_t k = 0; k < d; ++k) row[k] = points[i][k] - points[j][k];
      sys.add_at_least(std::move(row), 1);
    }
    flags[i] = is_feasible(sys);
  }
  return flags;
}

}  // namespace toricfan
