// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "toricfan/barnette.hpp"
#include "toricfan/certificate.hpp"
#include "toricfan/complex.hpp"
#include "toricfan/lattice_scan.hpp"
#include "toricfan/subdivision.hpp"

using namespace toricfan;

namespace {

using Labels = std::vector<std::string>;

// Collects the first few failed checks of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_ == 0; }
  std::string detail() const {
    return failures_ > 5 ? detail_ + "; ... (" + std::to_string(failures_) + " failures)" : detail_;
  }

 private:
  int failures_ = 0;
  std::string detail_;
};

struct Criterion {
  int number;
  const char* title;
  std::function<void(Check&)> body;
};

const DesingularizationResult& pipeline() {
  static const DesingularizationResult r = desingularize_barnette();
  return r;
}

Integer det_of(const Fan& fan, const Labels& labels) {
  std::vector<IntVector> cols;
  for (const auto& l : labels) cols.push_back(fan.ray(fan.ray_index(l)).vector);
  return determinant(SquareMatrix(cols));
}

std::string str(const Integer& x) { return x.str(); }

void table_determinants(Check& c) {
  Fan delta = barnette::delta();
  const auto& table = barnette::table_cones();
  c.expect(delta.cones().size() == 19, "expected 19 cones");
  for (std::size_t i = 0; i < table.size(); ++i) {
    Labels labels(table[i].rays.begin(), table[i].rays.end());
    Integer d = det_of(delta, labels);
    c.expect(d == table[i].determinant,
             std::string(table[i].name) + " det " + str(d) + " != " + std::to_string(table[i].determinant));
    c.expect(d == oracle::det_of_columns(oracle::cone_columns(delta, i)), std::string(table[i].name) + " cofactor mismatch");
  }
}

void completeness(Check& c) {
  struct Case {
    const char* name;
    Fan fan;
    std::size_t facets;
  };
  for (const Case& k : {Case{"delta", barnette::delta(), 38}, Case{"delta'", pipeline().fan, 110}}) {
    auto rep = verify_completeness(k.fan, default_witness(k.fan));
    std::string n = k.name;
    c.expect(rep.verdict, n + " not complete");
    c.expect(rep.facet_count == k.facets, n + " facet count " + std::to_string(rep.facet_count));
    c.expect(rep.all_facets_paired, n + " unpaired facets");
    c.expect(rep.all_pairs_opposite, n + " same-side facet pair");
    c.expect(rep.witness_multiplicity == 1, n + " multiplicity " + std::to_string(rep.witness_multiplicity));
  }
}

void table_scan(Check& c) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  auto rep = scan_box(barnette::delta(), barnette::kScanBound, true, workers);
  const auto& k = barnette::kScanCounts;
  auto expect_count = [&](PointClass cls, std::uint64_t want) {
    c.expect(rep.count(cls) == want,
             std::string(to_string(cls)) + " " + std::to_string(rep.count(cls)) + " != " + std::to_string(want));
  };
  expect_count(PointClass::InteriorOfCone, k.interior);
  expect_count(PointClass::RelIntFacet, k.facet);
  expect_count(PointClass::RelInt2Face, k.two_face);
  expect_count(PointClass::RelInt1Face, k.one_face);
  expect_count(PointClass::Origin, k.origin);
  expect_count(PointClass::NotCovered, 0);
  c.expect(rep.total == 43'046'721ULL, "total " + std::to_string(rep.total));
  c.expect(rep.sum_matches(), "counts do not sum to the box size");
  c.expect(rep.one_face_points && *rep.one_face_points == barnette::expected_one_face_points(),
           "one-face points differ from the listed set");
}

void refinement_pipeline(Check& c) {
  const auto& r = pipeline();
  const Fan& fan = r.fan;
  Fan delta = barnette::delta();
  c.expect(fan.rays().size() == 18, "ray count " + std::to_string(fan.rays().size()));
  c.expect(fan.cones().size() == 55, "cone count " + std::to_string(fan.cones().size()));

  std::set<Labels> expected, actual;
  auto sorted = [](Labels l) {
    std::sort(l.begin(), l.end());
    return l;
  };
  auto survivors = barnette::surviving_cone_names();
  c.expect(survivors.size() == 14, "survivor count");
  for (const auto& name : survivors) expected.insert(sorted(delta.cone_labels(*delta.find_cone_by_name(name))));
  for (const auto& sc : barnette::subdivided_cones()) {
    Labels labels(sc.rays.begin(), sc.rays.end());
    expected.insert(sorted(labels));
    if (fan.find_cone(labels)) c.expect(det_of(fan, labels) == sc.sign, "sign of listed cone");
  }
  for (std::size_t i = 0; i < fan.cones().size(); ++i) actual.insert(sorted(fan.cone_labels(i)));
  c.expect(expected.size() == 55, "expected set has " + std::to_string(expected.size()) + " cones");
  c.expect(actual == expected, "cone set differs from survivors plus subdivided cones");
  for (std::size_t i = 0; i < fan.cones().size(); ++i)
    c.expect(abs(fan.cone_determinant(i)) == 1, fan.cone_display(i) + " not unimodular");
  c.expect(refines(fan, delta), "does not refine delta");

  const Fan& after_c2 = r.intermediate[1];
  c.expect(det_of(after_c2, {"d3", "d2", "c2", "d4"}) == 2, "d3d2c2d4 after c2");
  c.expect(det_of(after_c2, {"d3", "d2", "e3", "c2"}) == 2, "d3d2e3c2 after c2");
  const Fan& after_c4 = r.intermediate[3];
  for (const Labels& l : {Labels{"c4", "d2", "d3", "e4"}, Labels{"d1", "c4", "d3", "e4"}, Labels{"d1", "d2", "c4", "e4"}})
    c.expect(det_of(after_c4, l) == -3, "-3 after c4");
  const std::vector<std::pair<std::size_t, Labels>> minus_two{
      {4, {"c4", "d2", "c5", "e4"}}, {4, {"c4", "d2", "d3", "c5"}}, {6, {"c7", "c4", "d3", "e4"}},
      {6, {"d1", "c4", "d3", "c7"}}, {8, {"d1", "c9", "c4", "e4"}}, {8, {"d1", "d2", "c4", "c9"}}};
  for (const auto& [step, l] : minus_two) {
    bool present = r.intermediate[step].find_cone(l).has_value();
    c.expect(present && det_of(r.intermediate[step], l) == -2, "-2 cone after " + r.steps[step].new_ray_label);
  }
}

void open_orthant(Check& c) {
  Fan delta = barnette::delta();
  for (std::size_t i = 0; i < delta.cones().size(); ++i) {
    bool hit = cone_meets_open_orthant(delta, i);
    c.expect(hit == (i == 0), delta.cone_display(i) + (hit ? " meets" : " misses") + " the open orthant");
  }
}

void obstruction(Check& c) {
  SimplicialComplex k = underlying_complex(pipeline().fan);
  auto rep = verify_barnette_obstruction(k);
  c.expect(rep.facts.size() == 4, "fact count");
  if (rep.facts.size() == 4) {
    c.expect(rep.facts[0].passed, "fact 1");
    c.expect(rep.facts[1].passed, "fact 2");
    c.expect(rep.facts[2].passed, "fact 3: star size");
    c.expect(rep.facts[3].passed, "fact 4");
    c.expect(!rep.facts[2].discrepancies.empty(), "reference listing discrepancy not reported");
  }
  c.expect(rep.star_facets.size() == 6, "star size");
  SimplicialComplex lk = link(k, k.face_from_labels({"e1", "d3"}));
  std::set<Labels> edges;
  for (const auto& e : lk.facet_label_sets()) edges.insert(e);
  std::set<Labels> want;
  for (Labels e : {Labels{"d2", "e3"}, Labels{"e3", "c1"}, Labels{"c1", "d1"}, Labels{"d1", "e2"}, Labels{"e2", "e4"},
                   Labels{"e4", "d2"}}) {
    std::sort(e.begin(), e.end());
    want.insert(e);
  }
  c.expect(edges == want, "link edges differ");
  c.expect(pseudomanifold_check(lk).passed && lk.vertex_count() == 6, "link is not a 6-cycle");
}

void family_and_suspension(Check& c) {
  const Fan& base = pipeline().fan;
  auto family = generate_family(base, 5, barnette_family_start());
  const std::size_t counts[] = {58, 61, 64, 67, 70};
  c.expect(family.size() == 5, "family size");
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Fan& f = family[i].fan;
    c.expect(f.cones().size() == counts[i], "member " + std::to_string(i + 1) + " has " + std::to_string(f.cones().size()));
    c.expect(smoothness_report(f).smooth, "member " + std::to_string(i + 1) + " singular");
    c.expect(verify_completeness(f, default_witness(f)).verdict, "member " + std::to_string(i + 1) + " incomplete");
  }
  Fan s = suspend_fan(base);
  c.expect(s.rays().size() == 20 && s.cones().size() == 110, "suspension size");
  c.expect(smoothness_report(s).smooth, "suspension singular");
  c.expect(verify_completeness(s, default_witness(s)).verdict, "suspension incomplete");
  SimplicialComplex ks = underlying_complex(s);
  c.expect(link(ks, ks.face_from_labels({"N"})) == underlying_complex(base), "link of N differs");
}

void oracle_equivalence(Check& c) {
  const std::vector<Fan> fans{barnette::delta(), pipeline().fan};
  for (const Fan& fan : fans) {
    for (long long b : {1, 2, 3}) {
      auto rep = scan_box(fan, b, false);
      std::map<int, std::uint64_t> got;
      for (std::size_t k = 0; k < rep.counts_by_face_dim.size(); ++k) got[static_cast<int>(k)] = rep.counts_by_face_dim[k];
      if (rep.not_covered) got[-1] = rep.not_covered;
      c.expect(got == oracle::naive_scan(fan, b),
               std::to_string(fan.cones().size()) + "-cone fan, B=" + std::to_string(b));
    }
  }
}

Realization point_set(std::size_t dim, const std::vector<std::pair<std::string, IntVector>>& pts) {
  Realization r{dim, {}};
  for (const auto& [l, v] : pts) r.coords[l] = RatVector(v);
  return r;
}

void certificate(Check& c) {
  std::vector<Labels> simplex_facets;
  Labels sv{"a", "b", "c", "d", "e"};
  for (std::size_t skip = 0; skip < 5; ++skip) {
    Labels f;
    for (std::size_t v = 0; v < 5; ++v)
      if (v != skip) f.push_back(sv[v]);
    simplex_facets.push_back(f);
  }
  auto simplex = SimplicialComplex::from_labels(simplex_facets);
  auto simplex_r = point_set(4, {{"a", {1, 0, 0, 0}}, {"b", {0, 1, 0, 0}}, {"c", {0, 0, 1, 0}}, {"d", {0, 0, 0, 1}},
                                 {"e", {-1, -1, -1, -1}}});
  std::vector<Labels> cross_facets;
  Realization cross_r{4, {}};
  for (unsigned mask = 0; mask < 16; ++mask) {
    Labels f;
    for (int i = 0; i < 4; ++i) f.push_back(((mask >> i) & 1 ? "-" : "+") + std::to_string(i + 1));
    cross_facets.push_back(f);
  }
  for (int i = 0; i < 4; ++i) {
    IntVector v(4);
    v[i] = 1;
    cross_r.coords["+" + std::to_string(i + 1)] = RatVector(v);
    cross_r.coords["-" + std::to_string(i + 1)] = RatVector(-v);
  }
  auto cross = SimplicialComplex::from_labels(cross_facets);
  c.expect(certify_realization(simplex, simplex_r).passed, "4-simplex rejected");
  c.expect(certify_realization(cross, cross_r).passed, "cross-polytope rejected");

  const Fan& fan = pipeline().fan;
  auto rep = certify_realization(underlying_complex(fan), realization_from_rays(fan));
  c.expect(!rep.passed, "ray realization accepted");
  c.expect(rep.violation.has_value() && !rep.violation->facet.empty(), "no witness facet");
  if (rep.violation) {
    // Independent check that the witness facet really fails to support.
    std::vector<RatVector> pts;
    for (const auto& l : rep.violation->facet) pts.push_back(RatVector(fan.ray(fan.ray_index(l)).vector));
    std::set<int> sides;
    for (const auto& r : fan.rays())
      if (std::find(rep.violation->facet.begin(), rep.violation->facet.end(), r.label) == rep.violation->facet.end())
        sides.insert(oracle::affine_side(pts, RatVector(r.vector)));
    c.expect(sides.size() > 1 || sides.count(0), "witness facet is actually supporting");
  }

  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> pick(0, 3), k(-3, 3);
  for (int t = 0; t < 3; ++t) {
    std::vector<IntVector> cols;
    for (int i = 0; i < 4; ++i) {
      IntVector v(4);
      v[i] = 1;
      cols.push_back(v);
    }
    for (int s = 0; s < 16; ++s) {
      int a = pick(rng), b = pick(rng);
      if (a != b) cols[a] += Integer(k(rng)) * cols[b];
    }
    SquareMatrix m(cols);
    c.expect(abs(determinant(m)) == 1, "transform not unimodular");
    IntVector shift = oracle::random_vector(rng, 4, -7, 7);
    auto move = [&](const Realization& r) {
      Realization out{r.dim, {}};
      for (const auto& [l, p] : r.coords) {
        RatVector q = m.apply(p);
        for (std::size_t i = 0; i < 4; ++i) q[i] += Rational(shift[i]);
        out.coords[l] = q;
      }
      return out;
    };
    c.expect(certify_realization(simplex, move(simplex_r)).passed, "transformed simplex rejected");
    c.expect(certify_realization(cross, move(cross_r)).passed, "transformed cross-polytope rejected");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cone determinants match the table", table_determinants},
      {2, "completeness of delta and delta'", completeness},
      {3, "lattice classification of [-40,40]^4", table_scan},
      {4, "desingularization pipeline", refinement_pipeline},
      {5, "open-orthant test", open_orthant},
      {6, "star and link of e1d3", obstruction},
      {7, "family and suspension properties", family_and_suspension},
      {8, "scan agrees with the naive oracle", oracle_equivalence},
      {9, "realization certificates", certificate},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%.0f ms)%s%s\n", check.ok() ? "PASS" : "FAIL", crit.number, crit.title, ms,
                check.ok() ? "" : " -- ", check.detail().c_str());
    std::fflush(stdout);
    if (!check.ok()) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
