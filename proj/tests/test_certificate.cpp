#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toricfan/certificate.hpp"
#include "toricfan/subdivision.hpp"

using namespace toricfan;

namespace {

using Labels = std::vector<std::string>;

RatVector rv(std::initializer_list<long long> xs) { return RatVector(IntVector(xs)); }

struct Polytope {
  SimplicialComplex complex;
  Realization realization;
};

Polytope simplex4() {
  std::vector<Labels> facets;
  Labels all{"a", "b", "c", "d", "e"};
  for (std::size_t skip = 0; skip < 5; ++skip) {
    Labels f;
    for (std::size_t v = 0; v < 5; ++v)
      if (v != skip) f.push_back(all[v]);
    facets.push_back(f);
  }
  Realization r{4, {{"a", rv({1, 0, 0, 0})}, {"b", rv({0, 1, 0, 0})}, {"c", rv({0, 0, 1, 0})},
                    {"d", rv({0, 0, 0, 1})}, {"e", rv({-1, -1, -1, -1})}}};
  return {SimplicialComplex::from_labels(facets), r};
}

Polytope cross4() {
  std::vector<Labels> facets;
  for (unsigned mask = 0; mask < 16; ++mask) {
    Labels f;
    for (int i = 0; i < 4; ++i) f.push_back(std::string((mask >> i) & 1 ? "-" : "+") + std::to_string(i + 1));
    facets.push_back(f);
  }
  Realization r{4, {}};
  for (int i = 0; i < 4; ++i) {
    IntVector v(4);
    v[i] = 1;
    r.coords["+" + std::to_string(i + 1)] = RatVector(v);
    r.coords["-" + std::to_string(i + 1)] = RatVector(-v);
  }
  return {SimplicialComplex::from_labels(facets), r};
}

// Oracle: every facet's hyperplane has all other vertices strictly on one side.
bool oracle_supporting(const SimplicialComplex& k, const Realization& r, const Labels& facet) {
  std::vector<RatVector> pts;
  for (const auto& l : facet) pts.push_back(r.coords.at(l));
  int side = 0;
  for (const auto& l : k.vertex_labels()) {
    if (std::find(facet.begin(), facet.end(), l) != facet.end()) continue;
    int s = oracle::affine_side(pts, r.coords.at(l));
    if (s == 0 || (side != 0 && s != side)) return false;
    side = s;
  }
  return true;
}

Realization transform(const Realization& r, const std::vector<IntVector>& cols, const IntVector& shift) {
  SquareMatrix m(cols);
  Realization out{r.dim, {}};
  for (const auto& [l, p] : r.coords) {
    RatVector q = m.apply(p);
    for (std::size_t i = 0; i < q.dim(); ++i) q[i] += Rational(shift[i]);
    out.coords[l] = q;
  }
  return out;
}

// Random unimodular matrix from elementary column operations.
std::vector<IntVector> random_unimodular(std::mt19937& rng) {
  std::vector<IntVector> cols;
  for (int i = 0; i < 4; ++i) {
    IntVector v(4);
    v[i] = 1;
    cols.push_back(v);
  }
  std::uniform_int_distribution<int> pick(0, 3), k(-2, 2);
  for (int t = 0; t < 12; ++t) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    cols[a] += Integer(k(rng)) * cols[b];
  }
  return cols;
}

}  // namespace

TEST_SUITE("polytopality_cert") {
  TEST_CASE("simplex and cross-polytope are certified") {
    for (const auto& poly : {simplex4(), cross4()}) {
      auto rep = certify_realization(poly.complex, poly.realization);
      CHECK(rep.passed);
      CHECK_FALSE(rep.violation);
      CHECK(rep.facets_checked == poly.complex.facets().size());
      for (const auto& f : poly.complex.facet_label_sets()) CHECK(oracle_supporting(poly.complex, poly.realization, f));
    }
    CHECK(certify_realization(cross4().complex, cross4().realization).subsets_checked == 70 - 16);
  }

  TEST_CASE("certification is affine invariant") {
    std::mt19937 rng(17);
    for (int t = 0; t < 3; ++t) {
      auto cols = random_unimodular(rng);
      REQUIRE(abs(determinant(SquareMatrix(cols))) == 1);
      IntVector shift = oracle::random_vector(rng, 4, -5, 5);
      for (const auto& poly : {simplex4(), cross4()})
        CHECK(certify_realization(poly.complex, transform(poly.realization, cols, shift)).passed);
    }
  }

  TEST_CASE("ray coordinates of the smooth refinement are rejected") {
    Fan refined = desingularize_barnette().fan;
    SimplicialComplex k = underlying_complex(refined);
    Realization r = realization_from_rays(refined);
    auto rep = certify_realization(k, r);
    CHECK_FALSE(rep.passed);
    CHECK(rep.non_supporting_facets == 48);
    REQUIRE(rep.violation);
    CHECK(rep.violation->kind == RealizationViolation::Kind::FacetNotSupporting);
    CHECK(rep.violation->facet == Labels{"e1", "e2", "e3", "e4"});
    CHECK_FALSE(oracle_supporting(k, r, rep.violation->facet));
    // Every facet the checker accepts, the oracle accepts too.
    std::size_t accepted = 0;
    for (const auto& f : k.facet_label_sets())
      if (oracle_supporting(k, r, f)) ++accepted;
    CHECK(accepted == 55 - 48);
  }

  TEST_CASE("square pyramid with the base diagonal ac") {
    auto k = SimplicialComplex::from_labels({{"a", "b", "c"}, {"a", "c", "d"}, {"a", "b", "e"}, {"b", "c", "e"},
                                             {"c", "d", "e"}, {"a", "d", "e"}});
    Realization r{3, {{"a", rv({0, 0, 0})}, {"b", rv({2, 0, 0})}, {"c", rv({2, 2, 0})},
                      {"d", rv({0, 2, 0})}, {"e", rv({1, 1, 2})}}};
    // Flat base: abc contains d.
    CHECK_FALSE(certify_realization(k, r).passed);
    // Raising c puts the crease on bd instead.
    r.coords["c"] = rv({2, 2, 1});
    auto raised = certify_realization(k, r);
    CHECK_FALSE(raised.passed);
    REQUIRE(raised.violation);
    CHECK(raised.violation->kind == RealizationViolation::Kind::FacetNotSupporting);
    // Lowering c makes ac the crease.
    r.coords["c"] = rv({2, 2, -1});
    CHECK(certify_realization(k, r).passed);
  }

  TEST_CASE("extra supported subsets are caught") {
    // Three of the four triangles of a tetrahedron: the fourth is supported
    // too, so the points do not realize this complex.
    auto k = SimplicialComplex::from_labels({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}});
    Realization r{3, {{"a", rv({0, 0, 0})}, {"b", rv({1, 0, 0})}, {"c", rv({0, 1, 0})}, {"d", rv({0, 0, 1})}}};
    auto rep = certify_realization(k, r);
    CHECK_FALSE(rep.passed);
    CHECK(rep.non_supporting_facets == 0);
    CHECK(rep.extra_supported == 1);
    REQUIRE(rep.violation);
    CHECK(rep.violation->kind == RealizationViolation::Kind::ExtraSupportedFacet);
    CHECK(rep.violation->facet == Labels{"b", "c", "d"});
  }

  TEST_CASE("input errors") {
    auto poly = simplex4();
    Realization missing = poly.realization;
    missing.coords.erase("e");
    CHECK_THROWS_AS(certify_realization(poly.complex, missing), Error);
    Realization flat = poly.realization;
    flat.coords["e"] = rv({1, 1, 0, 0});
    flat.coords["a"] = rv({2, 2, 0, 0});
    flat.coords["b"] = rv({3, 3, 0, 0});
    CHECK_THROWS_AS(certify_realization(poly.complex, flat), Error);
  }

  TEST_CASE("convex position") {
    std::vector<RatVector> square{rv({0, 0}), rv({2, 0}), rv({2, 2}), rv({0, 2}), rv({1, 1}), rv({1, 0})};
    CHECK(convex_position(square) == std::vector<bool>{true, true, true, true, false, false});

    Fan refined = desingularize_barnette().fan;
    std::vector<RatVector> rays;
    for (const auto& r : refined.rays()) rays.push_back(RatVector(r.vector));
    auto flags = convex_position(rays);
    for (std::size_t i = 0; i < rays.size(); ++i) CHECK(flags[i] == (refined.ray(i).label != "c4"));
  }
}
