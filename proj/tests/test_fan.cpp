#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toricfan/barnette.hpp"
#include "toricfan/fan.hpp"
#include "toricfan/subdivision.hpp"

using namespace toricfan;

namespace {

Face face_of(const Fan& fan, std::initializer_list<const char*> labels) {
  Face f;
  for (const char* l : labels) f.push_back(fan.ray_index(l));
  std::sort(f.begin(), f.end());
  return f;
}

std::size_t cone_named(const Fan& fan, const std::string& name) {
  auto c = fan.find_cone_by_name(name);
  REQUIRE(c);
  return *c;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

// The 2D fan of the four quadrants.
Fan quadrants() {
  std::vector<Ray> rays{{"x", {1, 0}}, {"y", {0, 1}}, {"-x", {-1, 0}}, {"-y", {0, -1}}};
  return Fan(2, rays, {{{0, 1}, ""}, {{1, 2}, ""}, {{2, 3}, ""}, {{3, 0}, ""}});
}

}  // namespace

TEST_SUITE("fan_model") {
  TEST_CASE("table determinants and smoothness") {
    Fan delta = barnette::delta();
    REQUIRE(delta.cones().size() == 19);
    const auto& table = barnette::table_cones();
    for (std::size_t i = 0; i < 19; ++i) {
      CHECK(delta.cone_determinant(i) == table[i].determinant);
      CHECK(delta.cone_determinant(i) == oracle::det_of_columns(oracle::cone_columns(delta, i)));
    }
    auto report = smoothness_report(delta);
    CHECK_FALSE(report.smooth);
    std::vector<std::string> singular;
    for (std::size_t c : report.singular_cones) singular.push_back(delta.cone_display(c));
    CHECK(singular == std::vector<std::string>{"sigma13", "sigma15", "sigma17", "sigma18", "sigma19"});
  }

  TEST_CASE("fan construction rejects bad input") {
    std::vector<Ray> rays{{"a", {1, 0}}, {"b", {0, 1}}};
    CHECK(code_of([&] { Fan(2, {{"a", {2, 0}}, {"b", {0, 1}}}, {}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { Fan(2, {{"a", {1, 0}}, {"a", {0, 1}}}, {}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { Fan(2, {{"a", {1, 0}}, {"b", {1, 0}}}, {}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { Fan(2, {{"a", {1, 0, 0}}}, {}); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([&] { Fan(2, {{"a", {1, 0}}, {"b", {-1, 0}}}, {{{0, 1}, ""}}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { Fan(2, rays, {{{0}, ""}}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { Fan(2, {{"a", {0, 0}}}, {}); }) == ErrorCode::ZeroVector);
    CHECK(code_of([&] { Fan(2, rays, {{{0, 0}, ""}}); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("containment and minimal faces") {
    Fan delta = barnette::delta();
    const IntVector c1{1, -1, 0, 0}, c2{0, -1, 1, 0}, c4{-1, -1, -1, 1};
    std::size_t s13 = cone_named(delta, "sigma13");
    CHECK(contains(delta, s13, c1, Containment::Closed));
    CHECK_FALSE(contains(delta, s13, c1, Containment::Interior));
    CHECK(minimal_face(delta, s13, c1) == face_of(delta, {"e1", "d3", "d4"}));

    std::size_t s17 = cone_named(delta, "sigma17");
    CHECK(contains(delta, s17, c2, Containment::Interior));
    CHECK(minimal_face(delta, s17, c2) == face_of(delta, {"d3", "d2", "e3", "d4"}));

    std::size_t s19 = cone_named(delta, "sigma19");
    CHECK(minimal_face(delta, s19, c4) == face_of(delta, {"d1", "d2", "d3"}));
    std::size_t s18 = cone_named(delta, "sigma18");
    CHECK(minimal_face(delta, s18, c4) == face_of(delta, {"d1", "d2", "d3"}));

    std::size_t s1 = cone_named(delta, "sigma1");
    CHECK_FALSE(contains(delta, s1, c1, Containment::Closed));
    CHECK(code_of([&] { minimal_face(delta, s1, c1); }) == ErrorCode::NotContained);
    CHECK(minimal_face(delta, s1, IntVector{0, 0, 0, 0}).empty());
  }

  TEST_CASE("containment agrees with Cramer on random points") {
    Fan delta = barnette::delta();
    std::mt19937 rng(9);
    for (int t = 0; t < 400; ++t) {
      IntVector p = oracle::random_vector(rng, 4, -6, 6);
      std::size_t c = t % delta.cones().size();
      auto lambda = oracle::cramer(oracle::cone_columns(delta, c), p);
      REQUIRE(lambda);
      bool closed = std::all_of(lambda->begin(), lambda->end(), [](const Rational& l) { return l >= 0; });
      bool open = std::all_of(lambda->begin(), lambda->end(), [](const Rational& l) { return l > 0; });
      CHECK(contains(delta, c, p, Containment::Closed) == closed);
      CHECK(contains(delta, c, p, Containment::Interior) == open);
    }
  }

  TEST_CASE("facet pairing") {
    Fan delta = barnette::delta();
    auto pairing = facet_pairing(delta);
    CHECK(pairing.size() == 38);
    auto it = pairing.find(face_of(delta, {"d1", "e3", "e4"}));
    REQUIRE(it != pairing.end());
    CHECK(delta.cone_display(it->second.first) == "sigma2");
    CHECK(delta.cone_display(it->second.second) == "sigma6");
    for (const auto& [facet, cones] : pairing) CHECK(opposite_sides(delta, facet, cones));

    Fan refined = desingularize_barnette().fan;
    CHECK(facet_pairing(refined).size() == 110);
  }

  TEST_CASE("completeness of the shipped fans") {
    for (const Fan& fan : {barnette::delta(), desingularize_barnette().fan}) {
      auto report = verify_completeness(fan, default_witness(fan));
      CHECK(report.all_facets_paired);
      CHECK(report.all_pairs_opposite);
      CHECK(report.witness_multiplicity == 1);
      CHECK(report.verdict);
    }
    CHECK(default_witness(barnette::delta()) == IntVector{1, 1, 1, 1});
    auto quad = verify_completeness(quadrants(), default_witness(quadrants()));
    CHECK(quad.verdict);
    CHECK(quad.facet_count == 4);
  }

  TEST_CASE("completeness fails when a cone is missing") {
    Fan delta = barnette::delta();
    std::vector<SimplicialCone> cones(delta.cones().begin() + 1, delta.cones().end());
    Fan holed(4, delta.rays(), cones);
    auto report = verify_completeness(holed, IntVector{1, 1, 1, 1});
    CHECK_FALSE(report.verdict);
    CHECK_FALSE(report.all_facets_paired);
    CHECK(report.unpaired_facets.size() == 4);
    CHECK(report.witness_multiplicity == 0);
    CHECK(code_of([&] { facet_pairing(holed); }) == ErrorCode::UnpairedFacet);
  }

  TEST_CASE("doubled cover is rejected") {
    // Two copies of sigma1 pair every facet of sigma1 with itself.
    Fan delta = barnette::delta();
    std::vector<SimplicialCone> doubled{delta.cone(0), delta.cone(0)};
    Fan twice(4, delta.rays(), doubled);
    auto report = verify_completeness(twice, IntVector{1, 1, 1, 1});
    CHECK(report.all_facets_paired);
    CHECK_FALSE(report.all_pairs_opposite);
    CHECK(report.same_side_facets.size() == 4);
    CHECK(report.witness_multiplicity == 2);
    CHECK_FALSE(report.verdict);
  }

  TEST_CASE("a 2D fan that wraps twice is rejected by the witness") {
    // Five rays roughly a pentagon apart, each cone joining every second
    // ray: facets pair up on opposite sides but the plane is covered twice.
    std::vector<Ray> rays{{"a", {1, 0}}, {"b", {1, 2}}, {"c", {-1, 1}}, {"d", {-1, -1}}, {"e", {1, -2}}};
    Fan wrap(2, rays, {{{0, 2}, ""}, {{2, 4}, ""}, {{4, 1}, ""}, {{1, 3}, ""}, {{3, 0}, ""}});
    auto report = verify_completeness(wrap, default_witness(wrap));
    CHECK(report.all_facets_paired);
    CHECK(report.all_pairs_opposite);
    CHECK(report.witness_multiplicity == 2);
    CHECK_FALSE(report.verdict);
  }

  TEST_CASE("generic witnesses") {
    Fan delta = barnette::delta();
    CHECK(is_generic_witness(delta, IntVector{1, 1, 1, 1}));
    CHECK_FALSE(is_generic_witness(delta, IntVector{1, 0, 0, 0}));
    CHECK(code_of([&] { verify_completeness(delta, IntVector{1, 0, 0, 0}); }) == ErrorCode::NonGenericWitness);
    // (1,1) lies on the facet hyperplane of no quadrant; (1,0) does.
    CHECK(is_generic_witness(quadrants(), IntVector{1, 1}));
    CHECK_FALSE(is_generic_witness(quadrants(), IntVector{1, 0}));
    // A fan with a ray along (1,1) forces the fallback.
    Fan diag(2, {{"u", {1, 1}}, {"v", {-1, 0}}, {"w", {0, -1}}},
             {{{0, 1}, ""}, {{1, 2}, ""}, {{2, 0}, ""}});
    IntVector w = default_witness(diag);
    CHECK(w != IntVector{1, 1});
    CHECK(is_generic_witness(diag, w));
    CHECK(verify_completeness(diag, w).verdict);
  }

  TEST_CASE("open orthant") {
    Fan delta = barnette::delta();
    for (std::size_t c = 0; c < delta.cones().size(); ++c)
      CHECK(cone_meets_open_orthant(delta, c) == (delta.cone_display(c) == "sigma1"));
    Fan refined = desingularize_barnette().fan;
    std::size_t hits = 0;
    for (std::size_t c = 0; c < refined.cones().size(); ++c)
      if (cone_meets_open_orthant(refined, c)) ++hits;
    CHECK(hits == 1);

    // A singular cone meeting the orthant: (1,1) with (1,-1) in 2D.
    Fan tilted(2, {{"p", {1, 1}}, {"q", {1, -1}}}, {{{0, 1}, ""}});
    CHECK(cone_meets_open_orthant(tilted, 0));
    CHECK(tilted.cone_determinant(0) == -2);
    Fan away(2, {{"p", {-1, 1}}, {"q", {-1, 2}}}, {{{0, 1}, ""}});
    CHECK_FALSE(cone_meets_open_orthant(away, 0));
  }

  TEST_CASE("lookups") {
    Fan delta = barnette::delta();
    CHECK(delta.find_ray("d4") == delta.find_ray(IntVector{1, 0, 1, -1}));
    CHECK_FALSE(delta.find_ray("zz"));
    CHECK(code_of([&] { delta.ray_index("zz"); }) == ErrorCode::MissingLabel);
    auto c = delta.find_cone({"d4", "d3", "d2", "d1"});
    REQUIRE(c);
    CHECK(delta.cone_display(*c) == "sigma19");
    CHECK(delta.cone_labels(*c) == std::vector<std::string>{"d1", "d2", "d3", "d4"});
  }
}
