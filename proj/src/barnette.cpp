#include "toricfan/barnette.hpp"

#include <algorithm>

namespace toricfan::barnette {

namespace {

struct RayRecord {
  const char* label;
  std::array<long long, 4> vector;
};

constexpr std::array<RayRecord, 8> kRays{{
    {"e1", {1, 0, 0, 0}},
    {"e2", {0, 1, 0, 0}},
    {"e3", {0, 0, 1, 0}},
    {"e4", {0, 0, 0, 1}},
    {"d1", {-1, 0, -2, 1}},
    {"d2", {-2, -1, 0, 1}},
    {"d3", {0, -2, -1, 1}},
    {"d4", {1, 0, 1, -1}},
}};

constexpr std::array<ConeRecord, 19> kCones{{
    {"sigma1", {"e1", "e2", "e3", "e4"}, 1},
    {"sigma2", {"d1", "e2", "e3", "e4"}, -1},
    {"sigma3", {"e1", "d2", "e3", "e4"}, -1},
    {"sigma4", {"e1", "e2", "d3", "e4"}, -1},
    {"sigma5", {"e1", "e2", "e3", "d4"}, -1},
    {"sigma6", {"d1", "d2", "e3", "e4"}, 1},
    {"sigma7", {"e1", "d2", "d3", "e4"}, 1},
    {"sigma8", {"d1", "e2", "d3", "e4"}, 1},
    {"sigma9", {"e1", "d2", "e3", "d3"}, 1},
    {"sigma10", {"e1", "e2", "d3", "d1"}, 1},
    {"sigma11", {"d1", "e2", "e3", "d2"}, 1},
    {"sigma12", {"e1", "e2", "d1", "d4"}, 1},
    {"sigma13", {"e1", "d3", "e3", "d4"}, 2},
    {"sigma14", {"d2", "e2", "e3", "d4"}, 1},
    {"sigma15", {"e1", "d1", "d3", "d4"}, 2},
    {"sigma16", {"d1", "e2", "d2", "d4"}, 1},
    {"sigma17", {"d3", "d2", "e3", "d4"}, 3},
    {"sigma18", {"d1", "d2", "d3", "e4"}, -9},
    {"sigma19", {"d1", "d2", "d3", "d4"}, 3},
}};

constexpr std::array<SubdivisionPoint, 10> kPoints{{
    {"c1", {1, -1, 0, 0}},
    {"c2", {0, -1, 1, 0}},
    {"c3", {-1, -2, 0, 1}},
    {"c4", {-1, -1, -1, 1}},
    {"c5", {-1, -2, -1, 2}},
    {"c6", {-2, -2, -1, 2}},
    {"c7", {-1, -1, -2, 2}},
    {"c8", {-1, -2, -2, 2}},
    {"c9", {-2, -1, -1, 2}},
    {"c10", {-2, -1, -2, 2}},
}};

constexpr std::array<SignedCone, 41> kSubdivided{{
    {{"c1", "d3", "e3", "d4"}, +1},
    {{"e1", "c1", "e3", "d4"}, +1},
    {{"e1", "d3", "e3", "c1"}, +1},
    {{"c1", "d1", "d3", "d4"}, +1},
    {{"e1", "d1", "c1", "d4"}, +1},
    {{"e1", "d1", "d3", "c1"}, +1},
    {{"c2", "d2", "e3", "d4"}, +1},
    {{"d3", "c2", "e3", "d4"}, +1},
    {{"c3", "d2", "c2", "d4"}, +1},
    {{"d3", "c3", "c2", "d4"}, +1},
    {{"d3", "d2", "c3", "d4"}, +1},
    {{"c3", "d2", "e3", "c2"}, +1},
    {{"d3", "c3", "e3", "c2"}, +1},
    {{"d3", "d2", "e3", "c3"}, +1},
    {{"c5", "d2", "d3", "e4"}, -1},
    {{"c4", "c5", "d3", "e4"}, -1},
    {{"c6", "d2", "c5", "e4"}, -1},
    {{"c4", "c6", "c5", "e4"}, -1},
    {{"c4", "d2", "c6", "e4"}, -1},
    {{"c6", "d2", "d3", "c5"}, -1},
    {{"c4", "c6", "d3", "c5"}, -1},
    {{"c4", "d2", "d3", "c6"}, -1},
    {{"c8", "c4", "d3", "e4"}, -1},
    {{"c7", "c8", "d3", "e4"}, -1},
    {{"c7", "c4", "c8", "e4"}, -1},
    {{"d1", "c7", "d3", "e4"}, -1},
    {{"d1", "c4", "c7", "e4"}, -1},
    {{"d1", "c8", "d3", "c7"}, -1},
    {{"d1", "c4", "c8", "c7"}, -1},
    {{"d1", "c4", "d3", "c8"}, -1},
    {{"c9", "d2", "c4", "e4"}, -1},
    {{"c10", "c9", "c4", "e4"}, -1},
    {{"d1", "c10", "c4", "e4"}, -1},
    {{"d1", "c9", "c10", "e4"}, -1},
    {{"d1", "d2", "c9", "e4"}, -1},
    {{"c10", "d2", "c4", "c9"}, -1},
    {{"d1", "d2", "c10", "c9"}, -1},
    {{"d1", "d2", "c4", "c10"}, -1},
    {{"c4", "d2", "d3", "d4"}, +1},
    {{"d1", "c4", "d3", "d4"}, +1},
    {{"d1", "d2", "c4", "d4"}, +1},
}};

IntVector to_vector(const std::array<long long, 4>& a) { return IntVector{a[0], a[1], a[2], a[3]}; }

}  // namespace

Fan delta() {
  std::vector<Ray> rays;
  for (const auto& r : kRays) rays.push_back({r.label, to_vector(r.vector)});
  auto index = [](const char* label) {
    for (std::size_t i = 0; i < kRays.size(); ++i)
      if (std::string(kRays[i].label) == label) return i;
    throw Error(ErrorCode::Internal, std::string("unknown ray ") + label);
  };
  std::vector<SimplicialCone> cones;
  for (const auto& c : kCones) {
    SimplicialCone cone;
    cone.name = c.name;
    for (const char* l : c.rays) cone.rays.push_back(index(l));
    cones.push_back(std::move(cone));
  }
  return Fan(4, std::move(rays), std::move(cones));
}

const std::array<ConeRecord, 19>& table_cones() { return kCones; }
const std::array<SubdivisionPoint, 10>& subdivision_points() { return kPoints; }
const std::array<SignedCone, 41>& subdivided_cones() { return kSubdivided; }

std::vector<std::string> surviving_cone_names() {
  std::vector<std::string> out;
  for (const auto& c : kCones) {
    std::string n = c.name;
    if (n != "sigma13" && n != "sigma15" && n != "sigma17" && n != "sigma18" && n != "sigma19")
      out.push_back(n);
  }
  return out;
}

std::vector<IntVector> expected_one_face_points() {
  std::vector<IntVector> out;
  for (const auto& r : kRays) {
    const std::string label = r.label;
    const long long limit = (label == "d1" || label == "d2" || label == "d3") ? 20 : 40;
    for (long long m = 1; m <= limit; ++m) out.push_back(Integer(m) * to_vector(r.vector));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace toricfan::barnette
