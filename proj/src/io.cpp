#include "toricfan/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

namespace toricfan::io {

namespace {

void expect_schema(const Json& j, const char* schema) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "document is not a JSON object");
  if (j.value("schema", std::string()) != schema)
    throw Error(ErrorCode::Parse, std::string("expected schema '") + schema + "'");
  if (j.value("schema_version", 0) != kSchemaVersion)
    throw Error(ErrorCode::Parse, "unsupported schema_version");
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

Json labels_json(const std::vector<std::string>& labels) { return Json(labels); }

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

Json int_vector_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& e : v.entries()) a.push_back(e.str());
  return a;
}

IntVector int_vector_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_array()) throw Error(ErrorCode::Parse, "vector must be an array");
    std::vector<Integer> entries;
    for (const auto& e : j) {
      if (e.is_string()) entries.push_back(parse_integer(e.get<std::string>()));
      else if (e.is_number_integer()) entries.emplace_back(e.get<long long>());
      else throw Error(ErrorCode::Parse, "vector entries must be integers or decimal strings");
    }
    return IntVector(std::move(entries));
  });
}

Json fan_to_json(const Fan& fan, const FanMetadata& meta) {
  Json j;
  j["schema"] = kFanSchema;
  j["schema_version"] = kSchemaVersion;
  if (!meta.name.empty() || !meta.provenance.empty()) {
    Json m = Json::object();
    if (!meta.name.empty()) m["name"] = meta.name;
    if (!meta.provenance.empty()) m["provenance"] = meta.provenance;
    j["metadata"] = m;
  }
  j["ambient_dim"] = fan.ambient_dim();
  Json rays = Json::array();
  for (const auto& r : fan.rays()) rays.push_back({{"label", r.label}, {"vector", int_vector_json(r.vector)}});
  j["rays"] = rays;
  Json cones = Json::array();
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    Json cone = Json::object();
    if (!fan.cone(c).name.empty()) cone["name"] = fan.cone(c).name;
    cone["rays"] = labels_json(fan.cone_labels(c));
    cones.push_back(cone);
  }
  j["max_cones"] = cones;
  return j;
}

FanDocument fan_from_json(const Json& j) {
  return guarded([&] {
    expect_schema(j, kFanSchema);
    FanMetadata meta;
    if (j.contains("metadata")) {
      meta.name = j["metadata"].value("name", std::string());
      meta.provenance = j["metadata"].value("provenance", std::string());
    }
    const auto dim = j.at("ambient_dim").get<std::size_t>();
    std::vector<Ray> rays;
    for (const auto& r : j.at("rays")) rays.push_back({r.at("label").get<std::string>(), int_vector_from_json(r.at("vector"))});
    std::vector<SimplicialCone> cones;
    for (const auto& c : j.at("max_cones")) {
      SimplicialCone cone;
      cone.name = c.value("name", std::string());
      for (const auto& l : c.at("rays")) {
        const auto label = l.get<std::string>();
        auto it = std::find_if(rays.begin(), rays.end(), [&](const Ray& r) { return r.label == label; });
        if (it == rays.end()) throw Error(ErrorCode::MissingLabel, "cone references unknown ray '" + label + "'");
        cone.rays.push_back(static_cast<std::size_t>(it - rays.begin()));
      }
      cones.push_back(std::move(cone));
    }
    return FanDocument{Fan(dim, std::move(rays), std::move(cones)), meta};
  });
}

Json complex_to_json(const SimplicialComplex& c) {
  Json j;
  j["schema"] = kComplexSchema;
  j["schema_version"] = kSchemaVersion;
  j["vertices"] = c.vertex_labels();
  Json facets = Json::array();
  for (const auto& f : c.facets()) facets.push_back(c.labels_of(f));
  j["facets"] = facets;
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  return guarded([&] {
    if (j.is_object() && j.value("schema", std::string()) == kFanSchema)
      return underlying_complex(fan_from_json(j).fan);
    expect_schema(j, kComplexSchema);
    auto labels = j.at("vertices").get<std::vector<std::string>>();
    std::vector<Face> facets;
    for (const auto& f : j.at("facets")) {
      Face face;
      for (const auto& l : f) {
        const auto label = l.get<std::string>();
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) throw Error(ErrorCode::MissingLabel, "facet references unknown vertex '" + label + "'");
        face.push_back(static_cast<std::size_t>(it - labels.begin()));
      }
      facets.push_back(std::move(face));
    }
    return SimplicialComplex(std::move(labels), std::move(facets));
  });
}

Json realization_to_json(const Realization& r) {
  Json j;
  j["schema"] = kRealizationSchema;
  j["schema_version"] = kSchemaVersion;
  j["dim"] = r.dim;
  Json coords = Json::object();
  for (const auto& [label, v] : r.coords) {
    Json a = Json::array();
    for (const auto& q : v.entries()) a.push_back(format_rational(q));
    coords[label] = a;
  }
  j["coords"] = coords;
  return j;
}

Realization realization_from_json(const Json& j) {
  return guarded([&] {
    expect_schema(j, kRealizationSchema);
    Realization r;
    r.dim = j.at("dim").get<std::size_t>();
    for (const auto& [label, arr] : j.at("coords").items()) {
      std::vector<Rational> entries;
      for (const auto& e : arr) {
        if (e.is_string()) entries.push_back(parse_rational(e.get<std::string>()));
        else if (e.is_number_integer()) entries.emplace_back(e.get<long long>());
        else throw Error(ErrorCode::Parse, "coordinates must be \"p/q\" strings or integers");
      }
      if (entries.size() != r.dim) throw Error(ErrorCode::DimensionMismatch, "coordinates of " + label + " have wrong dimension");
      r.coords.emplace(label, RatVector(std::move(entries)));
    }
    return r;
  });
}

namespace {

Json faces_json(const Fan& fan, const std::vector<Face>& faces) {
  Json a = Json::array();
  for (const auto& f : faces) a.push_back(fan.face_labels(f));
  return a;
}

}  // namespace

Json completeness_json(const Fan& fan, const CompletenessReport& rep) {
  Json j;
  j["ok"] = rep.verdict;
  j["witness"] = int_vector_json(rep.witness);
  j["facet_count"] = rep.facet_count;
  j["all_facets_paired"] = rep.all_facets_paired;
  j["all_pairs_opposite"] = rep.all_pairs_opposite;
  j["witness_multiplicity"] = rep.witness_multiplicity;
  j["verdict"] = rep.verdict;
  j["unpaired_facets"] = faces_json(fan, rep.unpaired_facets);
  j["same_side_facets"] = faces_json(fan, rep.same_side_facets);
  return j;
}

Json smoothness_json(const Fan& fan, const SmoothnessReport& rep) {
  Json j;
  // Smoothness is informational; a singular fan is still a valid fan.
  j["ok"] = true;
  j["smooth"] = rep.smooth;
  Json cones = Json::array();
  for (const auto& cd : rep.determinants) {
    Json c;
    c["index"] = cd.cone + 1;
    if (!fan.cone(cd.cone).name.empty()) c["name"] = fan.cone(cd.cone).name;
    c["rays"] = fan.cone_labels(cd.cone);
    c["determinant"] = cd.determinant.str();
    cones.push_back(c);
  }
  j["cones"] = cones;
  Json singular = Json::array();
  for (std::size_t c : rep.singular_cones) singular.push_back(fan.cone_display(c));
  j["singular_cones"] = singular;
  return j;
}

Json scan_json(const ScanReport& rep) {
  Json j;
  j["ok"] = rep.not_covered == 0 && rep.sum_matches();
  j["bound"] = rep.bound;
  j["ambient_dim"] = rep.ambient_dim;
  j["total"] = rep.total;
  Json counts = Json::object();
  for (PointClass c : {PointClass::InteriorOfCone, PointClass::RelIntFacet, PointClass::RelInt2Face,
                       PointClass::RelInt1Face, PointClass::Origin, PointClass::NotCovered})
    counts[to_string(c)] = rep.count(c);
  j["counts"] = counts;
  j["counts_by_face_dim"] = rep.counts_by_face_dim;
  j["sum_check"] = rep.sum_matches();
  if (rep.one_face_points) {
    Json pts = Json::array();
    for (const auto& p : *rep.one_face_points) pts.push_back(int_vector_json(p));
    j["one_face_points"] = pts;
  }
  Json wit = Json::array();
  for (const auto& p : rep.not_covered_witnesses) wit.push_back(int_vector_json(p));
  j["not_covered_witnesses"] = wit;
  return j;
}

Json step_json(const SubdivisionStep& step, std::size_t index) {
  Json j;
  j["step"] = index;
  j["label"] = step.new_ray_label;
  j["ray"] = int_vector_json(step.new_ray);
  j["minimal_face_dim"] = step.minimal_face.size();
  Json replaced = Json::array();
  for (std::size_t i = 0; i < step.affected_cones.size(); ++i) {
    Json c = Json::object();
    if (!step.affected_names[i].empty()) c["name"] = step.affected_names[i];
    c["rays"] = step.affected_cones[i];
    replaced.push_back(c);
  }
  j["replaced"] = replaced;
  j["produced"] = step.produced_cones;
  return j;
}

Json f_vector_json(const FVector& fv) {
  Json j;
  j["ok"] = true;
  j["f_vector"] = fv.counts;
  j["euler_characteristic"] = fv.euler_characteristic();
  return j;
}

Json pseudomanifold_json(const SimplicialComplex& c, const PseudomanifoldReport& rep) {
  Json j;
  j["ok"] = rep.passed;
  j["ridge_count"] = rep.ridge_count;
  Json bad = Json::array();
  for (const auto& r : rep.bad_ridges) bad.push_back(c.labels_of(r));
  j["bad_ridges"] = bad;
  j["ridges_ok"] = rep.ridges_ok;
  j["connected"] = rep.connected;
  j["euler_characteristic"] = rep.euler_characteristic;
  j["expected_euler"] = rep.expected_euler;
  return j;
}

Json obstruction_json(const ObstructionReport& rep) {
  Json j;
  j["ok"] = rep.verdict;
  Json facts = Json::array();
  for (const auto& f : rep.facts) {
    Json x;
    x["fact"] = f.name;
    x["passed"] = f.passed;
    x["witness"] = f.witness;
    if (!f.discrepancies.empty()) x["discrepancies"] = f.discrepancies;
    facts.push_back(x);
  }
  j["facts"] = facts;
  j["star_e1d3"] = rep.star_facets;
  Json edges = Json::array();
  for (const auto& [a, b] : rep.link_edges) edges.push_back({a, b});
  j["link_e1d3"] = edges;
  j["verdict"] = rep.verdict;
  return j;
}

Json certificate_json(const CertificateReport& rep) {
  Json j;
  j["ok"] = rep.passed;
  j["result"] = rep.passed ? "realization certified" : "realization rejected";
  j["facets_checked"] = rep.facets_checked;
  j["subsets_checked"] = rep.subsets_checked;
  j["non_supporting_facets"] = rep.non_supporting_facets;
  j["extra_supported_subsets"] = rep.extra_supported;
  if (rep.violation) {
    j["violation"] = {{"kind", to_string(rep.violation->kind)},
                      {"facet", rep.violation->facet},
                      {"detail", rep.violation->detail}};
  }
  return j;
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace toricfan::io
