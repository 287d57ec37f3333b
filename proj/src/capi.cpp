#include "toricfan/toricfan.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "toricfan/barnette.hpp"
#include "toricfan/certificate.hpp"
#include "toricfan/complex.hpp"
#include "toricfan/io.hpp"
#include "toricfan/lattice_scan.hpp"
#include "toricfan/subdivision.hpp"

struct tf_fan {
  toricfan::Fan fan;
  toricfan::io::FanMetadata meta;
};

struct tf_complex {
  toricfan::SimplicialComplex complex;
};

namespace {

using namespace toricfan;
using io::Json;

thread_local std::string g_last_error;

tf_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return TF_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return TF_ERR_PARSE;
    case ErrorCode::SingularBasis: return TF_ERR_SINGULAR_BASIS;
    case ErrorCode::ZeroVector: return TF_ERR_ZERO_VECTOR;
    case ErrorCode::DimensionMismatch: return TF_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotContained: return TF_ERR_NOT_CONTAINED;
    case ErrorCode::UnpairedFacet: return TF_ERR_UNPAIRED_FACET;
    case ErrorCode::DegenerateFacet: return TF_ERR_DEGENERATE_FACET;
    case ErrorCode::NonGenericWitness: return TF_ERR_NON_GENERIC_WITNESS;
    case ErrorCode::PointIsRay: return TF_ERR_POINT_IS_RAY;
    case ErrorCode::OutsideSupport: return TF_ERR_OUTSIDE_SUPPORT;
    case ErrorCode::FaceNotPresent: return TF_ERR_FACE_NOT_PRESENT;
    case ErrorCode::MissingLabel: return TF_ERR_MISSING_LABEL;
    case ErrorCode::MissingCoordinates: return TF_ERR_MISSING_COORDINATES;
    case ErrorCode::Internal: return TF_ERR_INTERNAL;
  }
  return TF_ERR_INTERNAL;
}

// Runs f, translating exceptions into status codes.
template <typename F>
tf_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return TF_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TF_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> split_labels(const char* text) {
  std::vector<std::string> out;
  std::string cur;
  for (const char* p = text; *p; ++p) {
    if (*p == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (*p != ' ' && *p != '\t') {
      cur += *p;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string fresh_label(const Fan& fan) {
  for (std::size_t i = 1;; ++i) {
    std::string l = "x" + std::to_string(i);
    if (!fan.find_ray(l)) return l;
  }
}

std::unique_ptr<tf_fan> wrap(Fan fan, io::FanMetadata meta = {}) {
  return std::unique_ptr<tf_fan>(new tf_fan{std::move(fan), std::move(meta)});
}

}  // namespace

extern "C" {

const char* tf_version(void) { return "0.1.0"; }

const char* tf_status_name(tf_status status) {
  switch (status) {
    case TF_OK: return "OK";
    case TF_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case TF_ERR_PARSE: return "Parse";
    case TF_ERR_SINGULAR_BASIS: return "SingularBasis";
    case TF_ERR_ZERO_VECTOR: return "ZeroVector";
    case TF_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case TF_ERR_NOT_CONTAINED: return "NotContained";
    case TF_ERR_UNPAIRED_FACET: return "UnpairedFacet";
    case TF_ERR_DEGENERATE_FACET: return "DegenerateFacet";
    case TF_ERR_NON_GENERIC_WITNESS: return "NonGenericWitness";
    case TF_ERR_POINT_IS_RAY: return "PointIsRay";
    case TF_ERR_OUTSIDE_SUPPORT: return "OutsideSupport";
    case TF_ERR_FACE_NOT_PRESENT: return "FaceNotPresent";
    case TF_ERR_MISSING_LABEL: return "MissingLabel";
    case TF_ERR_MISSING_COORDINATES: return "MissingCoordinates";
    case TF_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* tf_last_error(void) { return g_last_error.c_str(); }

void tf_string_free(char* s) { std::free(s); }

tf_status tf_fan_parse(const char* json, tf_fan** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    auto doc = io::fan_from_json(io::parse(json));
    *out = wrap(std::move(doc.fan), std::move(doc.metadata)).release();
  });
}

tf_status tf_fan_builtin(const char* name, tf_fan** out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    const std::string n = name;
    if (n == "delta") {
      *out = wrap(barnette::delta(), {"delta", "Barnette sphere fan, 8 rays, 19 cones"}).release();
    } else if (n == "delta-prime") {
      *out = wrap(desingularize_barnette().fan,
                  {"delta-prime", "smooth refinement of delta by subdivision at c1..c10"})
                 .release();
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown builtin fan '" + n + "'");
    }
  });
}

tf_status tf_fan_serialize(const tf_fan* fan, char** out_json) {
  return guard([&] {
    require(fan, "fan");
    require(out_json, "out_json");
    *out_json = copy_string(io::dump(io::fan_to_json(fan->fan, fan->meta)));
  });
}

void tf_fan_free(tf_fan* fan) { delete fan; }

size_t tf_fan_ambient_dim(const tf_fan* fan) { return fan ? fan->fan.ambient_dim() : 0; }
size_t tf_fan_ray_count(const tf_fan* fan) { return fan ? fan->fan.rays().size() : 0; }
size_t tf_fan_cone_count(const tf_fan* fan) { return fan ? fan->fan.cones().size() : 0; }

tf_status tf_fan_verify(const tf_fan* fan, const char* witness, char** out_json, int* out_complete) {
  return guard([&] {
    require(fan, "fan");
    require(out_json, "out_json");
    const Fan& f = fan->fan;
    IntVector w = witness ? parse_int_vector(witness) : default_witness(f);
    CompletenessReport comp = verify_completeness(f, w);
    Json j;
    j["completeness"] = io::completeness_json(f, comp);
    j["smoothness"] = io::smoothness_json(f, smoothness_report(f));
    *out_json = copy_string(j.dump());
    if (out_complete) *out_complete = comp.verdict ? 1 : 0;
  });
}

tf_status tf_fan_scan(const tf_fan* fan, long long bound, unsigned workers, int collect_one_face, char** out_json,
                      int* out_ok) {
  return guard([&] {
    require(fan, "fan");
    require(out_json, "out_json");
    ScanReport rep = scan_box(fan->fan, bound, collect_one_face != 0, workers);
    Json j = io::scan_json(rep);
    j["workers"] = workers == 0 ? 1u : workers;
    *out_json = copy_string(j.dump());
    if (out_ok) *out_ok = j["ok"].get<bool>() ? 1 : 0;
  });
}

tf_status tf_fan_open_orthant(const tf_fan* fan, char** out_json) {
  return guard([&] {
    require(fan, "fan");
    require(out_json, "out_json");
    Json a = Json::array();
    for (std::size_t c = 0; c < fan->fan.cones().size(); ++c)
      a.push_back({{"cone", fan->fan.cone_display(c)}, {"meets_open_orthant", cone_meets_open_orthant(fan->fan, c)}});
    *out_json = copy_string(a.dump());
  });
}

tf_status tf_fan_refines(const tf_fan* fine, const tf_fan* coarse, int* out_refines) {
  return guard([&] {
    require(fine, "fine");
    require(coarse, "coarse");
    require(out_refines, "out_refines");
    *out_refines = refines(fine->fan, coarse->fan) ? 1 : 0;
  });
}

tf_status tf_desingularize_barnette(tf_fan** out_fan, char** out_steps_json) {
  return guard([&] {
    require(out_fan, "out_fan");
    auto result = desingularize_barnette();
    if (out_steps_json) {
      Json steps = Json::array();
      for (std::size_t i = 0; i < result.steps.size(); ++i) steps.push_back(io::step_json(result.steps[i], i + 1));
      *out_steps_json = copy_string(steps.dump());
    }
    *out_fan = wrap(std::move(result.fan),
                    {"delta-prime", "smooth refinement of delta by subdivision at c1..c10"})
                   .release();
  });
}

tf_status tf_fan_subdivide_point(const tf_fan* fan, const char* point, const char* label, tf_fan** out_fan,
                                 char** out_step_json) {
  return guard([&] {
    require(fan, "fan");
    require(point, "point");
    require(out_fan, "out_fan");
    std::string l = label ? label : fresh_label(fan->fan);
    auto result = stellar_subdivide(fan->fan, parse_int_vector(point), l);
    if (out_step_json) *out_step_json = copy_string(io::step_json(result.step, 1).dump());
    *out_fan = wrap(std::move(result.fan)).release();
  });
}

tf_status tf_fan_subdivide_cone(const tf_fan* fan, const char* cone_labels, const char* label, tf_fan** out_fan,
                                char** out_step_json) {
  return guard([&] {
    require(fan, "fan");
    require(cone_labels, "cone_labels");
    require(out_fan, "out_fan");
    const Fan& f = fan->fan;
    auto c = f.find_cone(split_labels(cone_labels));
    if (!c) throw Error(ErrorCode::MissingLabel, std::string("no maximal cone with rays ") + cone_labels);
    IntVector sum(f.ambient_dim());
    for (std::size_t r : f.cone(*c).rays) sum += f.ray(r).vector;
    std::string l = label ? label : fresh_label(f);
    auto result = stellar_subdivide(f, sum, l);
    if (out_step_json) *out_step_json = copy_string(io::step_json(result.step, 1).dump());
    *out_fan = wrap(std::move(result.fan)).release();
  });
}

tf_status tf_fan_suspend(const tf_fan* fan, tf_fan** out_fan) {
  return guard([&] {
    require(fan, "fan");
    require(out_fan, "out_fan");
    io::FanMetadata meta;
    if (!fan->meta.name.empty()) meta.name = "suspension of " + fan->meta.name;
    *out_fan = wrap(suspend_fan(fan->fan), meta).release();
  });
}

tf_status tf_fan_family(const tf_fan* base, size_t count, const char* start_cone, tf_fan** out_fans,
                        char** out_summary_json) {
  return guard([&] {
    require(base, "base");
    if (count > 0) require(out_fans, "out_fans");
    std::optional<std::vector<std::string>> first;
    if (start_cone) first = split_labels(start_cone);
    auto members = generate_family(base->fan, count, first);
    std::vector<std::unique_ptr<tf_fan>> handles;
    Json summary = Json::array();
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Fan& f = members[i].fan;
      CompletenessReport comp = verify_completeness(f, default_witness(f));
      Json row;
      row["member"] = i + 1;
      row["rays"] = f.rays().size();
      row["max_cones"] = f.cones().size();
      row["smooth"] = smoothness_report(f).smooth;
      row["complete"] = comp.verdict;
      row["f_vector"] = f_vector(underlying_complex(f)).counts;
      row["step"] = io::step_json(members[i].step, i + 1);
      summary.push_back(row);
      std::string name = base->meta.name.empty() ? "family" : base->meta.name;
      handles.push_back(wrap(f, {name + "-family-" + std::to_string(i + 1), "successive stellar subdivision"}));
    }
    if (out_summary_json) *out_summary_json = copy_string(summary.dump());
    for (std::size_t i = 0; i < handles.size(); ++i) out_fans[i] = handles[i].release();
  });
}

tf_status tf_complex_from_fan(const tf_fan* fan, tf_complex** out) {
  return guard([&] {
    require(fan, "fan");
    require(out, "out");
    *out = new tf_complex{underlying_complex(fan->fan)};
  });
}

tf_status tf_complex_parse(const char* json, tf_complex** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = new tf_complex{io::complex_from_json(io::parse(json))};
  });
}

tf_status tf_complex_serialize(const tf_complex* c, char** out_json) {
  return guard([&] {
    require(c, "complex");
    require(out_json, "out_json");
    *out_json = copy_string(io::dump(io::complex_to_json(c->complex)));
  });
}

void tf_complex_free(tf_complex* c) { delete c; }

tf_status tf_complex_star(const tf_complex* c, const char* face_labels, tf_complex** out) {
  return guard([&] {
    require(c, "complex");
    require(face_labels, "face_labels");
    require(out, "out");
    Face f = c->complex.face_from_labels(split_labels(face_labels));
    *out = new tf_complex{star(c->complex, f)};
  });
}

tf_status tf_complex_link(const tf_complex* c, const char* face_labels, tf_complex** out) {
  return guard([&] {
    require(c, "complex");
    require(face_labels, "face_labels");
    require(out, "out");
    Face f = c->complex.face_from_labels(split_labels(face_labels));
    *out = new tf_complex{link(c->complex, f)};
  });
}

tf_status tf_complex_suspension(const tf_complex* c, tf_complex** out) {
  return guard([&] {
    require(c, "complex");
    require(out, "out");
    *out = new tf_complex{suspension(c->complex)};
  });
}

tf_status tf_complex_equal(const tf_complex* a, const tf_complex* b, int* out_equal) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(out_equal, "out_equal");
    *out_equal = a->complex == b->complex ? 1 : 0;
  });
}

tf_status tf_complex_f_vector(const tf_complex* c, char** out_json) {
  return guard([&] {
    require(c, "complex");
    require(out_json, "out_json");
    *out_json = copy_string(io::f_vector_json(f_vector(c->complex)).dump());
  });
}

tf_status tf_complex_pseudomanifold(const tf_complex* c, char** out_json, int* out_ok) {
  return guard([&] {
    require(c, "complex");
    require(out_json, "out_json");
    auto rep = pseudomanifold_check(c->complex);
    *out_json = copy_string(io::pseudomanifold_json(c->complex, rep).dump());
    if (out_ok) *out_ok = rep.passed ? 1 : 0;
  });
}

tf_status tf_complex_obstruction(const tf_complex* c, char** out_json, int* out_ok) {
  return guard([&] {
    require(c, "complex");
    require(out_json, "out_json");
    auto rep = verify_barnette_obstruction(c->complex);
    *out_json = copy_string(io::obstruction_json(rep).dump());
    if (out_ok) *out_ok = rep.verdict ? 1 : 0;
  });
}

tf_status tf_realization_from_fan(const tf_fan* fan, char** out_json) {
  return guard([&] {
    require(fan, "fan");
    require(out_json, "out_json");
    *out_json = copy_string(io::dump(io::realization_to_json(realization_from_rays(fan->fan))));
  });
}

tf_status tf_certify(const tf_complex* c, const char* realization_json, char** out_json, int* out_ok) {
  return guard([&] {
    require(c, "complex");
    require(realization_json, "realization_json");
    require(out_json, "out_json");
    Realization r = io::realization_from_json(io::parse(realization_json));
    auto rep = certify_realization(c->complex, r);
    *out_json = copy_string(io::certificate_json(rep).dump());
    if (out_ok) *out_ok = rep.passed ? 1 : 0;
  });
}

tf_status tf_digest(const char* bytes, size_t len, char** out) {
  return guard([&] {
    if (len > 0) require(bytes, "bytes");
    require(out, "out");
    *out = copy_string(io::digest(std::string_view(bytes ? bytes : "", len)));
  });
}

}  // extern "C"
