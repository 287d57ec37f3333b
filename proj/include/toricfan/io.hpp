#pragma once

// JSON documents: fans, complexes, realizations, and the report sections
// emitted by the command line front end. Integers and rationals are written
// as decimal strings so nothing is limited to 64 bits.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "toricfan/certificate.hpp"
#include "toricfan/complex.hpp"
#include "toricfan/fan.hpp"
#include "toricfan/lattice_scan.hpp"
#include "toricfan/subdivision.hpp"

namespace toricfan::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kFanSchema = "toricfan.fan";
inline constexpr const char* kComplexSchema = "toricfan.complex";
inline constexpr const char* kRealizationSchema = "toricfan.realization";
inline constexpr const char* kReportSchema = "toricfan.report";

struct FanMetadata {
  std::string name;
  std::string provenance;
};

struct FanDocument {
  Fan fan;
  FanMetadata metadata;
};

Json fan_to_json(const Fan& fan, const FanMetadata& meta = {});
FanDocument fan_from_json(const Json& j);

/// Canonical text form: two-space indentation, trailing newline.
std::string dump(const Json& j);
/// Throws Error(Parse) on malformed text.
Json parse(std::string_view text);

Json complex_to_json(const SimplicialComplex& c);
/// Accepts a complex document or a fan document (its underlying complex).
SimplicialComplex complex_from_json(const Json& j);

Json realization_to_json(const Realization& r);
Realization realization_from_json(const Json& j);

Json int_vector_json(const IntVector& v);
IntVector int_vector_from_json(const Json& j);

Json completeness_json(const Fan& fan, const CompletenessReport& rep);
Json smoothness_json(const Fan& fan, const SmoothnessReport& rep);
Json scan_json(const ScanReport& rep);
Json step_json(const SubdivisionStep& step, std::size_t index);
Json f_vector_json(const FVector& fv);
Json pseudomanifold_json(const SimplicialComplex& c, const PseudomanifoldReport& rep);
Json obstruction_json(const ObstructionReport& rep);
Json certificate_json(const CertificateReport& rep);

/// 64-bit FNV-1a of the bytes, as "fnv1a64:<16 hex digits>".
std::string digest(std::string_view bytes);

}  // namespace toricfan::io
