#pragma once

// JSON forms of every report and of the curve interchange file.
//
// Scalars: prime-field residues are JSON integers; rationals are strings
// ("3", "-2/5"). Points are normalized coordinate pairs [c0, c1]; quadric
// points are [[c0, c1], [c0, c1]]. Coefficient vectors follow the monomial
// order documented in surface.hpp.

#include <string>
#include <utility>

#include <json.hpp>

#include "quadscroll/realizability.hpp"

namespace quadscroll::json_io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCurveFormat = "quadscroll-curve/1";

Json to_json(const Scalar& s);
Json to_json(const ProjPoint& p);
Json to_json(const QuadricPoint& p);
Json to_json(const Line& line);
Json to_json(BiDegree d);
Json to_json(const BiForm& f);
Json to_json(const NodeConfiguration& cfg);
Json to_json(const SystemDimReport& report);
Json to_json(const LadderTable& table);
Json to_json(const ScrollarProfile& profile);
Json to_json(const CrossValidation& cv);
Json to_json(const NodalCurveCandidate& curve);
Json to_json(const BuildResult& result);
Json to_json(const RealizationPlan& plan);
Json to_json(const RealizationReport& report);

Scalar scalar_from_json(const FieldSpec& field, const Json& j);
ProjPoint point_from_json(const FieldSpec& field, const Json& j);
QuadricPoint quadric_point_from_json(const FieldSpec& field, const Json& j);
NodeConfiguration configuration_from_json(const Json& j);

struct CurveFile {
  BiForm form;
  NodeConfiguration cfg;
};

/// Reads the document written for a NodalCurveCandidate. Throws
/// std::invalid_argument on schema violations.
CurveFile curve_from_json(const Json& j);

}  // namespace quadscroll::json_io
