#pragma once

#include "pairstab/bounds.hpp"
#include "pairstab/git.hpp"
#include "pairstab/pair_model.hpp"
#include "pairstab/stability.hpp"
#include "pairstab/systems.hpp"
#include "pairstab/verdict.hpp"
#include "pairstab/walls.hpp"

#include <json.hpp>

#include <string>

// JSON forms of the model and report types. Rationals are "num/den" strings
// (plain integers are accepted on input); polynomials are coefficient arrays,
// degree 0 first. Parse errors throw InvalidInput naming the offending path,
// e.g. "/model/subobjects/2/P_F/0".
namespace pairstab::jsonio {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const RatPoly& p);
Json to_json(const PairModel& model);
Json to_json(const Verdict& v);
Json to_json(const GradedObject& g);
Json to_json(const ChamberReport& report);
Json to_json(const DeltaMaxReport& report);
Json to_json(const GitPointModel& point);
Json to_json(const WeightVector& w);
Json to_json(const SystemModel& model);
Json to_json(const AmbientConstants& c);
Json to_json(const ValidationReport& report);

Rational rational_from(const Json& j, const std::string& path);
RatPoly poly_from(const Json& j, const std::string& path);
PairModel model_from(const Json& j, const std::string& path);
Verdict verdict_from(const Json& j, const std::string& path);
GradedObject graded_from(const Json& j, const std::string& path);
ChamberReport chamber_report_from(const Json& j, const std::string& path);
GitPointModel point_from(const Json& j, const std::string& path);
WeightVector weight_from(const Json& j, const std::string& path);
SystemModel system_from(const Json& j, const std::string& path);
AmbientConstants constants_from(const Json& j, const std::string& path);

/// Required member lookup; throws InvalidInput naming path/key when absent.
const Json& member(const Json& j, const std::string& key, const std::string& path);

bool bool_from(const Json& j, const std::string& path);
long long integer_from(const Json& j, const std::string& path);
unsigned long natural_from(const Json& j, const std::string& path);

/// Parses text, mapping syntax errors to InvalidInput.
Json parse(const std::string& text);

}  // namespace pairstab::jsonio
