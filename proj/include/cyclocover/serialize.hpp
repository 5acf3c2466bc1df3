#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "cyclocover/certify.hpp"
#include "cyclocover/hodge.hpp"
#include "cyclocover/monodromy.hpp"
#include "cyclocover/surface.hpp"
#include "cyclocover/sweep.hpp"

namespace cyclocover {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1.0";

struct Check {
  std::string name;
  bool passed = false;
  std::string details;

  bool operator==(const Check&) const = default;
};

/// Envelope of every CLI output line.
struct OutputRecord {
  std::string schema_version{kSchemaVersion};
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<Check> checks;

  bool operator==(const OutputRecord&) const = default;
};

/// Compact, newline-terminated.
std::string serialize(const OutputRecord& r);
OutputRecord parse_record(std::string_view line);

/// JSON Schema (draft 2020-12) of the output records.
const Json& schema_document();

void to_json(Json& j, const Check& c);
void from_json(const Json& j, Check& c);
void to_json(Json& j, const OutputRecord& r);
void from_json(const Json& j, OutputRecord& r);

void to_json(Json& j, const WeightTuple& w);
WeightTuple weight_tuple_from_json(const Json& j);
void to_json(Json& j, const FamilyData& f);
FamilyData family_from_json(const Json& j);

void to_json(Json& j, const Signature& s);
void from_json(const Json& j, Signature& s);
void to_json(Json& j, const EigenspaceReport& e);
void from_json(const Json& j, EigenspaceReport& e);
void to_json(Json& j, const HypergeometricParams& p);
void from_json(const Json& j, HypergeometricParams& p);
void to_json(Json& j, const FinitenessVerdict& v);
void from_json(const Json& j, FinitenessVerdict& v);

void to_json(Json& j, const SurfaceInvariants& s);
void from_json(const Json& j, SurfaceInvariants& s);
void to_json(Json& j, const SmoothnessReport& s);
void to_json(Json& j, const BranchTable& t);
void to_json(Json& j, const SingularFibreProfile& p);

void to_json(Json& j, const SplittingReport& s);
void from_json(const Json& j, SplittingReport& s);
void to_json(Json& j, const FlatCharacter& f);
void to_json(Json& j, const InfiniteWitness& w);
void from_json(const Json& j, InfiniteWitness& w);
void to_json(Json& j, const OracleCheck& o);
void to_json(Json& j, const Certificate& c);
void to_json(Json& j, const ShimuraReport& s);

void to_json(Json& j, const SweepInstance& s);
void to_json(Json& j, const SweepSummary& s);

Json matrix_to_json(const Matrix2<Integer>& m);
Json matrix_to_json(const Matrix2<Rational>& m);

}  // namespace cyclocover
