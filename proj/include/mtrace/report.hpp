#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mtrace/tracial.hpp"

namespace mtrace {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "mtrace";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitInputError = 2, kExitUnknown = 3 };

/// Parsed instance file: an algebra given by generators plus an optional functional.
struct Instance {
  FieldSpec field = FieldSpec::rationals();
  std::size_t k = 0;
  std::vector<Mat> generators;
  std::optional<Functional> functional;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
};

// Codecs. Parsers throw Error(ParseError) naming the JSON location of the problem.
Json to_json(const Scalar& s);
Json to_json(const Vec& v);
Json to_json(const Mat& m);
Json to_json(const Functional& phi);
Json to_json(const Verdict& v);
Json to_json(const Instance& inst);
Json algebra_summary(const MatrixAlgebra& a);

Scalar scalar_from_json(const FieldSpec& field, const Json& j, const std::string& where);
Vec vec_from_json(const FieldSpec& field, std::size_t len, const Json& j, const std::string& where);
Mat mat_from_json(const FieldSpec& field, std::size_t k, const Json& j, const std::string& where);
Functional functional_from_json(const FieldSpec& field, std::size_t k, const Json& j, const std::string& where);
Instance instance_from_json(const Json& j);
Instance load_instance(const std::string& path);

/// A command run: the request is echoed into the report next to its result.
struct CommandResult {
  Json report;
  int exit_code = kExitOk;
  std::string text;
};

/// Request shape: {"command": name, "instance": {...}?, "params": {...}?}.
CommandResult run_request(const Json& request);
CommandResult run_command(const std::string& command, const Instance& inst, const Json& params = Json::object());
CommandResult run_verify_gf(std::uint32_t p);
CommandResult run_scenario(const std::string& name, const Json& params = Json::object());
std::vector<std::string> scenario_names();

/// Independent re-verification of a verdict certificate against the domain operations.
std::vector<std::string> verify_certificate(const MatrixAlgebra& a, const Functional& phi, const Json& verdict,
                                            std::uint64_t budget);

struct RecheckResult {
  bool ok = true;
  std::vector<std::string> problems;
};
/// Replays a report: checks embedded certificates and that a fresh run reproduces it byte for byte.
RecheckResult recheck(const Json& report);

std::string dump(const Json& j);

}  // namespace mtrace
