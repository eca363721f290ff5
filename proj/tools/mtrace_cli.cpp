#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mtrace/report.hpp"

using namespace mtrace;

namespace {

struct Flags {
  std::string file;
  std::string json_path;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  bool recheck = false;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

void write_json(const std::string& path, const Json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, path + ": cannot write file");
  out << dump(j);
}

int emit(const CommandResult& r, const std::string& json_path) {
  std::cout << r.text;
  write_json(json_path, r.report);
  return r.exit_code;
}

int do_recheck(const std::string& path, const std::string& json_path) {
  const auto report = read_json_file(path);
  const auto result = recheck(report);
  if (result.ok) {
    std::cout << "recheck ok: " << report.value("command", std::string("?")) << "\n";
  } else {
    for (const auto& p : result.problems) std::cout << "recheck problem: " << p << "\n";
  }
  Json out{{"tool", kToolName}, {"version", kToolVersion}, {"command", "recheck"}, {"ok", result.ok},
           {"problems", result.problems}};
  write_json(json_path, out);
  return result.ok ? kExitOk : kExitViolation;
}

// Scenario parameters come as key=value; values are read as JSON when possible, else as plain strings.
Json parse_scenario_params(const std::vector<std::string>& items) {
  Json params = Json::object();
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorKind::ParseError, "scenario parameter \"" + item + "\" is not key=value");
    }
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    Json parsed = Json::parse(value, nullptr, false);
    params[key] = parsed.is_discarded() ? Json(value) : parsed;
  }
  return params;
}

void report_error(const std::exception& e, const std::string& json_path) {
  std::cerr << "error: " << e.what() << "\n";
  if (json_path.empty()) return;
  Json out{{"tool", kToolName}, {"version", kToolVersion}, {"error", e.what()}};
  if (const auto* err = dynamic_cast<const Error*>(&e)) out["kind"] = std::string(to_string(err->kind()));
  try {
    write_json(json_path, out);
  } catch (const std::exception&) {
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tracial functionals on matrix algebras: maximality decisions with checkable certificates"};
  app.require_subcommand(1);
  std::string json_path;

  const std::vector<std::pair<std::string, std::string>> instance_commands = {
      {"closure", "unital algebra generated by the instance generators"},
      {"commutant", "commutant of the algebra and whether the algebra is maximal abelian"},
      {"tracial-check", "whether phi(ab) = phi(ba) on the algebra"},
      {"foes", "linear space containing every tracial extension"},
      {"maximal", "decide maximal traciality with a certificate"},
      {"classify2x2", "case analysis for subalgebras of M_2"},
      {"thm10", "maximal abelian plus two cyclicity conditions, for a rank-one functional"},
      {"thm15", "maximal abelian and transitive versus maximal for every rank-one pair"},
      {"thm30", "maximal implies both vectors cyclic, for complemented lattices over GF(p)"},
  };
  Flags flags;
  std::string chosen;
  for (const auto& [name, description] : instance_commands) {
    auto* sub = app.add_subcommand(name, description);
    sub->add_option("file", flags.file, "instance JSON (or a report with --recheck)")->required();
    sub->add_option("--json", json_path, "write the JSON report here");
    sub->add_option("--budget", flags.budget, "enumeration budget (default 2e7)");
    sub->add_option("--seed", flags.seed, "sampling seed (default 0)");
    sub->add_flag("--recheck", flags.recheck, "treat the file as a report and re-verify it");
    if (name == "thm15") sub->add_option("--samples", flags.samples, "sampled pairs when not exhaustive");
    sub->callback([&chosen, name] { chosen = name; });
  }

  std::uint32_t p = 0;
  std::string recheck_path;
  auto* verify = app.add_subcommand("verify-gf", "compare classify2x2 against brute force over M_2(GF(p))");
  verify->add_option("--p", p, "prime: 2, 3 or 5")->required();
  verify->add_option("--json", json_path, "write the JSON report here");
  verify->callback([&chosen] { chosen = "verify-gf"; });

  auto* scenario = app.add_subcommand("scenario", "named instance builders");
  scenario->require_subcommand(1);
  auto* list = scenario->add_subcommand("list", "list scenario names");
  list->callback([&chosen] { chosen = "scenario-list"; });
  auto* run = scenario->add_subcommand("run", "run a scenario");
  std::string scenario_name;
  std::vector<std::string> scenario_params;
  run->add_option("name", scenario_name, "scenario name")->required();
  run->add_option("params", scenario_params, "key=value parameters");
  run->add_option("--json", json_path, "write the JSON report here");
  run->callback([&chosen] { chosen = "scenario-run"; });

  auto* recheck_cmd = app.add_subcommand("recheck", "re-verify any recorded report");
  recheck_cmd->add_option("report", recheck_path, "report JSON")->required();
  recheck_cmd->add_option("--json", json_path, "write the recheck summary here");
  recheck_cmd->callback([&chosen] { chosen = "recheck"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (chosen == "verify-gf") return emit(run_verify_gf(p), json_path);
    if (chosen == "scenario-list") {
      for (const auto& n : scenario_names()) std::cout << n << "\n";
      return kExitOk;
    }
    if (chosen == "scenario-run") return emit(run_scenario(scenario_name, parse_scenario_params(scenario_params)), json_path);
    if (chosen == "recheck") return do_recheck(recheck_path, json_path);
    if (flags.recheck) return do_recheck(flags.file, json_path);

    auto inst = load_instance(flags.file);
    if (flags.budget) inst.budget = *flags.budget;
    if (flags.seed) inst.seed = *flags.seed;
    Json params = Json::object();
    if (flags.samples) params["samples"] = *flags.samples;
    return emit(run_command(chosen, inst, params), json_path);
  } catch (const std::exception& e) {
    report_error(e, json_path);
    return kExitInputError;
  }
}
