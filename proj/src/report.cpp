#include "mtrace/report.hpp"

#include <fstream>
#include <sstream>

#include "mtrace/classify2x2.hpp"
#include "mtrace/oracle.hpp"
#include "mtrace/scenarios.hpp"

namespace mtrace {

namespace {

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) parse_error(where, std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::uint64_t uint_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    parse_error(where, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

Json subspace_json(const Subspace& s, std::size_t k) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(to_json(unvectorize(v, k)));
  return Json{{"dim", s.dim()}, {"basis", basis}};
}

Json checklist_json(const Theorem10Checklist& c) {
  return Json{{"maximal_abelian", c.maximal_abelian},
              {"x_cyclic", c.x_cyclic},
              {"alpha_cyclic_for_adjoint", c.alpha_cyclic_for_adjoint}};
}

Json transitivity_json(const TransitivityResult& t) {
  Json j{{"value", to_string(t.value)}, {"method", t.method}};
  if (t.witness) {
    Json basis = Json::array();
    for (const auto& v : t.witness->basis()) basis.push_back(to_json(v));
    j["witness"] = basis;
  }
  return j;
}

MatrixAlgebra instance_algebra(const Instance& inst) { return unital_closure(inst.field, inst.k, inst.generators); }

const Functional& require_functional(const Instance& inst, const std::string& command) {
  if (!inst.functional) parse_error("instance", "command " + command + " needs a \"functional\"");
  return *inst.functional;
}

const Functional::RankOne& require_rank_one(const Instance& inst, const std::string& command) {
  const auto& phi = require_functional(inst, command);
  if (!phi.is_rank_one()) parse_error("instance.functional", "command " + command + " needs a rank1 functional");
  return *phi.as_rank_one();
}

int verdict_exit_code(Outcome o) {
  switch (o) {
    case Outcome::NotTracial: return kExitViolation;
    case Outcome::Unknown: return kExitUnknown;
    default: return kExitOk;
  }
}

int truth_exit_code(Truth t) {
  switch (t) {
    case Truth::True: return kExitOk;
    case Truth::False: return kExitViolation;
    case Truth::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

std::string verdict_text(const Verdict& v) {
  std::string out = "outcome: " + to_string(v.outcome) + "\ncertificate: " + certificate_name(v.certificate);
  if (const auto* w = std::get_if<cert::WitnessExtension>(&v.certificate)) out += "\nwitness: " + w->t.to_string();
  if (const auto* viol = std::get_if<cert::Violation>(&v.certificate)) {
    out += "\nviolating pair: " + viol->a.to_string() + " , " + viol->b.to_string();
  }
  if (v.enumerated_count) out += "\nenumerated: " + std::to_string(*v.enumerated_count);
  return out + "\n";
}

Json header(const std::string& command) {
  return Json{{"tool", kToolName}, {"version", kToolVersion}, {"command", command}};
}

// ---------------------------------------------------------------- scenario parameter handling

Json scenario_defaults(const std::string& name) {
  if (name == "diagonal") {
    return Json{{"field", "Q"},
                {"weights", {"1/3", "1/3", "1/3"}},
                {"f", {"1", "1", "1"}},
                {"alpha", {"1/3", "1/3", "1/3"}}};
  }
  if (name == "field-extension") {
    return Json{{"field", "Q"}, {"b", "0"}, {"c", "1"}, {"x", {"1", "0"}}, {"alpha", {"1", "0"}}};
  }
  if (name == "left-regular") return Json{{"field", "Q"}, {"n", 2}};
  if (name == "jordan-shift") return Json{{"field", "Q"}, {"k", 3}, {"h", {"1", "1", "1"}}};
  parse_error("scenario", "unknown scenario \"" + name + "\"");
}

std::vector<Scalar> scalars_from_json(const FieldSpec& field, const Json& j, const std::string& where) {
  if (!j.is_array()) parse_error(where, "expected an array of scalars");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(scalar_from_json(field, j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- codecs

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& s : v.entries()) out.push_back(to_json(s));
  return out;
}

Json to_json(const Mat& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.k(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.k(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const Functional& phi) {
  if (const auto* r = phi.as_rank_one()) return Json{{"kind", "rank1"}, {"x", to_json(r->x)}, {"alpha", to_json(r->alpha)}};
  return Json{{"kind", "K"}, {"K", to_json(phi.as_k_form()->k)}};
}

Json to_json(const Verdict& v) {
  Json j{{"outcome", to_string(v.outcome)}, {"certificate", certificate_name(v.certificate)}, {"branch", v.branch}};
  if (const auto* w = std::get_if<cert::WitnessExtension>(&v.certificate)) j["witness"] = to_json(w->t);
  if (const auto* viol = std::get_if<cert::Violation>(&v.certificate)) {
    j["violation"] = Json{{"a", to_json(viol->a)}, {"b", to_json(viol->b)}};
  }
  if (const auto* ex = std::get_if<cert::ExhaustiveSearch>(&v.certificate)) j["exhaustive_count"] = ex->count;
  if (v.checklist) j["checklist"] = checklist_json(*v.checklist);
  if (v.seed) j["seed"] = *v.seed;
  if (v.enumerated_count) j["enumerated_count"] = *v.enumerated_count;
  return j;
}

Json to_json(const Instance& inst) {
  Json gens = Json::array();
  for (const auto& g : inst.generators) gens.push_back(to_json(g));
  Json j{{"field", inst.field.to_string()}, {"k", inst.k}, {"generators", gens}};
  if (inst.functional) j["functional"] = to_json(*inst.functional);
  j["options"] = Json{{"budget", inst.budget}, {"seed", inst.seed}};
  return j;
}

Json algebra_summary(const MatrixAlgebra& a) {
  Json basis = Json::array();
  for (const auto& m : a.elements()) basis.push_back(to_json(m));
  return Json{{"field", a.field().to_string()}, {"k", a.k()}, {"dim", a.dim()}, {"abelian", a.is_abelian()},
              {"basis", basis}};
}

Scalar scalar_from_json(const FieldSpec& field, const Json& j, const std::string& where) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = std::to_string(j.get<long long>());
  } else {
    parse_error(where, "expected a scalar string such as \"3\" or \"-1/2\"");
  }
  try {
    return Scalar::parse(field, text);
  } catch (const Error& e) {
    parse_error(where, e.what());
  }
}

Vec vec_from_json(const FieldSpec& field, std::size_t len, const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != len) parse_error(where, "expected an array of " + std::to_string(len) + " scalars");
  std::vector<Scalar> entries;
  for (std::size_t i = 0; i < len; ++i) entries.push_back(scalar_from_json(field, j[i], where + "[" + std::to_string(i) + "]"));
  return Vec(field, std::move(entries));
}

Mat mat_from_json(const FieldSpec& field, std::size_t k, const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != k) parse_error(where, "expected " + std::to_string(k) + " rows");
  std::vector<Scalar> entries;
  for (std::size_t i = 0; i < k; ++i) {
    const auto row_where = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != k) parse_error(row_where, "expected " + std::to_string(k) + " entries");
    for (std::size_t c = 0; c < k; ++c) {
      entries.push_back(scalar_from_json(field, j[i][c], row_where + "[" + std::to_string(c) + "]"));
    }
  }
  return Mat(field, k, std::move(entries));
}

Functional functional_from_json(const FieldSpec& field, std::size_t k, const Json& j, const std::string& where) {
  const auto& kind_json = require(j, "kind", where);
  if (!kind_json.is_string()) parse_error(where + ".kind", "expected \"K\" or \"rank1\"");
  const auto kind = kind_json.get<std::string>();
  if (kind == "rank1" && j.contains("x")) {
    auto x = vec_from_json(field, k, require(j, "x", where), where + ".x");
    auto alpha = vec_from_json(field, k, require(j, "alpha", where), where + ".alpha");
    return Functional::rank_one(std::move(x), std::move(alpha));
  }
  if (kind == "K" || kind == "rank1") {
    auto kmat = mat_from_json(field, k, require(j, "K", where), where + ".K");
    if (kind == "rank1") {
      std::vector<Vec> rows;
      for (std::size_t i = 0; i < k; ++i) rows.push_back(transpose(kmat).column(i));
      if (rref(field, k, rows).dim() != 1) parse_error(where + ".K", "rank1 functional needs a rank-one K");
    }
    return Functional::k_form(std::move(kmat));
  }
  parse_error(where + ".kind", "expected \"K\" or \"rank1\", got \"" + kind + "\"");
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) parse_error("instance", "expected a JSON object");
  Instance inst;
  const auto& field_json = require(j, "field", "instance");
  if (!field_json.is_string()) parse_error("instance.field", "expected \"Q\" or \"GF(p)\"");
  try {
    inst.field = FieldSpec::parse(field_json.get<std::string>());
  } catch (const Error& e) {
    parse_error("instance.field", e.what());
  }
  inst.k = uint_from_json(require(j, "k", "instance"), "instance.k");
  if (inst.k == 0) parse_error("instance.k", "k must be positive");
  if (j.contains("generators")) {
    const auto& gens = j.at("generators");
    if (!gens.is_array()) parse_error("instance.generators", "expected an array of matrices");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      inst.generators.push_back(mat_from_json(inst.field, inst.k, gens[i], "instance.generators[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("functional")) inst.functional = functional_from_json(inst.field, inst.k, j.at("functional"), "instance.functional");
  if (j.contains("options")) {
    const auto& opts = j.at("options");
    if (opts.contains("budget")) inst.budget = uint_from_json(opts.at("budget"), "instance.options.budget");
    if (opts.contains("seed")) inst.seed = uint_from_json(opts.at("seed"), "instance.options.seed");
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error(path, "cannot open file");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(path, e.what());
  }
  return instance_from_json(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- commands

CommandResult run_command(const std::string& command, const Instance& inst, const Json& params) {
  CommandResult r;
  r.report = header(command);
  r.report["instance"] = to_json(inst);
  if (!params.empty()) r.report["params"] = params;
  const auto a = instance_algebra(inst);
  Json result;
  std::ostringstream text;

  if (command == "closure") {
    result["algebra"] = algebra_summary(a);
    text << "dim " << a.dim() << (a.is_abelian() ? ", abelian" : ", non-abelian") << "\n" << a.to_string() << "\n";
  } else if (command == "commutant") {
    const auto c = commutant(a);
    result["algebra"] = algebra_summary(a);
    result["commutant"] = algebra_summary(c);
    result["maximal_abelian"] = is_maximal_abelian(a);
    text << "commutant dim " << c.dim() << "\n" << c.to_string() << "\nmaximal abelian: "
         << (is_maximal_abelian(a) ? "yes" : "no") << "\n";
  } else if (command == "tracial-check") {
    const auto& phi = require_functional(inst, command);
    const auto check = is_tracial(a, phi);
    result["tracial"] = check.tracial;
    if (check.violation) {
      const auto& v = *check.violation;
      result["violation"] = Json{{"a", to_json(v.a)}, {"b", to_json(v.b)}, {"phi_ab", to_json(eval(phi, v.a * v.b))},
                                 {"phi_ba", to_json(eval(phi, v.b * v.a))}};
      r.exit_code = kExitViolation;
    }
    text << "tracial: " << (check.tracial ? "yes" : "no") << "\n";
  } else if (command == "foes") {
    const auto& phi = require_functional(inst, command);
    const auto check = is_tracial(a, phi);
    result["tracial"] = check.tracial;
    if (!check.tracial) {
      result["violation"] = Json{{"a", to_json(check.violation->a)}, {"b", to_json(check.violation->b)}};
      r.exit_code = kExitViolation;
      text << "not tracial; FOES undefined\n";
    } else {
      const auto space = foes(a, phi);
      result["algebra_dim"] = a.dim();
      result["foes"] = subspace_json(space, a.k());
      result["foes_equals_algebra"] = space == a.subspace();
      text << "dim FOES = " << space.dim() << ", dim A = " << a.dim() << "\n";
    }
  } else if (command == "maximal") {
    const auto& phi = require_functional(inst, command);
    const auto v = decide_maximal(a, phi, DecideOptions{inst.budget, inst.seed});
    result["verdict"] = to_json(v);
    r.exit_code = verdict_exit_code(v.outcome);
    text << verdict_text(v);
  } else if (command == "classify2x2") {
    const auto& phi = require_functional(inst, command);
    const auto c = classify(a, phi);
    result["verdict"] = to_json(c.verdict);
    result["case"] = to_string(c.label);
    result["explanation"] = c.explanation;
    if (c.similarity) result["similarity"] = to_json(*c.similarity);
    if (c.transformed_k) result["transformed_K"] = to_json(*c.transformed_k);
    if (c.label == CaseLabel::Dim3) {
      result["note"] = "three-dimensional case: tracial iff phi'(e12) = 0, then maximal iff phi != (1/2)Tr";
    }
    r.exit_code = verdict_exit_code(c.verdict.outcome);
    text << "case: " << to_string(c.label) << "\n" << verdict_text(c.verdict) << c.explanation << "\n";
  } else if (command == "thm10") {
    const auto& r1 = require_rank_one(inst, command);
    const auto t = thm10_check(a, r1.x, r1.alpha);
    result["verdict"] = t.verdict;
    result["checklist"] = checklist_json(t.checklist);
    if (!t.verdict) {
      if (auto w = theorem10_witness(a, r1.x, r1.alpha)) result["witness"] = to_json(*w);
    }
    text << "maximal: " << (t.verdict ? "yes" : "no") << "\nmaximal abelian: " << t.checklist.maximal_abelian
         << "\nx cyclic: " << t.checklist.x_cyclic << "\nalpha cyclic for adjoint: "
         << t.checklist.alpha_cyclic_for_adjoint << "\n";
  } else if (command == "thm15") {
    Theorem15Options opts{inst.budget, inst.seed};
    if (params.contains("samples")) opts.samples = uint_from_json(params.at("samples"), "params.samples");
    const auto t = thm15_check(a, opts);
    result["maximal_abelian"] = t.maximal_abelian;
    result["transitive"] = transitivity_json(t.transitive);
    result["left"] = to_string(t.left);
    result["right"] = to_string(t.right);
    result["exhaustive"] = t.exhaustive;
    result["pairs_checked"] = t.pairs_checked;
    result["maximal_pairs"] = t.maximal_pairs;
    result["unknown_pairs"] = t.unknown_pairs;
    if (t.non_maximal_pair) {
      result["non_maximal_pair"] = Json{{"x", to_json(t.non_maximal_pair->first)},
                                        {"alpha", to_json(t.non_maximal_pair->second)}};
    }
    result["consistent"] = to_string(t.consistent);
    r.exit_code = truth_exit_code(t.consistent);
    text << "maximal abelian and transitive: " << to_string(t.left) << "\nmaximal for every pair: "
         << to_string(t.right) << (t.exhaustive ? " (exhaustive, " : " (sampled, ") << t.pairs_checked
         << " pairs)\nconsistent: " << to_string(t.consistent) << "\n";
  } else if (command == "thm30") {
    const auto& r1 = require_rank_one(inst, command);
    const auto t = thm30_necessary_check(a, r1.x, r1.alpha, inst.budget);
    result["complemented"] = "True";
    result["maximality"] = to_string(t.maximality);
    result["e_cyclic"] = t.e_cyclic;
    result["f_cyclic_for_adjoint"] = t.f_cyclic_for_adjoint;
    result["vacuous"] = t.vacuous;
    result["holds"] = t.holds;
    r.exit_code = t.holds ? kExitOk : kExitViolation;
    text << "maximality: " << to_string(t.maximality) << "\nimplication "
         << (t.vacuous ? "vacuous" : (t.holds ? "holds" : "FAILS")) << "\n";
  } else {
    parse_error("command", "unknown command \"" + command + "\"");
  }
  r.report["result"] = result;
  r.text = text.str();
  return r;
}

CommandResult run_verify_gf(std::uint32_t p) {
  CommandResult r;
  r.report = header("verify-gf");
  r.report["params"] = Json{{"p", p}};
  const auto sweep = verify_classification(p);
  Json mismatches = Json::array();
  for (const auto& m : sweep.mismatches) {
    Json basis = Json::array();
    for (const auto& b : m.algebra.elements()) basis.push_back(to_json(b));
    mismatches.push_back(Json{{"algebra", basis}, {"K", to_json(m.phi.k_matrix())},
                              {"classify", to_string(m.classified)}, {"brute", to_string(m.brute)}});
  }
  r.report["result"] = Json{{"field", sweep.field.to_string()},
                            {"algebra_count", sweep.algebra_count},
                            {"functional_count", sweep.functional_count},
                            {"pair_count", sweep.pair_count},
                            {"mismatches", mismatches}};
  r.exit_code = sweep.mismatches.empty() ? kExitOk : kExitViolation;
  r.text = sweep.field.to_string() + ": " + std::to_string(sweep.algebra_count) + " algebras x " +
           std::to_string(sweep.functional_count) + " functionals = " + std::to_string(sweep.pair_count) +
           " pairs, " + std::to_string(sweep.mismatches.size()) + " mismatches\n";
  return r;
}

std::vector<std::string> scenario_names() { return {"diagonal", "field-extension", "left-regular", "jordan-shift"}; }

CommandResult run_scenario(const std::string& name, const Json& overrides) {
  auto params = scenario_defaults(name);
  for (const auto& [key, value] : overrides.items()) {
    if (!params.contains(key)) parse_error("params." + key, "unknown parameter for scenario " + name);
    params[key] = value;
  }
  FieldSpec field = FieldSpec::rationals();
  try {
    field = FieldSpec::parse(params.at("field").get<std::string>());
  } catch (const std::exception& e) {
    parse_error("params.field", e.what());
  }
  std::optional<Scenario> s;
  Json extra = Json::object();
  if (name == "diagonal") {
    const auto weights = scalars_from_json(field, params.at("weights"), "params.weights");
    const auto f = vec_from_json(field, weights.size(), params.at("f"), "params.f");
    const auto alpha = vec_from_json(field, weights.size(), params.at("alpha"), "params.alpha");
    s = diagonal_scenario(weights, f, alpha);
  } else if (name == "field-extension") {
    s = field_extension_scenario(scalar_from_json(field, params.at("b"), "params.b"),
                                 scalar_from_json(field, params.at("c"), "params.c"),
                                 vec_from_json(field, 2, params.at("x"), "params.x"),
                                 vec_from_json(field, 2, params.at("alpha"), "params.alpha"));
  } else if (name == "left-regular") {
    const auto n = uint_from_json(params.at("n"), "params.n");
    s = left_regular_scenario(n, field);
    const auto right = right_multiplications(n, field);
    extra["commutant_equals_right"] = commutant(s->algebra) == right;
    extra["right_commutant_equals_left"] = commutant(right) == s->algebra;
    if (field.is_finite()) {
      const auto search = search_foes_exhaustively(s->algebra, s->functional, foes(s->algebra, s->functional),
                                                   kDefaultBudget);
      extra["exhaustive_confirmation"] = Json{{"enumerated", search.enumerated}, {"witness_found", search.witness.has_value()}};
    }
  } else {
    const auto k = uint_from_json(params.at("k"), "params.k");
    s = jordan_shift_scenario(k, field, vec_from_json(field, k, params.at("h"), "params.h"));
  }

  CommandResult r;
  r.report = header("scenario");
  r.report["params"] = Json{{"name", name}};
  for (const auto& [key, value] : params.items()) r.report["params"][key] = value;
  Instance inst{field, s->algebra.k(), s->algebra.elements(), s->functional, kDefaultBudget, 0};
  r.report["instance"] = to_json(inst);
  const auto v = decide_maximal(s->algebra, s->functional);
  bool ok = v.outcome == s->expected;
  for (const auto& [key, value] : extra.items()) {
    if (value.is_boolean()) ok = ok && value.get<bool>();
  }
  if (extra.contains("exhaustive_confirmation")) ok = ok && !extra["exhaustive_confirmation"]["witness_found"].get<bool>();
  Json result{{"name", s->name}, {"provenance", s->provenance}, {"expected", to_string(s->expected)},
              {"recomputed", to_json(v)}, {"matches", ok}, {"algebra", algebra_summary(s->algebra)}};
  if (s->checklist) result["checklist"] = checklist_json(*s->checklist);
  for (const auto& [key, value] : extra.items()) result[key] = value;
  r.report["result"] = result;
  r.exit_code = ok ? kExitOk : kExitViolation;
  r.text = "scenario " + name + ": expected " + to_string(s->expected) + ", recomputed " + to_string(v.outcome) +
           (ok ? " (ok)" : " (MISMATCH)") + "\n";
  return r;
}

CommandResult run_request(const Json& request) {
  const auto command = require(request, "command", "report").get<std::string>();
  const Json params = request.contains("params") ? request.at("params") : Json::object();
  if (command == "verify-gf") return run_verify_gf(static_cast<std::uint32_t>(uint_from_json(require(params, "p", "params"), "params.p")));
  if (command == "scenario") {
    auto overrides = params;
    const auto name = require(params, "name", "params").get<std::string>();
    overrides.erase("name");
    return run_scenario(name, overrides);
  }
  return run_command(command, instance_from_json(require(request, "instance", "report")), params);
}

// ---------------------------------------------------------------- rechecking

std::vector<std::string> verify_certificate(const MatrixAlgebra& a, const Functional& phi, const Json& verdict,
                                            std::uint64_t budget) {
  std::vector<std::string> problems;
  const auto outcome = verdict.at("outcome").get<std::string>();
  const auto kind = verdict.at("certificate").get<std::string>();
  const auto& field = a.field();
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) problems.push_back(kind + ": " + what);
  };
  if (kind == "TracialityViolation") {
    expect(outcome == "NotTracial", "outcome must be NotTracial");
    const auto x = mat_from_json(field, a.k(), verdict.at("violation").at("a"), "violation.a");
    const auto y = mat_from_json(field, a.k(), verdict.at("violation").at("b"), "violation.b");
    expect(a.contains(x) && a.contains(y), "violating pair must lie in the algebra");
    expect(eval(phi, x * y) != eval(phi, y * x), "phi(ab) must differ from phi(ba)");
  } else if (kind == "WitnessExtension") {
    expect(outcome == "NotMaximal", "outcome must be NotMaximal");
    const auto t = mat_from_json(field, a.k(), verdict.at("witness"), "witness");
    expect(is_tracial(a, phi).tracial, "algebra must be tracial");
    expect(!a.contains(t), "witness must lie outside the algebra");
    expect(extension_is_tracial(a, t, phi), "extension by the witness must be tracial");
  } else if (kind == "FoesEqualsAlgebra") {
    expect(outcome == "Maximal", "outcome must be Maximal");
    expect(is_tracial(a, phi).tracial && foes(a, phi) == a.subspace(), "FOES must equal the algebra");
  } else if (kind == "ExhaustiveSearch") {
    expect(outcome == "Maximal", "outcome must be Maximal");
    expect(is_tracial(a, phi).tracial, "algebra must be tracial");
    const auto search = search_foes_exhaustively(a, phi, foes(a, phi), budget);
    expect(!search.witness, "exhaustive search must find no witness");
    expect(search.enumerated == verdict.at("exhaustive_count").get<std::uint64_t>(), "enumeration count must match");
  } else if (kind == "Theorem10") {
    expect(outcome == "Maximal", "outcome must be Maximal");
    const auto* r1 = phi.as_rank_one();
    expect(r1 != nullptr && a.is_abelian(), "needs an abelian algebra and a rank-one functional");
    if (r1 != nullptr && a.is_abelian()) {
      const auto t = thm10_check(a, r1->x, r1->alpha);
      expect(t.verdict, "all three conditions must hold");
      expect(checklist_json(t.checklist) == verdict.at("checklist"), "checklist must match");
    }
  } else if (kind != "none") {
    problems.push_back("unknown certificate kind " + kind);
  }
  return problems;
}

RecheckResult recheck(const Json& report) {
  RecheckResult out;
  try {
    if (!report.contains("tool") || report.at("tool") != kToolName) {
      out.problems.push_back("not a report produced by this tool");
    }
    const auto command = report.at("command").get<std::string>();
    const Json* verdict = nullptr;
    if (command == "maximal" || command == "classify2x2") verdict = &report.at("result").at("verdict");
    if (command == "scenario") verdict = &report.at("result").at("recomputed");
    if (verdict != nullptr) {
      const auto inst = instance_from_json(report.at("instance"));
      const auto a = instance_algebra(inst);
      for (auto& p : verify_certificate(a, *inst.functional, *verdict, inst.budget)) out.problems.push_back(p);
    }
    Json request{{"command", command}};
    if (report.contains("instance") && command != "scenario") request["instance"] = report.at("instance");
    if (report.contains("params")) request["params"] = report.at("params");
    const auto replay = run_request(request);
    if (dump(replay.report) != dump(report)) out.problems.push_back("replayed report differs from the recorded one");
  } catch (const std::exception& e) {
    out.problems.push_back(std::string("recheck failed: ") + e.what());
  }
  out.ok = out.problems.empty();
  return out;
}

}  // namespace mtrace
