// ctxl: command-line front end for the context logic engine.
// Exit status: 0 success, 1 negative verdict or failed operation, 2 usage error.

#include "ctxlogic/concepts.hpp"
#include "ctxlogic/dba.hpp"
#include "ctxlogic/error.hpp"
#include "ctxlogic/formula.hpp"
#include "ctxlogic/io.hpp"
#include "ctxlogic/proof.hpp"
#include "ctxlogic/properties.hpp"
#include "ctxlogic/semantics.hpp"
#include "ctxlogic/transforms.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>

using namespace ctxlogic;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

int json_indent = -1;  // --pretty sets 2

void emit(const Json& j) { std::cout << j.dump(json_indent) << '\n'; }

std::string extension(const std::string& path) { return std::filesystem::path(path).extension().string(); }

// A .cxt file gives a model with an empty valuation.
LoadedModel load_any_model(const std::string& path) {
  Workspace ws;
  const std::string name = ws.load(path);
  if (extension(path) == ".cxt") return LoadedModel{ws.context(name), {}, std::nullopt};
  if (extension(path) == ".json") return ws.model(name);
  throw Error(ErrorKind::unsupported, "expected a .cxt or .json model, got '" + path + "'");
}

FormalContext load_any_context(const std::string& path) { return load_any_model(path).context; }

World find_world(const FormalContext& k, Sort sort, const std::string& id) {
  auto i = k.find(sort, id);
  if (!i)
    throw Error(ErrorKind::malformed_input, "no " + std::string(sort == Sort::s1 ? "object" : "attribute") + " '" +
                                                id + "' (the formula has sort " +
                                                (sort == Sort::s1 ? "1" : "2") + ")");
  return World{sort, *i};
}

Json lone_model_json(const FormalContext& k, const Valuation& v) { return model_to_json(ContextModel{k, v}); }

int run_check(const std::string& model_path, const std::string& text, const std::optional<std::string>& world) {
  const LoadedModel m = load_any_model(model_path);
  const Formula f = parse(text);
  if (world) {
    const World w = find_world(m.context, sort_of(f), *world);
    const bool truth = m.generalized() ? satisfies(m.generalized_model(), w, f) : satisfies(m.context_model(), w, f);
    std::cout << (truth ? "true" : "false") << '\n';
    return truth ? kOk : kNegative;
  }
  const SortedSet s = m.generalized() ? truth_set(m.generalized_model(), f) : truth_set(m.context_model(), f);
  Json out;
  out["formula"] = print(f);
  out["sort"] = s.sort == Sort::s1 ? 1 : 2;
  out["truth_set"] = names_json(m.context, s);
  emit(out);
  return kOk;
}

int run_valid(const std::string& path, const std::string& text, std::uint64_t budget) {
  const FormalContext k = load_any_context(path);
  const Formula f = parse(text);
  const ValidityResult r = frame_valid(k, f, budget);
  if (r.status == ValidityResult::Status::budget_exceeded)
    throw Error(ErrorKind::budget_exceeded,
                "valuation budget of " + std::to_string(budget) + " exhausted before a verdict");
  if (r.valid()) {
    std::cout << "true\n";
    return kOk;
  }
  std::cout << "false\n";
  Json counter = lone_model_json(k, *r.countervaluation);
  counter["world"] = k.universe(r.counterworld->sort)[r.counterworld->index];
  emit(counter);
  return kNegative;
}

int run_lattice(const std::string& path, const std::string& kind, const std::string& out) {
  const FormalContext k = load_any_context(path);
  const ConceptLattice l = enumerate_concepts(k, parse_concept_kind(kind));
  if (out == "dot") std::cout << lattice_to_dot(k, l);
  else emit(lattice_to_json(k, l));
  return kOk;
}

int run_dba_verify(const std::string& path, const std::string& algebra, bool pure, bool fully_contextual) {
  FiniteAlgebra a;
  if (extension(path) == ".json" && algebra.empty()) {
    Json j;
    try {
      j = Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::malformed_input, "'" + path + "' is not valid JSON: " + e.what());
    }
    a = algebra_from_json(j);
  } else {
    const FormalContext k = load_any_context(path);
    a = (algebra == "protoconcept" ? protoconcept_algebra(k) : semiconcept_algebra(k)).algebra;
  }
  const DbaReport r = check_dba(a);
  std::optional<PropertyResult> p, fc;
  if (pure) p = is_pure(a);
  if (fully_contextual) fc = is_fully_contextual(a);
  emit(dba_report_to_json(a, r, p, fc));
  const bool ok = r.all_pass() && (!p || p->holds) && (!fc || fc->holds);
  return ok ? kOk : kNegative;
}

int run_props(const std::string& path) {
  const FormalContext k = load_any_context(path);
  Json out;
  out["I"] = relation_class(k, Base::incidence).names();
  out["I-bar"] = relation_class(k, Base::complement).names();
  const auto clauses = graded_characterization_check(k);
  out["clauses"] = graded_report_to_json(clauses);
  emit(out);
  for (const auto& c : clauses)
    if (!c.agree) return kNegative;
  return kOk;
}

int run_proof(const std::string& path, const std::string& system_name) {
  const ProofSystem system = parse_proof_system(system_name);
  const Proof p = parse_proof(read_file(path));
  const ProofVerdict v = check_proof(p, system);
  emit(proof_verdict_to_json(v, system));
  if (!v.accepted && v.first_failure) {
    for (const auto& line : v.lines)
      if (line.number == *v.first_failure)
        std::cerr << path << ": line " << line.number << ": " << line.reason << '\n';
  }
  return v.accepted ? kOk : kNegative;
}

int run_translate(const std::string& text, const std::string& map) {
  const Formula f = parse(text);
  std::cout << print(map == "rho" ? translate_rho(f) : translate_tau(f)) << '\n';
  return kOk;
}

int run_disjointify(const std::string& path) {
  const LoadedModel m = load_any_model(path);
  const DisjointCopy d = disjointify(m.generalized_model());
  Json fold_objects = Json::object(), fold_attributes = Json::object();
  for (std::size_t i = 0; i < d.fold.f_s1.size(); ++i)
    fold_objects[d.model.objects()[i]] = m.context.objects()[d.fold.f_s1[i]];
  for (std::size_t i = 0; i < d.fold.f_s2.size(); ++i)
    fold_attributes[d.model.attributes()[i]] = m.context.attributes()[d.fold.f_s2[i]];
  Json out;
  out["model"] = model_to_json(d.model);
  out["fold"] = {{"objects", fold_objects}, {"attributes", fold_attributes}};
  emit(out);
  return kOk;
}

void usage_error(const std::string& message) {
  Json e;
  e["error"] = {{"kind", "usage"}, {"message", message}};
  std::cerr << e.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model checking, validity, concepts and proofs for two-sorted context logic"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string model, formula, context, kind = "formal", out = "json", file, system = "BM", map, algebra;
  std::optional<std::string> world;
  std::uint64_t budget = kDefaultBudget;
  bool pure = false, fully_contextual = false, pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON output");

  auto* check = app.add_subcommand("check", "Truth set of a formula, or its truth at one world");
  check->add_option("model", model, "Model (.json) or context (.cxt)")->required();
  check->add_option("formula", formula, "Formula")->required();
  check->add_option("--world", world, "Object or attribute id; prints true or false");

  auto* valid = app.add_subcommand("valid", "Frame validity on a context");
  valid->add_option("context", context, "Context (.cxt or model .json)")->required();
  valid->add_option("formula", formula, "Formula")->required();
  valid->add_option("--budget", budget, "Largest number of valuations to enumerate");

  auto* lattice = app.add_subcommand("lattice", "Concept lattice of a context");
  lattice->add_option("context", context, "Context (.cxt or model .json)")->required();
  lattice->add_option("--kind", kind, "Concept kind")->check(CLI::IsMember({"formal", "property", "object"}));
  lattice->add_option("--out", out, "Output format")->check(CLI::IsMember({"json", "dot"}));

  auto* dba = app.add_subcommand("dba-verify", "Check the double Boolean algebra axioms");
  dba->add_option("input", file, "Context (.cxt) or algebra tables (.json)")->required();
  dba->add_option("--algebra", algebra, "Algebra built from a context (default semiconcept)")
      ->check(CLI::IsMember({"semiconcept", "protoconcept"}));
  dba->add_flag("--pure", pure, "Also check purity");
  dba->add_flag("--fully-contextual", fully_contextual, "Also check full contextuality");

  auto* props = app.add_subcommand("props", "Relation classes and their graded characterization");
  props->add_option("context", context, "Context (.cxt or model .json)")->required();

  auto* proof = app.add_subcommand("proof", "Check a Hilbert-style proof");
  proof->add_option("file", file, "Proof file (.prf)")->required();
  proof->add_option("--system", system, "Proof system")->check(CLI::IsMember({"KB", "KF", "BM"}));

  auto* translate = app.add_subcommand("translate", "Apply a formula translation");
  translate->add_option("formula", formula, "Formula")->required();
  translate->add_option("--map", map, "Translation")->required()->check(CLI::IsMember({"rho", "tau"}));

  auto* disjoint = app.add_subcommand("disjointify", "Disjoint total copy of a generalized model");
  disjoint->add_option("model", model, "Model (.json)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    usage_error(e.what());
    return kUsage;
  }

  if (pretty) json_indent = 2;
  try {
    if (*check) return run_check(model, formula, world);
    if (*valid) return run_valid(context, formula, budget);
    if (*lattice) return run_lattice(context, kind, out);
    if (*dba) return run_dba_verify(file, algebra, pure, fully_contextual);
    if (*props) return run_props(context);
    if (*proof) return run_proof(file, system);
    if (*translate) return run_translate(formula, map);
    if (*disjoint) return run_disjointify(model);
  } catch (const Error& e) {
    std::cerr << error_to_json(e.kind(), e.what()).dump() << '\n';
    return kNegative;
  } catch (const std::exception& e) {
    std::cerr << error_to_json(ErrorKind::invariant, e.what()).dump() << '\n';
    return kNegative;
  }
  return kUsage;
}
