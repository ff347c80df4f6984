// Acceptance run: twelve end-to-end criteria, one PASS/FAIL line each.
// Every check is exact; the time limits are part of the criteria.

#include "algebra_oracle.hpp"
#include "dba_mutation.hpp"
#include "oracle.hpp"
#include "support.hpp"

#include "ctxlogic/concepts.hpp"
#include "ctxlogic/dba.hpp"
#include "ctxlogic/error.hpp"
#include "ctxlogic/io.hpp"
#include "ctxlogic/proof.hpp"
#include "ctxlogic/properties.hpp"
#include "ctxlogic/semantics.hpp"
#include "ctxlogic/transforms.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

#ifndef CTXL_DATA_DIR
#error "CTXL_DATA_DIR must point at the shipped data directory"
#endif

using namespace ctxlogic;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;  // counts on success, first violation on failure

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Bitset bits_from_code(std::size_t n, std::uint64_t code) {
  Bitset b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = (code >> i) & 1u;
  return b;
}

std::string world_name(const FormalContext& k, World w) { return k.universe(w.sort)[w.index]; }

// ------------------------------------------------------------------ 1

Outcome galois_suite() {
  Outcome out;
  std::size_t contexts = 0, subsets = 0;
  testkit::for_all_contexts(
      3,
      [&](const FormalContext& k) {
        ++contexts;
        const Relation& r = k.incidence();
        const std::size_t n = k.num_objects(), m = k.num_attributes();
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code, ++subsets) {
          const Bitset a = bits_from_code(n, code);
          const Bitset up = derive_objects(r, a), closed = derive_attributes(r, up);
          if (!a.is_subset_of(closed)) out.fail("A not within A+-");
          if (derive_objects(r, closed) != up) out.fail("A+ != A+-+");
          if (oracle::to_bits(oracle::up(k, oracle::to_set(a)), m) != up) out.fail("A+ differs from comprehension");
          if (necessity_o(r, a) != ~possibility_o(r, ~a)) out.fail("nec_o != not poss_o not");
          if (oracle::to_bits(oracle::nec_o(k, oracle::to_set(a)), m) != necessity_o(r, a))
            out.fail("nec_o differs from comprehension");
        }
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code, ++subsets) {
          const Bitset b = bits_from_code(m, code);
          const Bitset down = derive_attributes(r, b), closed = derive_objects(r, down);
          if (!b.is_subset_of(closed)) out.fail("B not within B-+");
          if (derive_attributes(r, closed) != down) out.fail("B- != B-+-");
          if (oracle::to_bits(oracle::down(k, oracle::to_set(b)), n) != down) out.fail("B- differs from comprehension");
          if (necessity_p(r, b) != ~possibility_p(r, ~b)) out.fail("nec_p != not poss_p not");
          if (oracle::to_bits(oracle::nec_p(k, oracle::to_set(b)), n) != necessity_p(r, b))
            out.fail("nec_p differs from comprehension");
        }
      },
      true);
  if (out.pass) out.detail = std::to_string(contexts) + " contexts, " + std::to_string(subsets) + " subsets";
  return out;
}

// ------------------------------------------------------------------ 2

Outcome window_bridge() {
  Outcome out;
  testkit::Gen gen(1002);
  testkit::Gen::FormulaOptions opt;
  opt.max_depth = 4;
  for (int t = 0; t < 1000 && out.pass; ++t) {
    auto cm = gen.context_model(gen.between(1, 5), gen.between(1, 5), testkit::Gen::default_atoms());
    const Sort s = t % 2 == 0 ? Sort::s1 : Sort::s2;
    const Formula f = gen.formula(s, opt);
    const Direction d = s == Sort::s1 ? Direction::o : Direction::p;
    const Formula w = Formula::modal(modal_op(d, Style::window), f);
    const SortedSet lhs = truth_set(cm, w);
    const SortedSet rhs = derive(cm.context, truth_set(cm, f));
    if (!(lhs == rhs)) out.fail("window differs from derivation on " + print(w));
    if (oracle::truth(oracle::from(cm), w) != oracle::to_vec(lhs.members))
      out.fail("reference evaluator disagrees on " + print(w));
  }
  if (out.pass) out.detail = "1000 pairs";
  return out;
}

// ------------------------------------------------------------------ 3

Outcome axiom_soundness() {
  Outcome out;
  testkit::Gen gen(1003);
  testkit::Gen::FormulaOptions opt;
  opt.max_depth = 3;
  opt.overlines = false;
  opt.only_primitive_styles = true;  // the language of BM has boxes, diamonds via Dual, and windows
  opt.atoms = {{"p", Sort::s1}, {"q", Sort::s1}, {"a", Sort::s2}, {"b", Sort::s2}};
  std::vector<GeneralizedModel> models;
  for (int i = 0; i < 100; ++i)
    models.push_back(gen.generalized_model(gen.between(1, 4), gen.between(1, 4), opt.atoms, 0.3));
  std::size_t evaluations = 0;
  const auto& schemas = axiom_schemas(ProofSystem::BM);
  for (const auto& schema : schemas) {
    for (int t = 0; t < 100; ++t) {
      Substitution sub;
      for (const Atom& a : metavariables(schema.pattern)) sub.emplace(a.name, gen.formula(a.sort, opt));
      const Formula inst = instantiate(schema.pattern, sub);
      for (std::size_t i = 0; i < models.size(); ++i, ++evaluations) {
        if (!truth_set(models[i], inst).members.all()) {
          out.fail(schema.name + " fails: " + print(inst));
          return out;
        }
        // every tenth model through the reference evaluator as well
        if (i % 10 == 0) {
          const auto truth = oracle::truth(oracle::from(models[i]), inst);
          if (std::find(truth.begin(), truth.end(), false) != truth.end()) {
            out.fail(schema.name + " fails under the reference evaluator: " + print(inst));
            return out;
          }
        }
      }
    }
  }
  out.detail = std::to_string(schemas.size()) + " schemas, " + std::to_string(evaluations) + " model checks";
  return out;
}

// ------------------------------------------------------------------ 4

Outcome rho_correspondence() {
  Outcome out;
  testkit::Gen gen(1004);
  testkit::Gen::FormulaOptions opt;
  opt.boxes = false;
  opt.overlines = false;
  opt.only_primitive_styles = true;
  for (int t = 0; t < 1000 && out.pass; ++t) {
    auto cm = gen.context_model(gen.between(1, 5), gen.between(1, 5), testkit::Gen::default_atoms());
    const Formula f = gen.formula(gen.coin() ? Sort::s1 : Sort::s2, opt);
    if (!rho_correspondence_check(cm, f)) out.fail("library disagrees on " + print(f));
    const auto lhs = oracle::truth(oracle::from(cm), f);
    const auto rhs = oracle::truth(oracle::from(complement_model(cm)), translate_rho(f));
    if (lhs != rhs) out.fail("reference evaluator disagrees on " + print(f));
  }
  if (out.pass) out.detail = "1000 pairs";
  return out;
}

// ------------------------------------------------------------------ 5

Outcome lattice_isomorphisms() {
  Outcome out;
  std::size_t contexts = 0;
  auto check = [&](const FormalContext& k) {
    ++contexts;
    const auto report = verify_isomorphisms(k);
    for (const auto& c : report.checks)
      if (!c.ok()) out.fail(c.name + ": " + c.violations.front());
  };
  testkit::for_all_contexts(3, check, true);
  testkit::Gen gen(1005);
  for (int t = 0; t < 100; ++t) check(gen.context(6, 6));
  if (out.pass) out.detail = std::to_string(contexts) + " contexts";
  return out;
}

// ------------------------------------------------------------------ 6

Outcome dba_characterizations() {
  Outcome out;
  testkit::Gen gen(1006);
  std::size_t contexts = 0, mutations = 0, dba = 0, not_dba = 0;
  testkit::for_all_contexts(
      3,
      [&](const FormalContext& k) {
        ++contexts;
        const PairAlgebra semi = semiconcept_algebra(k), proto = protoconcept_algebra(k);
        if (!check_dba(semi.algebra).all_pass()) out.fail("semiconcept algebra fails an axiom");
        if (!is_pure(semi.algebra).holds) out.fail("semiconcept algebra is not pure");
        if (!check_dba(proto.algebra).all_pass()) out.fail("protoconcept algebra fails an axiom");
        if (!is_fully_contextual(proto.algebra).holds) out.fail("protoconcept algebra is not fully contextual");
        if (!build_from_booleans(canonical_maps_from_dba(semi.algebra)).same_tables(semi.algebra))
          out.fail("canonical maps do not rebuild the semiconcept tables");
        if (!build_from_booleans(canonical_maps_from_dba(proto.algebra)).same_tables(proto.algebra))
          out.fail("canonical maps do not rebuild the protoconcept tables");
        // both pair algebras must also match the set-comprehension construction
        if (!oracle::same_algebra(semi.algebra, oracle::pair_algebra(k, oracle::semiconcepts(k))))
          out.fail("semiconcept tables differ from the comprehension construction");
        if (!oracle::same_algebra(proto.algebra, oracle::pair_algebra(k, oracle::protoconcepts(k))))
          out.fail("protoconcept tables differ from the comprehension construction");

        const AdjointMaps base = quotient_maps(k, semi);
        for (int round = 0; round < 50; ++round, ++mutations) {
          AdjointMaps m = base;
          for (std::size_t steps = gen.between(1, 3); steps > 0; --steps) testkit::mutate(gen, m);
          const auto ch = check_characterization(m);
          if (!ch.characterization_agrees()) out.fail("characterization disagrees with the axioms after a mutation");
          (ch.built_is_dba ? dba : not_dba)++;
        }
      },
      true);
  if (dba == 0 || not_dba == 0) out.fail("mutations did not exercise both outcomes");
  if (out.pass)
    out.detail = std::to_string(contexts) + " contexts, " + std::to_string(mutations) + " mutations (" +
                 std::to_string(dba) + " dBa, " + std::to_string(not_dba) + " not)";
  return out;
}

// ------------------------------------------------------------------ 7

Outcome frame_validities() {
  Outcome out;
  const std::vector<Formula> validities = {
      parse("[[p]] a@2 <-> [[p]][[o]][[p]] a@2"),
      parse("[[p]][[o]] p@1 -> [[p]]([[o]] p@1 & a@2)"),
      parse("p@1 -> [[p]][[o]] p@1"),
  };
  std::size_t contexts = 0;
  testkit::for_all_contexts(
      3,
      [&](const FormalContext& k) {
        ++contexts;
        for (const auto& f : validities) {
          const auto r = frame_valid(k, f);
          if (!r.valid())
            out.fail(print(f) + " not valid on a " + std::to_string(k.num_objects()) + "x" +
                     std::to_string(k.num_attributes()) + " context");
        }
      },
      true);
  if (out.pass) out.detail = "3 formulas, " + std::to_string(contexts) + " contexts";
  return out;
}

// ------------------------------------------------------------------ 8

// Relation classes recomputed from row and column counts.
struct Counted {
  bool partial = true, function = true, injective = false, surjective = false;
};

Counted counted_class(const FormalContext& k, bool bar) {
  std::vector<std::size_t> rows(k.num_objects()), cols(k.num_attributes());
  for (std::size_t g = 0; g < rows.size(); ++g)
    for (std::size_t m = 0; m < cols.size(); ++m)
      if (k.incidence().test(g, m) != bar) {
        ++rows[g];
        ++cols[m];
      }
  Counted c;
  for (auto x : rows) {
    c.partial = c.partial && x <= 1;
    c.function = c.function && x == 1;
  }
  c.injective = c.function && std::all_of(cols.begin(), cols.end(), [](std::size_t x) { return x <= 1; });
  c.surjective = c.function && std::all_of(cols.begin(), cols.end(), [](std::size_t x) { return x >= 1; });
  return c;
}

Outcome graded_characterization() {
  Outcome out;
  std::size_t contexts = 0;
  testkit::for_all_contexts(
      3,
      [&](const FormalContext& k) {
        ++contexts;
        for (bool bar : {false, true}) {
          const Counted c = counted_class(k, bar);
          const RelationClass r = relation_class(k, bar ? Base::complement : Base::incidence);
          if (r.partial_function != c.partial || r.function != c.function || r.injective != c.injective ||
              r.surjective != c.surjective || r.bijective != (c.injective && c.surjective))
            out.fail("relation class differs from row/column counts");
        }
        const auto m = oracle::from(k, {});
        for (const auto& clause : graded_characterization_check(k)) {
          if (!clause.agree) out.fail("clause " + clause.clause + " disagrees");
          bool rhs = true;
          for (const auto& text : clause.formulas) {
            const auto t = oracle::truth(m, parse(text));
            rhs = rhs && std::find(t.begin(), t.end(), false) == t.end();
          }
          if (rhs != clause.rhs) out.fail("clause " + clause.clause + ": reference evaluator differs");
        }
      },
      true);
  if (out.pass) out.detail = std::to_string(contexts) + " contexts, 10 clauses each";
  return out;
}

// ------------------------------------------------------------------ 9

std::vector<Rational> open_grid() { return {Rational(1, 6), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(5, 6)}; }
std::vector<Rational> grid_with_one() { return {Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5), Rational(1)}; }
std::vector<Rational> grid_with_zero() { return {Rational(0), Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5)}; }
std::vector<Rational> closed_grid() { return {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}; }

Outcome weighted_negative() {
  Outcome out;
  std::size_t instances = 0, targets = 0;
  auto verify = [&](CounterexampleKind kind, const WeightedParams& p) {
    ++instances;
    WeightedCounterexample cx = [&] {
      try {
        return weighted_counterexample(kind, p);
      } catch (const Error& e) {
        out.fail(to_string(kind) + " threw: " + e.what());
        throw;
      }
    }();
    const auto ref = oracle::from(cx.model);
    for (const auto& t : cx.targets) {
      ++targets;
      if (truth_set(cx.model, t.formula).members.test(t.world.index))
        out.fail(to_string(kind) + ": " + print(t.formula) + " holds at " + world_name(cx.model.context, t.world));
      if (oracle::holds(ref, t.world.index, t.formula))
        out.fail(to_string(kind) + ": reference evaluator says " + print(t.formula) + " holds");
    }
  };
  try {
    for (const auto& c : grid_with_one())
      for (const auto& d : grid_with_one())
        for (const auto& e : grid_with_zero()) verify(CounterexampleKind::box_dia_U, {c, d, e});
    for (const auto& c : grid_with_zero())
      for (const auto& d : grid_with_zero())
        for (const auto& e : grid_with_one()) verify(CounterexampleKind::contingency, {c, d, e});
    for (const auto& c : grid_with_one())
      for (const auto& d : open_grid()) verify(CounterexampleKind::nested_box, {c, d, Rational(0)});
    for (int variant = 0; variant < 4; ++variant)
      for (const auto& c : closed_grid())
        for (const auto& d : closed_grid()) {
          if (c == d && (c == Rational(0) || c == Rational(1))) continue;  // both sides coincide there
          WeightedParams p{c, d, Rational(0), variant, 8};
          verify(CounterexampleKind::definability, p);
        }
  } catch (const Error&) {
    return out;
  }
  if (out.pass) out.detail = std::to_string(instances) + " instances, " + std::to_string(targets) + " falsified targets";
  return out;
}

// ------------------------------------------------------------------ 10

Outcome weighted_positive() {
  Outcome out;
  testkit::Gen gen(1010);
  const std::vector<Atom> atoms = {{"p", Sort::s1}, {"q", Sort::s1}, {"a", Sort::s2}, {"b", Sort::s2}};
  std::vector<ContextModel> models;
  for (int i = 0; i < 500; ++i) models.push_back(gen.context_model(gen.between(1, 5), gen.between(1, 5), atoms));
  testkit::Gen::FormulaOptions opt;
  opt.max_depth = 3;
  opt.atoms = atoms;
  std::vector<Formula> formulas;
  for (int i = 0; i < 12; ++i) formulas.push_back(gen.formula(i % 2 == 0 ? Sort::s1 : Sort::s2, opt));
  std::size_t checks = 0;
  const std::vector<std::pair<Rational, Rational>> pairs = {
      {Rational(1), Rational(1, 2)}, {Rational(2, 3), Rational(1, 3)}, {Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(0)}};
  for (const auto& [c, d] : pairs) {
    const auto report = weighted_validity_suite(models, formulas, c, d);
    for (const auto& law : report.laws) {
      checks += law.checks;
      if (law.failures > 0)
        out.fail(law.law + " fails" + (law.examples.empty() ? std::string() : ": " + law.examples.front()));
    }
  }
  // the embedding once more through the reference evaluator
  for (const auto& cm : models) {
    const auto ref = oracle::from(cm);
    for (const auto& f : formulas) {
      ++checks;
      if (oracle::truth(ref, f) != oracle::truth(ref, translate_tau(f)))
        out.fail("reference evaluator: weight-1 embedding differs on " + print(f));
    }
  }
  if (out.pass) out.detail = "500 models, " + std::to_string(checks) + " checks";
  return out;
}

// ------------------------------------------------------------------ 11

Outcome disjointify_suite() {
  Outcome out;
  testkit::Gen gen(1011);
  const auto formulas = fuzz_suite(1011, 50);
  for (int t = 0; t < 200 && out.pass; ++t) {
    const auto g = gen.generalized_model(gen.between(1, 4), gen.between(1, 4), testkit::Gen::default_atoms(), 0.4);
    const DisjointCopy d = disjointify(g);
    const Relation &i = d.model.i(), &j = d.model.j();
    for (std::size_t a = 0; a < i.rows(); ++a)
      for (std::size_t b = 0; b < i.cols(); ++b) {
        if (i.test(a, b) && j.test(a, b)) out.fail("output relations overlap");
        if (!i.test(a, b) && !j.test(a, b)) out.fail("output is not total");
      }
    const auto morphism = is_bounded_morphism(d.fold, d.model, g);
    if (!morphism.ok) out.fail("fold is not a bounded morphism: " + morphism.condition + " " + morphism.detail);
    if (!is_surjective(d.fold, g)) out.fail("fold is not surjective");
    if (auto failure = first_invariance_failure(d.fold, d.model, g, formulas)) out.fail(*failure);
    // a second route through the reference evaluator
    const auto src = oracle::from(d.model), dst = oracle::from(g);
    for (const auto& f : formulas) {
      const auto a = oracle::truth(src, f), b = oracle::truth(dst, f);
      const auto& map = f.sort() == Sort::s1 ? d.fold.f_s1 : d.fold.f_s2;
      for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] != b[map[w]]) out.fail("reference evaluator: " + print(f) + " not preserved");
    }
  }
  if (out.pass) out.detail = "200 models, 50 formulas each";
  return out;
}

// ------------------------------------------------------------------ 12

std::optional<std::string> header(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  const std::string prefix = "# " + key + ":";
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0) {
      std::string v = line.substr(prefix.size());
      v.erase(0, v.find_first_not_of(' '));
      v.erase(v.find_last_not_of(" \r") + 1);
      return v;
    }
  return std::nullopt;
}

std::vector<std::filesystem::path> prf_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".prf") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

Outcome proof_corpus() {
  Outcome out;
  const std::filesystem::path data(CTXL_DATA_DIR);
  std::set<std::string> schemas_used, rules_used;
  std::size_t valid = 0, invalid = 0;
  for (const auto& path : prf_files(data / "proofs")) {
    const std::string text = read_file(path.string());
    const auto sys = header(text, "system");
    if (!sys) {
      out.fail(path.filename().string() + " has no system header");
      continue;
    }
    const Proof p = parse_proof(text);
    const ProofVerdict v = check_proof(p, parse_proof_system(*sys));
    ++valid;
    if (!v.accepted) out.fail(path.filename().string() + " rejected at line " + std::to_string(*v.first_failure));
    for (const auto& line : p.lines) {
      if (!line.justification) continue;
      if (line.justification->kind == Justification::Kind::axiom) schemas_used.insert(line.justification->name);
      if (line.justification->kind == Justification::Kind::ug) rules_used.insert(line.justification->name);
    }
  }
  for (const auto& s : axiom_schemas(ProofSystem::BM))
    if (!schemas_used.count(s.name)) out.fail("no valid proof uses " + s.name);
  for (const char* r : {"box_o", "box_p", "win_o", "win_p"})
    if (!rules_used.count(r)) out.fail(std::string("no valid proof uses UG ") + r);
  if (valid < 10) out.fail("fewer than 10 valid proofs");

  for (const auto& path : prf_files(data / "proofs_invalid")) {
    const std::string text = read_file(path.string());
    const auto sys = header(text, "system");
    const auto expect = header(text, "expect-fail");
    if (!sys || !expect) {
      out.fail(path.filename().string() + " lacks a system or expect-fail header");
      continue;
    }
    ++invalid;
    const ProofVerdict v = check_proof(parse_proof(text), parse_proof_system(*sys));
    if (v.accepted) out.fail(path.filename().string() + " was accepted");
    else if (std::to_string(*v.first_failure) != *expect)
      out.fail(path.filename().string() + " failed at line " + std::to_string(*v.first_failure) + ", expected " +
               *expect);
  }
  if (invalid < 10) out.fail("fewer than 10 mutated proofs");
  if (out.pass)
    out.detail = std::to_string(valid) + " valid accepted, " + std::to_string(invalid) +
                 " mutated rejected at the expected line";
  return out;
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;  // 0 when no limit is set
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "Galois laws and approximation duality, all contexts up to 3x3", 10, galois_suite},
      {2, "window equals derivation, 1000 random pairs", 10, window_bridge},
      {3, "axiom soundness, 100 instances x 100 generalized models", 60, axiom_soundness},
      {4, "rho correspondence, 1000 random pairs", 0, rho_correspondence},
      {5, "concept lattice isomorphisms, up to 3x3 and 100 random 6x6", 0, lattice_isomorphisms},
      {6, "double Boolean algebra characterizations, up to 3x3 with 50 mutations", 120, dba_characterizations},
      {7, "frame validities, all contexts up to 3x3", 0, frame_validities},
      {8, "graded relation characterization, all contexts up to 3x3", 30, graded_characterization},
      {9, "weighted counter-models over parameter grids", 30, weighted_negative},
      {10, "weighted positive laws, 500 models", 0, weighted_positive},
      {11, "disjoint copies of 200 generalized models", 0, disjointify_suite},
      {12, "proof corpus", 0, proof_corpus},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "took %.2f s, limit %.0f s", secs, c.limit_seconds);
      o.fail(buf);
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.name << " [" << timing
              << "] " << o.detail << std::endl;
    if (!o.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
