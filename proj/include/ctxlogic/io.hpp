#pragma once

// File formats: Burmeister CXT contexts, JSON models and algebras, JSON
// reports and DOT lattice diagrams. Every reader rejects ids containing the
// prime marker, which is reserved for the disjoint-copy construction.

#include "ctxlogic/concepts.hpp"
#include "ctxlogic/dba.hpp"
#include "ctxlogic/error.hpp"
#include "ctxlogic/model.hpp"
#include "ctxlogic/proof.hpp"
#include "ctxlogic/properties.hpp"
#include "ctxlogic/semantics.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ctxlogic {

using Json = nlohmann::ordered_json;

// Error(io) when the file cannot be read or written.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Error(malformed_input) for any id containing the prime marker.
void reject_reserved_ids(const std::vector<std::string>& ids, const char* what);

// Burmeister CXT: "B", a name line (usually blank), |G|, |M|, a blank line,
// |G| object names, |M| attribute names, then |G| rows of '.'/'X'. Names are
// whole lines and may contain spaces. Errors carry 1-based line numbers.
FormalContext parse_cxt(const std::string& text);
// Normalized form: LF line endings, empty name line, 'X' for incidence.
std::string write_cxt(const FormalContext& k);
FormalContext load_cxt(const std::string& path);
void save_cxt(const std::string& path, const FormalContext& k);

// {objects, attributes, incidence: [[g, m], ...], j_relation?, valuation: {"p@1": [ids]}}.
// With j_relation the model is generalized and must be total.
struct LoadedModel {
  FormalContext context;
  Valuation valuation;
  std::optional<Relation> j;

  bool generalized() const { return j.has_value(); }
  ContextModel context_model() const;          // Error(unsupported) when generalized
  GeneralizedModel generalized_model() const;  // a context model gets J = complement of I
};

LoadedModel model_from_json(const Json& j);
LoadedModel load_model_json(const std::string& path);
Json model_to_json(const ContextModel& m);
Json model_to_json(const GeneralizedModel& m);

// {carrier: [names], meet: [[name]], join: [[name]], neg: [name], opp: [name], top, bottom}
FiniteAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const FiniteAlgebra& a);

// Cover pairs (lower, upper) of the extent order, i.e. its transitive
// reduction, sorted.
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const ConceptLattice& l);
Json lattice_to_json(const FormalContext& k, const ConceptLattice& l);
std::string lattice_to_dot(const FormalContext& k, const ConceptLattice& l);

Json names_json(const FormalContext& k, const SortedSet& s);
Json dba_report_to_json(const FiniteAlgebra& a, const DbaReport& r, const std::optional<PropertyResult>& pure,
                        const std::optional<PropertyResult>& fully_contextual);
Json graded_report_to_json(const std::vector<ClauseResult>& r);
Json proof_verdict_to_json(const ProofVerdict& v, ProofSystem system);
Json validity_to_json(const FormalContext& k, const Formula& f, const ValidityResult& r);
Json error_to_json(ErrorKind kind, const std::string& message);

// Named contexts, models and proofs; names are unique per kind.
class Workspace {
 public:
  void add_context(const std::string& name, FormalContext k);
  void add_model(const std::string& name, LoadedModel m);
  void add_proof(const std::string& name, Proof p);

  // Dispatches on the extension (.cxt, .json, .prf); the name is the file stem.
  std::string load(const std::string& path);

  const FormalContext& context(const std::string& name) const;
  const LoadedModel& model(const std::string& name) const;
  const Proof& proof(const std::string& name) const;

  std::vector<std::string> context_names() const;
  std::vector<std::string> model_names() const;
  std::vector<std::string> proof_names() const;

 private:
  std::map<std::string, FormalContext> contexts_;
  std::map<std::string, LoadedModel> models_;
  std::map<std::string, Proof> proofs_;
};

}  // namespace ctxlogic
