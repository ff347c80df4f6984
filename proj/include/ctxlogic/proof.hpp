#pragma once

// Hilbert-style proof checking for the systems KB, KF and BM.
//
// Proof text is line oriented:
//
//   1. ~(p@1 & ~p@1) ; PL
//   2. [[o]] (p@1 & ~p@1) ; UG win_o 1
//
// Justifications: `PL` (propositional tautology), `AX <schema>`,
// `MP <i> <j>` (premises in either order) and `UG <rule> <i>`.
// Blank lines and lines starting with `#` are ignored.

#include "ctxlogic/formula.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ctxlogic {

enum class ProofSystem { KB, KF, BM };

const char* to_string(ProofSystem s);
// Throws Error(malformed_input) for unknown names.
ProofSystem parse_proof_system(const std::string& name);

// A schema is a formula whose metavariables are atoms named `?...`; a
// metavariable of sort s matches any formula of sort s.
struct AxiomSchema {
  std::string name;
  Formula pattern;
};

// Schemas available in the system (PL is handled separately).
const std::vector<AxiomSchema>& axiom_schemas(ProofSystem s);
// Looks up a schema by name among all systems; nullptr if unknown.
const AxiomSchema* find_schema(const std::string& name);

using Substitution = std::map<std::string, Formula>;

std::optional<Substitution> match_schema(const Formula& pattern, const Formula& f);
Formula instantiate(const Formula& pattern, const Substitution& sub);
// Metavariables of a pattern, in first-occurrence order.
std::vector<Atom> metavariables(const Formula& pattern);

// Truth-table tautology check over the modal-free skeleton; modal
// subformulas and atoms are opaque letters. Returns nullopt when the
// skeleton has more than `max_letters` letters.
std::optional<bool> is_tautology(const Formula& f, std::size_t max_letters = 20);

// UG rule names are box_o, box_p (from f infer [d] f) and win_o, win_p
// (from ~f infer [[d]] f).
bool rule_available(ProofSystem s, const std::string& rule);

struct Justification {
  enum class Kind { pl, axiom, mp, ug };
  Kind kind = Kind::pl;
  std::string name;                // schema or rule
  std::vector<std::size_t> refs;   // referenced line numbers
};

struct ProofLine {
  std::size_t number = 0;     // the `n.` label
  std::size_t text_line = 0;  // 1-based line in the source text
  std::optional<Formula> formula;
  std::optional<Justification> justification;
  std::string parse_error;    // set when the line could not be read
};

struct Proof {
  std::vector<ProofLine> lines;
};

// Never throws on bad line content; malformed lines carry parse_error and
// are rejected by check_proof.
Proof parse_proof(const std::string& text, const SortEnv& env = {});

struct LineVerdict {
  std::size_t number = 0;
  bool ok = false;
  std::string reason;  // empty when ok
};

struct ProofVerdict {
  bool accepted = false;
  std::optional<std::size_t> first_failure;  // label of the first bad line
  std::vector<LineVerdict> lines;
};

ProofVerdict check_proof(const Proof& proof, ProofSystem system);

}  // namespace ctxlogic
