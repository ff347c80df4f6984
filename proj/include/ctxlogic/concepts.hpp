#pragma once

// Formal, property-oriented and object-oriented concepts of a context, their
// lattices, semiconcept/protoconcept algebras, and the formula-level
// counterparts checked by frame validity.

#include "ctxlogic/bitset.hpp"
#include "ctxlogic/context.hpp"
#include "ctxlogic/dba.hpp"
#include "ctxlogic/formula.hpp"
#include "ctxlogic/semantics.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ctxlogic {

// formal:   A⁺ = B and B⁻ = A
// property: A^◇o = B and B^□p = A
// object:   A^□o = B and B^◇p = A
enum class ConceptKind { formal, property, object };

const char* to_string(ConceptKind k);
// Throws Error(malformed_input) for unknown names.
ConceptKind parse_concept_kind(const std::string& name);

struct Concept {
  Bitset extent;  // over G
  Bitset intent;  // over M
  ConceptKind kind = ConceptKind::formal;

  bool operator==(const Concept& o) const { return kind == o.kind && extent == o.extent && intent == o.intent; }
};

bool is_concept(const FormalContext& k, const Concept& c);

// The concept determined by an extent or intent that is already closed for the
// kind; the result is not checked.
Concept concept_from_extent(const FormalContext& k, ConceptKind kind, const Bitset& extent);
Concept concept_from_intent(const FormalContext& k, ConceptKind kind, const Bitset& intent);

// Ordered by extent inclusion for every kind.
struct ConceptLattice {
  ConceptKind kind = ConceptKind::formal;
  std::vector<Concept> concepts;        // canonical_less on extents
  std::vector<std::size_t> meet_table;  // row-major, indices into concepts
  std::vector<std::size_t> join_table;

  std::size_t size() const { return concepts.size(); }
  bool leq(std::size_t i, std::size_t j) const { return concepts[i].extent.is_subset_of(concepts[j].extent); }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_table[i * size() + j]; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_table[i * size() + j]; }
  std::optional<std::size_t> index_of(const Bitset& extent) const;
  std::size_t bottom() const;
  std::size_t top() const;
};

enum class EnumerationAlgorithm {
  automatic,     // subset scan up to 12 objects, NextClosure beyond
  subset_scan,   // tests every A ⊆ G; at most 20 objects
  next_closure,  // lectic order over the closure system's universe
};

// The kind's concepts in canonical extent order, without lattice tables.
// Throws Error(budget_exceeded) when the subset scan is forced on more than
// 20 objects.
std::vector<Concept> list_concepts(const FormalContext& k, ConceptKind kind,
                                   EnumerationAlgorithm algorithm = EnumerationAlgorithm::automatic);

// list_concepts plus meet and join tables.
ConceptLattice enumerate_concepts(const FormalContext& k, ConceptKind kind,
                                  EnumerationAlgorithm algorithm = EnumerationAlgorithm::automatic);

// Meet and join in the extent order, computed from extents and intents:
//   formal:   (A∩A', (A∩A')⁺)          ((B∩B')⁻, B∩B')
//   property: (A∩A', (A∩A')^◇o)        ((B∪B')^□p, B∪B')
//   object:   ((B∩B')^◇p, B∩B')        (A∪A', (A∪A')^□o)
// Throws Error(malformed_input) if the kinds differ or an input is not a
// concept of its kind.
std::pair<Concept, Concept> lattice_ops(const FormalContext& k, const Concept& a, const Concept& b);

// Compares the tables with greatest lower / least upper bounds found by
// scanning the order. Returns a description of the first mismatch.
std::optional<std::string> verify_lattice(const ConceptLattice& l);

struct IsomorphismCheck {
  std::string name;  // e.g. "B(K) -> P(K-bar)"
  bool order_reversing = false;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct IsomorphismReport {
  std::vector<IsomorphismCheck> checks;  // three entries
  bool ok() const;
};

// B(K) -> P(K̄): (A,B) ↦ (A, M∖B), order preserving
// P(K) -> O(K): (A,B) ↦ (G∖A, M∖B), order reversing
// B(K) -> O(K̄): (A,B) ↦ (G∖A, B), order reversing
IsomorphismReport verify_isomorphisms(const FormalContext& k);

struct PairFlags {
  bool formal_concept = false;
  bool left_semiconcept = false;   // A⁺ = B
  bool right_semiconcept = false;  // B⁻ = A
  bool semiconcept = false;
  bool protoconcept = false;       // A⁺⁻ = B⁻
  bool property_concept = false;
  bool property_semiconcept = false;   // A^◇o = B or B^□p = A
  bool property_protoconcept = false;  // A^◇o□p = B^□p
  bool object_concept = false;
  bool object_semiconcept = false;     // A^□o = B or B^◇p = A
  bool object_protoconcept = false;    // A^□o◇p = B^◇p

  std::vector<std::string> names() const;
};

// Throws Error(malformed_input) on size mismatches.
PairFlags classify_pair(const FormalContext& k, const Bitset& extent, const Bitset& intent);

// Elements sorted by extent, then intent (canonical_less); carrier names
// read "({g1}, {m1,m2})".
struct PairAlgebra {
  std::vector<std::pair<Bitset, Bitset>> elements;
  FiniteAlgebra algebra;
};

// (A,B)⊓(A',B') = (A∩A', (A∩A')⁺), (A,B)⊔(A',B') = ((B∩B')⁻, B∩B'),
// ¬̄(A,B) = (G∖A, (G∖A)⁺), ⌟(A,B) = ((M∖B)⁻, M∖B), ⊥ = (∅, M), ⊤ = (G, ∅).
// Both throw Error(budget_exceeded) beyond 12 objects or 12 attributes.
PairAlgebra semiconcept_algebra(const FormalContext& k);
PairAlgebra protoconcept_algebra(const FormalContext& k);

std::string pair_name(const FormalContext& k, const Bitset& extent, const Bitset& intent);

// Retractions onto P(G) (extent) and P(M) ordered by reverse inclusion
// (intent), with sections A ↦ (A, A⁺) and B ↦ (B⁻, B).
AdjointMaps quotient_maps(const FormalContext& k, const PairAlgebra& pa);

// Formula-level concepts; φ has sort s1 and ψ sort s2. An overline marks the
// operator over the complement relation.
enum class LogicalKind {
  kb_property,     // φ ↔ □pψ,  ◇oφ ↔ ψ
  kb_object,       // φ ↔ ◇pψ,  □oφ ↔ ψ
  formal,          // φ ↔ ⊟pψ,  ⊟oφ ↔ ψ
  property,        // φ ↔ □̄pψ,  ◇̄oφ ↔ ψ
  object,          // φ ↔ ◇̄pψ,  □̄oφ ↔ ψ
  semiconcept,           // either formal condition
  property_semiconcept,  // either property condition
  object_semiconcept,    // either object condition
  protoconcept,           // ⊟oφ ↔ ⊟o⊟pψ
  property_protoconcept,  // ◇̄oφ ↔ ◇̄o□̄pψ
  object_protoconcept,    // ◇̄p□̄oφ ↔ ◇̄pψ
};

const char* to_string(LogicalKind k);
LogicalKind parse_logical_kind(const std::string& name);

struct LogicalPair {
  Formula phi;
  Formula psi;
};

struct LogicalCheck {
  bool holds = false;
  std::vector<Formula> conditions;   // the biconditionals tested
  std::vector<bool> condition_valid;
};

// Evaluates the kind's defining biconditionals with frame_valid. Throws
// Error(sort) on badly sorted inputs and Error(budget_exceeded) when a
// validity check runs out of budget.
LogicalCheck logical_concept_check(const FormalContext& k, const LogicalPair& pair, LogicalKind kind,
                                   std::uint64_t budget = kDefaultBudget);

// Syntactic meet and join, closure-correct for the extent order:
//   formal:      (φ∧φ', ⊟o(φ∧φ'))      (⊟p(ψ∧ψ'), ψ∧ψ')
//   kb_property: (φ∧φ', ◇o(φ∧φ'))      (□p(ψ∨ψ'), ψ∨ψ')
//   kb_object:   (◇p(ψ∧ψ'), ψ∧ψ')      (φ∨φ', □o(φ∨φ'))
//   property / object: as kb_* with overlined operators.
// Throws Error(unsupported) for semiconcept and protoconcept kinds.
std::pair<LogicalPair, LogicalPair> logical_lattice_ops(const LogicalPair& a, const LogicalPair& b, LogicalKind kind);

// As above, checking that both inputs are logical concepts of the kind on k
// (Error(malformed_input) otherwise) and that both results are too
// (Error(invariant) otherwise).
std::pair<LogicalPair, LogicalPair> checked_logical_lattice_ops(const FormalContext& k, const LogicalPair& a,
                                                                const LogicalPair& b, LogicalKind kind,
                                                                std::uint64_t budget = kDefaultBudget);

// ⊨ φ ↔ φ' and ⊨ ψ ↔ ψ' on k.
bool logically_equivalent(const FormalContext& k, const LogicalPair& a, const LogicalPair& b,
                          std::uint64_t budget = kDefaultBudget);

}  // namespace ctxlogic
