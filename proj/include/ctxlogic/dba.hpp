#pragma once

// Finite double Boolean algebras: axiom audit, purity, full contextuality,
// Boolean parts, and construction from two Boolean algebras via
// retraction/section pairs.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ctxlogic {

// Elements are carrier indices; binary tables are row-major n*n.
struct FiniteAlgebra {
  std::vector<std::string> carrier;
  std::vector<std::size_t> meet_table;  // x ⊓ y
  std::vector<std::size_t> join_table;  // x ⊔ y
  std::vector<std::size_t> neg_table;   // ¬̄x
  std::vector<std::size_t> opp_table;   // ⌟x
  std::size_t top = 0;
  std::size_t bottom = 0;

  std::size_t size() const { return carrier.size(); }
  std::size_t meet(std::size_t x, std::size_t y) const { return meet_table[x * size() + y]; }
  std::size_t join(std::size_t x, std::size_t y) const { return join_table[x * size() + y]; }
  std::size_t neg(std::size_t x) const { return neg_table[x]; }
  std::size_t opp(std::size_t x) const { return opp_table[x]; }
  // x ∨̄ y = ¬̄(¬̄x ⊓ ¬̄y) and x ∧̄ y = ⌟(⌟x ⊔ ⌟y)
  std::size_t vee(std::size_t x, std::size_t y) const { return neg(meet(neg(x), neg(y))); }
  std::size_t wedge(std::size_t x, std::size_t y) const { return opp(join(opp(x), opp(y))); }

  // Throws Error(malformed_input) if tables are not total over the carrier.
  void validate() const;
  // Table equality under the identity bijection (names ignored).
  bool same_tables(const FiniteAlgebra& o) const;
};

struct AxiomResult {
  std::string name;                   // "1a" ... "11b", "12"
  bool pass = true;
  std::vector<std::size_t> witness;   // first failing (x[, y[, z]]) in carrier order
};

struct DbaReport {
  std::vector<AxiomResult> axioms;  // always 23 entries, in axiom order
  bool all_pass() const;
  const AxiomResult* first_failure() const;
};

DbaReport check_dba(const FiniteAlgebra& a);

struct PropertyResult {
  bool holds = true;
  std::vector<std::size_t> witness;
  std::string detail;
};

// ∀x: x⊓x = x or x⊔x = x.
PropertyResult is_pure(const FiniteAlgebra& a);
// For y ∈ D⊓, x ∈ D⊔ with y⊔y = x⊓x there is exactly one z with z⊓z = y, z⊔z = x.
PropertyResult is_fully_contextual(const FiniteAlgebra& a);

// A finite Boolean algebra given by tables over its own element list.
struct TabledBoolean {
  std::vector<std::string> names;
  std::vector<std::size_t> meet_table, join_table;
  std::vector<std::size_t> complement;
  std::size_t zero = 0, one = 0;

  std::size_t size() const { return names.size(); }
  std::size_t meet(std::size_t x, std::size_t y) const { return meet_table[x * size() + y]; }
  std::size_t join(std::size_t x, std::size_t y) const { return join_table[x * size() + y]; }
};

// Subsets of an n-element universe (element i is subset code i). With
// `reversed`, meet is union and join is intersection (zero = full set).
TabledBoolean powerset_boolean(const std::vector<std::string>& universe, bool reversed = false);

struct BooleanAudit {
  bool ok = true;
  std::string failure;               // name of the first failing law
  std::vector<std::size_t> witness;  // element indices of that algebra
};

// Lattice, distributivity, bound and complement laws.
BooleanAudit audit_boolean(const TabledBoolean& b);

struct BooleanPart {
  std::vector<std::size_t> elements;  // carrier indices of the dBa, ascending
  TabledBoolean algebra;              // operations induced on `elements`
  BooleanAudit audit;                 // closure violations are reported here too
};

// D⊓ with (⊓, ∨̄, ¬̄, ⊥, ¬̄⊥) and D⊔ with (∧̄, ⊔, ⌟, ⌟⊤, ⊤).
std::pair<BooleanPart, BooleanPart> boolean_parts(const FiniteAlgebra& a);

// r: A -> B, e: B -> A, r2: A -> B', e2: B' -> A with r∘e = id and r2∘e2 = id.
struct AdjointMaps {
  std::vector<std::string> carrier;
  TabledBoolean left;   // B
  TabledBoolean right;  // B'
  std::vector<std::size_t> r, e, r2, e2;

  // Throws Error(invariant) if a retraction law fails, Error(malformed_input)
  // on size mismatches.
  void validate() const;
};

// x⊓y = e(r x ∧ r y), x⊔y = e2(r2 x ∨' r2 y), ¬̄x = e(−r x), ⌟x = e2(−' r2 x),
// ⊤ = e2(1'), ⊥ = e(0).
FiniteAlgebra build_from_booleans(const AdjointMaps& maps);

struct CharacterizationReport {
  PropertyResult a;  // e∘r∘e2∘r2 = e2∘r2∘e∘r
  PropertyResult b;  // both absorption identities, ∀x, y
  PropertyResult c;  // r(e2(1')) = 1 and r2(e(0)) = 0'
  PropertyResult d;  // ∀x: e(r x) = x or e2(r2 x) = x
  bool built_is_dba = false;
  bool built_is_pure_dba = false;
  // dBa <=> a∧b∧c, and pure dBa <=> a∧b∧c∧d.
  bool characterization_agrees() const;
};

CharacterizationReport check_characterization(const AdjointMaps& maps);

// B = D⊓, B' = D⊔, r(x) = x⊓x, r2(x) = x⊔x, e and e2 the inclusions.
// Throws Error(invariant) if the result does not rebuild the algebra.
AdjointMaps canonical_maps_from_dba(const FiniteAlgebra& a);

}  // namespace ctxlogic
