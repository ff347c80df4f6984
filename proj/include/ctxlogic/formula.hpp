#pragma once

#include "ctxlogic/context.hpp"
#include "ctxlogic/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ctxlogic {

// o-modalities map s1 formulas to s2 formulas; p-modalities the converse.
enum class Direction : unsigned char { o, p };
// `complement` marks the overlined operators (defined over the complement relation).
enum class Base : unsigned char { incidence, complement };
enum class Style : unsigned char { box, diamond, window, window_dual };

struct ModalDescriptor {
  Direction direction = Direction::o;
  Base base = Base::incidence;
  Style style = Style::box;
  std::optional<unsigned> grade;
  std::optional<Rational> weight;
  bool exact = false;

  Sort input_sort() const { return direction == Direction::o ? Sort::s1 : Sort::s2; }
  Sort output_sort() const { return other(input_sort()); }
  bool plain() const { return !grade && !weight; }

  // Throws Error(malformed_input) when grade/weight/exact are combined illegally.
  void validate() const;

  bool operator==(const ModalDescriptor& o) const {
    return direction == o.direction && base == o.base && style == o.style && grade == o.grade &&
           weight == o.weight && exact == o.exact;
  }
  bool operator!=(const ModalDescriptor& o) const { return !(*this == o); }
};

struct Atom {
  std::string name;
  Sort sort = Sort::s1;
  bool operator<(const Atom& o) const {
    return name != o.name ? name < o.name : sort < o.sort;
  }
  bool operator==(const Atom& o) const { return name == o.name && sort == o.sort; }
};

enum class NodeKind : unsigned char {
  atom,
  top,
  bottom,
  negation,
  conjunction,
  disjunction,
  implication,
  biconditional,
  modal,
};

struct FormulaNode;

// Immutable, well-sorted formula. All factories check sorts and throw
// Error(sort) on mismatch.
class Formula {
 public:
  static Formula atom(std::string name, Sort sort);
  static Formula top(Sort sort);
  static Formula bottom(Sort sort);
  static Formula negation(const Formula& f);
  static Formula conjunction(const Formula& a, const Formula& b);
  static Formula disjunction(const Formula& a, const Formula& b);
  static Formula implication(const Formula& a, const Formula& b);
  static Formula biconditional(const Formula& a, const Formula& b);
  static Formula modal(const ModalDescriptor& d, const Formula& f);
  static Formula binary(NodeKind kind, const Formula& a, const Formula& b);

  NodeKind kind() const;
  Sort sort() const;
  const std::string& name() const;           // atoms only
  const Formula& child() const;              // negation and modal
  const Formula& left() const;               // binary connectives
  const Formula& right() const;
  const ModalDescriptor& modality() const;   // modal only
  Atom as_atom() const { return {name(), sort()}; }

  bool is_binary() const;
  std::size_t depth() const;
  std::size_t size() const;

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaNode {
  NodeKind kind;
  Sort sort;
  std::string name;
  std::vector<Formula> children;
  ModalDescriptor modality;
};

Sort sort_of(const Formula& f);

// Collects the atoms occurring in f.
std::set<Atom> atoms_of(const Formula& f);
void collect_atoms(const Formula& f, std::set<Atom>& out);

bool has_modality(const Formula& f);
bool uses_weights(const Formula& f);
bool uses_grades(const Formula& f);

// Canonical concrete syntax; parse(print(f)) == f.
std::string print(const Formula& f);
std::string print(const ModalDescriptor& d);

using SortEnv = std::map<std::string, Sort>;

// Parses the ASCII grammar documented in docs/grammar.md. Syntax errors carry
// the byte offset; sort errors name the offending subterm.
Formula parse(const std::string& text, const SortEnv& env = {});

// Removes defined operators: diamonds and window duals become negated boxes
// and windows, overlined ungraded/graded operators are rewritten over the
// base relation, exact-count diamonds are expanded. Weighted overlined boxes
// and windows are primitive and stay.
Formula desugar(const Formula& f);

// Window-only formulas to box-only formulas over the complemented context.
Formula translate_rho(const Formula& f);

// Every modality gains weight 1. Input must be grade- and weight-free.
Formula translate_tau(const Formula& f);

// Convenience builders for the modal operators.
ModalDescriptor modal_op(Direction d, Style s, Base b = Base::incidence);
Formula box(Direction d, const Formula& f);
Formula diamond(Direction d, const Formula& f);
Formula window(Direction d, const Formula& f);
Formula window_dual(Direction d, const Formula& f);
// N_d(f, g) := box_d f & window_d ~g ;  [U_d] f := N_d(f, f)
Formula n_operator(Direction d, const Formula& f, const Formula& g);
Formula universal(Direction d, const Formula& f);

}  // namespace ctxlogic
