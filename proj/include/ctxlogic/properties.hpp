#pragma once

// Relation classes expressed with graded formulas, and weighted-logic
// experiments: explicit counter-models for laws that fail under weights and
// a sweep of the laws that survive.

#include "ctxlogic/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ctxlogic {

// Flags of I (or its complement) read as a relation from G to M. injective,
// surjective and bijective are properties of functions, so each implies
// `function`.
struct RelationClass {
  bool partial_function = false;
  bool function = false;
  bool injective = false;
  bool surjective = false;
  bool bijective = false;

  std::vector<std::string> names() const;
};

RelationClass relation_class(const FormalContext& k, Base base);

struct ClauseResult {
  std::string clause;                 // "a (I)", "a (I-bar)", ..., "c", ..., "h"
  std::vector<std::string> formulas;  // printed graded formulas, all globally required
  bool lhs = false;                   // relation_class says so
  bool rhs = false;                   // every formula holds at every world of its sort
  bool agree = false;
  std::optional<std::string> witness;  // first world falsifying a formula, when rhs is false
};

// Ten entries in clause order. The formulas are atom-free, so global truth in
// a model is truth on the context.
std::vector<ClauseResult> graded_characterization_check(const FormalContext& k);

enum class CounterexampleKind {
  box_dia_U,     // p -> <p>=c>[o>=d] p  and  q -> [p>=c]<o>=e> q; c,d in (0,1], e in [0,1)
  contingency,   // [[o>=c]](p & ~q) -> ([[o>=d]] ~p -> [[o>=e]] ~q); c,d in [0,1), e in (0,1]
  nested_box,    // p -> [[p>=c]][[o>=d]] p; c in (0,1], d in (0,1)
  definability,  // one of four window/overlined-box biconditionals; (c,d) not (0,0) or (1,1)
};

std::string to_string(CounterexampleKind k);
CounterexampleKind parse_counterexample_kind(const std::string& s);

struct WeightedParams {
  Rational c{0};
  Rational d{0};
  Rational e{0};
  // definability only: 0 [[o>=c]]f <-> [-o>=d]~f, 1 the p-version,
  // 2 [[-o>=c]]f <-> [o>=d]~f, 3 the p-version.
  int variant = 0;
  long long search_bound = 8;  // definability only: largest cell count tried
};

struct FalsifiedTarget {
  Formula formula;
  World world;
};

struct WeightedCounterexample {
  CounterexampleKind kind;
  ContextModel model;
  std::vector<FalsifiedTarget> targets;
  std::string construction;  // sizes and counts chosen
};

// Builds the counter-model with the smallest sizes the construction allows
// and asserts that every target is false at its world (Error(invariant)
// otherwise). Throws Error(range) for parameters outside the kind's range and
// Error(budget_exceeded) when the definability search finds nothing within
// the bound.
WeightedCounterexample weighted_counterexample(CounterexampleKind kind, const WeightedParams& params);

struct LawTally {
  std::string law;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> examples;  // at most five
};

struct WeightedSuiteReport {
  std::vector<LawTally> laws;
  bool ok() const;
};

// On each context model and formula: c >= d monotonicity for every box-style
// weighted operator, the weight-1 antitone rule for windows, the weight-1
// box/window dualities, agreement with the weight-1 embedding, validity of
// weight-0 boxes and windows, and the graded/weighted bridge at every world
// whose neighbourhood has at least n elements. Formulas must be grade- and
// weight-free and their atoms covered by every valuation. Throws Error(range)
// unless 0 <= d <= c <= 1.
WeightedSuiteReport weighted_validity_suite(const std::vector<ContextModel>& models,
                                            const std::vector<Formula>& formulas, const Rational& c,
                                            const Rational& d);

}  // namespace ctxlogic
