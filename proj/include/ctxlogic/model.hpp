#pragma once

#include "ctxlogic/context.hpp"
#include "ctxlogic/formula.hpp"

#include <map>
#include <string>
#include <vector>

namespace ctxlogic {

// Atom -> subset of the atom's universe.
using Valuation = std::map<Atom, Bitset>;

struct ContextModel {
  FormalContext context;
  Valuation valuation;
};

// Universes G, M with two relations I and J. Built through `make`, which
// enforces I u J = G x M, or `make_partial`, which records whether totality
// holds without rejecting (used for submodel construction diagnostics).
class GeneralizedModel {
 public:
  GeneralizedModel() = default;

  static GeneralizedModel make(FormalContext i_context, Relation j, Valuation v);
  static GeneralizedModel make_partial(FormalContext i_context, Relation j, Valuation v);
  // The context-based model seen as a generalized one (J = complement of I).
  static GeneralizedModel from_context_model(const ContextModel& m);

  const FormalContext& context() const { return context_; }
  const std::vector<std::string>& objects() const { return context_.objects(); }
  const std::vector<std::string>& attributes() const { return context_.attributes(); }
  const Relation& i() const { return context_.incidence(); }
  const Relation& j() const { return j_; }
  const Valuation& valuation() const { return valuation_; }
  std::size_t num_objects() const { return context_.num_objects(); }
  std::size_t num_attributes() const { return context_.num_attributes(); }

  bool total() const { return total_; }
  // I and J are disjoint, i.e. J is the complement of I when total.
  bool disjoint() const;

 private:
  FormalContext context_;
  Relation j_;
  Valuation valuation_;
  bool total_ = false;
};

// Throws Error(malformed_input) if a valuation entry has the wrong size.
void check_valuation(const Valuation& v, std::size_t num_objects, std::size_t num_attributes);

// Valuation from atom -> ids.
Valuation make_valuation(const FormalContext& k, const std::map<Atom, std::vector<std::string>>& ids);

}  // namespace ctxlogic
