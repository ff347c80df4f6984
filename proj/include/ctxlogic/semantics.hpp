#pragma once

#include "ctxlogic/model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ctxlogic {

// Set of worlds of sort_of(f) satisfying f. On a ContextModel the window
// relation is the complement of I. Weighted modalities require I and J to be
// disjoint; otherwise Error(unsupported) is thrown.
SortedSet truth_set(const ContextModel& m, const Formula& f);
SortedSet truth_set(const GeneralizedModel& m, const Formula& f);

// Throws Error(sort) if the world's sort differs from the formula's.
bool satisfies(const ContextModel& m, World w, const Formula& f);
bool satisfies(const GeneralizedModel& m, World w, const Formula& f);

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

struct ValidityResult {
  enum class Status { valid, invalid, budget_exceeded };
  Status status = Status::valid;
  std::uint64_t valuations_checked = 0;
  // First falsifying valuation and world in enumeration order, when invalid.
  std::optional<Valuation> countervaluation;
  std::optional<World> counterworld;

  bool valid() const { return status == Status::valid; }
};

// Atoms are enumerated in lexicographic order; the first atom's subset is the
// least significant digit and each subset is read as a binary number with
// element i at bit i.
ValidityResult frame_valid(const FormalContext& k, const Formula& f, std::uint64_t budget = kDefaultBudget);

// Every world (of the common sort) satisfying all premises satisfies f, under
// every valuation.
ValidityResult local_consequence(const FormalContext& k, const std::vector<Formula>& premises, const Formula& f,
                                 std::uint64_t budget = kDefaultBudget);

// Number of valuations frame_valid would enumerate, or nullopt if it
// overflows 64 bits.
std::optional<std::uint64_t> valuation_count(const FormalContext& k, const std::vector<Formula>& formulas);

}  // namespace ctxlogic
