#pragma once

// Model-level constructions: complemented models, the window-to-box
// correspondence check, the disjoint-copy construction, bounded morphisms
// and generated submodels.

#include "ctxlogic/model.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ctxlogic {

// Suffix marking the primed copy of an id.
inline constexpr char kPrimeMarker = '\'';

// f_s1 maps source objects to target objects, f_s2 attributes to attributes.
struct TwoSortedMap {
  std::vector<std::size_t> f_s1;
  std::vector<std::size_t> f_s2;
};

// Same universes and valuation, complemented incidence.
ContextModel complement_model(const ContextModel& m);

// truth_set(m, f) equals truth_set(complement_model(m), translate_rho(f)).
// f must be window-only (translate_rho's precondition).
bool rho_correspondence_check(const ContextModel& m, const Formula& f);

struct DisjointCopy {
  GeneralizedModel model;  // universes G ∪ G', M ∪ M' (primed ids appended)
  TwoSortedMap fold;       // g, g' ↦ g and m, m' ↦ m
};

// Doubles the universes and splits every cell of I ∩ J across the copies so
// that the result has disjoint I and J and is total:
//   I ∩ J at (g,m): I(g,m'), I(g',m), J(g,m), J(g',m')
//   I only:         I on all four copies
//   J only:         J on all four copies
// Throws Error(malformed_input) if an id already ends in the prime marker or
// the input is not total.
DisjointCopy disjointify(const GeneralizedModel& g);

struct MorphismCheck {
  bool ok = true;
  // "map", "atoms", "forth", "back (objects)", "back (attributes)"
  std::string condition;
  std::string detail;
};

// Atom agreement, forth for I and J, and back from both sorts: if
// R'(f(g), m') some m with f(m) = m' has R(g, m), and if R'(g', f(m)) some g
// with f(g) = g' has R(g, m). Atoms missing from a valuation are empty.
MorphismCheck is_bounded_morphism(const TwoSortedMap& f, const GeneralizedModel& src, const GeneralizedModel& dst);

bool is_surjective(const TwoSortedMap& f, const GeneralizedModel& dst);

// First formula and world where src,w ⊨ φ and dst,f(w) ⊨ φ differ, as a
// readable message; nullopt when all agree.
std::optional<std::string> first_invariance_failure(const TwoSortedMap& f, const GeneralizedModel& src,
                                                    const GeneralizedModel& dst,
                                                    const std::vector<Formula>& formulas);

struct Submodel {
  GeneralizedModel model;               // built with make_partial
  std::vector<std::size_t> objects;     // source indices kept, ascending
  std::vector<std::size_t> attributes;
  bool total = true;                    // I ∪ J covers the kept rectangle
  std::optional<std::pair<std::size_t, std::size_t>> first_gap;  // source indices
};

// Attributes reachable from w by alternating I ∪ J steps, the objects related
// to them, and w itself. On a total model with non-empty universes this is the
// whole model; on a partial one the kept rectangle need not be covered, which
// is reported in `total` and `first_gap`.
Submodel generated_submodel(const GeneralizedModel& g, World w);

// Random ungraded, unweighted formulas of depth at most `max_depth` over
// atoms p,q,r@1 and a,b,c@2, using every modality style and both bases.
std::vector<Formula> fuzz_suite(std::uint64_t seed, std::size_t count = 50, std::size_t max_depth = 4);

}  // namespace ctxlogic
