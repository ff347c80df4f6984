#pragma once

// Shared fixtures and seeded generators for the test binaries.

#include "ctxlogic/context.hpp"
#include "ctxlogic/formula.hpp"
#include "ctxlogic/model.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace testkit {

using namespace ctxlogic;

inline std::vector<std::string> ids(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// G = {g1,g2}, M = {m1,m2}, I = {(g1,m1),(g1,m2),(g2,m2)}.
inline FormalContext k2() {
  return FormalContext(ids("g", 2), ids("m", 2), {{"g1", "m1"}, {"g1", "m2"}, {"g2", "m2"}});
}

// K2 with v(p@1) = {g1}.
inline ContextModel k2_model() {
  FormalContext k = k2();
  Valuation v = make_valuation(k, {{Atom{"p", Sort::s1}, {"g1"}}});
  return {k, v};
}

// Context with |G| = g, |M| = m whose incidence bits are the digits of `code`
// (cell (i, j) is bit i * m + j).
inline FormalContext context_from_code(std::size_t g, std::size_t m, std::uint64_t code) {
  Relation r(g, m);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if ((code >> (i * m + j)) & 1U) r.set(i, j);
  return FormalContext(ids("g", g), ids("m", m), r);
}

// Calls fn on every context with 1 <= |G|, |M| <= max_side (and optionally the
// empty universes).
inline void for_all_contexts(std::size_t max_side, const std::function<void(const FormalContext&)>& fn,
                             bool include_empty = false) {
  const std::size_t lo = include_empty ? 0 : 1;
  for (std::size_t g = lo; g <= max_side; ++g)
    for (std::size_t m = lo; m <= max_side; ++m) {
      const std::uint64_t cells = g * m;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) fn(context_from_code(g, m, code));
    }
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return n == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64& engine() { return rng_; }

  Bitset subset(std::size_t n, double p = 0.5) {
    Bitset b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = coin(p);
    return b;
  }

  Relation relation(std::size_t g, std::size_t m, double p = 0.5) {
    Relation r(g, m);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (coin(p)) r.set(i, j);
    return r;
  }

  FormalContext context(std::size_t g, std::size_t m, double p = 0.5) {
    return FormalContext(ids("g", g), ids("m", m), relation(g, m, p));
  }

  Valuation valuation(std::size_t g, std::size_t m, const std::vector<Atom>& atoms) {
    Valuation v;
    for (const auto& a : atoms) v[a] = subset(a.sort == Sort::s1 ? g : m);
    return v;
  }

  ContextModel context_model(std::size_t g, std::size_t m, const std::vector<Atom>& atoms) {
    FormalContext k = context(g, m);
    return {k, valuation(g, m, atoms)};
  }

  // Every cell is in I only, J only, or both.
  GeneralizedModel generalized_model(std::size_t g, std::size_t m, const std::vector<Atom>& atoms,
                                     double overlap = 0.3) {
    Relation i(g, m), j(g, m);
    for (std::size_t a = 0; a < g; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        if (coin(overlap)) {
          i.set(a, b);
          j.set(a, b);
        } else if (coin()) {
          i.set(a, b);
        } else {
          j.set(a, b);
        }
      }
    return GeneralizedModel::make(FormalContext(ids("g", g), ids("m", m), i), j, valuation(g, m, atoms));
  }

  Rational weight(long long max_den = 6) {
    long long den = static_cast<long long>(between(1, static_cast<std::size_t>(max_den)));
    long long num = static_cast<long long>(between(0, static_cast<std::size_t>(den)));
    return Rational(num, den);
  }

  struct FormulaOptions {
    std::size_t max_depth = 4;
    std::vector<Atom> atoms = default_atoms();
    bool boxes = true;          // box / diamond
    bool windows = true;        // window / window dual
    bool overlines = true;
    bool grades = false;
    bool weights = false;
    bool only_primitive_styles = false;  // box and window only
  };

  static std::vector<Atom> default_atoms() {
    return {{"p", Sort::s1}, {"q", Sort::s1}, {"r", Sort::s1}, {"a", Sort::s2}, {"b", Sort::s2}, {"c", Sort::s2}};
  }

  Formula formula(Sort sort, const FormulaOptions& opt) { return formula(sort, opt, opt.max_depth); }

 private:
  Formula leaf(Sort sort, const FormulaOptions& opt) {
    std::vector<Atom> pool;
    for (const auto& a : opt.atoms)
      if (a.sort == sort) pool.push_back(a);
    std::size_t roll = below(10);
    if (roll == 0) return Formula::top(sort);
    if (roll == 1) return Formula::bottom(sort);
    if (pool.empty()) return coin() ? Formula::top(sort) : Formula::bottom(sort);
    const Atom& a = pool[below(pool.size())];
    return Formula::atom(a.name, a.sort);
  }

  ModalDescriptor modality(Sort out_sort, const FormulaOptions& opt) {
    ModalDescriptor d;
    d.direction = out_sort == Sort::s2 ? Direction::o : Direction::p;
    std::vector<Style> styles;
    if (opt.boxes) {
      styles.push_back(Style::box);
      if (!opt.only_primitive_styles) styles.push_back(Style::diamond);
    }
    if (opt.windows) {
      styles.push_back(Style::window);
      if (!opt.only_primitive_styles) styles.push_back(Style::window_dual);
    }
    d.style = styles[below(styles.size())];
    d.base = opt.overlines && coin(0.3) ? Base::complement : Base::incidence;
    std::size_t extra = below(3);
    if (opt.grades && extra == 1) {
      d.grade = static_cast<unsigned>(below(3));
      if (d.style == Style::diamond && *d.grade >= 1 && coin(0.3)) d.exact = true;
    } else if (opt.weights && extra == 2) {
      d.weight = weight();
    }
    return d;
  }

  Formula formula(Sort sort, const FormulaOptions& opt, std::size_t depth) {
    if (depth == 0 || coin(0.25)) return leaf(sort, opt);
    const bool modal_ok = opt.boxes || opt.windows;
    std::size_t roll = below(modal_ok ? 7 : 5);
    switch (roll) {
      case 0: return Formula::negation(formula(sort, opt, depth - 1));
      case 1: return Formula::conjunction(formula(sort, opt, depth - 1), formula(sort, opt, depth - 1));
      case 2: return Formula::disjunction(formula(sort, opt, depth - 1), formula(sort, opt, depth - 1));
      case 3: return Formula::implication(formula(sort, opt, depth - 1), formula(sort, opt, depth - 1));
      case 4: return Formula::biconditional(formula(sort, opt, depth - 1), formula(sort, opt, depth - 1));
      default: {
        ModalDescriptor d = modality(sort, opt);
        return Formula::modal(d, formula(d.input_sort(), opt, depth - 1));
      }
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace testkit
