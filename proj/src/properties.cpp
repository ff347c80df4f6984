#include "ctxlogic/properties.hpp"

#include "ctxlogic/error.hpp"
#include "ctxlogic/semantics.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace ctxlogic {

// ---------------------------------------------------------------- relation classes

std::vector<std::string> RelationClass::names() const {
  std::vector<std::string> out;
  if (partial_function) out.emplace_back("partial_function");
  if (function) out.emplace_back("function");
  if (injective) out.emplace_back("injective");
  if (surjective) out.emplace_back("surjective");
  if (bijective) out.emplace_back("bijective");
  return out;
}

RelationClass relation_class(const FormalContext& k, Base base) {
  const Relation r = base == Base::incidence ? k.incidence() : k.incidence().complement();
  bool rows_at_most_one = true, rows_exactly_one = true;
  for (const auto& row : r.rows_view()) {
    rows_at_most_one = rows_at_most_one && row.count() <= 1;
    rows_exactly_one = rows_exactly_one && row.count() == 1;
  }
  bool cols_at_most_one = true, cols_at_least_one = true;
  for (const auto& col : r.cols_view()) {
    cols_at_most_one = cols_at_most_one && col.count() <= 1;
    cols_at_least_one = cols_at_least_one && col.count() >= 1;
  }
  RelationClass out;
  out.partial_function = rows_at_most_one;
  out.function = rows_exactly_one;
  out.injective = out.function && cols_at_most_one;
  out.surjective = out.function && cols_at_least_one;
  out.bijective = out.injective && out.surjective;
  return out;
}

namespace {

struct Clause {
  const char* label;
  Base base;
  bool RelationClass::*flag;
  std::vector<const char*> formulas;
};

const std::vector<Clause>& clauses() {
  static const std::vector<Clause> list = {
      {"a (I)", Base::incidence, &RelationClass::partial_function, {"~<p:1> true@2"}},
      {"a (I-bar)", Base::complement, &RelationClass::partial_function, {"~<-p:1> true@2"}},
      {"b (I)", Base::incidence, &RelationClass::function, {"<p:1!> true@2"}},
      {"b (I-bar)", Base::complement, &RelationClass::function, {"<-p:1!> true@2"}},
      {"c", Base::incidence, &RelationClass::injective, {"<p:1!> true@2", "~<o:1> true@1"}},
      {"d", Base::complement, &RelationClass::injective, {"<-p:1!> true@2", "~<-o:1> true@1"}},
      {"e", Base::incidence, &RelationClass::surjective, {"<p:1!> true@2", "<o:0> true@1"}},
      {"f", Base::complement, &RelationClass::surjective, {"<-p:1!> true@2", "<-o:0> true@1"}},
      {"g", Base::incidence, &RelationClass::bijective, {"<o:1!> true@1", "<p:1!> true@2"}},
      {"h", Base::complement, &RelationClass::bijective, {"<-o:1!> true@1", "<-p:1!> true@2"}},
  };
  return list;
}

}  // namespace

std::vector<ClauseResult> graded_characterization_check(const FormalContext& k) {
  const ContextModel m{k, {}};
  const RelationClass plain = relation_class(k, Base::incidence);
  const RelationClass bar = relation_class(k, Base::complement);
  std::vector<ClauseResult> out;
  for (const auto& c : clauses()) {
    ClauseResult r;
    r.clause = c.label;
    r.lhs = (c.base == Base::incidence ? plain : bar).*c.flag;
    r.rhs = true;
    for (const char* text : c.formulas) {
      const Formula f = parse(text);
      r.formulas.push_back(print(f));
      if (!r.rhs) continue;
      const Bitset t = truth_set(m, f).members;
      const auto first = t.size() == 0 ? Bitset::npos : (~t).find_first();
      if (first != Bitset::npos) {
        r.rhs = false;
        const auto& names = f.sort() == Sort::s1 ? k.objects() : k.attributes();
        r.witness = names[first] + " falsifies " + print(f);
      }
    }
    r.agree = r.lhs == r.rhs;
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------- counter-models

std::string to_string(CounterexampleKind k) {
  switch (k) {
    case CounterexampleKind::box_dia_U: return "box_dia_U";
    case CounterexampleKind::contingency: return "contingency";
    case CounterexampleKind::nested_box: return "nested_box";
    case CounterexampleKind::definability: return "definability";
  }
  return "?";
}

CounterexampleKind parse_counterexample_kind(const std::string& s) {
  for (auto k : {CounterexampleKind::box_dia_U, CounterexampleKind::contingency, CounterexampleKind::nested_box,
                 CounterexampleKind::definability})
    if (to_string(k) == s) return k;
  throw Error(ErrorKind::malformed_input, "unknown counterexample kind '" + s + "'");
}

namespace {

Formula weighted(Direction d, Style s, Base b, const Rational& w, const Formula& f) {
  ModalDescriptor m = modal_op(d, s, b);
  m.weight = w;
  return Formula::modal(m, f);
}

Formula graded(Direction d, Base b, unsigned n, const Formula& f) {
  ModalDescriptor m = modal_op(d, Style::box, b);
  m.grade = n;
  return Formula::modal(m, f);
}

long long ceil_of(const Rational& r) { return (r.numerator() + r.denominator() - 1) / r.denominator(); }
long long floor_of(const Rational& r) { return r.numerator() / r.denominator(); }

// Open/closed interval membership on [0,1].
void require_in(const char* name, const Rational& x, bool lo_open, bool hi_open) {
  const bool ok = (lo_open ? x > 0 : x >= 0) && (hi_open ? x < 1 : x <= 1);
  if (!ok) {
    std::string range = std::string(lo_open ? "(" : "[") + "0,1" + (hi_open ? ")" : "]");
    throw Error(ErrorKind::range, std::string(name) + " = " + to_string(x) + " is outside " + range);
  }
}

std::vector<std::string> numbered(const char* prefix, std::size_t from, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(from + i));
  return out;
}

WeightedCounterexample box_dia_u(const WeightedParams& p) {
  require_in("c", p.c, true, false);
  require_in("d", p.d, true, false);
  require_in("e", p.e, false, true);
  // n >= 1/(1-e) keeps 1/n <= 1-e; n >= 1 + 1/d keeps 1/n < d.
  const long long n = std::max(ceil_of(Rational(1) / (Rational(1) - p.e)), ceil_of(Rational(1) + Rational(1) / p.d));
  const auto objects = numbered("g", 0, static_cast<std::size_t>(n));
  Relation full(objects.size(), 1);
  for (std::size_t g = 0; g < objects.size(); ++g) full.set(g, 0);
  FormalContext k(objects, {"m0"}, full);
  Valuation v = make_valuation(k, {{Atom{"p", Sort::s1}, {"g0"}}, {Atom{"q", Sort::s1}, {"g0"}}});

  const Formula pf = Formula::atom("p", Sort::s1), qf = Formula::atom("q", Sort::s1);
  const Formula first = Formula::implication(
      pf, weighted(Direction::p, Style::diamond, Base::incidence, p.c,
                   weighted(Direction::o, Style::box, Base::incidence, p.d, pf)));
  const Formula second = Formula::implication(
      qf, weighted(Direction::p, Style::box, Base::incidence, p.c,
                   weighted(Direction::o, Style::diamond, Base::incidence, p.e, qf)));
  std::ostringstream why;
  why << "|G| = " << n << " with I = G x {m0} and v(p) = v(q) = {g0}";
  return {CounterexampleKind::box_dia_U, {k, v}, {{first, {Sort::s1, 0}}, {second, {Sort::s1, 0}}}, why.str()};
}

WeightedCounterexample contingency(const WeightedParams& p) {
  require_in("c", p.c, false, true);
  require_in("d", p.d, false, true);
  require_in("e", p.e, true, false);
  // 1/(1+k4) < e and k3/(k3+k4) >= d.
  const long long k4 = floor_of(Rational(1) / p.e - Rational(1)) + 1;
  const long long k3 = ceil_of(Rational(k4) * p.d / (Rational(1) - p.d));
  const long long k1 = 0, k2 = 0;

  // Object groups: (in I, p, q) with their counts.
  struct Group {
    long long count;
    bool in_i, p, q;
  };
  const std::array<Group, 5> groups{{{k1, true, true, true},
                                     {1, true, true, false},
                                     {k3, true, false, true},
                                     {k2, false, true, true},
                                     {k4, false, false, false}}};
  std::vector<std::string> objects;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> p_true, q_true;
  for (const auto& g : groups)
    for (long long i = 0; i < g.count; ++i) {
      const std::string id = "g" + std::to_string(objects.size());
      objects.push_back(id);
      if (g.in_i) pairs.emplace_back(id, "m0");
      if (g.p) p_true.push_back(id);
      if (g.q) q_true.push_back(id);
    }
  FormalContext k(objects, {"m0"}, pairs);
  Valuation v = make_valuation(k, {{Atom{"p", Sort::s1}, p_true}, {Atom{"q", Sort::s1}, q_true}});

  const Formula pf = Formula::atom("p", Sort::s1), qf = Formula::atom("q", Sort::s1);
  auto win = [](const Rational& w, const Formula& f) {
    return weighted(Direction::o, Style::window, Base::incidence, w, f);
  };
  const Formula target = Formula::implication(
      win(p.c, Formula::conjunction(pf, Formula::negation(qf))),
      Formula::implication(win(p.d, Formula::negation(pf)), win(p.e, Formula::negation(qf))));
  std::ostringstream why;
  why << "k1 = " << k1 << ", k2 = " << k2 << ", k3 = " << k3 << ", k4 = " << k4
      << "; one I-object with p and not q";
  return {CounterexampleKind::contingency, {k, v}, {{target, {Sort::s2, 0}}}, why.str()};
}

WeightedCounterexample nested_box(const WeightedParams& p) {
  require_in("c", p.c, true, false);
  require_in("d", p.d, true, true);
  // 1/n < d makes m0 fail the inner window; (n-1)/n >= d lets m1 satisfy it,
  // so the outer denominator is not empty.
  const long long n = std::max(floor_of(Rational(1) / p.d) + 1, ceil_of(Rational(1) / (Rational(1) - p.d)));
  const auto objects = numbered("g", 0, static_cast<std::size_t>(n) + 1);
  std::vector<std::pair<std::string, std::string>> pairs{{"g0", "m0"}, {"g1", "m0"}};
  std::vector<std::string> p_true{"g0"};
  for (std::size_t g = 1; g < objects.size(); ++g) pairs.emplace_back(objects[g], "m1");
  for (std::size_t g = 2; g < objects.size(); ++g) p_true.push_back(objects[g]);
  FormalContext k(objects, {"m0", "m1"}, pairs);
  Valuation v = make_valuation(k, {{Atom{"p", Sort::s1}, p_true}});

  const Formula pf = Formula::atom("p", Sort::s1);
  const Formula target = Formula::implication(
      pf, weighted(Direction::p, Style::window, Base::incidence, p.c,
                   weighted(Direction::o, Style::window, Base::incidence, p.d, pf)));
  std::ostringstream why;
  why << "|G| = " << n + 1 << ", v(p) = G \\ {g1}, I(g0) = {m0}, I(m0) = {g0,g1}, I(m1) = G \\ {g0}";
  return {CounterexampleKind::nested_box, {k, v}, {{target, {Sort::s1, 0}}}, why.str()};
}

// Both sides of a definability biconditional from the four cell counts
// k1 = |I ∩ f|, k2 = |I \ f|, k3 = |I-bar ∩ f|, k4 = |I-bar \ f|, with the
// vacuous reading of an empty denominator.
std::pair<bool, bool> definability_sides(int variant, const std::array<long long, 4>& k, const Rational& c,
                                         const Rational& d) {
  auto at_least = [](long long num, long long den, const Rational& w) {
    return den == 0 || ratio_at_least(num, den, w);
  };
  if (variant < 2) return {at_least(k[0], k[0] + k[2], c), at_least(k[3], k[2] + k[3], d)};
  return {at_least(k[2], k[0] + k[2], c), at_least(k[1], k[0] + k[1], d)};
}

WeightedCounterexample definability(const WeightedParams& p) {
  require_in("c", p.c, false, false);
  require_in("d", p.d, false, false);
  if (p.variant < 0 || p.variant > 3) throw Error(ErrorKind::range, "definability variant must be 0..3");
  if (p.c == p.d && (p.c == Rational(0) || p.c == Rational(1)))
    throw Error(ErrorKind::range, "c = d = " + to_string(p.c) + " is an exceptional case where the equivalence holds");
  if (p.search_bound < 0) throw Error(ErrorKind::range, "search bound must be non-negative");

  // Smallest total first, then lexicographic.
  const long long b = p.search_bound;
  std::optional<std::array<long long, 4>> found;
  for (long long total = 0; total <= 4 * b && !found; ++total)
    for (long long k1 = 0; k1 <= std::min(b, total) && !found; ++k1)
      for (long long k2 = 0; k2 <= std::min(b, total - k1) && !found; ++k2)
        for (long long k3 = 0; k3 <= std::min(b, total - k1 - k2) && !found; ++k3) {
          const long long k4 = total - k1 - k2 - k3;
          if (k4 > b) continue;
          const std::array<long long, 4> k{k1, k2, k3, k4};
          auto [l, r] = definability_sides(p.variant, k, p.c, p.d);
          if (l != r) found = k;
        }
  if (!found)
    throw Error(ErrorKind::budget_exceeded,
                "no falsifying contingency table with cell counts <= " + std::to_string(b));

  // The counted worlds live on the input sort, the evaluation world on the other.
  const Direction dir = p.variant % 2 == 0 ? Direction::o : Direction::p;
  const Sort cells = dir == Direction::o ? Sort::s1 : Sort::s2;
  std::vector<std::string> counted, center{dir == Direction::o ? "m0" : "g0"};
  std::vector<std::string> in_i, in_f;
  for (int group = 0; group < 4; ++group)
    for (long long i = 0; i < (*found)[group]; ++i) {
      const std::string id = (cells == Sort::s1 ? "g" : "m") + std::to_string(counted.size() + 1);
      counted.push_back(id);
      if (group < 2) in_i.push_back(id);
      if (group % 2 == 0) in_f.push_back(id);
    }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& id : in_i) pairs.push_back(cells == Sort::s1 ? std::make_pair(id, center[0]) : std::make_pair(center[0], id));
  FormalContext k = cells == Sort::s1 ? FormalContext(counted, center, pairs) : FormalContext(center, counted, pairs);
  const Atom atom{cells == Sort::s1 ? "p" : "a", cells};
  Valuation v = make_valuation(k, {{atom, in_f}});

  const Formula f = Formula::atom(atom.name, atom.sort);
  const Base lhs_base = p.variant < 2 ? Base::incidence : Base::complement;
  const Base rhs_base = p.variant < 2 ? Base::complement : Base::incidence;
  const Formula target = Formula::biconditional(weighted(dir, Style::window, lhs_base, p.c, f),
                                                weighted(dir, Style::box, rhs_base, p.d, Formula::negation(f)));
  std::ostringstream why;
  why << "k1 = " << (*found)[0] << ", k2 = " << (*found)[1] << ", k3 = " << (*found)[2] << ", k4 = " << (*found)[3];
  return {CounterexampleKind::definability, {k, v}, {{target, {other(cells), 0}}}, why.str()};
}

}  // namespace

WeightedCounterexample weighted_counterexample(CounterexampleKind kind, const WeightedParams& params) {
  WeightedCounterexample out = [&] {
    switch (kind) {
      case CounterexampleKind::box_dia_U: return box_dia_u(params);
      case CounterexampleKind::contingency: return contingency(params);
      case CounterexampleKind::nested_box: return nested_box(params);
      case CounterexampleKind::definability: return definability(params);
    }
    throw Error(ErrorKind::malformed_input, "unknown counterexample kind");
  }();
  for (const auto& t : out.targets)
    if (satisfies(out.model, t.world, t.formula))
      throw Error(ErrorKind::invariant, "constructed model satisfies " + print(t.formula) + " (" + out.construction + ")");
  return out;
}

// ---------------------------------------------------------------- positive laws

bool WeightedSuiteReport::ok() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawTally& t) { return t.failures == 0; });
}

namespace {

class Tallies {
 public:
  Tallies() {
    for (const char* law : {"monotonicity", "weight-1 antitone", "weight-1 duality", "embedding agreement",
                            "weight-0 validity", "graded-weighted bridge"})
      report_.laws.push_back({law, 0, 0, {}});
  }

  void check(std::size_t law, bool ok, const std::string& what) {
    LawTally& t = report_.laws[law];
    ++t.checks;
    if (ok) return;
    ++t.failures;
    if (t.examples.size() < 5) t.examples.push_back(what);
  }

  WeightedSuiteReport take() { return std::move(report_); }

 private:
  WeightedSuiteReport report_;
};

enum Law : std::size_t { kMonotone, kAntitone, kDuality, kEmbedding, kWeightZero, kBridge };

// Truth set of op(f), evaluated by substituting f's truth set for a fresh atom.
class ArgumentModel {
 public:
  ArgumentModel(const ContextModel& m, const Bitset& s, Sort sort) : model_(m) {
    name_ = "arg";
    while (model_.valuation.count(Atom{name_, sort})) name_ += "_";
    arg_ = Formula::atom(name_, sort);
    model_.valuation[Atom{name_, sort}] = s;
  }

  const Formula& arg() const { return arg_; }
  Bitset eval(const Formula& f) const { return truth_set(model_, f).members; }

 private:
  ContextModel model_;
  std::string name_;
  Formula arg_ = Formula::top(Sort::s1);
};

std::string at(const ContextModel& m, std::size_t index, const Formula& f) { return print(f) + " on a " +
    std::to_string(m.context.objects().size()) + "x" + std::to_string(m.context.attributes().size()) +
    " model (model " + std::to_string(index) + ")"; }

}  // namespace

WeightedSuiteReport weighted_validity_suite(const std::vector<ContextModel>& models,
                                            const std::vector<Formula>& formulas, const Rational& c,
                                            const Rational& d) {
  if (d < 0 || c > 1 || c < d)
    throw Error(ErrorKind::range, "weights must satisfy 0 <= d <= c <= 1, got c = " + to_string(c) +
                                      ", d = " + to_string(d));
  for (const auto& f : formulas)
    if (uses_grades(f) || uses_weights(f))
      throw Error(ErrorKind::malformed_input, "suite formulas must be grade- and weight-free: " + print(f));

  Tallies tally;
  const Base bases[] = {Base::incidence, Base::complement};
  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    const ContextModel& m = models[mi];
    const Relation inc = m.context.incidence(), comp = inc.complement();
    for (std::size_t fi = 0; fi < formulas.size(); ++fi) {
      const Formula& f = formulas[fi];
      const Sort sort = f.sort();
      const Direction dir = sort == Sort::s1 ? Direction::o : Direction::p;
      const Bitset s = truth_set(m, f).members;
      const ArgumentModel am(m, s, sort);
      const Formula& x = am.arg();
      const std::string where = at(m, mi, f);

      // the next formula of the same sort, for implication pairs
      Formula h = f;
      for (std::size_t step = 1; step < formulas.size(); ++step) {
        const Formula& cand = formulas[(fi + step) % formulas.size()];
        if (cand.sort() == sort) {
          h = cand;
          break;
        }
      }
      const Bitset narrower = s & truth_set(m, h).members;
      const ArgumentModel am_narrow(m, narrower, sort);

      for (Base b : bases) {
        for (Style st : {Style::box, Style::window}) {
          const Bitset hi = am.eval(weighted(dir, st, b, c, x)), lo = am.eval(weighted(dir, st, b, d, x));
          tally.check(kMonotone, hi.is_subset_of(lo), print(weighted(dir, st, b, c, f)) + " vs weight " +
                                                           to_string(d) + ": " + where);
        }
        // f & h entails f, so the weight-1 window of f entails that of f & h
        const Bitset wide = am.eval(weighted(dir, Style::window, b, 1, x));
        const Bitset narrow = am_narrow.eval(weighted(dir, Style::window, b, 1, am_narrow.arg()));
        tally.check(kAntitone, wide.is_subset_of(narrow), "window weight 1 over " + print(h) + ": " + where);

        const Base other_base = b == Base::incidence ? Base::complement : Base::incidence;
        const Bitset lhs = am.eval(weighted(dir, Style::box, b, 1, Formula::negation(x)));
        const Bitset rhs = am.eval(weighted(dir, Style::window, other_base, 1, x));
        tally.check(kDuality, lhs == rhs, "box/window weight 1: " + where);
      }

      const Formula tau = translate_tau(f);
      tally.check(kEmbedding, truth_set(m, tau).members == s, where);

      const ArgumentModel am_tau(m, truth_set(m, tau).members, sort);
      for (Style st : {Style::box, Style::window}) {
        const Bitset zero = am_tau.eval(weighted(dir, st, Base::incidence, 0, am_tau.arg()));
        tally.check(kWeightZero, zero.all() || zero.size() == 0, "weight 0 " + where);
      }

      // graded n against weighted 1 - n/k where k is the neighbourhood size
      for (Base b : bases) {
        const Relation& r = b == Base::incidence ? inc : comp;
        const auto& hoods = dir == Direction::o ? r.cols_view() : r.rows_view();
        std::size_t widest = 0;
        for (const auto& nb : hoods) widest = std::max(widest, nb.count());
        for (std::size_t n = 0; n <= widest; ++n) {
          const Bitset g = am.eval(graded(dir, b, static_cast<unsigned>(n), x));
          for (std::size_t w = 0; w < hoods.size(); ++w) {
            const std::size_t k = hoods[w].count();
            if (k == 0 || k < n) continue;
            const Rational weight = Rational(1) - Rational(static_cast<long long>(n), static_cast<long long>(k));
            const Bitset wt = am.eval(weighted(dir, Style::box, b, weight, x));
            tally.check(kBridge, g.test(w) == wt.test(w),
                        "grade " + std::to_string(n) + " vs weight " + to_string(weight) + " at world " +
                            std::to_string(w) + ": " + where);
          }
        }
      }
    }
  }
  return tally.take();
}

}  // namespace ctxlogic
