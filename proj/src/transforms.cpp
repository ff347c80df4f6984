#include "ctxlogic/transforms.hpp"

#include "ctxlogic/error.hpp"
#include "ctxlogic/semantics.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ctxlogic {

ContextModel complement_model(const ContextModel& m) { return {complement_context(m.context), m.valuation}; }

bool rho_correspondence_check(const ContextModel& m, const Formula& f) {
  return truth_set(m, f) == truth_set(complement_model(m), translate_rho(f));
}

DisjointCopy disjointify(const GeneralizedModel& g) {
  if (!g.total()) throw Error(ErrorKind::malformed_input, "disjointify needs I ∪ J = G × M");
  const std::size_t n = g.num_objects(), k = g.num_attributes();
  std::vector<std::string> objects = g.objects(), attributes = g.attributes();
  for (auto* ids : {&objects, &attributes}) {
    const std::size_t base = ids->size();
    for (std::size_t i = 0; i < base; ++i) {
      if ((*ids)[i].find(kPrimeMarker) != std::string::npos)
        throw Error(ErrorKind::malformed_input, "id '" + (*ids)[i] + "' contains the reserved prime marker");
      ids->push_back((*ids)[i] + kPrimeMarker);
    }
  }
  Relation i(2 * n, 2 * k), j(2 * n, 2 * k);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const bool in_i = g.i().test(a, b), in_j = g.j().test(a, b);
      const std::size_t a2 = a + n, b2 = b + k;
      if (in_i && in_j) {
        i.set(a, b2);
        i.set(a2, b);
        j.set(a, b);
        j.set(a2, b2);
      } else {
        Relation& r = in_i ? i : j;
        r.set(a, b);
        r.set(a, b2);
        r.set(a2, b);
        r.set(a2, b2);
      }
    }
  Valuation v;
  for (const auto& [atom, set] : g.valuation()) {
    Bitset doubled(2 * set.size());
    for (auto x : members(set)) {
      doubled.set(x);
      doubled.set(x + set.size());
    }
    v[atom] = doubled;
  }
  DisjointCopy out;
  out.model = GeneralizedModel::make(FormalContext(objects, attributes, i), j, v);
  for (std::size_t a = 0; a < 2 * n; ++a) out.fold.f_s1.push_back(a % n);
  for (std::size_t b = 0; b < 2 * k; ++b) out.fold.f_s2.push_back(b % k);
  if (!out.model.disjoint()) throw Error(ErrorKind::invariant, "disjoint copy has overlapping relations");
  if (!is_bounded_morphism(out.fold, out.model, g).ok || !is_surjective(out.fold, g))
    throw Error(ErrorKind::invariant, "fold of the disjoint copy is not a surjective bounded morphism");
  return out;
}

MorphismCheck is_bounded_morphism(const TwoSortedMap& f, const GeneralizedModel& src, const GeneralizedModel& dst) {
  auto fail = [](std::string cond, std::string detail) { return MorphismCheck{false, std::move(cond), std::move(detail)}; };
  const std::size_t n = src.num_objects(), k = src.num_attributes();
  if (f.f_s1.size() != n || f.f_s2.size() != k) return fail("map", "map is not total on the source universes");
  for (auto x : f.f_s1)
    if (x >= dst.num_objects()) return fail("map", "object image out of range");
  for (auto x : f.f_s2)
    if (x >= dst.num_attributes()) return fail("map", "attribute image out of range");

  std::set<Atom> atoms;
  for (const auto& kv : src.valuation()) atoms.insert(kv.first);
  for (const auto& kv : dst.valuation()) atoms.insert(kv.first);
  auto holds = [](const GeneralizedModel& m, const Atom& a, std::size_t w) {
    auto it = m.valuation().find(a);
    return it != m.valuation().end() && it->second.test(w);
  };
  for (const auto& a : atoms) {
    const bool objects = a.sort == Sort::s1;
    const auto& names = objects ? src.objects() : src.attributes();
    const auto& map = objects ? f.f_s1 : f.f_s2;
    for (std::size_t w = 0; w < names.size(); ++w)
      if (holds(src, a, w) != holds(dst, a, map[w]))
        return fail("atoms", names[w] + " and its image disagree on " + a.name + "@" + (objects ? "1" : "2"));
  }

  const struct {
    const char* name;
    const Relation& s;
    const Relation& d;
  } relations[] = {{"I", src.i(), dst.i()}, {"J", src.j(), dst.j()}};
  for (const auto& r : relations)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t m = 0; m < k; ++m)
        if (r.s.test(g, m) && !r.d.test(f.f_s1[g], f.f_s2[m]))
          return fail("forth", std::string(r.name) + " holds at (" + src.objects()[g] + ", " + src.attributes()[m] +
                                   ") but not at the image");
  for (const auto& r : relations) {
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t m2 = 0; m2 < dst.num_attributes(); ++m2) {
        if (!r.d.test(f.f_s1[g], m2)) continue;
        bool found = false;
        for (std::size_t m = 0; m < k && !found; ++m) found = f.f_s2[m] == m2 && r.s.test(g, m);
        if (!found)
          return fail("back (objects)", std::string(r.name) + "(" + dst.objects()[f.f_s1[g]] + ", " +
                                            dst.attributes()[m2] + ") has no preimage at " + src.objects()[g]);
      }
    for (std::size_t m = 0; m < k; ++m)
      for (std::size_t g2 = 0; g2 < dst.num_objects(); ++g2) {
        if (!r.d.test(g2, f.f_s2[m])) continue;
        bool found = false;
        for (std::size_t g = 0; g < n && !found; ++g) found = f.f_s1[g] == g2 && r.s.test(g, m);
        if (!found)
          return fail("back (attributes)", std::string(r.name) + "(" + dst.objects()[g2] + ", " +
                                               dst.attributes()[f.f_s2[m]] + ") has no preimage at " +
                                               src.attributes()[m]);
      }
  }
  return {};
}

bool is_surjective(const TwoSortedMap& f, const GeneralizedModel& dst) {
  std::vector<bool> hit_g(dst.num_objects(), false), hit_m(dst.num_attributes(), false);
  for (auto x : f.f_s1)
    if (x < hit_g.size()) hit_g[x] = true;
  for (auto x : f.f_s2)
    if (x < hit_m.size()) hit_m[x] = true;
  return std::find(hit_g.begin(), hit_g.end(), false) == hit_g.end() &&
         std::find(hit_m.begin(), hit_m.end(), false) == hit_m.end();
}

std::optional<std::string> first_invariance_failure(const TwoSortedMap& f, const GeneralizedModel& src,
                                                    const GeneralizedModel& dst,
                                                    const std::vector<Formula>& formulas) {
  for (const auto& phi : formulas) {
    const bool objects = phi.sort() == Sort::s1;
    const auto here = truth_set(src, phi).members;
    const auto there = truth_set(dst, phi).members;
    const auto& map = objects ? f.f_s1 : f.f_s2;
    const auto& names = objects ? src.objects() : src.attributes();
    for (std::size_t w = 0; w < map.size(); ++w)
      if (here[w] != there[map[w]]) return print(phi) + " differs at " + names[w];
  }
  return std::nullopt;
}

Submodel generated_submodel(const GeneralizedModel& g, World w) {
  const std::size_t n = g.num_objects(), k = g.num_attributes();
  if (w.index >= (w.sort == Sort::s1 ? n : k)) throw Error(ErrorKind::malformed_input, "world out of range");
  auto related = [&](std::size_t a, std::size_t b) { return g.i().test(a, b) || g.j().test(a, b); };

  // breadth-first search over the bipartite graph of I ∪ J
  std::vector<bool> seen_g(n, false), seen_m(k, false);
  std::deque<World> queue{w};
  (w.sort == Sort::s1 ? seen_g : seen_m)[w.index] = true;
  while (!queue.empty()) {
    World x = queue.front();
    queue.pop_front();
    if (x.sort == Sort::s1) {
      for (std::size_t m = 0; m < k; ++m)
        if (!seen_m[m] && related(x.index, m)) {
          seen_m[m] = true;
          queue.push_back({Sort::s2, m});
        }
    } else {
      for (std::size_t a = 0; a < n; ++a)
        if (!seen_g[a] && related(a, x.index)) {
          seen_g[a] = true;
          queue.push_back({Sort::s1, a});
        }
    }
  }

  Submodel out;
  for (std::size_t a = 0; a < n; ++a)
    if (seen_g[a]) out.objects.push_back(a);
  for (std::size_t m = 0; m < k; ++m)
    if (seen_m[m]) out.attributes.push_back(m);

  std::vector<std::string> objects, attributes;
  for (auto a : out.objects) objects.push_back(g.objects()[a]);
  for (auto m : out.attributes) attributes.push_back(g.attributes()[m]);
  Relation i(out.objects.size(), out.attributes.size()), j(out.objects.size(), out.attributes.size());
  for (std::size_t x = 0; x < out.objects.size(); ++x)
    for (std::size_t y = 0; y < out.attributes.size(); ++y) {
      const std::size_t a = out.objects[x], m = out.attributes[y];
      if (g.i().test(a, m)) i.set(x, y);
      if (g.j().test(a, m)) j.set(x, y);
      if (!related(a, m) && !out.first_gap) out.first_gap = std::make_pair(a, m);
    }
  out.total = !out.first_gap.has_value();
  Valuation v;
  for (const auto& [atom, set] : g.valuation()) {
    const auto& kept = atom.sort == Sort::s1 ? out.objects : out.attributes;
    Bitset b(kept.size());
    for (std::size_t x = 0; x < kept.size(); ++x) b[x] = set.test(kept[x]);
    v[atom] = b;
  }
  out.model = GeneralizedModel::make_partial(FormalContext(objects, attributes, i), j, v);
  return out;
}

namespace {

class FormulaSource {
 public:
  explicit FormulaSource(std::uint64_t seed) : rng_(seed) {}

  Formula make(Sort sort, std::size_t depth) {
    if (depth == 0 || pick(4) == 0) return leaf(sort);
    switch (pick(4)) {
      case 0: return Formula::negation(make(sort, depth - 1));
      case 1: {
        static const NodeKind kinds[] = {NodeKind::conjunction, NodeKind::disjunction, NodeKind::implication,
                                         NodeKind::biconditional};
        NodeKind kind = kinds[pick(4)];
        return Formula::binary(kind, make(sort, depth - 1), make(sort, depth - 1));
      }
      default: {
        // the operator's input sort is the other sort
        const Direction d = sort == Sort::s2 ? Direction::o : Direction::p;
        static const Style styles[] = {Style::box, Style::diamond, Style::window, Style::window_dual};
        const Base base = pick(3) == 0 ? Base::complement : Base::incidence;
        return Formula::modal(modal_op(d, styles[pick(4)], base), make(other(sort), depth - 1));
      }
    }
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Formula leaf(Sort sort) {
    static const char* s1[] = {"p", "q", "r"};
    static const char* s2[] = {"a", "b", "c"};
    const std::size_t roll = pick(8);
    if (roll == 0) return Formula::top(sort);
    if (roll == 1) return Formula::bottom(sort);
    return Formula::atom(sort == Sort::s1 ? s1[roll % 3] : s2[roll % 3], sort);
  }

  std::mt19937_64 rng_;
};

}  // namespace

std::vector<Formula> fuzz_suite(std::uint64_t seed, std::size_t count, std::size_t max_depth) {
  FormulaSource source(seed);
  std::vector<Formula> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(source.make(i % 2 == 0 ? Sort::s1 : Sort::s2, max_depth));
  return out;
}

}  // namespace ctxlogic
