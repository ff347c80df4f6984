#include "ctxlogic/concepts.hpp"

#include "ctxlogic/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ctxlogic {

namespace {

constexpr std::size_t kScanLimit = 20;
constexpr std::size_t kAutoScanLimit = 12;
constexpr std::size_t kPairAlgebraLimit = 12;

Bitset up(const FormalContext& k, const Bitset& a) { return derive_objects(k.incidence(), a); }
Bitset down(const FormalContext& k, const Bitset& b) { return derive_attributes(k.incidence(), b); }
Bitset poss_o(const FormalContext& k, const Bitset& a) { return possibility_o(k.incidence(), a); }
Bitset nec_o(const FormalContext& k, const Bitset& a) { return necessity_o(k.incidence(), a); }
Bitset poss_p(const FormalContext& k, const Bitset& b) { return possibility_p(k.incidence(), b); }
Bitset nec_p(const FormalContext& k, const Bitset& b) { return necessity_p(k.incidence(), b); }

// Extent-side operator whose fixpoints are the kind's extents.
Bitset extent_hull(const FormalContext& k, ConceptKind kind, const Bitset& a) {
  switch (kind) {
    case ConceptKind::formal: return down(k, up(k, a));
    case ConceptKind::property: return nec_p(k, poss_o(k, a));
    case ConceptKind::object: return poss_p(k, nec_o(k, a));
  }
  return a;
}

bool pair_less(const std::pair<Bitset, Bitset>& x, const std::pair<Bitset, Bitset>& y) {
  if (x.first != y.first) return canonical_less(x.first, y.first);
  return canonical_less(x.second, y.second);
}

std::size_t code_of(const Bitset& b) {
  std::size_t c = 0;
  for (auto i : members(b)) c |= std::size_t{1} << i;
  return c;
}

std::string set_name(const std::vector<std::string>& names, const Bitset& b) {
  std::string out = "{";
  bool first = true;
  for (auto i : members(b)) {
    out += (first ? "" : ",") + names[i];
    first = false;
  }
  return out + "}";
}

// Lectic enumeration of the closed sets of `closure` over n elements.
std::vector<Bitset> next_closure(std::size_t n, const std::function<Bitset(const Bitset&)>& closure) {
  std::vector<Bitset> out;
  Bitset current = closure(Bitset(n));
  out.push_back(current);
  for (;;) {
    bool advanced = false;
    Bitset prefix = current;
    for (std::size_t step = n; step-- > 0;) {
      if (prefix[step]) {
        prefix.reset(step);
        continue;
      }
      Bitset candidate = prefix;
      candidate.set(step);
      candidate = closure(candidate);
      bool fresh_below = false;
      for (std::size_t j = 0; j < step && !fresh_below; ++j) fresh_below = candidate[j] && !prefix[j];
      if (!fresh_below) {
        current = candidate;
        out.push_back(current);
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

void require_sizes(const FormalContext& k, const Bitset& extent, const Bitset& intent) {
  if (extent.size() != k.num_objects() || intent.size() != k.num_attributes())
    throw Error(ErrorKind::malformed_input, "pair does not match the context's universes");
}

FiniteAlgebra tabulate_pairs(const FormalContext& k, const std::vector<std::pair<Bitset, Bitset>>& elems) {
  const std::size_t n = elems.size();
  const std::size_t g = k.num_objects(), m = k.num_attributes();
  std::map<std::pair<Bitset, Bitset>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elems[i], i);
  auto lookup = [&](const Bitset& a, const Bitset& b) {
    auto it = index.find({a, b});
    if (it == index.end()) throw Error(ErrorKind::invariant, "pair algebra is not closed at " + pair_name(k, a, b));
    return it->second;
  };
  auto by_extent = [&](const Bitset& a) { return lookup(a, up(k, a)); };
  auto by_intent = [&](const Bitset& b) { return lookup(down(k, b), b); };

  FiniteAlgebra alg;
  for (const auto& [a, b] : elems) alg.carrier.push_back(pair_name(k, a, b));
  alg.meet_table.resize(n * n);
  alg.join_table.resize(n * n);
  alg.neg_table.resize(n);
  alg.opp_table.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      alg.meet_table[x * n + y] = by_extent(elems[x].first & elems[y].first);
      alg.join_table[x * n + y] = by_intent(elems[x].second & elems[y].second);
    }
    alg.neg_table[x] = by_extent(~elems[x].first);
    alg.opp_table[x] = by_intent(~elems[x].second);
  }
  alg.top = lookup(full_set(g), Bitset(m));
  alg.bottom = lookup(Bitset(g), full_set(m));
  return alg;
}

void check_pair_algebra_size(const FormalContext& k) {
  if (k.num_objects() > kPairAlgebraLimit || k.num_attributes() > kPairAlgebraLimit)
    throw Error(ErrorKind::budget_exceeded, "pair algebras are limited to " + std::to_string(kPairAlgebraLimit) +
                                                " objects and attributes");
}

Formula over(Direction d, Style s, const Formula& f) { return Formula::modal(modal_op(d, s, Base::complement), f); }

}  // namespace

const char* to_string(ConceptKind k) {
  switch (k) {
    case ConceptKind::formal: return "formal";
    case ConceptKind::property: return "property";
    case ConceptKind::object: return "object";
  }
  return "?";
}

ConceptKind parse_concept_kind(const std::string& name) {
  for (auto k : {ConceptKind::formal, ConceptKind::property, ConceptKind::object})
    if (name == to_string(k)) return k;
  throw Error(ErrorKind::malformed_input, "unknown concept kind '" + name + "'");
}

Concept concept_from_extent(const FormalContext& k, ConceptKind kind, const Bitset& extent) {
  switch (kind) {
    case ConceptKind::formal: return {extent, up(k, extent), kind};
    case ConceptKind::property: return {extent, poss_o(k, extent), kind};
    case ConceptKind::object: return {extent, nec_o(k, extent), kind};
  }
  return {};
}

Concept concept_from_intent(const FormalContext& k, ConceptKind kind, const Bitset& intent) {
  switch (kind) {
    case ConceptKind::formal: return {down(k, intent), intent, kind};
    case ConceptKind::property: return {nec_p(k, intent), intent, kind};
    case ConceptKind::object: return {poss_p(k, intent), intent, kind};
  }
  return {};
}

bool is_concept(const FormalContext& k, const Concept& c) {
  if (c.extent.size() != k.num_objects() || c.intent.size() != k.num_attributes()) return false;
  return concept_from_extent(k, c.kind, c.extent).intent == c.intent &&
         concept_from_intent(k, c.kind, c.intent).extent == c.extent;
}

std::optional<std::size_t> ConceptLattice::index_of(const Bitset& extent) const {
  for (std::size_t i = 0; i < concepts.size(); ++i)
    if (concepts[i].extent == extent) return i;
  return std::nullopt;
}

std::size_t ConceptLattice::bottom() const {
  for (std::size_t i = 0; i < size(); ++i) {
    bool below_all = true;
    for (std::size_t j = 0; j < size() && below_all; ++j) below_all = leq(i, j);
    if (below_all) return i;
  }
  throw Error(ErrorKind::invariant, "lattice has no least element");
}

std::size_t ConceptLattice::top() const {
  for (std::size_t i = 0; i < size(); ++i) {
    bool above_all = true;
    for (std::size_t j = 0; j < size() && above_all; ++j) above_all = leq(j, i);
    if (above_all) return i;
  }
  throw Error(ErrorKind::invariant, "lattice has no greatest element");
}

std::vector<Concept> list_concepts(const FormalContext& k, ConceptKind kind, EnumerationAlgorithm algorithm) {
  const std::size_t g = k.num_objects(), m = k.num_attributes();
  if (algorithm == EnumerationAlgorithm::automatic)
    algorithm = g <= kAutoScanLimit ? EnumerationAlgorithm::subset_scan : EnumerationAlgorithm::next_closure;

  std::vector<Concept> out;
  if (algorithm == EnumerationAlgorithm::subset_scan) {
    if (g > kScanLimit)
      throw Error(ErrorKind::budget_exceeded, "subset scan over " + std::to_string(g) + " objects");
    for (std::size_t code = 0; code < (std::size_t{1} << g); ++code) {
      Bitset a = from_code(g, code);
      if (extent_hull(k, kind, a) == a) out.push_back(concept_from_extent(k, kind, a));
    }
  } else {
    switch (kind) {
      case ConceptKind::formal:
        for (const auto& b : next_closure(m, [&](const Bitset& x) { return up(k, down(k, x)); }))
          out.push_back(concept_from_intent(k, kind, b));
        break;
      case ConceptKind::property:
        for (const auto& a : next_closure(g, [&](const Bitset& x) { return nec_p(k, poss_o(k, x)); }))
          out.push_back(concept_from_extent(k, kind, a));
        break;
      case ConceptKind::object:
        for (const auto& b : next_closure(m, [&](const Bitset& x) { return nec_o(k, poss_p(k, x)); }))
          out.push_back(concept_from_intent(k, kind, b));
        break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Concept& x, const Concept& y) { return canonical_less(x.extent, y.extent); });
  return out;
}

ConceptLattice enumerate_concepts(const FormalContext& k, ConceptKind kind, EnumerationAlgorithm algorithm) {
  ConceptLattice l;
  l.kind = kind;
  l.concepts = list_concepts(k, kind, algorithm);

  const std::size_t n = l.size();
  std::map<Bitset, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(l.concepts[i].extent, i);
  l.meet_table.resize(n * n);
  l.join_table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto [meet, join] = lattice_ops(k, l.concepts[i], l.concepts[j]);
      auto mi = index.find(meet.extent), ji = index.find(join.extent);
      if (mi == index.end() || ji == index.end())
        throw Error(ErrorKind::invariant, "lattice operation left the concept set");
      l.meet_table[i * n + j] = l.meet_table[j * n + i] = mi->second;
      l.join_table[i * n + j] = l.join_table[j * n + i] = ji->second;
    }
  return l;
}

std::pair<Concept, Concept> lattice_ops(const FormalContext& k, const Concept& a, const Concept& b) {
  if (a.kind != b.kind)
    throw Error(ErrorKind::malformed_input,
                std::string("lattice operation on a ") + to_string(a.kind) + " and a " + to_string(b.kind) + " concept");
  for (const Concept* c : {&a, &b})
    if (!is_concept(k, *c))
      throw Error(ErrorKind::malformed_input, pair_name(k, c->extent, c->intent) + " is not a " +
                                                  to_string(c->kind) + " concept");
  switch (a.kind) {
    case ConceptKind::formal:
      return {concept_from_extent(k, a.kind, a.extent & b.extent),
              concept_from_intent(k, a.kind, a.intent & b.intent)};
    case ConceptKind::property:
      return {concept_from_extent(k, a.kind, a.extent & b.extent),
              concept_from_intent(k, a.kind, a.intent | b.intent)};
    case ConceptKind::object:
      return {concept_from_intent(k, a.kind, a.intent & b.intent),
              concept_from_extent(k, a.kind, a.extent | b.extent)};
  }
  return {};
}

std::optional<std::string> verify_lattice(const ConceptLattice& l) {
  const std::size_t n = l.size();
  if (n == 0) return "empty lattice";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t glb = n, lub = n;  // n: none found
      for (std::size_t c = 0; c < n; ++c) {
        if (l.leq(c, i) && l.leq(c, j) && (glb == n || l.leq(glb, c))) glb = c;
        if (l.leq(i, c) && l.leq(j, c) && (lub == n || l.leq(c, lub))) lub = c;
      }
      // a candidate found by the scan must dominate every other bound
      for (std::size_t c = 0; c < n; ++c) {
        if (glb != n && l.leq(c, i) && l.leq(c, j) && !l.leq(c, glb)) glb = n;
        if (lub != n && l.leq(i, c) && l.leq(j, c) && !l.leq(lub, c)) lub = n;
      }
      const std::string at = " of " + std::to_string(i) + " and " + std::to_string(j);
      if (glb == n) return "no greatest lower bound" + at;
      if (lub == n) return "no least upper bound" + at;
      if (l.meet(i, j) != glb) return "meet table disagrees with the order" + at;
      if (l.join(i, j) != lub) return "join table disagrees with the order" + at;
    }
  return std::nullopt;
}

bool IsomorphismReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IsomorphismCheck& c) { return c.ok(); });
}

IsomorphismReport verify_isomorphisms(const FormalContext& k) {
  const FormalContext kbar = complement_context(k);
  struct Mapping {
    const char* name;
    const FormalContext* source_ctx;
    ConceptKind source;
    const FormalContext* target_ctx;
    ConceptKind target;
    bool flip_extent, flip_intent, reversing;
  };
  const Mapping mappings[] = {
      {"B(K) -> P(K-bar)", &k, ConceptKind::formal, &kbar, ConceptKind::property, false, true, false},
      {"P(K) -> O(K)", &k, ConceptKind::property, &k, ConceptKind::object, true, true, true},
      {"B(K) -> O(K-bar)", &k, ConceptKind::formal, &kbar, ConceptKind::object, true, false, true},
  };
  constexpr std::size_t kMaxListed = 5;

  IsomorphismReport report;
  for (const auto& s : mappings) {
    IsomorphismCheck check;
    check.name = s.name;
    check.order_reversing = s.reversing;
    auto note = [&](const std::string& v) {
      if (check.violations.size() < kMaxListed) check.violations.push_back(v);
    };
    const auto src = enumerate_concepts(*s.source_ctx, s.source);
    const auto dst = enumerate_concepts(*s.target_ctx, s.target);
    std::vector<std::size_t> image(src.size(), dst.size());
    std::vector<bool> hit(dst.size(), false);
    for (std::size_t i = 0; i < src.size(); ++i) {
      const auto& c = src.concepts[i];
      Concept mapped{s.flip_extent ? ~c.extent : c.extent, s.flip_intent ? ~c.intent : c.intent, s.target};
      if (!is_concept(*s.target_ctx, mapped)) {
        note("image of " + pair_name(k, c.extent, c.intent) + " is not a " + to_string(s.target) + " concept");
        continue;
      }
      image[i] = *dst.index_of(mapped.extent);
      if (hit[image[i]]) note("two concepts map to " + pair_name(k, mapped.extent, mapped.intent));
      hit[image[i]] = true;
    }
    for (std::size_t j = 0; j < dst.size(); ++j)
      if (!hit[j]) note("nothing maps to " + pair_name(k, dst.concepts[j].extent, dst.concepts[j].intent));
    for (std::size_t i = 0; i < src.size(); ++i)
      for (std::size_t j = 0; j < src.size(); ++j) {
        if (image[i] == dst.size() || image[j] == dst.size()) continue;
        const bool before = src.leq(i, j);
        const bool after = s.reversing ? dst.leq(image[j], image[i]) : dst.leq(image[i], image[j]);
        if (before != after)
          note(std::string("order ") + (s.reversing ? "reversal" : "preservation") + " fails for " +
               pair_name(k, src.concepts[i].extent, src.concepts[i].intent) + " and " +
               pair_name(k, src.concepts[j].extent, src.concepts[j].intent));
      }
    report.checks.push_back(std::move(check));
  }
  return report;
}

std::vector<std::string> PairFlags::names() const {
  std::vector<std::string> out;
  auto add = [&](bool f, const char* n) {
    if (f) out.emplace_back(n);
  };
  add(formal_concept, "formal_concept");
  add(left_semiconcept, "left_semiconcept");
  add(right_semiconcept, "right_semiconcept");
  add(semiconcept, "semiconcept");
  add(protoconcept, "protoconcept");
  add(property_concept, "property_concept");
  add(property_semiconcept, "property_semiconcept");
  add(property_protoconcept, "property_protoconcept");
  add(object_concept, "object_concept");
  add(object_semiconcept, "object_semiconcept");
  add(object_protoconcept, "object_protoconcept");
  if (out.empty()) out.emplace_back("none");
  return out;
}

PairFlags classify_pair(const FormalContext& k, const Bitset& a, const Bitset& b) {
  require_sizes(k, a, b);
  PairFlags f;
  f.left_semiconcept = up(k, a) == b;
  f.right_semiconcept = down(k, b) == a;
  f.formal_concept = f.left_semiconcept && f.right_semiconcept;
  f.semiconcept = f.left_semiconcept || f.right_semiconcept;
  f.protoconcept = down(k, up(k, a)) == down(k, b);

  const bool p_left = poss_o(k, a) == b, p_right = nec_p(k, b) == a;
  f.property_concept = p_left && p_right;
  f.property_semiconcept = p_left || p_right;
  f.property_protoconcept = nec_p(k, poss_o(k, a)) == nec_p(k, b);

  const bool o_left = nec_o(k, a) == b, o_right = poss_p(k, b) == a;
  f.object_concept = o_left && o_right;
  f.object_semiconcept = o_left || o_right;
  f.object_protoconcept = poss_p(k, nec_o(k, a)) == poss_p(k, b);

  if ((f.semiconcept && !f.protoconcept) || (f.property_semiconcept && !f.property_protoconcept) ||
      (f.object_semiconcept && !f.object_protoconcept))
    throw Error(ErrorKind::invariant, "a semiconcept that is not a protoconcept: " + pair_name(k, a, b));
  return f;
}

std::string pair_name(const FormalContext& k, const Bitset& extent, const Bitset& intent) {
  return "(" + set_name(k.objects(), extent) + ", " + set_name(k.attributes(), intent) + ")";
}

PairAlgebra semiconcept_algebra(const FormalContext& k) {
  check_pair_algebra_size(k);
  const std::size_t g = k.num_objects(), m = k.num_attributes();
  PairAlgebra pa;
  for (std::size_t code = 0; code < (std::size_t{1} << g); ++code) {
    Bitset a = from_code(g, code);
    pa.elements.emplace_back(a, up(k, a));
  }
  for (std::size_t code = 0; code < (std::size_t{1} << m); ++code) {
    Bitset b = from_code(m, code);
    pa.elements.emplace_back(down(k, b), b);
  }
  std::sort(pa.elements.begin(), pa.elements.end(), pair_less);
  pa.elements.erase(std::unique(pa.elements.begin(), pa.elements.end()), pa.elements.end());
  pa.algebra = tabulate_pairs(k, pa.elements);
  return pa;
}

PairAlgebra protoconcept_algebra(const FormalContext& k) {
  check_pair_algebra_size(k);
  const std::size_t g = k.num_objects(), m = k.num_attributes();
  std::map<Bitset, std::vector<Bitset>> intents_by_extent;
  for (std::size_t code = 0; code < (std::size_t{1} << m); ++code) {
    Bitset b = from_code(m, code);
    intents_by_extent[down(k, b)].push_back(b);
  }
  PairAlgebra pa;
  for (std::size_t code = 0; code < (std::size_t{1} << g); ++code) {
    Bitset a = from_code(g, code);
    auto it = intents_by_extent.find(down(k, up(k, a)));
    if (it == intents_by_extent.end()) continue;
    for (const auto& b : it->second) pa.elements.emplace_back(a, b);
  }
  std::sort(pa.elements.begin(), pa.elements.end(), pair_less);
  pa.algebra = tabulate_pairs(k, pa.elements);
  return pa;
}

AdjointMaps quotient_maps(const FormalContext& k, const PairAlgebra& pa) {
  const std::size_t g = k.num_objects(), m = k.num_attributes();
  std::map<std::pair<Bitset, Bitset>, std::size_t> index;
  for (std::size_t i = 0; i < pa.elements.size(); ++i) index.emplace(pa.elements[i], i);
  auto lookup = [&](const Bitset& a, const Bitset& b) {
    auto it = index.find({a, b});
    if (it == index.end()) throw Error(ErrorKind::invariant, "section leaves the carrier at " + pair_name(k, a, b));
    return it->second;
  };
  AdjointMaps maps;
  maps.carrier = pa.algebra.carrier;
  maps.left = powerset_boolean(k.objects());
  maps.right = powerset_boolean(k.attributes(), true);
  for (const auto& [a, b] : pa.elements) {
    maps.r.push_back(code_of(a));
    maps.r2.push_back(code_of(b));
  }
  for (std::size_t code = 0; code < maps.left.size(); ++code) {
    Bitset a = from_code(g, code);
    maps.e.push_back(lookup(a, up(k, a)));
  }
  for (std::size_t code = 0; code < maps.right.size(); ++code) {
    Bitset b = from_code(m, code);
    maps.e2.push_back(lookup(down(k, b), b));
  }
  maps.validate();
  return maps;
}

const char* to_string(LogicalKind k) {
  switch (k) {
    case LogicalKind::kb_property: return "kb_property";
    case LogicalKind::kb_object: return "kb_object";
    case LogicalKind::formal: return "formal";
    case LogicalKind::property: return "property";
    case LogicalKind::object: return "object";
    case LogicalKind::semiconcept: return "semiconcept";
    case LogicalKind::property_semiconcept: return "property_semiconcept";
    case LogicalKind::object_semiconcept: return "object_semiconcept";
    case LogicalKind::protoconcept: return "protoconcept";
    case LogicalKind::property_protoconcept: return "property_protoconcept";
    case LogicalKind::object_protoconcept: return "object_protoconcept";
  }
  return "?";
}

LogicalKind parse_logical_kind(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(LogicalKind::object_protoconcept); ++i)
    if (name == to_string(static_cast<LogicalKind>(i))) return static_cast<LogicalKind>(i);
  throw Error(ErrorKind::malformed_input, "unknown logical concept kind '" + name + "'");
}

LogicalCheck logical_concept_check(const FormalContext& k, const LogicalPair& pair, LogicalKind kind,
                                   std::uint64_t budget) {
  const Formula& phi = pair.phi;
  const Formula& psi = pair.psi;
  if (phi.sort() != Sort::s1 || psi.sort() != Sort::s2)
    throw Error(ErrorKind::sort, "logical concepts pair an s1 formula with an s2 formula, got " +
                                     std::string(to_string(phi.sort())) + " and " + to_string(psi.sort()));
  using F = Formula;
  const auto o = Direction::o, p = Direction::p;
  LogicalCheck out;
  auto& c = out.conditions;
  bool either = false;
  switch (kind) {
    case LogicalKind::kb_property:
      c = {F::biconditional(phi, box(p, psi)), F::biconditional(diamond(o, phi), psi)};
      break;
    case LogicalKind::kb_object:
      c = {F::biconditional(phi, diamond(p, psi)), F::biconditional(box(o, phi), psi)};
      break;
    case LogicalKind::semiconcept:
      either = true;
      [[fallthrough]];
    case LogicalKind::formal:
      c = {F::biconditional(phi, window(p, psi)), F::biconditional(window(o, phi), psi)};
      break;
    case LogicalKind::property_semiconcept:
      either = true;
      [[fallthrough]];
    case LogicalKind::property:
      c = {F::biconditional(phi, over(p, Style::box, psi)), F::biconditional(over(o, Style::diamond, phi), psi)};
      break;
    case LogicalKind::object_semiconcept:
      either = true;
      [[fallthrough]];
    case LogicalKind::object:
      c = {F::biconditional(phi, over(p, Style::diamond, psi)), F::biconditional(over(o, Style::box, phi), psi)};
      break;
    case LogicalKind::protoconcept:
      c = {F::biconditional(window(o, phi), window(o, window(p, psi)))};
      break;
    case LogicalKind::property_protoconcept:
      c = {F::biconditional(over(o, Style::diamond, phi), over(o, Style::diamond, over(p, Style::box, psi)))};
      break;
    case LogicalKind::object_protoconcept:
      c = {F::biconditional(over(p, Style::diamond, over(o, Style::box, phi)), over(p, Style::diamond, psi))};
      break;
  }
  for (const auto& cond : c) {
    auto r = frame_valid(k, cond, budget);
    if (r.status == ValidityResult::Status::budget_exceeded)
      throw Error(ErrorKind::budget_exceeded, "frame validity of " + print(cond) + " exceeds the valuation budget");
    out.condition_valid.push_back(r.valid());
  }
  const auto& v = out.condition_valid;
  out.holds = either ? std::any_of(v.begin(), v.end(), [](bool b) { return b; })
                     : std::all_of(v.begin(), v.end(), [](bool b) { return b; });
  return out;
}

std::pair<LogicalPair, LogicalPair> logical_lattice_ops(const LogicalPair& a, const LogicalPair& b,
                                                        LogicalKind kind) {
  using F = Formula;
  const auto o = Direction::o, p = Direction::p;
  const F phi_and = F::conjunction(a.phi, b.phi), psi_and = F::conjunction(a.psi, b.psi);
  const F phi_or = F::disjunction(a.phi, b.phi), psi_or = F::disjunction(a.psi, b.psi);
  switch (kind) {
    case LogicalKind::formal:
      return {{phi_and, window(o, phi_and)}, {window(p, psi_and), psi_and}};
    case LogicalKind::kb_property:
      return {{phi_and, diamond(o, phi_and)}, {box(p, psi_or), psi_or}};
    case LogicalKind::kb_object:
      return {{diamond(p, psi_and), psi_and}, {phi_or, box(o, phi_or)}};
    case LogicalKind::property:
      return {{phi_and, over(o, Style::diamond, phi_and)}, {over(p, Style::box, psi_or), psi_or}};
    case LogicalKind::object:
      return {{over(p, Style::diamond, psi_and), psi_and}, {phi_or, over(o, Style::box, phi_or)}};
    default:
      throw Error(ErrorKind::unsupported,
                  std::string("no lattice operations for logical kind ") + to_string(kind));
  }
}

std::pair<LogicalPair, LogicalPair> checked_logical_lattice_ops(const FormalContext& k, const LogicalPair& a,
                                                                const LogicalPair& b, LogicalKind kind,
                                                                std::uint64_t budget) {
  for (const LogicalPair* in : {&a, &b})
    if (!logical_concept_check(k, *in, kind, budget).holds)
      throw Error(ErrorKind::malformed_input, "(" + print(in->phi) + ", " + print(in->psi) + ") is not a logical " +
                                                  to_string(kind) + " concept");
  auto result = logical_lattice_ops(a, b, kind);
  for (const LogicalPair* out : {&result.first, &result.second})
    if (!logical_concept_check(k, *out, kind, budget).holds)
      throw Error(ErrorKind::invariant, "lattice operation produced (" + print(out->phi) + ", " + print(out->psi) +
                                            "), which is not a logical " + to_string(kind) + " concept");
  return result;
}

bool logically_equivalent(const FormalContext& k, const LogicalPair& a, const LogicalPair& b,
                          std::uint64_t budget) {
  for (const auto& f : {Formula::biconditional(a.phi, b.phi), Formula::biconditional(a.psi, b.psi)}) {
    auto r = frame_valid(k, f, budget);
    if (r.status == ValidityResult::Status::budget_exceeded)
      throw Error(ErrorKind::budget_exceeded, "frame validity of " + print(f) + " exceeds the valuation budget");
    if (!r.valid()) return false;
  }
  return true;
}

}  // namespace ctxlogic
