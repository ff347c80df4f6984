#include "ctxlogic/dba.hpp"

#include "ctxlogic/error.hpp"

#include <algorithm>
#include <functional>

namespace ctxlogic {

namespace {

void check_table(const std::vector<std::size_t>& t, std::size_t expected, std::size_t n, const char* what) {
  if (t.size() != expected)
    throw Error(ErrorKind::malformed_input, std::string(what) + " table has " + std::to_string(t.size()) +
                                                " entries, expected " + std::to_string(expected));
  for (auto v : t)
    if (v >= n) throw Error(ErrorKind::malformed_input, std::string(what) + " table refers to element " + std::to_string(v));
}

struct Axiom {
  const char* name;
  int arity;
  std::function<bool(const FiniteAlgebra&, std::size_t, std::size_t, std::size_t)> holds;
};

const std::vector<Axiom>& dba_axioms() {
  using A = const FiniteAlgebra&;
  using S = std::size_t;
  static const std::vector<Axiom> axioms = {
      {"1a", 2, [](A a, S x, S y, S) { return a.meet(a.meet(x, x), y) == a.meet(x, y); }},
      {"1b", 2, [](A a, S x, S y, S) { return a.join(a.join(x, x), y) == a.join(x, y); }},
      {"2a", 2, [](A a, S x, S y, S) { return a.meet(x, y) == a.meet(y, x); }},
      {"2b", 2, [](A a, S x, S y, S) { return a.join(x, y) == a.join(y, x); }},
      {"3a", 1, [](A a, S x, S, S) { return a.neg(a.meet(x, x)) == a.neg(x); }},
      {"3b", 1, [](A a, S x, S, S) { return a.opp(a.join(x, x)) == a.opp(x); }},
      {"4a", 2, [](A a, S x, S y, S) { return a.meet(x, a.join(x, y)) == a.meet(x, x); }},
      {"4b", 2, [](A a, S x, S y, S) { return a.join(x, a.meet(x, y)) == a.join(x, x); }},
      {"5a", 3, [](A a, S x, S y, S z) { return a.meet(x, a.vee(y, z)) == a.vee(a.meet(x, y), a.meet(x, z)); }},
      {"5b", 3, [](A a, S x, S y, S z) { return a.join(x, a.wedge(y, z)) == a.wedge(a.join(x, y), a.join(x, z)); }},
      {"6a", 2, [](A a, S x, S y, S) { return a.meet(x, a.vee(x, y)) == a.meet(x, x); }},
      {"6b", 2, [](A a, S x, S y, S) { return a.join(x, a.wedge(x, y)) == a.join(x, x); }},
      {"7a", 2, [](A a, S x, S y, S) { return a.neg(a.neg(a.meet(x, y))) == a.meet(x, y); }},
      {"7b", 2, [](A a, S x, S y, S) { return a.opp(a.opp(a.join(x, y))) == a.join(x, y); }},
      {"8a", 1, [](A a, S x, S, S) { return a.meet(x, a.neg(x)) == a.bottom; }},
      {"8b", 1, [](A a, S x, S, S) { return a.join(x, a.opp(x)) == a.top; }},
      {"9a", 0, [](A a, S, S, S) { return a.neg(a.top) == a.bottom; }},
      {"9b", 0, [](A a, S, S, S) { return a.opp(a.bottom) == a.top; }},
      {"10a", 3, [](A a, S x, S y, S z) { return a.meet(x, a.meet(y, z)) == a.meet(a.meet(x, y), z); }},
      {"10b", 3, [](A a, S x, S y, S z) { return a.join(x, a.join(y, z)) == a.join(a.join(x, y), z); }},
      {"11a", 0, [](A a, S, S, S) { return a.neg(a.bottom) == a.meet(a.top, a.top); }},
      {"11b", 0, [](A a, S, S, S) { return a.opp(a.top) == a.join(a.bottom, a.bottom); }},
      {"12", 1, [](A a, S x, S, S) {
         return a.join(a.meet(x, x), a.meet(x, x)) == a.meet(a.join(x, x), a.join(x, x));
       }},
  };
  return axioms;
}

// First failing tuple in lexicographic carrier order, if any.
std::optional<std::vector<std::size_t>> first_counterexample(const FiniteAlgebra& a, const Axiom& ax) {
  const std::size_t n = a.size();
  if (ax.arity == 0) {
    if (n == 0 || ax.holds(a, 0, 0, 0)) return std::nullopt;
    return std::vector<std::size_t>{};
  }
  const std::size_t ny = ax.arity >= 2 ? n : 1, nz = ax.arity >= 3 ? n : 1;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < ny; ++y)
      for (std::size_t z = 0; z < nz; ++z)
        if (!ax.holds(a, x, y, z)) {
          std::vector<std::size_t> w{x, y, z};
          w.resize(static_cast<std::size_t>(ax.arity));
          return w;
        }
  return std::nullopt;
}

struct Law {
  const char* name;
  int arity;
  std::function<bool(const TabledBoolean&, std::size_t, std::size_t, std::size_t)> holds;
};

const std::vector<Law>& boolean_laws() {
  using B = const TabledBoolean&;
  using S = std::size_t;
  static const std::vector<Law> laws = {
      {"meet commutative", 2, [](B b, S x, S y, S) { return b.meet(x, y) == b.meet(y, x); }},
      {"join commutative", 2, [](B b, S x, S y, S) { return b.join(x, y) == b.join(y, x); }},
      {"meet associative", 3, [](B b, S x, S y, S z) { return b.meet(x, b.meet(y, z)) == b.meet(b.meet(x, y), z); }},
      {"join associative", 3, [](B b, S x, S y, S z) { return b.join(x, b.join(y, z)) == b.join(b.join(x, y), z); }},
      {"meet absorbs join", 2, [](B b, S x, S y, S) { return b.meet(x, b.join(x, y)) == x; }},
      {"join absorbs meet", 2, [](B b, S x, S y, S) { return b.join(x, b.meet(x, y)) == x; }},
      {"meet distributes", 3,
       [](B b, S x, S y, S z) { return b.meet(x, b.join(y, z)) == b.join(b.meet(x, y), b.meet(x, z)); }},
      {"one is the meet unit", 1, [](B b, S x, S, S) { return b.meet(x, b.one) == x; }},
      {"zero is the join unit", 1, [](B b, S x, S, S) { return b.join(x, b.zero) == x; }},
      {"complement meets to zero", 1, [](B b, S x, S, S) { return b.meet(x, b.complement[x]) == b.zero; }},
      {"complement joins to one", 1, [](B b, S x, S, S) { return b.join(x, b.complement[x]) == b.one; }},
  };
  return laws;
}

void validate_boolean(const TabledBoolean& b, const char* which) {
  const std::size_t n = b.size();
  std::string w(which);
  if (n == 0) throw Error(ErrorKind::malformed_input, w + " Boolean algebra is empty");
  check_table(b.meet_table, n * n, n, (w + " meet").c_str());
  check_table(b.join_table, n * n, n, (w + " join").c_str());
  check_table(b.complement, n, n, (w + " complement").c_str());
  if (b.zero >= n || b.one >= n) throw Error(ErrorKind::malformed_input, w + " constants out of range");
}

}  // namespace

void FiniteAlgebra::validate() const {
  const std::size_t n = size();
  if (n == 0) throw Error(ErrorKind::malformed_input, "algebra carrier is empty");
  check_table(meet_table, n * n, n, "meet");
  check_table(join_table, n * n, n, "join");
  check_table(neg_table, n, n, "negation");
  check_table(opp_table, n, n, "opposition");
  if (top >= n || bottom >= n) throw Error(ErrorKind::malformed_input, "constant out of range");
}

bool FiniteAlgebra::same_tables(const FiniteAlgebra& o) const {
  return meet_table == o.meet_table && join_table == o.join_table && neg_table == o.neg_table &&
         opp_table == o.opp_table && top == o.top && bottom == o.bottom;
}

bool DbaReport::all_pass() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& r) { return r.pass; });
}

const AxiomResult* DbaReport::first_failure() const {
  for (const auto& r : axioms)
    if (!r.pass) return &r;
  return nullptr;
}

DbaReport check_dba(const FiniteAlgebra& a) {
  a.validate();
  DbaReport rep;
  for (const auto& ax : dba_axioms()) {
    AxiomResult r;
    r.name = ax.name;
    if (auto w = first_counterexample(a, ax)) {
      r.pass = false;
      r.witness = *w;
    }
    rep.axioms.push_back(std::move(r));
  }
  return rep;
}

PropertyResult is_pure(const FiniteAlgebra& a) {
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a.meet(x, x) != x && a.join(x, x) != x) return {false, {x}, "neither ⊓- nor ⊔-idempotent"};
  return {};
}

PropertyResult is_fully_contextual(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  for (std::size_t y = 0; y < n; ++y) {
    if (a.meet(y, y) != y) continue;
    for (std::size_t x = 0; x < n; ++x) {
      if (a.join(x, x) != x || a.join(y, y) != a.meet(x, x)) continue;
      std::size_t count = 0;
      for (std::size_t z = 0; z < n; ++z)
        if (a.meet(z, z) == y && a.join(z, z) == x) ++count;
      if (count != 1) return {false, {y, x}, std::to_string(count) + " elements z with z⊓z = y and z⊔z = x"};
    }
  }
  return {};
}

TabledBoolean powerset_boolean(const std::vector<std::string>& universe, bool reversed) {
  const std::size_t bits = universe.size();
  if (bits >= 16) throw Error(ErrorKind::budget_exceeded, "powerset algebra over more than 15 elements");
  const std::size_t n = std::size_t{1} << bits;
  TabledBoolean b;
  for (std::size_t code = 0; code < n; ++code) {
    std::string name = "{";
    bool first = true;
    for (std::size_t i = 0; i < bits; ++i)
      if ((code >> i) & 1U) {
        name += (first ? "" : ",") + universe[i];
        first = false;
      }
    b.names.push_back(name + "}");
  }
  b.meet_table.resize(n * n);
  b.join_table.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      b.meet_table[x * n + y] = reversed ? (x | y) : (x & y);
      b.join_table[x * n + y] = reversed ? (x & y) : (x | y);
    }
  for (std::size_t x = 0; x < n; ++x) b.complement.push_back((n - 1) & ~x);
  b.zero = reversed ? n - 1 : 0;
  b.one = reversed ? 0 : n - 1;
  return b;
}

BooleanAudit audit_boolean(const TabledBoolean& b) {
  validate_boolean(b, "audited");
  const std::size_t n = b.size();
  for (const auto& law : boolean_laws()) {
    const std::size_t ny = law.arity >= 2 ? n : 1, nz = law.arity >= 3 ? n : 1;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < ny; ++y)
        for (std::size_t z = 0; z < nz; ++z)
          if (!law.holds(b, x, y, z)) {
            std::vector<std::size_t> w{x, y, z};
            w.resize(static_cast<std::size_t>(law.arity));
            return {false, law.name, w};
          }
  }
  return {};
}

namespace {

BooleanPart extract_part(const FiniteAlgebra& a, bool meet_side) {
  BooleanPart part;
  const std::size_t n = a.size();
  std::vector<std::size_t> local(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    const bool idem = meet_side ? a.meet(x, x) == x : a.join(x, x) == x;
    if (idem) {
      local[x] = part.elements.size();
      part.elements.push_back(x);
    }
  }
  const std::size_t k = part.elements.size();
  TabledBoolean& b = part.algebra;
  for (auto x : part.elements) b.names.push_back(a.carrier[x]);
  b.meet_table.assign(k * k, 0);
  b.join_table.assign(k * k, 0);
  b.complement.assign(k, 0);

  auto place = [&](std::size_t value, const char* op, std::vector<std::size_t> args) -> std::size_t {
    if (local[value] == n) {
      if (part.audit.ok) part.audit = {false, std::string("closure under ") + op, std::move(args)};
      return 0;
    }
    return local[value];
  };

  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t x = part.elements[i];
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t y = part.elements[j];
      b.meet_table[i * k + j] = place(meet_side ? a.meet(x, y) : a.wedge(x, y), meet_side ? "⊓" : "∧̄", {x, y});
      b.join_table[i * k + j] = place(meet_side ? a.vee(x, y) : a.join(x, y), meet_side ? "∨̄" : "⊔", {x, y});
    }
    b.complement[i] = place(meet_side ? a.neg(x) : a.opp(x), meet_side ? "¬̄" : "⌟", {x});
  }
  const std::size_t zero = meet_side ? a.bottom : a.opp(a.top);
  const std::size_t one = meet_side ? a.neg(a.bottom) : a.top;
  b.zero = place(zero, "the zero constant", {});
  b.one = place(one, "the unit constant", {});

  if (k == 0) {
    part.audit = {false, "empty Boolean part", {}};
  } else if (part.audit.ok) {
    part.audit = audit_boolean(b);
    for (auto& w : part.audit.witness) w = part.elements[w];
  }
  return part;
}

}  // namespace

std::pair<BooleanPart, BooleanPart> boolean_parts(const FiniteAlgebra& a) {
  a.validate();
  return {extract_part(a, true), extract_part(a, false)};
}

void AdjointMaps::validate() const {
  const std::size_t n = carrier.size();
  if (n == 0) throw Error(ErrorKind::malformed_input, "maps over an empty carrier");
  validate_boolean(left, "left");
  validate_boolean(right, "right");
  check_table(r, n, left.size(), "r");
  check_table(r2, n, right.size(), "r'");
  check_table(e, left.size(), n, "e");
  check_table(e2, right.size(), n, "e'");
  for (std::size_t b = 0; b < left.size(); ++b)
    if (r[e[b]] != b) throw Error(ErrorKind::invariant, "r(e(" + left.names[b] + ")) differs from " + left.names[b]);
  for (std::size_t b = 0; b < right.size(); ++b)
    if (r2[e2[b]] != b)
      throw Error(ErrorKind::invariant, "r'(e'(" + right.names[b] + ")) differs from " + right.names[b]);
}

FiniteAlgebra build_from_booleans(const AdjointMaps& m) {
  m.validate();
  const std::size_t n = m.carrier.size();
  FiniteAlgebra a;
  a.carrier = m.carrier;
  a.meet_table.resize(n * n);
  a.join_table.resize(n * n);
  a.neg_table.resize(n);
  a.opp_table.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      a.meet_table[x * n + y] = m.e[m.left.meet(m.r[x], m.r[y])];
      a.join_table[x * n + y] = m.e2[m.right.join(m.r2[x], m.r2[y])];
    }
    a.neg_table[x] = m.e[m.left.complement[m.r[x]]];
    a.opp_table[x] = m.e2[m.right.complement[m.r2[x]]];
  }
  a.top = m.e2[m.right.one];
  a.bottom = m.e[m.left.zero];
  return a;
}

bool CharacterizationReport::characterization_agrees() const {
  const bool abc = a.holds && b.holds && c.holds;
  return built_is_dba == abc && built_is_pure_dba == (abc && d.holds);
}

CharacterizationReport check_characterization(const AdjointMaps& m) {
  m.validate();
  const std::size_t n = m.carrier.size();
  const auto& B = m.left;
  const auto& B2 = m.right;
  auto er = [&](std::size_t x) { return m.e[m.r[x]]; };
  auto er2 = [&](std::size_t x) { return m.e2[m.r2[x]]; };
  CharacterizationReport rep;

  for (std::size_t x = 0; x < n && rep.a.holds; ++x)
    if (er(er2(x)) != er2(er(x))) rep.a = {false, {x}, "e∘r∘e'∘r' and e'∘r'∘e∘r differ"};

  for (std::size_t x = 0; x < n && rep.b.holds; ++x)
    for (std::size_t y = 0; y < n && rep.b.holds; ++y) {
      const std::size_t lhs1 = m.e[B.meet(m.r[x], m.r[m.e2[B2.join(m.r2[x], m.r2[y])]])];
      const std::size_t lhs2 = m.e2[B2.join(m.r2[x], m.r2[m.e[B.meet(m.r[x], m.r[y])]])];
      if (lhs1 != er(x)) rep.b = {false, {x, y}, "first absorption identity fails"};
      else if (lhs2 != er2(x)) rep.b = {false, {x, y}, "second absorption identity fails"};
    }

  if (m.r[m.e2[B2.one]] != B.one) rep.c = {false, {}, "r(e'(1')) differs from 1"};
  else if (m.r2[m.e[B.zero]] != B2.zero) rep.c = {false, {}, "r'(e(0)) differs from 0'"};

  for (std::size_t x = 0; x < n && rep.d.holds; ++x)
    if (er(x) != x && er2(x) != x) rep.d = {false, {x}, "x is fixed by neither e∘r nor e'∘r'"};

  FiniteAlgebra built = build_from_booleans(m);
  rep.built_is_dba = check_dba(built).all_pass();
  rep.built_is_pure_dba = rep.built_is_dba && is_pure(built).holds;
  return rep;
}

AdjointMaps canonical_maps_from_dba(const FiniteAlgebra& a) {
  auto report = check_dba(a);
  if (const auto* f = report.first_failure())
    throw Error(ErrorKind::invariant, "not a double Boolean algebra: axiom (" + f->name + ") fails");
  auto [meet_part, join_part] = boolean_parts(a);
  if (!meet_part.audit.ok || !join_part.audit.ok)
    throw Error(ErrorKind::invariant, "a Boolean part fails: " +
                                          (meet_part.audit.ok ? join_part.audit.failure : meet_part.audit.failure));
  const std::size_t n = a.size();
  AdjointMaps m;
  m.carrier = a.carrier;
  m.left = meet_part.algebra;
  m.right = join_part.algebra;
  auto local_of = [](const std::vector<std::size_t>& elems, std::size_t x) {
    return static_cast<std::size_t>(std::lower_bound(elems.begin(), elems.end(), x) - elems.begin());
  };
  for (std::size_t x = 0; x < n; ++x) {
    m.r.push_back(local_of(meet_part.elements, a.meet(x, x)));
    m.r2.push_back(local_of(join_part.elements, a.join(x, x)));
  }
  m.e = meet_part.elements;
  m.e2 = join_part.elements;

  if (!build_from_booleans(m).same_tables(a))
    throw Error(ErrorKind::invariant, "canonical maps do not rebuild the algebra");
  auto ch = check_characterization(m);
  if (!ch.a.holds || !ch.b.holds || !ch.c.holds)
    throw Error(ErrorKind::invariant, "canonical maps violate the characterization conditions");
  return m;
}

}  // namespace ctxlogic
