#include "ctxlogic/io.hpp"

#include "ctxlogic/error.hpp"
#include "ctxlogic/transforms.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ctxlogic {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorKind::io, "cannot write '" + path + "'");
}

void reject_reserved_ids(const std::vector<std::string>& ids, const char* what) {
  for (const auto& id : ids)
    if (id.find(kPrimeMarker) != std::string::npos)
      throw Error(ErrorKind::malformed_input,
                  std::string(what) + " id '" + id + "' contains the reserved prime marker");
}

// ---------------------------------------------------------------- CXT

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) {
    if (cur.back() == '\r') cur.pop_back();
    lines.push_back(cur);
  }
  return lines;
}

[[noreturn]] void cxt_error(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::malformed_input, "cxt line " + std::to_string(line) + ": " + msg);
}

std::size_t cxt_count(const std::vector<std::string>& lines, std::size_t i, const char* what) {
  if (i >= lines.size()) cxt_error(i + 1, std::string("missing ") + what);
  const std::string& s = lines[i];
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    cxt_error(i + 1, std::string("expected ") + what + ", got '" + s + "'");
  return std::stoul(s);
}

}  // namespace

FormalContext parse_cxt(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "B") cxt_error(1, "expected 'B'");
  // line 2 is the context name and is ignored
  if (lines.size() < 2) cxt_error(2, "missing name line");
  const std::size_t n = cxt_count(lines, 2, "number of objects");
  const std::size_t m = cxt_count(lines, 3, "number of attributes");
  if (lines.size() <= 4 || !lines[4].empty()) cxt_error(5, "expected a blank line");
  std::size_t i = 5;
  std::vector<std::string> objects, attributes;
  for (std::size_t k = 0; k < n; ++k, ++i) {
    if (i >= lines.size()) cxt_error(i + 1, "missing object name");
    objects.push_back(lines[i]);
  }
  for (std::size_t k = 0; k < m; ++k, ++i) {
    if (i >= lines.size()) cxt_error(i + 1, "missing attribute name");
    attributes.push_back(lines[i]);
  }
  Relation r(n, m);
  for (std::size_t g = 0; g < n; ++g, ++i) {
    if (i >= lines.size()) cxt_error(i + 1, "missing incidence row");
    const std::string& row = lines[i];
    if (row.size() != m)
      cxt_error(i + 1, "row has " + std::to_string(row.size()) + " cells, expected " + std::to_string(m));
    for (std::size_t a = 0; a < m; ++a) {
      const char ch = row[a];
      if (ch == 'X' || ch == 'x') r.set(g, a);
      else if (ch != '.') cxt_error(i + 1, std::string("illegal character '") + ch + "' in column " + std::to_string(a + 1));
    }
  }
  for (; i < lines.size(); ++i)
    if (!lines[i].empty()) cxt_error(i + 1, "unexpected content after the incidence rows");
  reject_reserved_ids(objects, "object");
  reject_reserved_ids(attributes, "attribute");
  for (const auto* ids : {&objects, &attributes})
    for (const auto& id : *ids)
      if (id.empty()) throw Error(ErrorKind::malformed_input, "cxt: empty object or attribute name");
  return FormalContext(objects, attributes, r);
}

std::string write_cxt(const FormalContext& k) {
  std::string out = "B\n\n" + std::to_string(k.num_objects()) + "\n" + std::to_string(k.num_attributes()) + "\n\n";
  for (const auto& g : k.objects()) out += g + "\n";
  for (const auto& m : k.attributes()) out += m + "\n";
  for (std::size_t g = 0; g < k.num_objects(); ++g) {
    for (std::size_t m = 0; m < k.num_attributes(); ++m) out += k.incidence().test(g, m) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

FormalContext load_cxt(const std::string& path) { return parse_cxt(read_file(path)); }
void save_cxt(const std::string& path, const FormalContext& k) { write_file(path, write_cxt(k)); }

// ---------------------------------------------------------------- model JSON

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& msg) {
  throw Error(ErrorKind::malformed_input, where + ": " + msg);
}

void only_keys(const Json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) schema_error(where, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; }))
      schema_error(where, "unknown key '" + it.key() + "'");
}

const Json& required(const Json& j, const std::string& where, const char* key) {
  if (!j.contains(key)) schema_error(where, std::string("missing key '") + key + "'");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) schema_error(where, "expected an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::size_t index_in(const FormalContext& k, Sort s, const std::string& id, const std::string& where) {
  auto i = k.find(s, id);
  if (!i) schema_error(where, "unknown " + std::string(s == Sort::s1 ? "object" : "attribute") + " '" + id + "'");
  return *i;
}

Relation pair_relation(const Json& j, const std::vector<std::string>& objects,
                       const std::vector<std::string>& attributes, const std::string& where) {
  FormalContext probe(objects, attributes, Relation(objects.size(), attributes.size()));
  if (!j.is_array()) schema_error(where, "expected an array of [object, attribute] pairs");
  Relation r(objects.size(), attributes.size());
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      schema_error(where, "expected an array of [object, attribute] pairs");
    r.set(index_in(probe, Sort::s1, p[0].get<std::string>(), where),
          index_in(probe, Sort::s2, p[1].get<std::string>(), where));
  }
  return r;
}

Json pairs_json(const Relation& r, const std::vector<std::string>& objects, const std::vector<std::string>& attributes) {
  Json out = Json::array();
  for (std::size_t g = 0; g < r.rows(); ++g)
    for (std::size_t m = 0; m < r.cols(); ++m)
      if (r.test(g, m)) out.push_back(Json::array({objects[g], attributes[m]}));
  return out;
}

Json valuation_json(const Valuation& v, const FormalContext& k) {
  Json out = Json::object();
  for (const auto& [atom, bits] : v) {
    Json ids = Json::array();
    for (auto x : members(bits)) ids.push_back(k.universe(atom.sort)[x]);
    out[atom.name + "@" + (atom.sort == Sort::s1 ? "1" : "2")] = ids;
  }
  return out;
}

}  // namespace

ContextModel LoadedModel::context_model() const {
  if (j) throw Error(ErrorKind::unsupported, "model has a separate J relation; a context model was expected");
  return {context, valuation};
}

GeneralizedModel LoadedModel::generalized_model() const {
  if (!j) return GeneralizedModel::from_context_model({context, valuation});
  return GeneralizedModel::make(context, *j, valuation);
}

LoadedModel model_from_json(const Json& j) {
  only_keys(j, "model", {"objects", "attributes", "incidence", "j_relation", "valuation"});
  const auto objects = string_list(required(j, "model", "objects"), "model.objects");
  const auto attributes = string_list(required(j, "model", "attributes"), "model.attributes");
  reject_reserved_ids(objects, "object");
  reject_reserved_ids(attributes, "attribute");
  LoadedModel out;
  out.context = FormalContext(objects, attributes,
                              pair_relation(required(j, "model", "incidence"), objects, attributes, "model.incidence"));
  if (j.contains("j_relation"))
    out.j = pair_relation(j.at("j_relation"), objects, attributes, "model.j_relation");
  if (j.contains("valuation")) {
    const Json& v = j.at("valuation");
    if (!v.is_object()) schema_error("model.valuation", "expected an object mapping atoms to id lists");
    for (auto it = v.begin(); it != v.end(); ++it) {
      const std::string where = "model.valuation['" + it.key() + "']";
      Formula a = Formula::top(Sort::s1);
      try {
        a = parse(it.key());
      } catch (const Error& e) {
        schema_error(where, std::string("not an atom with a sort suffix: ") + e.what());
      }
      if (a.kind() != NodeKind::atom || it.key().find('@') == std::string::npos)
        schema_error(where, "keys must be atoms with a sort suffix such as p@1");
      const Atom atom = a.as_atom();
      if (out.valuation.count(atom)) schema_error(where, "duplicate atom");
      Bitset bits(out.context.universe_size(atom.sort));
      for (const auto& id : string_list(it.value(), where)) bits.set(index_in(out.context, atom.sort, id, where));
      out.valuation[atom] = bits;
    }
  }
  if (out.j) (void)GeneralizedModel::make(out.context, *out.j, out.valuation);  // totality check
  return out;
}

LoadedModel load_model_json(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::malformed_input, "'" + path + "' is not valid JSON: " + e.what());
  }
  return model_from_json(j);
}

Json model_to_json(const ContextModel& m) {
  Json out;
  out["objects"] = m.context.objects();
  out["attributes"] = m.context.attributes();
  out["incidence"] = pairs_json(m.context.incidence(), m.context.objects(), m.context.attributes());
  out["valuation"] = valuation_json(m.valuation, m.context);
  return out;
}

Json model_to_json(const GeneralizedModel& m) {
  Json out;
  out["objects"] = m.objects();
  out["attributes"] = m.attributes();
  out["incidence"] = pairs_json(m.i(), m.objects(), m.attributes());
  out["j_relation"] = pairs_json(m.j(), m.objects(), m.attributes());
  out["valuation"] = valuation_json(m.valuation(), m.context());
  return out;
}

// ---------------------------------------------------------------- algebra JSON

FiniteAlgebra algebra_from_json(const Json& j) {
  only_keys(j, "algebra", {"carrier", "meet", "join", "neg", "opp", "top", "bottom"});
  FiniteAlgebra a;
  a.carrier = string_list(required(j, "algebra", "carrier"), "algebra.carrier");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < a.carrier.size(); ++i)
    if (!index.emplace(a.carrier[i], i).second)
      schema_error("algebra.carrier", "duplicate element '" + a.carrier[i] + "'");
  const std::size_t n = a.carrier.size();
  auto element = [&](const Json& x, const std::string& where) {
    if (!x.is_string()) schema_error(where, "expected an element name");
    auto it = index.find(x.get<std::string>());
    if (it == index.end()) schema_error(where, "unknown element '" + x.get<std::string>() + "'");
    return it->second;
  };
  auto table = [&](const char* key, std::vector<std::size_t>& out) {
    const std::string where = std::string("algebra.") + key;
    const Json& t = required(j, "algebra", key);
    if (!t.is_array() || t.size() != n) schema_error(where, "expected " + std::to_string(n) + " rows");
    for (const auto& row : t) {
      if (!row.is_array() || row.size() != n) schema_error(where, "expected rows of " + std::to_string(n) + " names");
      for (const auto& x : row) out.push_back(element(x, where));
    }
  };
  auto unary = [&](const char* key, std::vector<std::size_t>& out) {
    const std::string where = std::string("algebra.") + key;
    const Json& t = required(j, "algebra", key);
    if (!t.is_array() || t.size() != n) schema_error(where, "expected " + std::to_string(n) + " names");
    for (const auto& x : t) out.push_back(element(x, where));
  };
  table("meet", a.meet_table);
  table("join", a.join_table);
  unary("neg", a.neg_table);
  unary("opp", a.opp_table);
  a.top = element(required(j, "algebra", "top"), "algebra.top");
  a.bottom = element(required(j, "algebra", "bottom"), "algebra.bottom");
  a.validate();
  return a;
}

Json algebra_to_json(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  Json out;
  out["carrier"] = a.carrier;
  for (const char* key : {"meet", "join"}) {
    Json t = Json::array();
    for (std::size_t x = 0; x < n; ++x) {
      Json row = Json::array();
      for (std::size_t y = 0; y < n; ++y)
        row.push_back(a.carrier[std::string(key) == "meet" ? a.meet(x, y) : a.join(x, y)]);
      t.push_back(row);
    }
    out[key] = t;
  }
  Json neg = Json::array(), opp = Json::array();
  for (std::size_t x = 0; x < n; ++x) {
    neg.push_back(a.carrier[a.neg(x)]);
    opp.push_back(a.carrier[a.opp(x)]);
  }
  out["neg"] = neg;
  out["opp"] = opp;
  out["top"] = a.carrier[a.top];
  out["bottom"] = a.carrier[a.bottom];
  return out;
}

// ---------------------------------------------------------------- lattices

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const ConceptLattice& l) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = l.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !l.leq(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && l.leq(i, k) && l.leq(k, j)) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

namespace {

Json ids_json(const std::vector<std::string>& universe, const Bitset& b) {
  Json out = Json::array();
  for (auto x : members(b)) out.push_back(universe[x]);
  return out;
}

std::string braces(const std::vector<std::string>& universe, const Bitset& b) {
  std::string out = "{";
  bool first = true;
  for (auto x : members(b)) {
    if (!first) out += ", ";
    out += universe[x];
    first = false;
  }
  return out + "}";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Json lattice_to_json(const FormalContext& k, const ConceptLattice& l) {
  Json out;
  out["kind"] = to_string(l.kind);
  Json concepts = Json::array();
  for (std::size_t i = 0; i < l.size(); ++i) {
    Json c;
    c["index"] = i;
    c["extent"] = ids_json(k.objects(), l.concepts[i].extent);
    c["intent"] = ids_json(k.attributes(), l.concepts[i].intent);
    concepts.push_back(c);
  }
  out["concepts"] = concepts;
  Json edges = Json::array();
  for (auto [lo, hi] : hasse_edges(l)) edges.push_back(Json::array({lo, hi}));
  out["covers"] = edges;
  if (l.size() > 0) {
    out["bottom"] = l.bottom();
    out["top"] = l.top();
  }
  return out;
}

std::string lattice_to_dot(const FormalContext& k, const ConceptLattice& l) {
  std::ostringstream out;
  out << "digraph " << to_string(l.kind) << "_concepts {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < l.size(); ++i)
    out << "  c" << i << " [label=\"" << dot_escape(braces(k.objects(), l.concepts[i].extent)) << "\\n"
        << dot_escape(braces(k.attributes(), l.concepts[i].intent)) << "\"];\n";
  for (auto [lo, hi] : hasse_edges(l)) out << "  c" << lo << " -> c" << hi << ";\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------- reports

Json names_json(const FormalContext& k, const SortedSet& s) { return ids_json(k.universe(s.sort), s.members); }

namespace {

Json witness_json(const FiniteAlgebra& a, const std::vector<std::size_t>& w) {
  Json out = Json::array();
  for (auto x : w) out.push_back(x < a.size() ? Json(a.carrier[x]) : Json(x));
  return out;
}

Json property_json(const FiniteAlgebra& a, const PropertyResult& p) {
  Json out;
  out["holds"] = p.holds;
  if (!p.holds) {
    out["witness"] = witness_json(a, p.witness);
    if (!p.detail.empty()) out["detail"] = p.detail;
  }
  return out;
}

}  // namespace

Json dba_report_to_json(const FiniteAlgebra& a, const DbaReport& r, const std::optional<PropertyResult>& pure,
                        const std::optional<PropertyResult>& fully_contextual) {
  Json out;
  out["size"] = a.size();
  out["all_axioms_pass"] = r.all_pass();
  Json axioms = Json::array();
  for (const auto& ax : r.axioms) {
    Json e;
    e["axiom"] = ax.name;
    e["pass"] = ax.pass;
    if (!ax.pass) e["witness"] = witness_json(a, ax.witness);
    axioms.push_back(e);
  }
  out["axioms"] = axioms;
  if (pure) out["pure"] = property_json(a, *pure);
  if (fully_contextual) out["fully_contextual"] = property_json(a, *fully_contextual);
  return out;
}

Json graded_report_to_json(const std::vector<ClauseResult>& r) {
  Json out = Json::array();
  for (const auto& c : r) {
    Json e;
    e["clause"] = c.clause;
    e["formulas"] = c.formulas;
    e["lhs"] = c.lhs;
    e["rhs"] = c.rhs;
    e["agree"] = c.agree;
    if (c.witness) e["witness"] = *c.witness;
    out.push_back(e);
  }
  return out;
}

Json proof_verdict_to_json(const ProofVerdict& v, ProofSystem system) {
  Json out;
  out["system"] = to_string(system);
  out["accepted"] = v.accepted;
  if (v.first_failure) out["first_failure"] = *v.first_failure;
  Json lines = Json::array();
  for (const auto& l : v.lines) {
    Json e;
    e["line"] = l.number;
    e["ok"] = l.ok;
    if (!l.ok) e["reason"] = l.reason;
    lines.push_back(e);
  }
  out["lines"] = lines;
  return out;
}

Json validity_to_json(const FormalContext& k, const Formula& f, const ValidityResult& r) {
  Json out;
  out["formula"] = print(f);
  switch (r.status) {
    case ValidityResult::Status::valid: out["status"] = "valid"; break;
    case ValidityResult::Status::invalid: out["status"] = "invalid"; break;
    case ValidityResult::Status::budget_exceeded: out["status"] = "budget_exceeded"; break;
  }
  out["valuations_checked"] = r.valuations_checked;
  if (r.countervaluation) out["countervaluation"] = valuation_json(*r.countervaluation, k);
  if (r.counterworld) out["counterworld"] = k.universe(r.counterworld->sort)[r.counterworld->index];
  return out;
}

Json error_to_json(ErrorKind kind, const std::string& message) {
  Json e;
  e["kind"] = to_string(kind);
  e["message"] = message;
  Json out;
  out["error"] = e;
  return out;
}

// ---------------------------------------------------------------- workspace

void Workspace::add_context(const std::string& name, FormalContext k) {
  if (!contexts_.emplace(name, std::move(k)).second)
    throw Error(ErrorKind::malformed_input, "duplicate context name '" + name + "'");
}

void Workspace::add_model(const std::string& name, LoadedModel m) {
  if (!models_.emplace(name, std::move(m)).second)
    throw Error(ErrorKind::malformed_input, "duplicate model name '" + name + "'");
}

void Workspace::add_proof(const std::string& name, Proof p) {
  if (!proofs_.emplace(name, std::move(p)).second)
    throw Error(ErrorKind::malformed_input, "duplicate proof name '" + name + "'");
}

std::string Workspace::load(const std::string& path) {
  const std::filesystem::path p(path);
  const std::string name = p.stem().string(), ext = p.extension().string();
  if (ext == ".cxt") add_context(name, load_cxt(path));
  else if (ext == ".json") add_model(name, load_model_json(path));
  else if (ext == ".prf") add_proof(name, parse_proof(read_file(path)));
  else throw Error(ErrorKind::unsupported, "unknown file type '" + ext + "' for '" + path + "'");
  return name;
}

namespace {

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorKind::malformed_input, std::string("no ") + what + " named '" + name + "'");
  return it->second;
}

template <class Map>
std::vector<std::string> keys(const Map& m) {
  std::vector<std::string> out;
  for (const auto& kv : m) out.push_back(kv.first);
  return out;
}

}  // namespace

const FormalContext& Workspace::context(const std::string& name) const { return lookup(contexts_, name, "context"); }
const LoadedModel& Workspace::model(const std::string& name) const { return lookup(models_, name, "model"); }
const Proof& Workspace::proof(const std::string& name) const { return lookup(proofs_, name, "proof"); }
std::vector<std::string> Workspace::context_names() const { return keys(contexts_); }
std::vector<std::string> Workspace::model_names() const { return keys(models_); }
std::vector<std::string> Workspace::proof_names() const { return keys(proofs_); }

}  // namespace ctxlogic
