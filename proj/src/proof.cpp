#include "ctxlogic/proof.hpp"

#include "ctxlogic/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ctxlogic {

const char* to_string(ProofSystem s) {
  switch (s) {
    case ProofSystem::KB: return "KB";
    case ProofSystem::KF: return "KF";
    case ProofSystem::BM: return "BM";
  }
  return "?";
}

ProofSystem parse_proof_system(const std::string& name) {
  if (name == "KB") return ProofSystem::KB;
  if (name == "KF") return ProofSystem::KF;
  if (name == "BM") return ProofSystem::BM;
  throw Error(ErrorKind::malformed_input, "unknown proof system '" + name + "' (expected KB, KF or BM)");
}

namespace {

bool is_metavariable(const Formula& f) { return f.kind() == NodeKind::atom && !f.name().empty() && f.name()[0] == '?'; }

Formula mv(const char* name, Sort s) { return Formula::atom(std::string("?") + name, s); }
Formula neg(const Formula& f) { return Formula::negation(f); }
Formula imp(const Formula& a, const Formula& b) { return Formula::implication(a, b); }

// The arguments of modalities in direction d have sort input_sort.
Sort arg_sort(Direction d) { return d == Direction::o ? Sort::s1 : Sort::s2; }

AxiomSchema k_box(Direction d) {
  Sort s = arg_sort(d);
  Formula a = mv("phi", s), b = mv("psi", s);
  return {d == Direction::o ? "K_box_o" : "K_box_p", imp(box(d, imp(a, b)), imp(box(d, a), box(d, b)))};
}

AxiomSchema dual(Direction d) {
  Formula a = mv("phi", arg_sort(d));
  return {d == Direction::o ? "Dual_o" : "Dual_p", Formula::biconditional(diamond(d, a), neg(box(d, neg(a))))};
}

// phi -> [p]<o> phi on objects, psi -> [o]<p> psi on attributes.
AxiomSchema b_box(Sort s) {
  Formula a = mv("phi", s);
  if (s == Sort::s1) return {"B_box_1", imp(a, box(Direction::p, diamond(Direction::o, a)))};
  return {"B_box_2", imp(a, box(Direction::o, diamond(Direction::p, a)))};
}

AxiomSchema k_win(Direction d) {
  Sort s = arg_sort(d);
  Formula a = mv("phi1", s), b = mv("phi2", s);
  return {d == Direction::o ? "K_win_o" : "K_win_p",
          imp(window(d, Formula::conjunction(a, neg(b))), imp(window(d, neg(a)), window(d, neg(b))))};
}

AxiomSchema b_win(Sort s) {
  Formula a = mv("phi", s);
  if (s == Sort::s1) return {"B_win_1", imp(a, window(Direction::p, window(Direction::o, a)))};
  return {"B_win_2", imp(a, window(Direction::o, window(Direction::p, a)))};
}

AxiomSchema n_axiom(Direction d) {
  Sort s = arg_sort(d);
  Formula a1 = mv("phi1", s), a2 = mv("phi2", s), b1 = mv("psi1", s), b2 = mv("psi2", s);
  Formula lhs = Formula::conjunction(n_operator(d, a1, a2), n_operator(d, imp(a1, b1), imp(a2, b2)));
  return {d == Direction::o ? "N_o" : "N_p", imp(lhs, n_operator(d, b1, b2))};
}

AxiomSchema u_axiom(Direction d) {
  Direction e = d == Direction::o ? Direction::p : Direction::o;
  Formula a = mv("phi", arg_sort(d));
  return {d == Direction::o ? "U_o" : "U_p", imp(universal(d, a), universal(d, universal(e, universal(d, a))))};
}

std::vector<AxiomSchema> kb_schemas() {
  return {k_box(Direction::o), dual(Direction::o), b_box(Sort::s1),
          k_box(Direction::p), dual(Direction::p), b_box(Sort::s2)};
}

std::vector<AxiomSchema> kf_schemas() {
  return {k_win(Direction::o), b_win(Sort::s1), k_win(Direction::p), b_win(Sort::s2)};
}

std::vector<AxiomSchema> bm_schemas() {
  std::vector<AxiomSchema> out = kb_schemas();
  for (auto& s : kf_schemas()) out.push_back(s);
  for (auto d : {Direction::o, Direction::p}) out.push_back(n_axiom(d));
  for (auto d : {Direction::o, Direction::p}) out.push_back(u_axiom(d));
  return out;
}

bool match_into(const Formula& pat, const Formula& f, Substitution& sub) {
  if (is_metavariable(pat)) {
    if (pat.sort() != f.sort()) return false;
    auto [it, inserted] = sub.emplace(pat.name(), f);
    return inserted || it->second == f;
  }
  if (pat.kind() != f.kind() || pat.sort() != f.sort()) return false;
  switch (pat.kind()) {
    case NodeKind::atom: return pat.name() == f.name();
    case NodeKind::top:
    case NodeKind::bottom: return true;
    case NodeKind::negation: return match_into(pat.child(), f.child(), sub);
    case NodeKind::modal: return pat.modality() == f.modality() && match_into(pat.child(), f.child(), sub);
    default: return match_into(pat.left(), f.left(), sub) && match_into(pat.right(), f.right(), sub);
  }
}

void collect_metavariables(const Formula& f, std::vector<Atom>& out) {
  if (is_metavariable(f)) {
    Atom a = f.as_atom();
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    return;
  }
  switch (f.kind()) {
    case NodeKind::atom:
    case NodeKind::top:
    case NodeKind::bottom: return;
    case NodeKind::negation:
    case NodeKind::modal: collect_metavariables(f.child(), out); return;
    default:
      collect_metavariables(f.left(), out);
      collect_metavariables(f.right(), out);
  }
}

// ---- propositional skeleton

struct Skeleton {
  std::map<std::string, std::size_t> letters;
};

void collect_letters(const Formula& f, Skeleton& sk) {
  switch (f.kind()) {
    case NodeKind::top:
    case NodeKind::bottom: return;
    case NodeKind::atom:
    case NodeKind::modal: sk.letters.emplace(print(f), sk.letters.size()); return;
    case NodeKind::negation: collect_letters(f.child(), sk); return;
    default:
      collect_letters(f.left(), sk);
      collect_letters(f.right(), sk);
  }
}

bool eval_skeleton(const Formula& f, const Skeleton& sk, std::uint64_t assignment) {
  switch (f.kind()) {
    case NodeKind::top: return true;
    case NodeKind::bottom: return false;
    case NodeKind::atom:
    case NodeKind::modal: return (assignment >> sk.letters.at(print(f))) & 1U;
    case NodeKind::negation: return !eval_skeleton(f.child(), sk, assignment);
    case NodeKind::conjunction: return eval_skeleton(f.left(), sk, assignment) && eval_skeleton(f.right(), sk, assignment);
    case NodeKind::disjunction: return eval_skeleton(f.left(), sk, assignment) || eval_skeleton(f.right(), sk, assignment);
    case NodeKind::implication: return !eval_skeleton(f.left(), sk, assignment) || eval_skeleton(f.right(), sk, assignment);
    case NodeKind::biconditional:
      return eval_skeleton(f.left(), sk, assignment) == eval_skeleton(f.right(), sk, assignment);
  }
  return false;
}

// ---- language of each system

std::string language_violation(const Formula& f, ProofSystem sys) {
  switch (f.kind()) {
    case NodeKind::atom:
    case NodeKind::top:
    case NodeKind::bottom: return {};
    case NodeKind::negation: return language_violation(f.child(), sys);
    case NodeKind::modal: {
      const ModalDescriptor& d = f.modality();
      const bool core = d.base == Base::incidence && d.plain();
      const bool boxes = d.style == Style::box || d.style == Style::diamond;
      const bool windows = d.style == Style::window;
      bool ok = core && ((sys != ProofSystem::KF && boxes) || (sys != ProofSystem::KB && windows));
      if (!ok) return "operator '" + print(d) + "' is not in the language of " + to_string(sys);
      return language_violation(f.child(), sys);
    }
    default: {
      std::string l = language_violation(f.left(), sys);
      return l.empty() ? language_violation(f.right(), sys) : l;
    }
  }
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::optional<std::size_t> parse_number(const std::string& tok) {
  if (tok.empty() || tok.size() > 9 || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return std::nullopt;
  return static_cast<std::size_t>(std::stoul(tok));
}

std::optional<Justification> parse_justification(const std::string& text, std::string& error) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(t);
  if (toks.empty()) {
    error = "missing justification";
    return std::nullopt;
  }
  Justification j;
  auto refs_from = [&](std::size_t first) -> bool {
    for (std::size_t i = first; i < toks.size(); ++i) {
      auto n = parse_number(toks[i]);
      if (!n) {
        error = "bad line reference '" + toks[i] + "'";
        return false;
      }
      j.refs.push_back(*n);
    }
    return true;
  };
  const std::string& head = toks[0];
  if (head == "PL" && toks.size() == 1) {
    j.kind = Justification::Kind::pl;
  } else if (head == "AX" && toks.size() == 2) {
    j.kind = Justification::Kind::axiom;
    j.name = toks[1];
  } else if (head == "MP" && toks.size() == 3) {
    j.kind = Justification::Kind::mp;
    if (!refs_from(1)) return std::nullopt;
  } else if (head == "UG" && toks.size() == 3) {
    j.kind = Justification::Kind::ug;
    j.name = toks[1];
    if (!refs_from(2)) return std::nullopt;
  } else {
    error = "unrecognised justification '" + trim(text) + "'";
    return std::nullopt;
  }
  return j;
}

}  // namespace

const std::vector<AxiomSchema>& axiom_schemas(ProofSystem s) {
  static const std::vector<AxiomSchema> kb = kb_schemas(), kf = kf_schemas(), bm = bm_schemas();
  switch (s) {
    case ProofSystem::KB: return kb;
    case ProofSystem::KF: return kf;
    case ProofSystem::BM: return bm;
  }
  return bm;
}

const AxiomSchema* find_schema(const std::string& name) {
  for (const auto& s : axiom_schemas(ProofSystem::BM))
    if (s.name == name) return &s;
  return nullptr;
}

std::optional<Substitution> match_schema(const Formula& pattern, const Formula& f) {
  Substitution sub;
  if (!match_into(pattern, f, sub)) return std::nullopt;
  return sub;
}

Formula instantiate(const Formula& pattern, const Substitution& sub) {
  if (is_metavariable(pattern)) {
    auto it = sub.find(pattern.name());
    if (it == sub.end()) throw Error(ErrorKind::malformed_input, "no formula for metavariable " + pattern.name());
    if (it->second.sort() != pattern.sort())
      throw Error(ErrorKind::sort, "substitution for " + pattern.name() + " has the wrong sort");
    return it->second;
  }
  switch (pattern.kind()) {
    case NodeKind::atom:
    case NodeKind::top:
    case NodeKind::bottom: return pattern;
    case NodeKind::negation: return Formula::negation(instantiate(pattern.child(), sub));
    case NodeKind::modal: return Formula::modal(pattern.modality(), instantiate(pattern.child(), sub));
    default:
      return Formula::binary(pattern.kind(), instantiate(pattern.left(), sub), instantiate(pattern.right(), sub));
  }
}

std::vector<Atom> metavariables(const Formula& pattern) {
  std::vector<Atom> out;
  collect_metavariables(pattern, out);
  return out;
}

std::optional<bool> is_tautology(const Formula& f, std::size_t max_letters) {
  Skeleton sk;
  collect_letters(f, sk);
  if (sk.letters.size() > max_letters) return std::nullopt;
  const std::uint64_t rows = std::uint64_t{1} << sk.letters.size();
  for (std::uint64_t a = 0; a < rows; ++a)
    if (!eval_skeleton(f, sk, a)) return false;
  return true;
}

bool rule_available(ProofSystem s, const std::string& rule) {
  const bool box_rule = rule == "box_o" || rule == "box_p";
  const bool win_rule = rule == "win_o" || rule == "win_p";
  switch (s) {
    case ProofSystem::KB: return box_rule;
    case ProofSystem::KF: return win_rule;
    case ProofSystem::BM: return box_rule || win_rule;
  }
  return false;
}

Proof parse_proof(const std::string& text, const SortEnv& env) {
  Proof proof;
  std::istringstream in(text);
  std::string raw;
  std::size_t text_line = 0;
  while (std::getline(in, raw)) {
    ++text_line;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    ProofLine pl;
    pl.text_line = text_line;
    const auto dot = line.find('.');
    auto label = dot == std::string::npos ? std::nullopt : parse_number(trim(line.substr(0, dot)));
    if (!label) {
      pl.parse_error = "expected a line label 'n.'";
      proof.lines.push_back(std::move(pl));
      continue;
    }
    pl.number = *label;
    const std::string rest = line.substr(dot + 1);
    const auto semi = rest.find(';');
    if (semi == std::string::npos) {
      pl.parse_error = "expected ';' before the justification";
      proof.lines.push_back(std::move(pl));
      continue;
    }
    try {
      pl.formula = parse(rest.substr(0, semi), env);
    } catch (const Error& e) {
      pl.parse_error = std::string("formula: ") + e.what();
    }
    std::string jerr;
    pl.justification = parse_justification(rest.substr(semi + 1), jerr);
    if (pl.parse_error.empty() && !jerr.empty()) pl.parse_error = jerr;
    proof.lines.push_back(std::move(pl));
  }
  return proof;
}

ProofVerdict check_proof(const Proof& proof, ProofSystem system) {
  ProofVerdict verdict;
  std::map<std::size_t, const ProofLine*> by_label;

  for (std::size_t idx = 0; idx < proof.lines.size(); ++idx) {
    const ProofLine& line = proof.lines[idx];
    LineVerdict lv;
    lv.number = line.number != 0 ? line.number : idx + 1;
    auto fail = [&](std::string why) { lv.reason = std::move(why); };

    // Returns the formula on an earlier, well-formed line or records why not.
    auto premise = [&](std::size_t ref) -> const Formula* {
      auto it = by_label.find(ref);
      if (ref >= line.number || it == by_label.end()) {
        fail("dangling reference to line " + std::to_string(ref));
        return nullptr;
      }
      if (!it->second->formula) {
        fail("line " + std::to_string(ref) + " is malformed");
        return nullptr;
      }
      return &*it->second->formula;
    };

    if (!line.parse_error.empty()) {
      fail(line.parse_error);
    } else if (line.number != idx + 1) {
      fail("line label " + std::to_string(line.number) + " out of sequence (expected " + std::to_string(idx + 1) + ")");
    } else if (std::string lang = language_violation(*line.formula, system); !lang.empty()) {
      fail(lang);
    } else {
      const Formula& f = *line.formula;
      const Justification& j = *line.justification;
      switch (j.kind) {
        case Justification::Kind::pl: {
          auto t = is_tautology(f);
          if (!t) fail("too many propositional letters for a truth table");
          else if (!*t) fail("not a propositional tautology");
          break;
        }
        case Justification::Kind::axiom: {
          const auto& schemas = axiom_schemas(system);
          auto it = std::find_if(schemas.begin(), schemas.end(), [&](const AxiomSchema& s) { return s.name == j.name; });
          if (it == schemas.end()) {
            fail(find_schema(j.name) ? "schema " + j.name + " is not part of " + to_string(system)
                                     : "unknown schema " + j.name);
          } else if (!match_schema(it->pattern, f)) {
            fail("not an instance of " + j.name);
          }
          break;
        }
        case Justification::Kind::mp: {
          const Formula* a = premise(j.refs[0]);
          const Formula* b = a ? premise(j.refs[1]) : nullptr;
          if (a && b) {
            auto concludes = [&](const Formula& minor, const Formula& major) {
              return major.kind() == NodeKind::implication && major.left() == minor && major.right() == f;
            };
            if (!concludes(*a, *b) && !concludes(*b, *a))
              fail("MP: neither premise is an implication from the other to this line");
          }
          break;
        }
        case Justification::Kind::ug: {
          if (!rule_available(system, j.name)) {
            fail("rule UG " + j.name + " is not part of " + to_string(system));
            break;
          }
          const Formula* p = premise(j.refs[0]);
          if (!p) break;
          const Direction d = j.name.back() == 'o' ? Direction::o : Direction::p;
          const bool is_box = j.name.rfind("box", 0) == 0;
          if (f.kind() != NodeKind::modal) {
            fail("UG " + j.name + ": conclusion is not modal");
          } else if (is_box) {
            if (f.modality() != modal_op(d, Style::box) || f.child() != *p)
              fail("UG " + j.name + ": expected " + print(box(d, *p)));
          } else {
            if (f.modality() != modal_op(d, Style::window) || Formula::negation(f.child()) != *p)
              fail("UG " + j.name + ": premise must be the negation of the window's argument");
          }
          break;
        }
      }
    }

    lv.ok = lv.reason.empty();
    if (!lv.ok && !verdict.first_failure) verdict.first_failure = lv.number;
    verdict.lines.push_back(std::move(lv));
    if (line.number != 0 && !by_label.count(line.number)) by_label[line.number] = &line;
  }
  verdict.accepted = !proof.lines.empty() && !verdict.first_failure;
  return verdict;
}

}  // namespace ctxlogic
