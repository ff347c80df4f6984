#include "ctxlogic/semantics.hpp"

#include "ctxlogic/error.hpp"

namespace ctxlogic {

namespace {

struct Frame {
  const Relation* i;
  const Relation* j;   // window relation
  Relation c;          // (G x M) \ I, used by graded and weighted clauses
  bool weighted_ok;
};

struct Neighbourhoods {
  const std::vector<Bitset>& inc;
  const std::vector<Bitset>& win;
  const std::vector<Bitset>& comp;
};

Neighbourhoods neighbourhoods(const Frame& fr, Direction d) {
  if (d == Direction::o) return {fr.i->cols_view(), fr.j->cols_view(), fr.c.cols_view()};
  return {fr.i->rows_view(), fr.j->rows_view(), fr.c.rows_view()};
}

// ratio |num| / |den| >= c with the vacuous reading for an empty denominator.
bool weighted_test(std::size_t num, std::size_t den, const Rational& c) {
  if (den == 0) return true;
  return ratio_at_least(static_cast<long long>(num), static_cast<long long>(den), c);
}

// Box- and window-style operators; `s` is the truth set of the argument.
Bitset primitive(const ModalDescriptor& d, const Bitset& s, const Frame& fr) {
  const auto n = neighbourhoods(fr, d.direction);
  const std::size_t out_size = n.inc.size();
  Bitset out(out_size);
  const bool box = d.style == Style::box;
  const bool bar = d.base == Base::complement;

  if (d.weight) {
    if (!fr.weighted_ok)
      throw Error(ErrorKind::unsupported,
                  "weighted modality '" + print(d) + "' on a model whose I and J overlap");
    const std::size_t s_count = s.count();
    for (std::size_t w = 0; w < out_size; ++w) {
      const Bitset& rel = bar ? n.comp[w] : n.inc[w];
      const std::size_t hit = (rel & s).count();
      out[w] = weighted_test(hit, box ? rel.count() : s_count, *d.weight);
    }
    return out;
  }

  if (d.grade) {
    const std::size_t g = *d.grade;
    for (std::size_t w = 0; w < out_size; ++w) {
      std::size_t k;
      if (box && !bar) k = (n.inc[w] - s).count();        // |I(~f)|
      else if (!box && !bar) k = (n.comp[w] & s).count();  // |I-bar(f)|
      else if (box && bar) k = (n.comp[w] - s).count();   // |I-bar(~f)|
      else k = (n.inc[w] & s).count();                     // |I(f)|
      out[w] = k <= g;
    }
    return out;
  }

  for (std::size_t w = 0; w < out_size; ++w) {
    if (box && !bar) out[w] = n.inc[w].is_subset_of(s);
    else if (!box && !bar) out[w] = !n.win[w].intersects(s);
    else if (box && bar) out[w] = n.win[w].is_subset_of(s);
    else out[w] = !n.inc[w].intersects(s);
  }
  return out;
}

Bitset eval_modal(const ModalDescriptor& d, const Bitset& s, const Frame& fr) {
  if (d.exact) {
    ModalDescriptor lower = d, upper = d;
    lower.exact = upper.exact = false;
    lower.grade = *d.grade - 1;
    return eval_modal(lower, s, fr) - eval_modal(upper, s, fr);
  }
  if (d.style == Style::box || d.style == Style::window) return primitive(d, s, fr);
  ModalDescriptor dual = d;
  dual.style = d.style == Style::diamond ? Style::box : Style::window;
  Bitset r = primitive(dual, ~s, fr);
  r.flip();
  return r;
}

class Evaluator {
 public:
  Evaluator(const Frame& fr, const Valuation& v, std::size_t n_obj, std::size_t n_attr)
      : fr_(fr), v_(v), n_obj_(n_obj), n_attr_(n_attr) {}

  Bitset eval(const Formula& f) const {
    const std::size_t n = f.sort() == Sort::s1 ? n_obj_ : n_attr_;
    switch (f.kind()) {
      case NodeKind::atom: {
        auto it = v_.find(f.as_atom());
        if (it == v_.end())
          throw Error(ErrorKind::malformed_input, "atom '" + print(f) + "' is not covered by the valuation");
        return it->second;
      }
      case NodeKind::top: return full_set(n);
      case NodeKind::bottom: return Bitset(n);
      case NodeKind::negation: return ~eval(f.child());
      case NodeKind::conjunction: return eval(f.left()) & eval(f.right());
      case NodeKind::disjunction: return eval(f.left()) | eval(f.right());
      case NodeKind::implication: return ~eval(f.left()) | eval(f.right());
      case NodeKind::biconditional: {
        Bitset x = eval(f.left()) ^ eval(f.right());
        x.flip();
        return x;
      }
      case NodeKind::modal: return eval_modal(f.modality(), eval(f.child()), fr_);
    }
    return Bitset(n);
  }

 private:
  const Frame& fr_;
  const Valuation& v_;
  std::size_t n_obj_, n_attr_;
};

Frame context_frame(const FormalContext& k, const Relation& complement) {
  return Frame{&k.incidence(), &complement, complement, true};
}

void check_world(World w, const Formula& f, std::size_t size) {
  if (w.sort != f.sort())
    throw Error(ErrorKind::sort, std::string("world of sort ") + to_string(w.sort) + " but formula '" + print(f) +
                                     "' has sort " + to_string(f.sort()));
  if (w.index >= size) throw Error(ErrorKind::malformed_input, "world out of range");
}

}  // namespace

SortedSet truth_set(const ContextModel& m, const Formula& f) {
  Relation comp = m.context.incidence().complement();
  Frame fr = context_frame(m.context, comp);
  Evaluator ev(fr, m.valuation, m.context.num_objects(), m.context.num_attributes());
  return {f.sort(), ev.eval(f)};
}

SortedSet truth_set(const GeneralizedModel& m, const Formula& f) {
  Frame fr{&m.i(), &m.j(), m.i().complement(), m.disjoint()};
  Evaluator ev(fr, m.valuation(), m.num_objects(), m.num_attributes());
  return {f.sort(), ev.eval(f)};
}

bool satisfies(const ContextModel& m, World w, const Formula& f) {
  check_world(w, f, m.context.universe_size(w.sort));
  return truth_set(m, f).members[w.index];
}

bool satisfies(const GeneralizedModel& m, World w, const Formula& f) {
  check_world(w, f, m.context().universe_size(w.sort));
  return truth_set(m, f).members[w.index];
}

std::optional<std::uint64_t> valuation_count(const FormalContext& k, const std::vector<Formula>& formulas) {
  std::set<Atom> atoms;
  for (const auto& f : formulas) collect_atoms(f, atoms);
  std::size_t bits = 0;
  for (const auto& a : atoms) bits += k.universe_size(a.sort);
  if (bits >= 64) return std::nullopt;
  return std::uint64_t{1} << bits;
}

ValidityResult local_consequence(const FormalContext& k, const std::vector<Formula>& premises, const Formula& f,
                                 std::uint64_t budget) {
  for (const auto& p : premises)
    if (p.sort() != f.sort())
      throw Error(ErrorKind::sort, "premise '" + print(p) + "' and conclusion '" + print(f) + "' differ in sort");

  std::vector<Formula> all = premises;
  all.push_back(f);
  ValidityResult res;
  auto total = valuation_count(k, all);
  if (!total || *total > budget) {
    res.status = ValidityResult::Status::budget_exceeded;
    return res;
  }

  std::set<Atom> atom_set;
  for (const auto& g : all) collect_atoms(g, atom_set);
  std::vector<Atom> atoms(atom_set.begin(), atom_set.end());

  Relation comp = k.incidence().complement();
  Frame fr = context_frame(k, comp);
  Valuation v;
  for (const auto& a : atoms) v[a] = Bitset(k.universe_size(a.sort));
  const std::size_t n = k.universe_size(f.sort());

  for (std::uint64_t code = 0; code < *total; ++code) {
    std::uint64_t rest = code;
    for (const auto& a : atoms) {
      const std::size_t width = k.universe_size(a.sort);
      v[a] = from_code(width, width == 0 ? 0 : rest & ((std::uint64_t{1} << width) - 1));
      rest = width == 0 ? rest : rest >> width;
    }
    Evaluator ev(fr, v, k.num_objects(), k.num_attributes());
    Bitset holds = full_set(n);
    for (const auto& p : premises) holds &= ev.eval(p);
    Bitset bad = holds - ev.eval(f);
    ++res.valuations_checked;
    if (bad.any()) {
      res.status = ValidityResult::Status::invalid;
      res.countervaluation = v;
      res.counterworld = World{f.sort(), bad.find_first()};
      return res;
    }
  }
  return res;
}

ValidityResult frame_valid(const FormalContext& k, const Formula& f, std::uint64_t budget) {
  return local_consequence(k, {}, f, budget);
}

}  // namespace ctxlogic
