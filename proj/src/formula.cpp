#include "ctxlogic/formula.hpp"

#include "ctxlogic/error.hpp"

#include <algorithm>

namespace ctxlogic {

void ModalDescriptor::validate() const {
  if (grade && weight) throw Error(ErrorKind::malformed_input, "a modality cannot carry both a grade and a weight");
  if (weight && (*weight < 0 || *weight > 1))
    throw Error(ErrorKind::range, "weight " + to_string(*weight) + " outside [0,1]");
  if (exact && !(grade && *grade >= 1 && style == Style::diamond))
    throw Error(ErrorKind::malformed_input, "exact count requires a diamond with grade >= 1");
}

namespace {

std::shared_ptr<FormulaNode> make_node(NodeKind kind, Sort sort) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = kind;
  n->sort = sort;
  return n;
}

const char* binary_symbol(NodeKind k) {
  switch (k) {
    case NodeKind::conjunction: return "&";
    case NodeKind::disjunction: return "|";
    case NodeKind::implication: return "->";
    case NodeKind::biconditional: return "<->";
    default: return "?";
  }
}

}  // namespace

Formula Formula::atom(std::string name, Sort sort) {
  auto n = make_node(NodeKind::atom, sort);
  n->name = std::move(name);
  return Formula(n);
}

Formula Formula::top(Sort sort) { return Formula(make_node(NodeKind::top, sort)); }
Formula Formula::bottom(Sort sort) { return Formula(make_node(NodeKind::bottom, sort)); }

Formula Formula::negation(const Formula& f) {
  auto n = make_node(NodeKind::negation, f.sort());
  n->children = {f};
  return Formula(n);
}

Formula Formula::binary(NodeKind kind, const Formula& a, const Formula& b) {
  if (a.sort() != b.sort())
    throw Error(ErrorKind::sort, std::string("sort mismatch in '") + binary_symbol(kind) + "': '" + print(a) +
                                     "' has sort " + to_string(a.sort()) + " but '" + print(b) + "' has sort " +
                                     to_string(b.sort()));
  auto n = make_node(kind, a.sort());
  n->children = {a, b};
  return Formula(n);
}

Formula Formula::conjunction(const Formula& a, const Formula& b) { return binary(NodeKind::conjunction, a, b); }
Formula Formula::disjunction(const Formula& a, const Formula& b) { return binary(NodeKind::disjunction, a, b); }
Formula Formula::implication(const Formula& a, const Formula& b) { return binary(NodeKind::implication, a, b); }
Formula Formula::biconditional(const Formula& a, const Formula& b) { return binary(NodeKind::biconditional, a, b); }

Formula Formula::modal(const ModalDescriptor& d, const Formula& f) {
  d.validate();
  if (f.sort() != d.input_sort())
    throw Error(ErrorKind::sort, "modality '" + print(d) + "' expects a formula of sort " +
                                     to_string(d.input_sort()) + " but '" + print(f) + "' has sort " +
                                     to_string(f.sort()));
  auto n = make_node(NodeKind::modal, d.output_sort());
  n->modality = d;
  n->children = {f};
  return Formula(n);
}

NodeKind Formula::kind() const { return node_->kind; }
Sort Formula::sort() const { return node_->sort; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::child() const { return node_->children.at(0); }
const Formula& Formula::left() const { return node_->children.at(0); }
const Formula& Formula::right() const { return node_->children.at(1); }
const ModalDescriptor& Formula::modality() const { return node_->modality; }

bool Formula::is_binary() const {
  switch (kind()) {
    case NodeKind::conjunction:
    case NodeKind::disjunction:
    case NodeKind::implication:
    case NodeKind::biconditional: return true;
    default: return false;
  }
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth());
  return node_->children.empty() ? 0 : d + 1;
}

std::size_t Formula::size() const {
  std::size_t s = 1;
  for (const auto& c : node_->children) s += c.size();
  return s;
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  const auto& a = *node_;
  const auto& b = *o.node_;
  if (a.kind != b.kind || a.sort != b.sort) return false;
  if (a.kind == NodeKind::atom) return a.name == b.name;
  if (a.kind == NodeKind::modal && a.modality != b.modality) return false;
  return a.children == b.children;
}

Sort sort_of(const Formula& f) { return f.sort(); }

void collect_atoms(const Formula& f, std::set<Atom>& out) {
  switch (f.kind()) {
    case NodeKind::atom: out.insert(f.as_atom()); return;
    case NodeKind::top:
    case NodeKind::bottom: return;
    case NodeKind::negation:
    case NodeKind::modal: collect_atoms(f.child(), out); return;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
  }
}

std::set<Atom> atoms_of(const Formula& f) {
  std::set<Atom> out;
  collect_atoms(f, out);
  return out;
}

namespace {

template <class Pred>
bool any_modal(const Formula& f, Pred pred) {
  switch (f.kind()) {
    case NodeKind::atom:
    case NodeKind::top:
    case NodeKind::bottom: return false;
    case NodeKind::negation: return any_modal(f.child(), pred);
    case NodeKind::modal: return pred(f.modality()) || any_modal(f.child(), pred);
    default: return any_modal(f.left(), pred) || any_modal(f.right(), pred);
  }
}

}  // namespace

bool has_modality(const Formula& f) {
  return any_modal(f, [](const ModalDescriptor&) { return true; });
}
bool uses_weights(const Formula& f) {
  return any_modal(f, [](const ModalDescriptor& d) { return d.weight.has_value(); });
}
bool uses_grades(const Formula& f) {
  return any_modal(f, [](const ModalDescriptor& d) { return d.grade.has_value(); });
}

// ---------------------------------------------------------------- printing

namespace {

int precedence(NodeKind k) {
  switch (k) {
    case NodeKind::biconditional: return 1;
    case NodeKind::implication: return 2;
    case NodeKind::disjunction: return 3;
    case NodeKind::conjunction: return 4;
    case NodeKind::negation:
    case NodeKind::modal: return 5;
    default: return 6;
  }
}

void print_to(const Formula& f, std::string& out);

void print_operand(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  print_to(f, out);
  if (parens) out += ')';
}

void print_to(const Formula& f, std::string& out) {
  const char* suffix = f.sort() == Sort::s1 ? "@1" : "@2";
  switch (f.kind()) {
    case NodeKind::atom:
      out += f.name();
      out += suffix;
      return;
    case NodeKind::top:
      out += "true";
      out += suffix;
      return;
    case NodeKind::bottom:
      out += "false";
      out += suffix;
      return;
    case NodeKind::negation:
      out += '~';
      print_operand(f.child(), precedence(f.child().kind()) < 5, out);
      return;
    case NodeKind::modal:
      out += print(f.modality());
      out += ' ';
      print_operand(f.child(), precedence(f.child().kind()) < 5, out);
      return;
    default: {
      const int p = precedence(f.kind());
      const bool right_assoc = f.kind() == NodeKind::implication;
      const int pl = precedence(f.left().kind());
      const int pr = precedence(f.right().kind());
      print_operand(f.left(), pl < p || (pl == p && right_assoc), out);
      out += ' ';
      out += binary_symbol(f.kind());
      out += ' ';
      print_operand(f.right(), pr < p || (pr == p && !right_assoc), out);
    }
  }
}

}  // namespace

std::string print(const ModalDescriptor& d) {
  std::string inner;
  if (d.base == Base::complement) inner += '-';
  inner += d.direction == Direction::o ? 'o' : 'p';
  if (d.grade) {
    inner += ':' + std::to_string(*d.grade);
    if (d.exact) inner += '!';
  } else if (d.weight) {
    inner += ">=" + to_string(*d.weight);
  }
  switch (d.style) {
    case Style::box: return "[" + inner + "]";
    case Style::diamond: return "<" + inner + ">";
    case Style::window: return "[[" + inner + "]]";
    case Style::window_dual: return "[[" + inner + "]]~";
  }
  return inner;
}

std::string print(const Formula& f) {
  std::string out;
  print_to(f, out);
  return out;
}

// ---------------------------------------------------------------- builders

ModalDescriptor modal_op(Direction d, Style s, Base b) {
  ModalDescriptor m;
  m.direction = d;
  m.style = s;
  m.base = b;
  return m;
}

Formula box(Direction d, const Formula& f) { return Formula::modal(modal_op(d, Style::box), f); }
Formula diamond(Direction d, const Formula& f) { return Formula::modal(modal_op(d, Style::diamond), f); }
Formula window(Direction d, const Formula& f) { return Formula::modal(modal_op(d, Style::window), f); }
Formula window_dual(Direction d, const Formula& f) {
  return Formula::modal(modal_op(d, Style::window_dual), f);
}

Formula n_operator(Direction d, const Formula& f, const Formula& g) {
  return Formula::conjunction(box(d, f), window(d, Formula::negation(g)));
}

Formula universal(Direction d, const Formula& f) { return n_operator(d, f, f); }

// ---------------------------------------------------------------- rewriting

namespace {

template <class Fn>
Formula rebuild(const Formula& f, Fn&& on_modal) {
  switch (f.kind()) {
    case NodeKind::atom:
    case NodeKind::top:
    case NodeKind::bottom: return f;
    case NodeKind::negation: return Formula::negation(rebuild(f.child(), on_modal));
    case NodeKind::modal: return on_modal(f.modality(), rebuild(f.child(), on_modal));
    default: return Formula::binary(f.kind(), rebuild(f.left(), on_modal), rebuild(f.right(), on_modal));
  }
}

ModalDescriptor with_style(ModalDescriptor d, Style s, Base b) {
  d.style = s;
  d.base = b;
  d.exact = false;
  return d;
}

Formula desugar_modal(ModalDescriptor d, const Formula& arg) {
  using F = Formula;
  if (d.exact) {
    // <n!> f  :=  <n-1> f & ~<n> f
    ModalDescriptor lower = d, upper = d;
    lower.exact = upper.exact = false;
    lower.grade = *d.grade - 1;
    return F::conjunction(desugar_modal(lower, arg), F::negation(desugar_modal(upper, arg)));
  }
  if (d.weight) {
    switch (d.style) {
      case Style::box:
      case Style::window: return F::modal(d, arg);
      case Style::diamond:
        return F::negation(F::modal(with_style(d, Style::box, d.base), F::negation(arg)));
      case Style::window_dual:
        return F::negation(F::modal(with_style(d, Style::window, d.base), F::negation(arg)));
    }
  }
  if (d.base == Base::incidence) {
    switch (d.style) {
      case Style::box:
      case Style::window: return F::modal(d, arg);
      case Style::diamond:
        return F::negation(F::modal(with_style(d, Style::box, Base::incidence), F::negation(arg)));
      case Style::window_dual:
        return F::negation(F::modal(with_style(d, Style::window, Base::incidence), F::negation(arg)));
    }
  }
  // Overlined, ungraded or graded: box-bar f := window ~f ; window-bar f := box ~f.
  switch (d.style) {
    case Style::box: return F::modal(with_style(d, Style::window, Base::incidence), F::negation(arg));
    case Style::window: return F::modal(with_style(d, Style::box, Base::incidence), F::negation(arg));
    case Style::diamond:
      return F::negation(desugar_modal(with_style(d, Style::box, Base::complement), F::negation(arg)));
    case Style::window_dual:
      return F::negation(desugar_modal(with_style(d, Style::window, Base::complement), F::negation(arg)));
  }
  return F::modal(d, arg);
}

}  // namespace

Formula desugar(const Formula& f) { return rebuild(f, desugar_modal); }

Formula translate_rho(const Formula& f) {
  return rebuild(f, [](const ModalDescriptor& d, const Formula& arg) {
    if (d.style != Style::window || d.base != Base::incidence || !d.plain())
      throw Error(ErrorKind::unsupported,
                  "rho is defined on the window fragment only; found '" + print(d) + "'");
    return Formula::modal(modal_op(d.direction, Style::box), Formula::negation(arg));
  });
}

Formula translate_tau(const Formula& f) {
  return rebuild(f, [](const ModalDescriptor& d, const Formula& arg) {
    if (!d.plain())
      throw Error(ErrorKind::unsupported, "tau expects grade- and weight-free input; found '" + print(d) + "'");
    ModalDescriptor w = d;
    w.weight = Rational(1);
    return Formula::modal(w, arg);
  });
}

}  // namespace ctxlogic
