#include "doctest.h"
#include "support.hpp"

#include "ctxlogic/error.hpp"

using namespace ctxlogic;

namespace {

Formula p1() { return Formula::atom("p", Sort::s1); }
Formula q1() { return Formula::atom("q", Sort::s1); }
Formula q2() { return Formula::atom("q", Sort::s2); }

}  // namespace

TEST_CASE("parse: modal prefixes, sorts and grades") {
  Formula f = parse("[p] q@2");
  REQUIRE(f.kind() == NodeKind::modal);
  CHECK(f.modality().direction == Direction::p);
  CHECK(f.modality().style == Style::box);
  CHECK(f.modality().base == Base::incidence);
  CHECK(f.child() == q2());
  CHECK(f.sort() == Sort::s1);

  Formula g = parse("[[o:2]] p@1");
  CHECK(g.modality().style == Style::window);
  CHECK(g.modality().grade == 2u);
  CHECK(g.sort() == Sort::s2);

  Formula w = parse("[o>=2/3] p@1");
  CHECK(*w.modality().weight == Rational(2, 3));

  Formula e = parse("<-o:2!> p@1");
  CHECK(e.modality().exact);
  CHECK(e.modality().base == Base::complement);

  CHECK(parse("[[o]]~ p@1").modality().style == Style::window_dual);
  Formula wn = parse("[[o]] ~p@1");
  CHECK(wn.modality().style == Style::window);
  CHECK(wn.child().kind() == NodeKind::negation);
  CHECK(parse("<p>=1/2> a@2").modality().weight == Rational(1, 2));
}

TEST_CASE("parse: precedence and associativity") {
  CHECK(parse("p@1 -> q@1 -> p@1") == Formula::implication(p1(), Formula::implication(q1(), p1())));
  CHECK(parse("p@1 & q@1 | p@1") == Formula::disjunction(Formula::conjunction(p1(), q1()), p1()));
  CHECK(parse("~p@1 & q@1") == Formula::conjunction(Formula::negation(p1()), q1()));
  CHECK(parse("p@1 <-> q@1 -> p@1") == Formula::biconditional(p1(), Formula::implication(q1(), p1())));
  CHECK(parse("[o] p@1 & [o] q@1") == Formula::conjunction(box(Direction::o, p1()), box(Direction::o, q1())));
}

TEST_CASE("parse: sugar and sort environment") {
  Formula u = parse("[U_o] p@1");
  CHECK(u == Formula::conjunction(box(Direction::o, p1()), window(Direction::o, Formula::negation(p1()))));
  Formula n = parse("N_p(a@2, b@2)");
  CHECK(n == Formula::conjunction(box(Direction::p, Formula::atom("a", Sort::s2)),
                                  window(Direction::p, Formula::negation(Formula::atom("b", Sort::s2)))));
  CHECK(parse("p -> [p] q", {{"p", Sort::s1}, {"q", Sort::s2}}) == Formula::implication(p1(), box(Direction::p, q2())));
}

TEST_CASE("parse: errors") {
  try {
    parse("p@1 -> [[o]]' q@1");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 12);
  }
  CHECK_THROWS_AS(parse("p@1 &"), SyntaxError);
  CHECK_THROWS_AS(parse("[x] p@1"), SyntaxError);
  CHECK_THROWS_AS(parse("<o:0!> p@1"), SyntaxError);
  CHECK_THROWS_AS(parse("[o:1!] p@1"), SyntaxError);
  CHECK_THROWS_AS(parse("[o>=3/2] p@1"), SyntaxError);
  CHECK_THROWS_AS(parse("true & p@1"), SyntaxError);
  try {
    parse("p@1 & q@2");
    FAIL("expected a sort error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::sort);
    CHECK(std::string(e.what()).find("q@2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("[o] q@2"), Error);
  CHECK_THROWS_AS(parse("p"), Error);
}

TEST_CASE("sort_of") {
  CHECK(sort_of(Formula::conjunction(p1(), q1())) == Sort::s1);
  CHECK(sort_of(box(Direction::o, p1())) == Sort::s2);
  CHECK_THROWS_AS(Formula::conjunction(p1(), q2()), Error);
}

TEST_CASE("printing") {
  CHECK(print(parse("p@1->q@1->p@1")) == "p@1 -> q@1 -> p@1");
  CHECK(print(parse("(p@1->q@1)->p@1")) == "(p@1 -> q@1) -> p@1");
  CHECK(print(parse("[[o]]~~p@1")) == "[[o]]~ ~p@1");
  CHECK(print(parse("[o>=4/6](p@1&q@1)")) == "[o>=2/3] (p@1 & q@1)");
  CHECK(print(parse("~<p:1!>true@2")) == "~<p:1!> true@2");
}

TEST_CASE("parse(print(f)) == f on random formulas with every operator") {
  testkit::Gen gen(11);
  testkit::Gen::FormulaOptions opt;
  opt.grades = true;
  opt.weights = true;
  opt.max_depth = 5;
  for (int i = 0; i < 3000; ++i) {
    Formula f = gen.formula(gen.coin() ? Sort::s1 : Sort::s2, opt);
    std::string text = print(f);
    Formula back = parse(text);
    REQUIRE_MESSAGE(back == f, text);
    REQUIRE(print(back) == text);
  }
}

TEST_CASE("desugar examples") {
  CHECK(desugar(parse("[U_o] p@1")) == parse("[o] p@1 & [[o]] ~p@1"));
  CHECK(desugar(parse("<o> p@1")) == parse("~[o] ~p@1"));
  CHECK(desugar(parse("<o:1!> p@1")) == parse("~[o:0] ~p@1 & ~~[o:1] ~p@1"));
  CHECK(desugar(parse("[-o] p@1")) == parse("[[o]] ~p@1"));
  CHECK(desugar(parse("[[-p:2]] a@2")) == parse("[p:2] ~a@2"));
  CHECK(desugar(parse("[[o]]~ p@1")) == parse("~[[o]] ~p@1"));
  // weighted overlined boxes and windows are primitive
  CHECK(desugar(parse("[-o>=1/2] p@1")) == parse("[-o>=1/2] p@1"));
  CHECK(desugar(parse("<-o>=1/2> p@1")) == parse("~[-o>=1/2] ~p@1"));
}

namespace {

bool only_core(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::atom:
    case NodeKind::top:
    case NodeKind::bottom: return true;
    case NodeKind::negation: return only_core(f.child());
    case NodeKind::modal: {
      const auto& d = f.modality();
      bool style_ok = d.style == Style::box || d.style == Style::window;
      bool base_ok = d.base == Base::incidence || d.weight.has_value();
      return style_ok && base_ok && !d.exact && only_core(f.child());
    }
    default: return only_core(f.left()) && only_core(f.right());
  }
}

}  // namespace

TEST_CASE("desugar is idempotent, sort-preserving and leaves only primitive operators") {
  testkit::Gen gen(12);
  testkit::Gen::FormulaOptions opt;
  opt.grades = true;
  opt.weights = true;
  for (int i = 0; i < 2000; ++i) {
    Formula f = gen.formula(gen.coin() ? Sort::s1 : Sort::s2, opt);
    Formula d = desugar(f);
    REQUIRE(d.sort() == f.sort());
    REQUIRE(desugar(d) == d);
    REQUIRE(only_core(d));
  }
}

TEST_CASE("rho translation") {
  CHECK(translate_rho(parse("[[o]] p@1")) == parse("[o] ~p@1"));
  CHECK(translate_rho(p1()) == p1());
  CHECK(translate_rho(parse("[[p]][[o]] p@1")) == parse("[p] ~[o] ~p@1"));
  CHECK_THROWS_AS(translate_rho(parse("[o] p@1")), Error);
  CHECK_THROWS_AS(translate_rho(parse("[[o:1]] p@1")), Error);
  CHECK_THROWS_AS(translate_rho(parse("[[o>=1/2]] p@1")), Error);
  testkit::Gen gen(13);
  testkit::Gen::FormulaOptions opt;
  opt.boxes = false;
  opt.overlines = false;
  opt.only_primitive_styles = true;
  for (int i = 0; i < 500; ++i) {
    Formula f = gen.formula(Sort::s1, opt);
    Formula r = translate_rho(f);
    REQUIRE(r.sort() == f.sort());
    REQUIRE(r.size() >= f.size());
  }
}

TEST_CASE("tau translation") {
  CHECK(translate_tau(parse("[o] p@1")) == parse("[o>=1] p@1"));
  CHECK(translate_tau(p1()) == p1());
  CHECK(translate_tau(parse("[[p]] q@2")) == parse("[[p>=1]] q@2"));
  CHECK(translate_tau(parse("<-o> p@1")) == parse("<-o>=1> p@1"));
  CHECK_THROWS_AS(translate_tau(parse("[o:1] p@1")), Error);
}
