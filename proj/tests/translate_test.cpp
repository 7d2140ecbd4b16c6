#include "doctest.h"
#include "lmcalc/reduction.hpp"
#include "lmcalc/text.hpp"
#include "lmcalc/translate.hpp"
#include "lmcalc/typing.hpp"

using namespace lmcalc;

namespace {

TermPtr pt(const std::string& s, Sort sort = Sort::Full, Mode mode = Mode::Curry) {
  return parse_term(s, sort, mode);
}

}  // namespace

TEST_CASE("double negation shift terms") {
  CHECK(alpha_eq(t_term(mk_bot()),
                 pt("\\x:~~bot. (x \\y:bot. y)", Sort::Lambda, Mode::Church)));
  TermPtr tx = t_term(mk_atom("X"));
  CHECK(tx->kind == TermKind::Const);
  CHECK(print_term(tx) == "c[X]");

  // The arrow clause reduces use of ~~(A -> B) to a use of T_B.
  TypePtr ab = parse_type("A -> B");
  CHECK(alpha_eq(
      t_term(ab),
      pt("\\x:~~(A -> B). \\y:A. (c[B] \\u:~B. (x \\v:A -> B. (u (v y))))",
         Sort::Lambda, Mode::Church)));

  CHECK_THROWS_AS(t_term(parse_type("A /\\ B")), std::invalid_argument);
  CHECK_THROWS_AS(t_term(parse_type("A \\/ B")), std::invalid_argument);

  // Each T_A inhabits ~~A -> A.
  for (const char* s : {"A", "bot", "A -> A", "(A -> bot) -> bot"}) {
    TypePtr a = parse_type(s);
    TypePtr goal = mk_arrow(mk_neg(mk_neg(a)), a);
    DerivationPtr d = check({}, t_term(a), goal, TypeSystem::Sc);
    CHECK(derivation_ok(d));
  }
}

TEST_CASE("diamond translation") {
  CHECK(alpha_eq(diamond(pt("x", Sort::LambdaMu)), pt("x", Sort::Lambda)));
  CHECK(alpha_eq(diamond(pt("mu a:~X. [a] x", Sort::LambdaMu)),
                 pt("(c[X] \\x_a:~X. (x_a x))", Sort::Lambda, Mode::Church)));

  // A free name turns into a free application head x_<name>.
  CHECK(alpha_eq(diamond(pt("[a] x", Sort::LambdaMu)), pt("(x_a x)", Sort::Lambda)));

  // Shadowed names keep their own lambda variables apart.
  TermPtr shadow = pt("mu a:~A. [a] mu a:~A. [a] x", Sort::LambdaMu);
  TermPtr img = diamond(shadow);
  Context sctx;
  sctx.lam.emplace("x", mk_atom("A"));
  CHECK(check(sctx, img, mk_atom("A"), TypeSystem::Sc) != nullptr);

  CHECK_THROWS_AS(diamond(pt("mu a. [a] x", Sort::LambdaMu)), std::invalid_argument);
  CHECK_THROWS_AS(diamond(pt("<x, y>")), std::invalid_argument);
  CHECK_THROWS_AS(diamond(pt("(x_a [a] y)", Sort::LambdaMu)), std::invalid_argument);
}

TEST_CASE("diamond context") {
  Context ctx = parse_context("x : A, mu a : ~A");
  Context out = diamond_context(ctx);
  CHECK(out.mu.empty());
  CHECK(type_eq(out.lam.at("x"), mk_atom("A")));
  CHECK(type_eq(out.lam.at("x_a"), parse_type("~A")));

  Context clash = parse_context("x_a : A, mu a : ~A");
  CHECK_THROWS_AS(diamond_context(clash), std::invalid_argument);
}

TEST_CASE("diamond commutes with substitution") {
  struct Case {
    const char* m;
    const char* n;
  };
  for (Case c : {Case{"mu a:~A. [a] (x y)", "\\u. u"},
                 Case{"(x mu b:~B. [b] x)", "z"},
                 Case{"mu a:~(A -> A). [a] \\w. (x w)", "(f g)"}}) {
    TermPtr m = pt(c.m, Sort::LambdaMu);
    TermPtr n = pt(c.n, Sort::LambdaMu);
    CHECK(alpha_eq(diamond(subst(m, "x", n)), subst(diamond(m), "x", diamond(n))));
  }
}

TEST_CASE("circle translation goldens") {
  CHECK(alpha_eq(circle(pt("<x, y>")), pt("\\z. (z x y)")));
  CHECK(alpha_eq(circle(pt("w1 x")), pt("\\x1. \\x2. (x1 x)")));
  CHECK(alpha_eq(circle(pt("w2 x")), pt("\\x1. \\x2. (x2 x)")));
  CHECK(alpha_eq(circle(pt("(x p1)")),
                 pt("mu a. [phi] (x \\x1. \\x2. mu g. [a] x1)", Sort::LambdaMu)));
  CHECK(alpha_eq(circle(pt("(x p2)")),
                 pt("mu a. [phi] (x \\x1. \\x2. mu g. [a] x2)", Sort::LambdaMu)));
  CHECK(alpha_eq(circle(pt("(s [x1. x1 | x2. y])")),
                 pt("mu a. [phi] (s \\x1. mu g. [a] x1 \\x2. mu g. [a] y)", Sort::LambdaMu)));

  // Lambda-mu constructions pass through unchanged.
  TermPtr plain = pt("\\u. mu b. [b] (x u)");
  CHECK(alpha_eq(circle(plain), plain));

  // The image is a lambda-mu term whose only new free name is phi.
  TermPtr src = pt("(<(x p1), w1 y> p2 [u1. u1 | u2. <u2, z>])");
  TermPtr img = circle(src);
  CHECK(sort_allows(img, Sort::LambdaMu));
  FreeVars sfv = free_vars(src);
  FreeVars ifv = free_vars(img);
  CHECK(ifv.lam == sfv.lam);
  std::set<std::string> expect_mu = sfv.mu;
  expect_mu.insert(phi_var);
  CHECK(ifv.mu == expect_mu);
  CHECK(alpha_eq(parse_term(print_term(img), Sort::LambdaMu), img));

  CHECK_THROWS_AS(circle(pt("[phi] x")), std::invalid_argument);
}

TEST_CASE("circle commutes with substitution") {
  struct Case {
    const char* m;
    const char* x;
    const char* n;
  };
  for (Case c : {Case{"<x, y>", "x", "w1 z"},
                 Case{"(x p1)", "x", "<y, y>"},
                 Case{"(s [x1. (x x1) | x2. y])", "x", "\\u. <u, u>"},
                 Case{"(x p2 [u. u | v. (v p1)])", "x", "<z, <y, w2 y>>"}}) {
    TermPtr m = pt(c.m);
    TermPtr n = pt(c.n);
    CHECK(alpha_eq(circle(subst(m, c.x, n)), subst(circle(m), c.x, circle(n))));
  }
}

TEST_CASE("circle commutes with structural substitution on term arguments") {
  struct Case {
    const char* m;
    const char* a;
    const char* arg;
  };
  for (Case c : {Case{"[a] <x, y>", "a", "z"},
                 Case{"mu b. [b] ([a] (x p1) y)", "a", "w1 z"},
                 Case{"[a] [a] <x, w2 y>", "a", "<z, z>"}}) {
    TermPtr m = pt(c.m);
    TermPtr arg = pt(c.arg);
    Elim e{ElimKind::TermArg, arg, 0, "", "", nullptr, nullptr};
    Elim ec{ElimKind::TermArg, circle(arg), 0, "", "", nullptr, nullptr};
    CHECK(alpha_eq(circle(struct_subst(m, c.a, e)), struct_subst(circle(m), c.a, ec)));
  }
}

TEST_CASE("annotated circle produces well typed images") {
  Context c1 = parse_context("x : A /\\ B");
  TermPtr i1 = circle_annotated(c1, pt("(x p1)"));
  DerivationPtr d1 = check(circle_context(c1), i1, circle_type(mk_atom("A")),
                           TypeSystem::Smu);
  CHECK(derivation_ok(d1));

  Context c2 = parse_context("s : A \\/ B, f : A -> C, g : B -> C");
  TermPtr i2 = circle_annotated(c2, pt("(s [u. (f u) | v. (g v)])"));
  CHECK(check(circle_context(c2), i2, mk_atom("C"), TypeSystem::Smu) != nullptr);

  Context c3 = parse_context("x : A, y : B");
  TermPtr i3 = circle_annotated(c3, pt("<x, w2[A \\/ B] y>", Sort::Full, Mode::Church));
  TypePtr t3 = circle_type(parse_type("A /\\ (A \\/ B)"));
  CHECK(check(circle_context(c3), i3, t3, TypeSystem::Smu) != nullptr);

  // Recursive equations: the image checks against the circled equations.
  EquationSet eqs = parse_equations("X = A /\\ (B -> X)");
  Context c4 = parse_context("h : X");
  TermPtr i4 = circle_annotated(c4, pt("(h p1)"), &eqs);
  EquationSet ceqs = circle_equations(eqs);
  CHECK(check(circle_context(c4), i4, circle_type(mk_atom("A")), TypeSystem::Smu, &ceqs) !=
        nullptr);

  CHECK_THROWS_AS(circle_annotated({}, pt("\\x. x")), std::invalid_argument);
  CHECK_THROWS_AS(circle_annotated({}, pt("(y p1)")), std::invalid_argument);
}

TEST_CASE("circle context") {
  Context ctx = parse_context("x : A /\\ B, mu a : ~(A \\/ B)");
  Context out = circle_context(ctx);
  CHECK(type_eq(out.lam.at("x"), parse_type("(A -> (B -> bot)) -> bot")));
  CHECK(type_eq(out.lam.at("x"), circle_type(parse_type("A /\\ B"))));
  CHECK(type_eq(out.mu.at("a"), circle_type(parse_type("A \\/ B"))));
  CHECK(type_eq(out.mu.at(phi_var), mk_bot()));

  Context bad;
  bad.mu.emplace(phi_var, mk_bot());
  CHECK_THROWS_AS(circle_context(bad), std::invalid_argument);
}

TEST_CASE("translations preserve reduction behaviour on samples") {
  // beta/mu redex whose diamond image beta-reduces to the image of the redu-
  // ct; the step count may grow but never shrinks.
  TermPtr m = pt("(mu a:~(A -> B). [a] f x)", Sort::LambdaMu);
  TermPtr n = contract(m, {}, StepLabel::MuArg);
  TraceQuery q;
  q.targets = {diamond(n)};
  q.min_steps = 1;
  q.fuel = 20000;
  SearchResult r = find_trace(diamond(m), RuleSet::beta_only(), q);
  REQUIRE(r.trace.has_value());
  CHECK(r.trace->lg() >= 1);

  // Pair projection through circle: beta steps then rho/theta cleanup.
  TermPtr p = pt("(<x, y> p1)");
  TermPtr pn = contract(p, {}, StepLabel::PairProj);
  Trace t = normalize(circle(p), RuleSet::betamu_rt(), 100);
  CHECK(alpha_eq(t.end(), circle(pn)));
  CHECK(t.lg_bm() >= 1);
}
