#include "doctest.h"
#include "lmcalc/term.hpp"
#include "lmcalc/text.hpp"

using namespace lmcalc;

namespace {

TermPtr pt(const std::string& s, Sort sort = Sort::Full, Mode mode = Mode::Curry) {
  return parse_term(s, sort, mode);
}

}  // namespace

TEST_CASE("parsing basic shapes") {
  TermPtr id = pt("\\x:A. x", Sort::Lambda, Mode::Church);
  CHECK(id->kind == TermKind::Lam);
  CHECK(id->var == "x");
  CHECK(type_eq(id->ann, mk_atom("A")));
  CHECK(id->lhs->kind == TermKind::Var);

  TermPtr proj = pt("(<x, y> p1)");
  CHECK(proj->kind == TermKind::App);
  CHECK(proj->lhs->kind == TermKind::Pair);
  CHECK(proj->elim->kind == ElimKind::Proj);
  CHECK(proj->elim->idx == 1);

  CHECK_THROWS_AS(pt("(mu a. [a] x  y)", Sort::Lambda), ParseError);
  CHECK_NOTHROW(pt("(mu a. [a] x  y)", Sort::LambdaMu));
}

TEST_CASE("parsing application spines and binder bodies") {
  // A binder body is minimal: one atom unless parenthesized or a binder.
  TermPtr t = pt("(\\z.z mu a.[a] \\x.x)", Sort::LambdaMu);
  CHECK(t->kind == TermKind::App);
  CHECK(t->lhs->kind == TermKind::Lam);
  CHECK(t->lhs->lhs->kind == TermKind::Var);
  CHECK(t->elim->arg->kind == TermKind::Mu);

  // Injection annotations attach only when the bracket is adjacent.
  TermPtr w = pt("w1[A \\/ B] x");
  CHECK(w->kind == TermKind::Inj);
  CHECK(type_eq(w->ann, mk_or(mk_atom("A"), mk_atom("B"))));
  TermPtr wn = pt("w1 [a] x");
  CHECK(wn->kind == TermKind::Inj);
  CHECK(wn->ann == nullptr);
  CHECK(wn->lhs->kind == TermKind::Name);

  // Case versus name disambiguation inside an application.
  TermPtr app_case = pt("(x [x1. x1 | x2. y])");
  CHECK(app_case->elim->kind == ElimKind::Case);
  TermPtr app_name = pt("(x [a] y)", Sort::LambdaMu);
  CHECK(app_name->elim->kind == ElimKind::TermArg);
  CHECK(app_name->elim->arg->kind == TermKind::Name);

  CHECK_THROWS_AS(pt("mu phi. [phi] x"), ParseError);
  CHECK_NOTHROW(pt("mu a. [phi] x"));
  CHECK_THROWS_AS(pt("\\x. x", Sort::Lambda, Mode::Church), ParseError);
}

TEST_CASE("printing golden forms") {
  CHECK(print_term(mk_lam("x", mk_atom("A"), mk_var("x"))) == "\\x:A. x");
  CHECK(print_term(mk_app(mk_pair(mk_var("x"), mk_var("y")), mk_proj(1))) == "(<x, y> p1)");
  CHECK(print_term(mk_mu("a", mk_atom("A"), mk_name("a", mk_var("x")))) == "mu a:~A. [a] x");
}

TEST_CASE("print parse round trip") {
  const char* samples[] = {
      "\\x:A. x",
      "(<x, y> p1)",
      "mu a:~A. [a] x",
      "(\\x.(x p2 x) <y, \\x.(x p2 x)>)",
      "(x [x1. (x1 y) | x2. w2[A \\/ B] x2])",
      "(c[X] \\u. (u v))",
      "(mu a.[a] x [x1. x1 | x2. y])",
  };
  for (const char* s : samples) {
    TermPtr t = pt(s);
    CHECK(alpha_eq(parse_term(print_term(t)), t));
  }
}

TEST_CASE("free variables") {
  FreeVars f1 = free_vars(pt("\\x. x"));
  CHECK(f1.lam.empty());
  CHECK(f1.mu.empty());

  FreeVars f2 = free_vars(pt("mu a. [a] x", Sort::LambdaMu));
  CHECK(f2.lam == std::set<std::string>{"x"});
  CHECK(f2.mu.empty());

  FreeVars f3 = free_vars(pt("(y [x1. x1 | x2. z])"));
  CHECK(f3.lam == std::set<std::string>{"y", "z"});
  CHECK(f3.mu.empty());

  FreeVars f4 = free_vars(pt("[a] x", Sort::LambdaMu));
  CHECK(f4.mu == std::set<std::string>{"a"});
  CHECK(free_lam_var(pt("(x y)"), "x"));
  CHECK(!free_lam_var(pt("\\x. x"), "x"));
  CHECK(free_mu_var(pt("[a] x", Sort::LambdaMu), "a"));
}

TEST_CASE("term size") {
  CHECK(term_size(mk_var("x")) == 1);
  CHECK(term_size(pt("\\x. x")) == 2);
  CHECK(term_size(pt("mu a. [a] y", Sort::LambdaMu)) == 3);
  CHECK(term_size(mk_var("y")) == 1);
  // Eliminators: a projection adds one node, a case one plus its branches.
  CHECK(term_size(pt("(x p1)")) == 3);
  CHECK(term_size(pt("(x y)")) == 3);
  CHECK(term_size(pt("(x [x1. x1 | x2. y])")) == 5);
  CHECK(term_size(pt("<x, y>")) == 3);
  CHECK(term_size(pt("w1 x")) == 2);
}

TEST_CASE("substitution") {
  CHECK(alpha_eq(subst(mk_var("x"), "x", pt("\\y. y")), pt("\\y. y")));

  // Capture is avoided by renaming the binder.
  TermPtr m = pt("\\y. (x y)");
  TermPtr r = subst(m, "x", mk_var("y"));
  CHECK(alpha_eq(r, pt("\\z. (y z)")));
  CHECK(!alpha_eq(r, pt("\\y. (y y)")));

  CHECK(alpha_eq(subst(pt("(x x)"), "x", pt("\\y. y")), pt("(\\y. y \\y. y)")));
  // Identity on terms without the variable.
  CHECK(alpha_eq(subst(pt("\\x. x"), "x", mk_var("z")), pt("\\x. x")));
}

TEST_CASE("substitution composition") {
  // m[x:=n][y:=p] = m[y:=p][x:=n[y:=p]] when x != y and x not free in p.
  const char* ms[] = {"(x y)", "\\z. (x (y z))", "(y [x1. x1 | x2. x])", "<x, y>"};
  const char* ns[] = {"(y y)", "\\u. (y u)", "z"};
  const char* ps[] = {"\\u. u", "(z z)", "w"};
  for (const char* sm : ms)
    for (const char* sn : ns)
      for (const char* sp : ps) {
        TermPtr m = pt(sm), n = pt(sn), p = pt(sp);
        TermPtr l = subst(subst(m, "x", n), "y", p);
        TermPtr r = subst(subst(m, "y", p), "x", subst(n, "y", p));
        CHECK(alpha_eq(l, r));
      }
}

TEST_CASE("mu renaming") {
  CHECK(alpha_eq(mu_rename(pt("[a] x", Sort::LambdaMu), "a", "b"),
                 pt("[b] x", Sort::LambdaMu)));
  CHECK(alpha_eq(mu_rename(pt("mu a. [a] x", Sort::LambdaMu), "a", "b"),
                 pt("mu a. [a] x", Sort::LambdaMu)));
  CHECK(alpha_eq(mu_rename(pt("[a] [a] x", Sort::LambdaMu), "a", "b"),
                 pt("[b] [b] x", Sort::LambdaMu)));
  // Renaming toward a captured name frees the binder first.
  TermPtr t = pt("mu b. [a] [b] x", Sort::LambdaMu);
  TermPtr r = mu_rename(t, "a", "b");
  CHECK(alpha_eq(r, pt("mu c. [b] [c] x", Sort::LambdaMu)));
}

TEST_CASE("structural substitution") {
  Elim z{ElimKind::TermArg, mk_var("z"), 0, "", "", nullptr, nullptr};
  CHECK(alpha_eq(struct_subst(pt("[a] (x y)", Sort::LambdaMu), "a", z),
                 pt("[a] ((x y) z)", Sort::LambdaMu)));
  CHECK(alpha_eq(struct_subst(pt("[b] x", Sort::LambdaMu), "a", z),
                 pt("[b] x", Sort::LambdaMu)));
  // Inner occurrences are rewritten before the wrapper applies.
  CHECK(alpha_eq(struct_subst(pt("[a] [a] x", Sort::LambdaMu), "a", z),
                 pt("[a] ([a] (x z) z)", Sort::LambdaMu)));
  // Identity without free occurrences of the name.
  TermPtr m = pt("mu a. [a] x", Sort::LambdaMu);
  CHECK(alpha_eq(struct_subst(m, "a", z), m));
}

TEST_CASE("alpha equivalence and canonical keys") {
  CHECK(alpha_eq(pt("\\x. x"), pt("\\y. y")));
  CHECK(alpha_eq(pt("mu a. [a] x", Sort::LambdaMu), pt("mu b. [b] x", Sort::LambdaMu)));
  CHECK(!alpha_eq(pt("\\x. \\y. x"), pt("\\x. \\y. y")));
  CHECK(!alpha_eq(pt("\\x:A. x", Sort::Lambda, Mode::Church),
                  pt("\\x:B. x", Sort::Lambda, Mode::Church)));
  CHECK(canonical_key(pt("\\x. \\y. (x y)")) == canonical_key(pt("\\u. \\v. (u v)")));
  CHECK(canonical_key(pt("\\x. \\y. (x y)")) != canonical_key(pt("\\x. \\y. (y x)")));
  CHECK(alpha_eq(canonicalize(pt("\\x. x")), pt("\\x. x")));
}

TEST_CASE("sorts and positions") {
  CHECK(sort_allows(pt("\\x. (x y)"), Sort::Lambda));
  CHECK(!sort_allows(pt("mu a. [a] x", Sort::LambdaMu), Sort::Lambda));
  CHECK(!sort_allows(pt("<x, y>"), Sort::LambdaMu));
  CHECK(sort_allows(pt("<x, y>"), Sort::Full));

  TermPtr t = pt("(x [x1. x1 | x2. y])");
  CHECK(alpha_eq(subterm_at(t, {0}), mk_var("x")));
  CHECK(alpha_eq(subterm_at(t, {2}), mk_var("y")));
  CHECK_THROWS_AS(subterm_at(t, {7}), std::out_of_range);
  CHECK(position_to_string({}) == "-");
  CHECK(position_to_string({0, 1}) == "0.1");
}

TEST_CASE("helper names") {
  std::set<std::string> names = all_var_names(pt("\\x. (x mu a. [a] y)", Sort::LambdaMu));
  CHECK(names.count("x"));
  CHECK(names.count("a"));
  CHECK(names.count("y"));
  CHECK(fresh_name("x", {"x", "x1"}) == "x2");
  CHECK(mu_occurrences(pt("[a] [a] x", Sort::LambdaMu), "a") == 2);
  CHECK(mu_occurrences(pt("mu a. [a] x", Sort::LambdaMu), "a") == 0);
  TermPtr stripped = strip_annotations(pt("\\x:A. x", Sort::Lambda, Mode::Church));
  CHECK(stripped->ann == nullptr);
}
