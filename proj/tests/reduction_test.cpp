#include "doctest.h"
#include "lmcalc/reduction.hpp"
#include "lmcalc/text.hpp"

using namespace lmcalc;

namespace {

TermPtr pt(const std::string& s, Sort sort = Sort::Full) { return parse_term(s, sort); }

}  // namespace

TEST_CASE("redex discovery") {
  std::vector<Redex> r1 = redexes(pt("(\\x. x y)"), RuleSet::beta_only());
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].label == StepLabel::Beta);
  CHECK(r1[0].pos.empty());

  std::vector<Redex> r2 = redexes(pt("(mu a. [a] x y)", Sort::LambdaMu), RuleSet::betamu());
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].label == StepLabel::MuArg);
  CHECK(r2[0].mu_zero);

  std::vector<Redex> r3 = redexes(pt("(<x, y> p1)"), RuleSet::full());
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].label == StepLabel::PairProj);

  // A name occurring twice is not a mu0 step.
  std::vector<Redex> r4 = redexes(pt("(mu a. [a] [a] x y)", Sort::LambdaMu), RuleSet::betamu());
  REQUIRE(r4.size() == 1);
  CHECK(!r4[0].mu_zero);

  // Redexes come out leftmost-outermost.
  std::vector<Redex> r5 = redexes(pt("(\\x. x (\\y. y z))"), RuleSet::beta_only());
  REQUIRE(r5.size() == 2);
  CHECK(r5[0].pos.empty());
  CHECK(r5[1].pos == Position{1});

  CHECK(is_normal(pt("\\x. x"), RuleSet::full_rt()));
  CHECK(!is_normal(pt("(\\x. x y)"), RuleSet::full_rt()));
  CHECK(is_normal(pt("(\\x. x y)"), RuleSet::rho_theta()));
}

TEST_CASE("contraction of each rule") {
  CHECK(alpha_eq(contract(pt("(\\x. x y)"), {}, StepLabel::Beta), pt("y")));
  CHECK(alpha_eq(contract(pt("(mu a. [a] x y)", Sort::LambdaMu), {}, StepLabel::MuArg),
                 pt("mu a. [a] (x y)", Sort::LambdaMu)));
  CHECK(alpha_eq(contract(pt("(w1 z [x1. x1 | x2. y])"), {}, StepLabel::CaseInj), pt("z")));
  CHECK(alpha_eq(contract(pt("mu a. [a] y", Sort::LambdaMu), {}, StepLabel::Theta), pt("y")));
  CHECK(alpha_eq(contract(pt("(<x, y> p2)"), {}, StepLabel::PairProj), pt("y")));
  CHECK(alpha_eq(contract(pt("(mu a. [a] p p1)"), {}, StepLabel::MuProj),
                 pt("(mu a. [a] (p p1))", Sort::Full)));
  CHECK(alpha_eq(contract(pt("(mu a. [a] s [x1. x1 | x2. y])"), {}, StepLabel::MuCase),
                 pt("mu a. [a] (s [x1. x1 | x2. y])")));
  CHECK(alpha_eq(contract(pt("[b] mu a. [a] x", Sort::LambdaMu), {}, StepLabel::Rho),
                 pt("[b] x", Sort::LambdaMu)));
  CHECK(alpha_eq(contract(pt("(x [x1. x1 | x2. x2] y)"), {}, StepLabel::PermArg),
                 pt("(x [x1. (x1 y) | x2. (x2 y)])")));
  CHECK(alpha_eq(contract(pt("(x [x1. x1 | x2. x2] p1)"), {}, StepLabel::PermProj),
                 pt("(x [x1. (x1 p1) | x2. (x2 p1)])")));
  CHECK(alpha_eq(contract(pt("(x [x1. x1 | x2. x2] [y1. y1 | y2. y2])"), {}, StepLabel::PermCase),
                 pt("(x [x1. (x1 [y1. y1 | y2. y2]) | x2. (x2 [y1. y1 | y2. y2])])")));

  // Theta requires the name to be absent from the body.
  CHECK_THROWS_AS(contract(pt("mu a. [a] [a] x", Sort::LambdaMu), {}, StepLabel::Theta),
                  std::invalid_argument);
  CHECK_THROWS_AS(contract(pt("\\x. x"), {}, StepLabel::Beta), std::invalid_argument);
}

TEST_CASE("contraction avoids capture") {
  // The argument's free mu variable must not be captured by the binder.
  TermPtr m = pt("(mu a. [a] x [a] y)", Sort::LambdaMu);
  TermPtr r = contract(m, {}, StepLabel::MuArg);
  CHECK(alpha_eq(r, pt("mu c. [c] (x [a] y)", Sort::LambdaMu)));

  // A case binder free in the pushed eliminator is renamed.
  TermPtr p = pt("(x [x1. y | x2. y] x1)");
  TermPtr q = contract(p, {}, StepLabel::PermArg);
  CHECK(alpha_eq(q, pt("(x [u. (y x1) | x2. (y x1)])")));

  // Beta substitution renames binders in the body when needed.
  TermPtr b = pt("(\\x. \\y. (x y) y)");
  CHECK(alpha_eq(contract(b, {}, StepLabel::Beta), pt("\\z. (y z)")));
}

TEST_CASE("annotations survive the mu rules where determined") {
  TermPtr m = parse_term("(mu a:~(A -> B). [a] f x)", Sort::LambdaMu, Mode::Church);
  TermPtr r = contract(m, {}, StepLabel::MuArg);
  CHECK(r->kind == TermKind::Mu);
  CHECK(type_eq(r->ann, mk_atom("B")));
  TermPtr p = parse_term("(mu a:~(A /\\ B). [a] p p2)", Sort::Full, Mode::Church);
  TermPtr rp = contract(p, {}, StepLabel::MuProj);
  CHECK(type_eq(rp->ann, mk_atom("B")));
}

TEST_CASE("traces, counters, concatenation") {
  TermPtr m = pt("(\\z.z mu a.[a] \\x.x)", Sort::LambdaMu);
  Trace t = normalize(m, RuleSet::betamu_rt(), 100);
  REQUIRE(t.lg() == 2);
  CHECK(t.steps[0].label == StepLabel::Beta);
  CHECK(t.steps[1].label == StepLabel::Theta);
  CHECK(t.lg_bm() == 1);
  CHECK(alpha_eq(t.end(), pt("\\x. x")));

  std::string s = t.to_string();
  CHECK(s.find("0: ") == 0);
  CHECK(s.find("beta@-") != std::string::npos);
  CHECK(s.find("lg=2 lg_bm=1") != std::string::npos);

  Trace a{m, {t.steps[0]}};
  Trace b{t.steps[0].result, {t.steps[1]}};
  Trace ab = concat(a, b);
  CHECK(ab.lg() == 2);
  CHECK(alpha_eq(ab.end(), pt("\\x. x")));
  Trace bad{pt("z"), {}};
  CHECK_THROWS_AS(concat(a, bad), std::logic_error);

  CHECK(label_string(StepLabel::MuArg, true) == "mu-arg0");
  CHECK(label_string(StepLabel::MuArg, false) == "mu-arg");
  CHECK(label_string(StepLabel::Beta, false) == "beta");
  CHECK(is_bm(StepLabel::Beta));
  CHECK(is_bm(StepLabel::MuCase));
  CHECK(!is_bm(StepLabel::Rho));
  CHECK(!is_bm(StepLabel::PermArg));
}

TEST_CASE("reduction graphs") {
  ReductionGraph g1 = reduction_graph(pt("\\x. x"), RuleSet::full_rt(), 100);
  CHECK(g1.size() == 1);
  CHECK(g1.complete);

  ReductionGraph g2 = reduction_graph(pt("(\\x.(x x) \\y.y)"), RuleSet::beta_only(), 100);
  CHECK(g2.size() == 3);
  CHECK(g2.complete);
  CHECK(!find_loop(g2));

  // The recursive-equation loop term returns to its start node.
  TermPtr loop = pt("(\\x.(x p2 x) <y, \\x.(x p2 x)>)");
  ReductionGraph g3 = reduction_graph(loop, RuleSet::full(), 100);
  CHECK(g3.complete);
  std::optional<Trace> cyc = find_loop(g3);
  REQUIRE(cyc.has_value());
  CHECK(cyc->lg() >= 1);
  bool closes = false;
  TermPtr back = cyc->end();
  if (alpha_eq(back, loop)) closes = true;
  for (size_t i = 0; i + 1 < cyc->steps.size() && !closes; ++i)
    if (alpha_eq(back, i == 0 ? cyc->start : cyc->steps[i - 1].result)) closes = true;
  CHECK(closes);

  ReductionGraph g4 = reduction_graph(loop, RuleSet::full(), 1);
  CHECK(!g4.complete);
}

TEST_CASE("eta and sn verdicts") {
  CHECK(eta(pt("\\x. x"), RuleSet::beta_only(), 100) == 0);
  CHECK(eta(pt("(\\x.(x x) \\y.y)"), RuleSet::beta_only(), 100) == 2);
  TermPtr loop = pt("(\\x.(x p2 x) <y, \\x.(x p2 x)>)");
  CHECK_THROWS_AS(eta(loop, RuleSet::full(), 100), CycleError);

  SnVerdict v1 = sn_verdict(pt("(\\x. x y)"), RuleSet::beta_only(), 100);
  CHECK(v1.status == SnStatus::Sn);
  CHECK(v1.eta == 1);

  SnVerdict v2 = sn_verdict(
      pt("(\\x.(x [y. w | z.(z w2[X] z)]) w2[X] \\x.(x [y. w | z.(z w2[X] z)]))"),
      RuleSet::full(), 20);
  CHECK(v2.status == SnStatus::Loop);
  REQUIRE(v2.loop.has_value());

  SnVerdict v3 = sn_verdict(loop, RuleSet::full(), 1);
  CHECK(v3.status == SnStatus::Unknown);

  // Longest path beats normalize length when branches differ.
  TermPtr k = pt("(\\x. \\y. y (\\u.(u u) \\v.v))");
  std::optional<size_t> e = eta(k, RuleSet::beta_only(), 1000);
  REQUIRE(e.has_value());
  CHECK(*e == 3);
}

TEST_CASE("every graph edge is a reported redex") {
  const char* starts[] = {
      "(\\x.(x x) \\y.(y y) z)",
      "(mu a.[a] x [x1. x1 | x2. y])",
      "(mu a.[a] [a] x y)",
      "(<(\\x.x y), z> p1)",
  };
  for (const char* s : starts) {
    ReductionGraph g = reduction_graph(pt(s), RuleSet::full_rt(), 1000);
    for (const GraphNode& n : g.nodes)
      for (const GraphEdge& e : n.succ) {
        bool found = false;
        for (const Redex& r : redexes(n.term, RuleSet::full_rt()))
          if (r.pos == e.redex.pos && r.label == e.redex.label) found = true;
        CHECK(found);
        CHECK(alpha_eq(contract(n.term, e.redex.pos, e.redex.label),
                       g.nodes[e.target].term));
      }
  }
}

TEST_CASE("reach and trace search") {
  SearchResult r1 = reach(pt("(\\z.z mu a.[a] \\x.x)", Sort::LambdaMu), pt("\\x. x"),
                          RuleSet::betamu_rt(), 1000);
  REQUIRE(r1.trace.has_value());
  CHECK(r1.trace->lg() == 2);
  CHECK(r1.trace->steps[0].label == StepLabel::Beta);
  CHECK(r1.trace->steps[1].label == StepLabel::Theta);

  SearchResult r2 = reach(pt("x"), pt("y"), RuleSet::beta_only(), 1000);
  CHECK(!r2.trace.has_value());
  CHECK(r2.complete);

  // Constrained search: at least one step to an alpha-variant of itself.
  TraceQuery q;
  q.targets = {pt("(\\x.(x x) \\x.(x x))")};
  q.min_steps = 1;
  q.fuel = 100;
  SearchResult r3 = find_trace(pt("(\\x.(x x) \\x.(x x))"), RuleSet::beta_only(), q);
  REQUIRE(r3.trace.has_value());
  CHECK(r3.trace->lg() >= 1);

  // exact_bm: reach the beta-normal form of (\\x.x (\\y.y z)) in one bm step
  // is impossible, two is exact.
  TraceQuery q2;
  q2.targets = {pt("z")};
  q2.exact_bm = 1;
  q2.fuel = 1000;
  CHECK(!find_trace(pt("(\\x.x (\\y.y z))"), RuleSet::beta_only(), q2).trace.has_value());
  q2.exact_bm = 2;
  CHECK(find_trace(pt("(\\x.x (\\y.y z))"), RuleSet::beta_only(), q2).trace.has_value());
}

TEST_CASE("closure and rho theta termination stats") {
  std::vector<TermPtr> cl = closure(pt("[b] mu a. [a] mu c. [c] x", Sort::LambdaMu),
                                    RuleSet::rho_only());
  CHECK(cl.size() == 3);

  uint64_t before = rho_theta_stats().violations.load();
  normalize(pt("mu a. [a] mu b. [b] mu c. [c] y", Sort::LambdaMu), RuleSet::rho_theta(), 100);
  CHECK(rho_theta_stats().violations.load() == before);
  CHECK(rho_theta_stats().steps.load() > 0);
}
