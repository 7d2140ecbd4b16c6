#include "doctest.h"
#include "lmcalc/lemmas.hpp"
#include "lmcalc/text.hpp"
#include "lmcalc/type.hpp"

using namespace lmcalc;

TEST_CASE("type parsing and printing") {
  CHECK(type_eq(parse_type("~A"), mk_arrow(mk_atom("A"), mk_bot())));
  CHECK(type_eq(parse_type("A -> B -> bot"),
                mk_arrow(mk_atom("A"), mk_arrow(mk_atom("B"), mk_bot()))));
  CHECK(type_eq(parse_type("A /\\ (X -> B)"),
                mk_and(mk_atom("A"), mk_arrow(mk_atom("X"), mk_atom("B")))));
  // Precedence: ~ over /\ over \/ over ->.
  CHECK(type_eq(parse_type("~A /\\ B \\/ C -> D"),
                parse_type("(((~A) /\\ B) \\/ C) -> D")));
  for (const char* s : {"~(A /\\ B)", "A -> B -> C", "(A -> B) -> C", "~~bot"}) {
    TypePtr t = parse_type(s);
    CHECK(type_eq(parse_type(print_type(t)), t));
  }
  CHECK(is_neg(parse_type("~A")));
  CHECK(!is_neg(parse_type("A -> B")));
  CHECK(in_sort_t(parse_type("A -> ~B")));
  CHECK(!in_sort_t(parse_type("A /\\ B")));
  CHECK(type_size(parse_type("A -> B")) == 3);
  CHECK(type_height(parse_type("A -> B")) == 2);
  CHECK(type_key(parse_type("A -> B")) == type_key(parse_type("A -> B")));
  CHECK(type_key(parse_type("A -> B")) != type_key(parse_type("B -> A")));
}

TEST_CASE("circle on types") {
  CHECK(type_eq(circle_type(parse_type("A /\\ B")), parse_type("(A -> (B -> bot)) -> bot")));
  CHECK(type_eq(circle_type(mk_atom("X")), mk_atom("X")));
  CHECK(type_eq(circle_type(mk_bot()), mk_bot()));
  CHECK(type_eq(circle_type(parse_type("(A \\/ B) -> C")),
                parse_type("((A -> bot) -> ((B -> bot) -> bot)) -> C")));
  CHECK(in_sort_t(circle_type(parse_type("(A /\\ B) \\/ ~C"))));
}

TEST_CASE("polarity") {
  CHECK(polarity_of("X", mk_atom("X")) == Polarity::Positive);
  CHECK(polarity_of("X", parse_type("X -> B")) == Polarity::Negative);
  CHECK(polarity_of("X", mk_atom("Y")) == Polarity::Absent);
  CHECK(polarity_of("X", parse_type("X -> X")) == Polarity::Both);
  CHECK(polarity_of("X", parse_type("A /\\ (B -> X)")) == Polarity::Positive);
  CHECK(polarity_of("X", parse_type("(X -> B) -> C")) == Polarity::Positive);
  CHECK(polarity_of("X", parse_type("X \\/ (X -> B)")) == Polarity::Both);
  CHECK(pol_flip(Polarity::Positive) == Polarity::Negative);
  CHECK(pol_flip(Polarity::Absent) == Polarity::Absent);
  CHECK(pol_join(Polarity::Positive, Polarity::Negative) == Polarity::Both);
  CHECK(pol_join(Polarity::Absent, Polarity::Negative) == Polarity::Negative);
}

TEST_CASE("equation sets and goodness") {
  CHECK(!is_good(parse_equations("X = A /\\ (X -> B)")).good);
  CHECK(!is_good(parse_equations("X = A \\/ (X -> B)")).good);
  CHECK(is_good(parse_equations("X = Y -> X")).good);
  CHECK(is_good(EquationSet{}).good);
  CHECK(is_good(parse_equations("X = A /\\ (B -> X)")).good);
  // Odd number of sign flips around a two-equation cycle.
  CHECK(!is_good(parse_equations("X = Y -> A; Y = B -> X")).good);
  // An even number of flips cancels out.
  CHECK(is_good(parse_equations("X = ~Y; Y = ~X")).good);

  GoodnessReport bad = is_good(parse_equations("X = A /\\ (X -> B)"));
  CHECK(!bad.cycle.empty());
  CHECK(bad.cycle.front() == bad.cycle.back());
  CHECK(bad.to_string().find("not good") == 0);

  CHECK_THROWS_AS(parse_equations("X = A; X = B"), std::invalid_argument);
  CHECK_THROWS_AS(parse_equations("X = Y; Y = A"), std::invalid_argument);
  CHECK(parse_equations("X = A /\\ B").t_prime());
  CHECK(!parse_equations("X = A -> X").t_prime());
}

TEST_CASE("congruence") {
  EquationSet empty;
  CHECK(congruent(mk_atom("A"), mk_atom("A"), empty));
  EquationSet eqs = parse_equations("X = A /\\ (X -> B)");
  CHECK(congruent(mk_atom("X"), parse_type("A /\\ (X -> B)"), eqs));
  CHECK(congruent(mk_atom("X"), parse_type("A /\\ ((A /\\ (X -> B)) -> B)"), eqs));
  CHECK(!congruent(mk_atom("X"), mk_atom("A"), eqs));
  CHECK(!congruent(mk_atom("A"), mk_atom("B"), eqs));

  // Congruence under each constructor and across mutual recursion.
  EquationSet two = parse_equations("X = A -> Y; Y = A -> X");
  CHECK(congruent(mk_atom("X"), parse_type("A -> (A -> X)"), two));
  CHECK(congruent(parse_type("X -> A"), parse_type("(A -> Y) -> A"), two));
  // X and Y share the infinite unfolding A -> A -> ..., so they are related.
  CHECK(congruent(mk_atom("X"), mk_atom("Y"), two));
  CHECK(!congruent(mk_atom("X"), parse_type("A -> A"), two));
  CHECK(!congruent(mk_atom("X"), parse_type("X -> A"), two));

  TypePtr a = mk_atom("X");
  CHECK(type_eq(head_unfold(a, &eqs), parse_type("A /\\ (X -> B)")));
  CHECK(type_eq(head_unfold(a, nullptr), a));
  CHECK(type_eq(head_unfold(parse_type("X -> A"), &eqs), parse_type("X -> A")));
}

TEST_CASE("circle on equation sets") {
  EquationSet e1 = circle_equations(parse_equations("X = A /\\ B"));
  CHECK(type_eq(*e1.find("X"), parse_type("(A -> (B -> bot)) -> bot")));
  CHECK(circle_equations(EquationSet{}).empty());
}

namespace {

// Single-equation sets X = F for every F over {A, X, bot} up to 5 nodes.
std::vector<EquationSet> small_equation_sets() {
  std::vector<EquationSet> out;
  for (const TypePtr& f : enumerate_types({"A", "X"}, 5, true)) {
    if (f->kind == TypeKind::Atom && f->atom == "X") continue;
    out.push_back(EquationSet::make({{"X", f}}));
  }
  return out;
}

}  // namespace

TEST_CASE("goodness is preserved by circle") {
  int good_count = 0;
  for (const EquationSet& eqs : small_equation_sets()) {
    if (!is_good(eqs).good) continue;
    ++good_count;
    CHECK(is_good(circle_equations(eqs)).good);
  }
  CHECK(good_count > 50);
}

TEST_CASE("congruence transports through circle") {
  EquationSet eqs = parse_equations("X = A /\\ (B -> X)");
  EquationSet ceq = circle_equations(eqs);
  std::vector<TypePtr> types = enumerate_types({"A", "B", "X"}, 5, true);
  int related = 0;
  for (size_t i = 0; i < types.size(); i += 7)
    for (size_t j = 0; j < types.size(); j += 7)
      if (congruent(types[i], types[j], eqs)) {
        ++related;
        CHECK(congruent(circle_type(types[i]), circle_type(types[j]), ceq));
      }
  CHECK(related > 10);
}

TEST_CASE("congruence is an equivalence and a congruence") {
  EquationSet eqs = parse_equations("X = A -> X");
  std::vector<TypePtr> types = enumerate_types({"A", "X"}, 5, false);
  for (size_t i = 0; i < types.size(); i += 5) {
    CHECK(congruent(types[i], types[i], eqs));
    for (size_t j = 0; j < types.size(); j += 5) {
      bool ij = congruent(types[i], types[j], eqs);
      CHECK(ij == congruent(types[j], types[i], eqs));
      if (ij) {
        CHECK(congruent(mk_arrow(types[i], mk_bot()), mk_arrow(types[j], mk_bot()), eqs));
        CHECK(congruent(mk_and(types[i], mk_atom("A")), mk_and(types[j], mk_atom("A")), eqs));
      }
    }
  }
}

TEST_CASE("type enumeration") {
  // Sizes 1 and 3 over one atom: bot, A, then all arrow pairs.
  CHECK(enumerate_types({"A"}, 1, false).size() == 2);
  CHECK(enumerate_types({"A"}, 3, false).size() == 6);
  CHECK(enumerate_types({"A"}, 3, true).size() == 14);
  CHECK(enumerate_types_by_depth({"A"}, 1, false).size() == 2);
  CHECK(enumerate_types_by_depth({"A"}, 2, false).size() == 6);
  // Heights 1..4 over one atom: 2, 4, 32, 1408.
  CHECK(enumerate_types_by_depth({"A"}, 4, false).size() == 1446);
  for (const TypePtr& t : enumerate_types_by_depth({"A"}, 3, false))
    CHECK(type_height(t) <= 3);
  for (const TypePtr& t : enumerate_types({"A"}, 5, true)) CHECK(type_size(t) <= 5);
}
