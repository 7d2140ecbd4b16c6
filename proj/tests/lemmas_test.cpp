#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "lmcalc/lemmas.hpp"
#include "lmcalc/text.hpp"

using namespace lmcalc;

namespace {

std::set<std::string> key_set(const std::vector<CorpusItem>& items) {
  std::set<std::string> out;
  for (const CorpusItem& it : items) out.insert(canonical_key(it.term));
  return out;
}

TypeSystem system_of(Sort s) {
  switch (s) {
    case Sort::Lambda: return TypeSystem::S;
    case Sort::LambdaMu: return TypeSystem::Smu;
    default: return TypeSystem::Sfull;
  }
}

}  // namespace

TEST_CASE("exhaustive corpus membership and validity") {
  CorpusSpec spec;
  spec.sort = Sort::Lambda;
  spec.size_bound = 3;
  std::vector<CorpusItem> items = enumerate_typed_terms(spec);
  CHECK(!items.empty());

  std::set<std::string> keys;
  for (const CorpusItem& it : items) {
    CHECK(term_size(it.term) <= 3);
    CHECK(sort_allows(it.term, Sort::Lambda));
    CHECK_NOTHROW(check(it.ctx, it.term, it.type, TypeSystem::S, spec.eqs));
    CHECK(keys.insert(canonical_key(it.term)).second);
  }
  TermPtr id_a = parse_term("\\x:A. x", Sort::Lambda, Mode::Church);
  CHECK(keys.count(canonical_key(id_a)));
  bool found = false;
  for (const CorpusItem& it : items)
    if (alpha_eq(it.term, id_a)) {
      found = true;
      CHECK(type_eq(it.type, parse_type("A -> A")));
    }
  CHECK(found);

  // Conjunction elimination appears as soon as the context provides a pair.
  CorpusSpec fs;
  fs.sort = Sort::Full;
  fs.size_bound = 3;
  fs.base_ctx = parse_context("p : A /\\ A");
  std::set<std::string> fkeys = key_set(enumerate_typed_terms(fs));
  CHECK(fkeys.count(canonical_key(parse_term("(p p1)"))));
  CHECK(fkeys.count(canonical_key(parse_term("(p p2)"))));

  // Naming a term with a context name gives a bot-typed item.
  CorpusSpec ms;
  ms.sort = Sort::LambdaMu;
  ms.size_bound = 3;
  ms.base_ctx = parse_context("x : A, mu c : ~A");
  std::vector<CorpusItem> mitems = enumerate_typed_terms(ms);
  bool named = false, wrapped = false;
  for (const CorpusItem& it : mitems) {
    if (alpha_eq(it.term, parse_term("[c] x", Sort::LambdaMu))) {
      named = true;
      CHECK(type_eq(it.type, mk_bot()));
    }
    if (alpha_eq(it.term, parse_term("mu a:~A. [c] x", Sort::LambdaMu, Mode::Church)))
      wrapped = true;
  }
  CHECK(named);
  CHECK(wrapped);
}

TEST_CASE("enumeration agrees with a brute force oracle") {
  // Independent generation: raw church terms over the same annotation
  // universe, filtered by the checker, deduplicated modulo alpha.
  Context base = parse_context("x : A, f : A -> A");
  std::vector<TypePtr> universe = enumerate_types({"A"}, 3, false);
  const int bound = 4;

  std::map<int, std::map<int, std::vector<TermPtr>>> memo;  // scope size -> size -> terms
  std::vector<std::string> names = {"x", "f"};
  std::function<std::vector<TermPtr>(int, int)> raw = [&](int scope, int size) {
    auto it = memo[scope].find(size);
    if (it != memo[scope].end()) return it->second;
    std::vector<TermPtr> out;
    if (size == 1)
      for (int i = 0; i < scope; ++i) out.push_back(mk_var(names[i]));
    if (size >= 2) {
      if ((int)names.size() == scope) names.push_back("b" + std::to_string(scope));
      for (const TypePtr& t : universe)
        for (const TermPtr& body : raw(scope + 1, size - 1))
          out.push_back(mk_lam(names[scope], t, body));
    }
    for (int k = 1; size >= 3 && k <= size - 2; ++k)
      for (const TermPtr& fn : raw(scope, k))
        for (const TermPtr& arg : raw(scope, size - 1 - k))
          out.push_back(mk_app(fn, mk_arg(arg)));
    memo[scope][size] = out;
    return out;
  };

  std::set<std::string> oracle;
  for (int s = 1; s <= bound; ++s)
    for (const TermPtr& m : raw(2, s)) {
      try {
        infer(base, m, TypeSystem::S);
      } catch (const TypeError&) {
        continue;
      }
      oracle.insert(canonical_key(m));
    }

  CorpusSpec spec;
  spec.sort = Sort::Lambda;
  spec.size_bound = bound;
  spec.base_ctx = base;
  std::set<std::string> enumerated = key_set(enumerate_typed_terms(spec));
  CHECK(enumerated == oracle);
  CHECK(enumerated.size() > 20);
}

TEST_CASE("random corpus is deterministic per seed") {
  RandomSpec spec;
  spec.sort = Sort::LambdaMu;
  spec.seed = 11;
  std::vector<CorpusItem> a = random_typed_terms(spec, 30);
  std::vector<CorpusItem> b = random_typed_terms(spec, 30);
  REQUIRE(a.size() == 30);
  REQUIRE(b.size() == 30);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(canonical_key(a[i].term) == canonical_key(b[i].term));
    CHECK(type_key(a[i].type) == type_key(b[i].type));
  }

  spec.seed = 12;
  std::vector<CorpusItem> c = random_typed_terms(spec, 30);
  std::string ka, kc;
  for (size_t i = 0; i < 30; ++i) {
    ka += canonical_key(a[i].term);
    kc += canonical_key(c[i].term);
  }
  CHECK(ka != kc);

  for (Sort s : {Sort::Lambda, Sort::LambdaMu, Sort::Full}) {
    RandomSpec rs;
    rs.sort = s;
    rs.seed = 5;
    for (const CorpusItem& it : random_typed_terms(rs, 20))
      CHECK_NOTHROW(check(it.ctx, it.term, it.type, system_of(s), rs.eqs));
  }
}

TEST_CASE("report bookkeeping") {
  LemmaReport r;
  r.id = "demo";
  r.tried = 3;
  r.pass();
  r.fail("boom");
  r.fuel_out("slow");
  CHECK(!r.ok());
  CHECK(r.failed());
  std::string s = r.summary();
  CHECK(s.find("demo: tried=3 passed=1 failed=1 inconclusive=1 -> FAIL") == 0);
  CHECK(s.find("  witness: boom") != std::string::npos);

  LemmaReport r2;
  r2.tried = 2;
  r2.pass();
  r2.pass();
  r2.merge(r);
  CHECK(r2.tried == 5);
  CHECK(r2.passed == 3);
  CHECK(r2.failures.size() == 1);
  CHECK(r2.inconclusive == 1);

  LemmaReport clean;
  clean.id = "demo";
  clean.tried = 1;
  clean.pass();
  CHECK(clean.ok());
  CHECK(clean.summary() == "demo: tried=1 passed=1 failed=0 inconclusive=0 -> PASS");
}

TEST_CASE("single step redex families replay") {
  LemmaReport rep = appendix_replay();
  INFO(rep.summary());
  CHECK(rep.ok());
  CHECK(rep.tried >= 10);
}

TEST_CASE("recursive equation counterexamples") {
  LemmaReport rep = run_counterexamples();
  INFO(rep.summary());
  CHECK(rep.ok());
  CHECK(rep.tried >= 6);
}

TEST_CASE("every lemma id runs clean on a small budget") {
  for (const std::string& id : lemma_ids()) {
    VerifyOptions o;
    o.max_size = 3;
    o.count = 4;
    o.seed = 7;
    o.fuel = 60000;
    if (id == "sn-sweep") o.sort = Sort::Lambda;
    LemmaReport rep = run_lemma(id, o);
    INFO(rep.summary());
    CHECK(rep.id == id);
    CHECK(rep.ok());
    CHECK(rep.tried >= 1);
  }
  CHECK_THROWS_AS(run_lemma("nope", VerifyOptions{}), std::invalid_argument);
}
