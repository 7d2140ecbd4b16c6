#include "lmcalc/type.hpp"

#include <deque>
#include <set>

namespace lmcalc {

TypePtr mk_atom(std::string name) {
  auto t = std::make_shared<Type>();
  t->kind = TypeKind::Atom;
  t->atom = std::move(name);
  return t;
}

TypePtr mk_bot() {
  auto t = std::make_shared<Type>();
  t->kind = TypeKind::Bot;
  return t;
}

static TypePtr mk_bin(TypeKind k, TypePtr l, TypePtr r) {
  auto t = std::make_shared<Type>();
  t->kind = k;
  t->lhs = std::move(l);
  t->rhs = std::move(r);
  return t;
}

TypePtr mk_arrow(TypePtr l, TypePtr r) { return mk_bin(TypeKind::Arrow, std::move(l), std::move(r)); }
TypePtr mk_and(TypePtr l, TypePtr r) { return mk_bin(TypeKind::And, std::move(l), std::move(r)); }
TypePtr mk_or(TypePtr l, TypePtr r) { return mk_bin(TypeKind::Or, std::move(l), std::move(r)); }
TypePtr mk_neg(TypePtr a) { return mk_arrow(std::move(a), mk_bot()); }

bool type_eq(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TypeKind::Atom: return a->atom == b->atom;
    case TypeKind::Bot: return true;
    default: return type_eq(a->lhs, b->lhs) && type_eq(a->rhs, b->rhs);
  }
}

bool is_neg(const TypePtr& a) {
  return a && a->kind == TypeKind::Arrow && a->rhs->kind == TypeKind::Bot;
}

bool in_sort_t(const TypePtr& a) {
  switch (a->kind) {
    case TypeKind::Atom:
    case TypeKind::Bot: return true;
    case TypeKind::Arrow: return in_sort_t(a->lhs) && in_sort_t(a->rhs);
    default: return false;
  }
}

int type_size(const TypePtr& a) {
  switch (a->kind) {
    case TypeKind::Atom:
    case TypeKind::Bot: return 1;
    default: return 1 + type_size(a->lhs) + type_size(a->rhs);
  }
}

int type_height(const TypePtr& a) {
  switch (a->kind) {
    case TypeKind::Atom:
    case TypeKind::Bot: return 1;
    default: return 1 + std::max(type_height(a->lhs), type_height(a->rhs));
  }
}

std::string type_key(const TypePtr& a) {
  switch (a->kind) {
    case TypeKind::Atom: return "a" + a->atom + ";";
    case TypeKind::Bot: return "0";
    case TypeKind::Arrow: return ">" + type_key(a->lhs) + type_key(a->rhs);
    case TypeKind::And: return "&" + type_key(a->lhs) + type_key(a->rhs);
    case TypeKind::Or: return "|" + type_key(a->lhs) + type_key(a->rhs);
  }
  return "?";
}

Polarity pol_join(Polarity a, Polarity b) {
  if (a == b) return a;
  if (a == Polarity::Absent) return b;
  if (b == Polarity::Absent) return a;
  return Polarity::Both;
}

Polarity pol_flip(Polarity p) {
  switch (p) {
    case Polarity::Positive: return Polarity::Negative;
    case Polarity::Negative: return Polarity::Positive;
    default: return p;
  }
}

const char* to_string(Polarity p) {
  switch (p) {
    case Polarity::Absent: return "absent";
    case Polarity::Positive: return "positive";
    case Polarity::Negative: return "negative";
    case Polarity::Both: return "both";
  }
  return "?";
}

Polarity polarity_of(const std::string& x, const TypePtr& a) {
  switch (a->kind) {
    case TypeKind::Atom:
      return a->atom == x ? Polarity::Positive : Polarity::Absent;
    case TypeKind::Bot:
      return Polarity::Absent;
    case TypeKind::Arrow:
      return pol_join(pol_flip(polarity_of(x, a->lhs)), polarity_of(x, a->rhs));
    default:
      return pol_join(polarity_of(x, a->lhs), polarity_of(x, a->rhs));
  }
}

EquationSet EquationSet::make(std::vector<std::pair<std::string, TypePtr>> defs) {
  EquationSet eqs;
  for (auto& [x, f] : defs) {
    if (!eqs.defs_.emplace(x, f).second)
      throw std::invalid_argument("duplicate equation for " + x);
  }
  for (auto& [x, f] : eqs.defs_) {
    if (f->kind == TypeKind::Atom && eqs.defs_.count(f->atom))
      throw std::invalid_argument("equation for " + x + " has a bare recursion variable as right-hand side");
    if (!in_sort_t(f)) eqs.t_prime_ = true;
  }
  return eqs;
}

const TypePtr* EquationSet::find(const std::string& x) const {
  auto it = defs_.find(x);
  return it == defs_.end() ? nullptr : &it->second;
}

std::string GoodnessReport::to_string() const {
  if (good) return "good";
  std::string s = "not good: negative cycle";
  for (size_t i = 0; i < cycle.size(); ++i) s += (i ? " -> " : " ") + cycle[i];
  return s;
}

GoodnessReport is_good(const EquationSet& eqs) {
  // Signed edges X -> (Y, sign); an occurrence with both signs yields two
  // edges.  Good iff no variable reaches itself with negative product.
  struct Edge { std::string to; bool neg; };
  std::map<std::string, std::vector<Edge>> edges;
  for (auto& [x, f] : eqs.defs()) {
    for (auto& [y, g] : eqs.defs()) {
      (void)g;
      Polarity p = polarity_of(y, f);
      if (p == Polarity::Positive || p == Polarity::Both) edges[x].push_back({y, false});
      if (p == Polarity::Negative || p == Polarity::Both) edges[x].push_back({y, true});
    }
  }
  for (auto& [start, unused] : eqs.defs()) {
    (void)unused;
    // BFS over (var, sign-product) states from start with positive product.
    struct State { std::string var; bool neg; };
    std::map<std::pair<std::string, bool>, std::pair<std::string, bool>> parent;
    std::deque<State> queue;
    auto push = [&](const State& s, const State& from) {
      auto key = std::make_pair(s.var, s.neg);
      if (parent.count(key)) return;
      parent[key] = {from.var, from.neg};
      queue.push_back(s);
    };
    State root{start, false};
    parent[{start, false}] = {start, false};
    queue.push_back(root);
    while (!queue.empty()) {
      State s = queue.front();
      queue.pop_front();
      for (auto& e : edges[s.var]) {
        State next{e.to, s.neg != e.neg};
        if (next.var == start && next.neg) {
          GoodnessReport rep;
          rep.good = false;
          rep.cycle.push_back(start);
          // Walk parents back from s to start.
          std::vector<std::string> back;
          auto cur = std::make_pair(s.var, s.neg);
          while (!(cur.first == start && cur.second == false)) {
            back.push_back(cur.first);
            cur = parent[cur];
          }
          for (auto it = back.rbegin(); it != back.rend(); ++it) rep.cycle.push_back(*it);
          rep.cycle.push_back(start);
          return rep;
        }
        push(next, s);
      }
    }
  }
  return {};
}

TypePtr head_unfold(TypePtr t, const EquationSet* eqs) {
  if (!eqs) return t;
  int guard = 0;
  while (t->kind == TypeKind::Atom) {
    const TypePtr* f = eqs->find(t->atom);
    if (!f) break;
    t = *f;
    if (++guard > static_cast<int>(eqs->defs().size()) + 1) break;  // cannot happen: no bare-variable sides
  }
  return t;
}

static bool cong_rec(TypePtr a, TypePtr b, const EquationSet& eqs,
                     std::set<std::pair<std::string, std::string>>& seen) {
  a = head_unfold(a, &eqs);
  b = head_unfold(b, &eqs);
  if (type_eq(a, b)) return true;
  if (a->kind != b->kind) return false;
  if (a->kind == TypeKind::Atom || a->kind == TypeKind::Bot) return false;
  auto key = std::make_pair(type_key(a), type_key(b));
  if (!seen.insert(key).second) return true;  // coinductive hypothesis
  return cong_rec(a->lhs, b->lhs, eqs, seen) && cong_rec(a->rhs, b->rhs, eqs, seen);
}

bool congruent(const TypePtr& a, const TypePtr& b, const EquationSet& eqs) {
  std::set<std::pair<std::string, std::string>> seen;
  return cong_rec(a, b, eqs, seen);
}

TypePtr circle_type(const TypePtr& a) {
  switch (a->kind) {
    case TypeKind::Atom:
    case TypeKind::Bot:
      return a;
    case TypeKind::Arrow:
      return mk_arrow(circle_type(a->lhs), circle_type(a->rhs));
    case TypeKind::And:
      return mk_neg(mk_arrow(circle_type(a->lhs), mk_arrow(circle_type(a->rhs), mk_bot())));
    case TypeKind::Or:
      return mk_arrow(mk_neg(circle_type(a->lhs)), mk_arrow(mk_neg(circle_type(a->rhs)), mk_bot()));
  }
  return a;
}

EquationSet circle_equations(const EquationSet& eqs) {
  std::vector<std::pair<std::string, TypePtr>> defs;
  for (auto& [x, f] : eqs.defs()) defs.emplace_back(x, circle_type(f));
  return EquationSet::make(defs);
}

}  // namespace lmcalc
