#include "lmcalc/translate.hpp"

#include <map>
#include <stdexcept>

#include "lmcalc/text.hpp"

namespace lmcalc {

TermPtr t_term(const TypePtr& a) {
  switch (a->kind) {
    case TypeKind::Bot: {
      TypePtr bot = mk_bot();
      return mk_lam("x", mk_neg(mk_neg(bot)),
                    mk_app(mk_var("x"), mk_lam("y", bot, mk_var("y"))));
    }
    case TypeKind::Atom:
      return mk_const(a->atom);
    case TypeKind::Arrow: {
      TermPtr uvy = mk_app(mk_var("u"), mk_app(mk_var("v"), mk_var("y")));
      TermPtr xarg = mk_app(mk_var("x"), mk_lam("v", a, uvy));
      TermPtr tb_arg = mk_lam("u", mk_neg(a->rhs), xarg);
      return mk_lam("x", mk_neg(mk_neg(a)),
                    mk_lam("y", a->lhs, mk_app(t_term(a->rhs), tb_arg)));
    }
    default:
      throw std::invalid_argument("t_term needs a type without /\\ or \\/: " + print_type(a));
  }
}

std::string diamond_var(const std::string& a) { return "x_" + a; }

namespace {

struct DiamondEnv {
  std::map<std::string, std::string> map;  // mu variable -> lambda variable
  std::set<std::string> avoid;
};

TermPtr diamond_rec(const TermPtr& m, DiamondEnv& env) {
  switch (m->kind) {
    case TermKind::Var:
    case TermKind::Const:
      return m;
    case TermKind::Lam:
      return mk_lam(m->var, m->ann, diamond_rec(m->lhs, env));
    case TermKind::App: {
      if (m->elim->kind != ElimKind::TermArg)
        throw std::invalid_argument("diamond is defined on lambda-mu terms only");
      return mk_app(diamond_rec(m->lhs, env), diamond_rec(m->elim->arg, env));
    }
    case TermKind::Mu: {
      if (!m->ann)
        throw std::invalid_argument("diamond needs the mu annotation in " + print_term(m));
      std::string x = fresh_name(diamond_var(m->var), env.avoid);
      env.avoid.insert(x);
      auto it = env.map.find(m->var);
      std::string old = it == env.map.end() ? std::string() : it->second;
      env.map[m->var] = x;
      TermPtr body = diamond_rec(m->lhs, env);
      if (old.empty()) env.map.erase(m->var);
      else env.map[m->var] = old;
      return mk_app(t_term(m->ann), mk_lam(x, mk_neg(m->ann), body));
    }
    case TermKind::Name:
      return mk_app(mk_var(env.map.at(m->var)), diamond_rec(m->lhs, env));
    default:
      throw std::invalid_argument("diamond is defined on lambda-mu terms only");
  }
}

}  // namespace

TermPtr diamond(const TermPtr& m) {
  DiamondEnv env;
  env.avoid = all_var_names(m);
  for (const std::string& a : free_vars(m).mu) {
    std::string x = diamond_var(a);
    if (env.avoid.count(x))
      throw std::invalid_argument("diamond: the name " + x + " already occurs in the term");
    env.map[a] = x;
    env.avoid.insert(x);
  }
  return diamond_rec(m, env);
}

Context diamond_context(const Context& ctx) {
  Context out;
  out.lam = ctx.lam;
  for (auto& [a, b] : ctx.mu) {
    std::string x = diamond_var(a);
    if (!out.lam.emplace(x, mk_neg(b)).second)
      throw std::invalid_argument("diamond context: " + x + " is already bound");
  }
  return out;
}

namespace {

struct FreshSupply {
  std::set<std::string> used;

  std::string get(const std::string& base) {
    std::string n = fresh_name(base, used);
    used.insert(n);
    return n;
  }
};

bool mentions_phi(const TermPtr& m) {
  switch (m->kind) {
    case TermKind::Var:
    case TermKind::Const:
      return false;
    case TermKind::Lam:
    case TermKind::Inj:
      return mentions_phi(m->lhs);
    case TermKind::Mu:
    case TermKind::Name:
      return m->var == phi_var || mentions_phi(m->lhs);
    case TermKind::Pair:
      return mentions_phi(m->lhs) || mentions_phi(m->rhs);
    case TermKind::App: {
      if (mentions_phi(m->lhs)) return true;
      const Elim& e = *m->elim;
      if (e.kind == ElimKind::TermArg) return mentions_phi(e.arg);
      if (e.kind == ElimKind::Case) return mentions_phi(e.n1) || mentions_phi(e.n2);
      return false;
    }
  }
  return false;
}

TypePtr circle_ann(const TypePtr& a) { return a ? circle_type(a) : nullptr; }

TermPtr circ_rec(const TermPtr& m, FreshSupply& fs) {
  switch (m->kind) {
    case TermKind::Var:
      return m;
    case TermKind::Lam:
      return mk_lam(m->var, circle_ann(m->ann), circ_rec(m->lhs, fs));
    case TermKind::Mu:
      return mk_mu(m->var, circle_ann(m->ann), circ_rec(m->lhs, fs));
    case TermKind::Name:
      return mk_name(m->var, circ_rec(m->lhs, fs));
    case TermKind::Pair: {
      std::string z = fs.get("z");
      return mk_lam(z, nullptr,
                    mk_app(mk_app(mk_var(z), circ_rec(m->lhs, fs)), circ_rec(m->rhs, fs)));
    }
    case TermKind::Inj: {
      std::string x1 = fs.get("x1"), x2 = fs.get("x2");
      return mk_lam(x1, nullptr,
                    mk_lam(x2, nullptr,
                           mk_app(mk_var(m->idx == 1 ? x1 : x2), circ_rec(m->lhs, fs))));
    }
    case TermKind::App: {
      const Elim& e = *m->elim;
      TermPtr f = circ_rec(m->lhs, fs);
      switch (e.kind) {
        case ElimKind::TermArg:
          return mk_app(f, circ_rec(e.arg, fs));
        case ElimKind::Proj: {
          std::string a = fs.get("a"), x1 = fs.get("x1"), x2 = fs.get("x2"), g = fs.get("g");
          TermPtr sel = mk_mu(g, nullptr, mk_name(a, mk_var(e.idx == 1 ? x1 : x2)));
          TermPtr probe = mk_lam(x1, nullptr, mk_lam(x2, nullptr, sel));
          return mk_mu(a, nullptr, mk_name(phi_var, mk_app(f, probe)));
        }
        case ElimKind::Case: {
          std::string a = fs.get("a"), g1 = fs.get("g"), g2 = fs.get("g");
          TermPtr b1 = mk_lam(e.x1, nullptr, mk_mu(g1, nullptr, mk_name(a, circ_rec(e.n1, fs))));
          TermPtr b2 = mk_lam(e.x2, nullptr, mk_mu(g2, nullptr, mk_name(a, circ_rec(e.n2, fs))));
          return mk_mu(a, nullptr, mk_name(phi_var, mk_app(mk_app(f, b1), b2)));
        }
      }
      break;
    }
    case TermKind::Const:
      break;
  }
  throw std::invalid_argument("circle has no clause for " + print_term(m));
}

}  // namespace

TermPtr circle(const TermPtr& m) {
  if (mentions_phi(m))
    throw std::invalid_argument("circle: the source term mentions the reserved variable phi");
  FreshSupply fs;
  fs.used = all_var_names(m);
  fs.used.insert(phi_var);
  return circ_rec(m, fs);
}

namespace {

// Re-derives source types while translating, mirroring the induction that
// proves the circle image well-typed; introduced binders get annotations.
struct CircleTyper {
  FreshSupply fs;
  const EquationSet* eqs;
  std::map<std::string, TypePtr> lam, mu;

  [[noreturn]] void err(const std::string& msg, const TermPtr& t) {
    throw std::invalid_argument(msg + " in " + print_term(t));
  }

  TypePtr unfold(const TypePtr& t, const TermPtr& at, TypeKind want, const char* what) {
    TypePtr u = head_unfold(t, eqs);
    if (u->kind != want) err(std::string("expected ") + what + ", got " + print_type(t), at);
    return u;
  }

  std::pair<TermPtr, TypePtr> go(const TermPtr& m) {
    switch (m->kind) {
      case TermKind::Var: {
        auto it = lam.find(m->var);
        if (it == lam.end()) err("unbound variable " + m->var, m);
        return {m, it->second};
      }
      case TermKind::Lam: {
        if (!m->ann) err("missing annotation on " + m->var, m);
        auto saved = set_scoped(lam, m->var, m->ann);
        auto [body, bt] = go(m->lhs);
        restore(lam, m->var, saved);
        return {mk_lam(m->var, circle_type(m->ann), body), mk_arrow(m->ann, bt)};
      }
      case TermKind::Mu: {
        if (!m->ann) err("missing annotation on mu " + m->var, m);
        auto saved = set_scoped(mu, m->var, m->ann);
        auto [body, bt] = go(m->lhs);
        restore(mu, m->var, saved);
        (void)bt;
        return {mk_mu(m->var, circle_type(m->ann), body), m->ann};
      }
      case TermKind::Name: {
        auto it = mu.find(m->var);
        if (it == mu.end()) err("unbound mu variable " + m->var, m);
        auto [body, bt] = go(m->lhs);
        (void)bt;
        return {mk_name(m->var, body), mk_bot()};
      }
      case TermKind::Pair: {
        auto [l, a1] = go(m->lhs);
        auto [r, a2] = go(m->rhs);
        std::string z = fs.get("z");
        TypePtr zt = mk_arrow(circle_type(a1), mk_arrow(circle_type(a2), mk_bot()));
        return {mk_lam(z, zt, mk_app(mk_app(mk_var(z), l), r)), mk_and(a1, a2)};
      }
      case TermKind::Inj: {
        if (!m->ann) err("missing target annotation on injection", m);
        TypePtr au = unfold(m->ann, m, TypeKind::Or, "a disjunction");
        auto [body, bt] = go(m->lhs);
        (void)bt;
        std::string x1 = fs.get("x1"), x2 = fs.get("x2");
        TermPtr img =
            mk_lam(x1, mk_neg(circle_type(au->lhs)),
                   mk_lam(x2, mk_neg(circle_type(au->rhs)),
                          mk_app(mk_var(m->idx == 1 ? x1 : x2), body)));
        return {img, m->ann};
      }
      case TermKind::App: {
        const Elim& e = *m->elim;
        auto [f, tf] = go(m->lhs);
        switch (e.kind) {
          case ElimKind::TermArg: {
            TypePtr tfu = unfold(tf, m, TypeKind::Arrow, "a function type");
            auto [arg, ta] = go(e.arg);
            (void)ta;
            return {mk_app(f, arg), tfu->rhs};
          }
          case ElimKind::Proj: {
            TypePtr tfu = unfold(tf, m, TypeKind::And, "a conjunction");
            TypePtr ai = e.idx == 1 ? tfu->lhs : tfu->rhs;
            std::string a = fs.get("a"), x1 = fs.get("x1"), x2 = fs.get("x2"), g = fs.get("g");
            TermPtr sel = mk_mu(g, mk_bot(), mk_name(a, mk_var(e.idx == 1 ? x1 : x2)));
            TermPtr probe = mk_lam(x1, circle_type(tfu->lhs),
                                   mk_lam(x2, circle_type(tfu->rhs), sel));
            return {mk_mu(a, circle_type(ai), mk_name(phi_var, mk_app(f, probe))), ai};
          }
          case ElimKind::Case: {
            TypePtr tfu = unfold(tf, m, TypeKind::Or, "a disjunction");
            auto s1 = set_scoped(lam, e.x1, tfu->lhs);
            auto [n1, c1] = go(e.n1);
            restore(lam, e.x1, s1);
            auto s2 = set_scoped(lam, e.x2, tfu->rhs);
            auto [n2, c2] = go(e.n2);
            restore(lam, e.x2, s2);
            (void)c2;
            std::string a = fs.get("a"), g1 = fs.get("g"), g2 = fs.get("g");
            TermPtr b1 = mk_lam(e.x1, circle_type(tfu->lhs),
                                mk_mu(g1, mk_bot(), mk_name(a, n1)));
            TermPtr b2 = mk_lam(e.x2, circle_type(tfu->rhs),
                                mk_mu(g2, mk_bot(), mk_name(a, n2)));
            return {mk_mu(a, circle_type(c1), mk_name(phi_var, mk_app(mk_app(f, b1), b2))), c1};
          }
        }
        break;
      }
      case TermKind::Const:
        break;
    }
    err("no circle clause", m);
  }

  using Saved = std::pair<bool, TypePtr>;

  Saved set_scoped(std::map<std::string, TypePtr>& env, const std::string& k, TypePtr v) {
    auto it = env.find(k);
    Saved old{it != env.end(), it != env.end() ? it->second : nullptr};
    env[k] = std::move(v);
    return old;
  }

  void restore(std::map<std::string, TypePtr>& env, const std::string& k, const Saved& old) {
    if (old.first) env[k] = old.second;
    else env.erase(k);
  }
};

}  // namespace

TermPtr circle_annotated(const Context& ctx, const TermPtr& m, const EquationSet* eqs) {
  if (mentions_phi(m))
    throw std::invalid_argument("circle: the source term mentions the reserved variable phi");
  CircleTyper ct;
  ct.eqs = eqs;
  ct.lam = ctx.lam;
  ct.mu = ctx.mu;
  ct.fs.used = all_var_names(m);
  ct.fs.used.insert(phi_var);
  for (auto& [x, ty] : ctx.lam) ct.fs.used.insert(x);
  for (auto& [a, ty] : ctx.mu) ct.fs.used.insert(a);
  return ct.go(m).first;
}

Context circle_context(const Context& ctx) {
  if (ctx.mu.count(phi_var))
    throw std::invalid_argument("circle context: phi is already bound");
  Context out;
  for (auto& [x, ty] : ctx.lam) out.lam.emplace(x, circle_type(ty));
  for (auto& [a, ty] : ctx.mu) out.mu.emplace(a, circle_type(ty));
  out.mu.emplace(phi_var, mk_bot());
  return out;
}

}  // namespace lmcalc
