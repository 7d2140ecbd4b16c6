#include "lmcalc/typing.hpp"

#include <map>
#include <optional>

#include "lmcalc/text.hpp"

namespace lmcalc {

Sort sort_of(TypeSystem sys) {
  switch (sys) {
    case TypeSystem::S:
    case TypeSystem::Sc: return Sort::Lambda;
    case TypeSystem::Smu: return Sort::LambdaMu;
    case TypeSystem::Sfull: return Sort::Full;
  }
  return Sort::Full;
}

const char* to_string(TypeSystem sys) {
  switch (sys) {
    case TypeSystem::S: return "s";
    case TypeSystem::Sc: return "sc";
    case TypeSystem::Smu: return "smu";
    case TypeSystem::Sfull: return "sfull";
  }
  return "?";
}

namespace {

// An unannotated mu binder is typed in two passes: the first resolves its
// type from the named occurrences, the second rebuilds the derivation
// with the resolved type in every context snapshot.
struct MuSlot {
  TypePtr type;
  bool pending = false;
};

struct Deriver {
  TypeSystem sys;
  const EquationSet* eqs;

  std::map<std::string, TypePtr> lam_env;
  std::map<std::string, std::shared_ptr<MuSlot>> mu_env;

  bool ceq(const TypePtr& a, const TypePtr& b) {
    return type_eq(a, b) || (eqs && congruent(a, b, *eqs));
  }

  [[noreturn]] void err(const std::string& msg, const TermPtr& t) {
    throw TypeError(msg + " in " + print_term(t));
  }

  Context snapshot() {
    Context c;
    c.lam = lam_env;
    for (auto& [a, slot] : mu_env)
      if (slot->type) c.mu.emplace(a, slot->type);
    return c;
  }

  DerivationPtr node(const char* rule, const TermPtr& t, TypePtr ty,
                     std::vector<DerivationPtr> prem) {
    auto d = std::make_shared<Derivation>();
    d->rule = rule;
    d->ctx = snapshot();
    d->term = t;
    d->type = std::move(ty);
    d->premises = std::move(prem);
    return d;
  }

  DerivationPtr coerce(DerivationPtr d, const TypePtr& to) {
    if (type_eq(d->type, to)) return d;
    TermPtr t = d->term;
    return node("approx", t, to, {std::move(d)});
  }

  void check_type_sort(const TypePtr& a, const TermPtr& t) {
    if (sys != TypeSystem::Sfull && !in_sort_t(a))
      err("type " + print_type(a) + " uses /\\ or \\/ outside sfull", t);
  }

  // The expected type of a subterm, where the surrounding structure
  // determines one.  Used only to type mu binders with no annotation
  // and no named occurrence; every use is re-verified afterwards.
  TypePtr part(const TypePtr& want, TypeKind k, int side) {
    if (!want) return nullptr;
    TypePtr wu = head_unfold(want, eqs);
    if (wu->kind != k) return nullptr;
    return side == 1 ? wu->lhs : wu->rhs;
  }

  std::pair<DerivationPtr, TypePtr> go(const TermPtr& t, const TypePtr& want = nullptr) {
    switch (t->kind) {
      case TermKind::Var: {
        auto it = lam_env.find(t->var);
        if (it == lam_env.end()) err("unbound variable " + t->var, t);
        return {node("ax", t, it->second, {}), it->second};
      }
      case TermKind::Const: {
        if (sys != TypeSystem::Sc) err("constants are only typed in sc", t);
        TypePtr ty = mk_arrow(mk_neg(mk_neg(mk_atom(t->var))), mk_atom(t->var));
        return {node("const", t, ty, {}), ty};
      }
      case TermKind::Lam: {
        if (!t->ann) err("missing annotation on lambda binder " + t->var, t);
        check_type_sort(t->ann, t);
        auto saved = save_lam(t->var, t->ann);
        auto [db, bt] = go(t->lhs, part(want, TypeKind::Arrow, 2));
        restore_lam(t->var, saved);
        TypePtr ty = mk_arrow(t->ann, bt);
        // Context of the conclusion must not contain the binder.
        auto d = std::make_shared<Derivation>();
        d->rule = "->i";
        d->ctx = snapshot();
        d->term = t;
        d->type = ty;
        d->premises = {db};
        return {d, ty};
      }
      case TermKind::App:
        return go_app(t, want);
      case TermKind::Pair: {
        if (sys != TypeSystem::Sfull) err("pairs are only typed in sfull", t);
        auto [d1, t1] = go(t->lhs, part(want, TypeKind::And, 1));
        auto [d2, t2] = go(t->rhs, part(want, TypeKind::And, 2));
        TypePtr ty = mk_and(t1, t2);
        return {node("andi", t, ty, {d1, d2}), ty};
      }
      case TermKind::Inj: {
        if (sys != TypeSystem::Sfull) err("injections are only typed in sfull", t);
        if (!t->ann) err("ambiguous injection: no target annotation", t);
        TypePtr annu = head_unfold(t->ann, eqs);
        if (annu->kind != TypeKind::Or)
          err("injection annotation " + print_type(t->ann) + " is not a disjunction", t);
        TypePtr comp = t->idx == 1 ? annu->lhs : annu->rhs;
        auto [db, bt] = go(t->lhs, comp);
        if (!ceq(bt, comp))
          err("injection body has type " + print_type(bt) + ", expected " + print_type(comp), t);
        DerivationPtr d = node("ori", t, annu, {coerce(db, comp)});
        return {coerce(d, t->ann), t->ann};
      }
      case TermKind::Mu: {
        if (sys != TypeSystem::Smu && sys != TypeSystem::Sfull)
          err("mu abstraction outside smu and sfull", t);
        TypePtr a = t->ann;
        if (a) {
          check_type_sort(a, t);
        } else {
          // First pass: resolve the type from the named occurrences.
          auto slot = std::make_shared<MuSlot>();
          slot->pending = true;
          auto saved = save_mu(t->var, slot);
          go(t->lhs, mk_bot());
          restore_mu(t->var, saved);
          if (slot->type) a = slot->type;
          else if (want) a = want;
          else err("cannot determine the type of mu binder " + t->var, t);
        }
        auto slot = std::make_shared<MuSlot>();
        slot->type = a;
        auto saved = save_mu(t->var, slot);
        auto [db, bt] = go(t->lhs, mk_bot());
        if (!ceq(bt, mk_bot()))
          err("mu body has type " + print_type(bt) + ", expected bot", t);
        DerivationPtr body = coerce(db, mk_bot());
        restore_mu(t->var, saved);
        auto d = std::make_shared<Derivation>();
        d->rule = "bote";
        d->ctx = snapshot();
        d->term = t;
        d->type = a;
        d->premises = {body};
        return {d, a};
      }
      case TermKind::Name: {
        if (sys != TypeSystem::Smu && sys != TypeSystem::Sfull)
          err("named term outside smu and sfull", t);
        auto it = mu_env.find(t->var);
        if (it == mu_env.end()) err("unbound mu variable " + t->var, t);
        auto slot = it->second;
        auto [db, bt] = go(t->lhs, slot->type);
        if (!slot->type) {
          slot->type = bt;
        } else if (!ceq(bt, slot->type)) {
          err("named term body has type " + print_type(bt) + ", expected " +
                  print_type(slot->type), t);
        }
        return {node("boti", t, mk_bot(), {coerce(db, slot->type)}), mk_bot()};
      }
    }
    err("unreachable term kind", t);
  }

  std::pair<DerivationPtr, TypePtr> go_app(const TermPtr& t, const TypePtr& want) {
    const Elim& e = *t->elim;
    auto [df, tf] = go(t->lhs);
    TypePtr tfu = head_unfold(tf, eqs);
    switch (e.kind) {
      case ElimKind::TermArg: {
        if (tfu->kind != TypeKind::Arrow)
          err("applying a term of type " + print_type(tf), t);
        df = coerce(df, tfu);
        auto [da, ta] = go(e.arg, tfu->lhs);
        if (!ceq(ta, tfu->lhs))
          err("argument has type " + print_type(ta) + ", expected " + print_type(tfu->lhs), t);
        return {node("->e", t, tfu->rhs, {df, coerce(da, tfu->lhs)}), tfu->rhs};
      }
      case ElimKind::Proj: {
        if (sys != TypeSystem::Sfull) err("projections are only typed in sfull", t);
        if (tfu->kind != TypeKind::And)
          err("projecting a term of type " + print_type(tf), t);
        df = coerce(df, tfu);
        TypePtr ty = e.idx == 1 ? tfu->lhs : tfu->rhs;
        return {node("ande", t, ty, {df}), ty};
      }
      case ElimKind::Case: {
        if (sys != TypeSystem::Sfull) err("case analysis is only typed in sfull", t);
        if (tfu->kind != TypeKind::Or)
          err("case analysis on a term of type " + print_type(tf), t);
        df = coerce(df, tfu);
        auto s1 = save_lam(e.x1, tfu->lhs);
        auto [d1, c1] = go(e.n1, want);
        restore_lam(e.x1, s1);
        auto s2 = save_lam(e.x2, tfu->rhs);
        auto [d2, c2] = go(e.n2, want ? want : c1);
        restore_lam(e.x2, s2);
        if (!ceq(c1, c2))
          err("case branches have types " + print_type(c1) + " and " + print_type(c2), t);
        return {node("ore", t, c1, {df, d1, coerce(d2, c1)}), c1};
      }
    }
    err("unreachable eliminator", t);
  }

  std::optional<TypePtr> save_lam(const std::string& x, TypePtr ty) {
    std::optional<TypePtr> old;
    auto it = lam_env.find(x);
    if (it != lam_env.end()) old = it->second;
    lam_env[x] = std::move(ty);
    return old;
  }

  void restore_lam(const std::string& x, const std::optional<TypePtr>& old) {
    if (old) lam_env[x] = *old;
    else lam_env.erase(x);
  }

  std::optional<std::shared_ptr<MuSlot>> save_mu(const std::string& a, std::shared_ptr<MuSlot> s) {
    std::optional<std::shared_ptr<MuSlot>> old;
    auto it = mu_env.find(a);
    if (it != mu_env.end()) old = it->second;
    mu_env[a] = std::move(s);
    return old;
  }

  void restore_mu(const std::string& a, const std::optional<std::shared_ptr<MuSlot>>& old) {
    if (old) mu_env[a] = *old;
    else mu_env.erase(a);
  }
};

Deriver make_deriver(const Context& ctx, TypeSystem sys, const EquationSet* eqs,
                     const TermPtr& m) {
  if (!sort_allows(m, sort_of(sys)))
    throw TypeError("term " + print_term(m) + " is outside the sort of system " +
                    std::string(to_string(sys)));
  Deriver d;
  d.sys = sys;
  d.eqs = eqs;
  d.lam_env = ctx.lam;
  for (auto& [x, ty] : ctx.lam)
    if (sys != TypeSystem::Sfull && !in_sort_t(ty))
      throw TypeError("context type of " + x + " uses /\\ or \\/ outside sfull");
  for (auto& [a, ty] : ctx.mu) {
    if (sys == TypeSystem::S || sys == TypeSystem::Sc)
      throw TypeError("mu variable " + a + " in a context for system " + to_string(sys));
    if (sys != TypeSystem::Sfull && !in_sort_t(ty))
      throw TypeError("context type of mu variable " + a + " uses /\\ or \\/ outside sfull");
    auto slot = std::make_shared<MuSlot>();
    slot->type = ty;
    d.mu_env[a] = slot;
  }
  return d;
}

}  // namespace

TypePtr infer(const Context& ctx, const TermPtr& m, TypeSystem sys, const EquationSet* eqs) {
  Deriver d = make_deriver(ctx, sys, eqs, m);
  return d.go(m).second;
}

DerivationPtr check(const Context& ctx, const TermPtr& m, const TypePtr& a, TypeSystem sys,
                    const EquationSet* eqs) {
  Deriver d = make_deriver(ctx, sys, eqs, m);
  auto [deriv, ty] = d.go(m, a);
  if (type_eq(ty, a)) return deriv;
  if (eqs && congruent(ty, a, *eqs)) return d.coerce(deriv, a);
  throw TypeError("term " + print_term(m) + " has type " + print_type(ty) + ", expected " +
                  print_type(a));
}

namespace {

bool types_congruent(const TypePtr& a, const TypePtr& b, const EquationSet* eqs) {
  return type_eq(a, b) || (eqs && congruent(a, b, *eqs));
}

bool ctx_binds_lam(const Context& c, const std::string& x, const TypePtr& ty) {
  auto it = c.lam.find(x);
  return it != c.lam.end() && type_eq(it->second, ty);
}

bool ctx_binds_mu(const Context& c, const std::string& a, const TypePtr& ty) {
  auto it = c.mu.find(a);
  return it != c.mu.end() && type_eq(it->second, ty);
}

}  // namespace

bool derivation_ok(const DerivationPtr& d, const EquationSet* eqs) {
  if (!d || !d->term || !d->type) return false;
  for (auto& p : d->premises)
    if (!derivation_ok(p, eqs)) return false;
  const TermPtr& t = d->term;
  const std::string& r = d->rule;
  auto prem = [&](size_t i) -> const Derivation& { return *d->premises[i]; };
  if (r == "ax")
    return t->kind == TermKind::Var && d->premises.empty() && ctx_binds_lam(d->ctx, t->var, d->type);
  if (r == "const") {
    if (t->kind != TermKind::Const || !d->premises.empty()) return false;
    TypePtr want = mk_arrow(mk_neg(mk_neg(mk_atom(t->var))), mk_atom(t->var));
    return type_eq(d->type, want);
  }
  if (r == "->i") {
    if (t->kind != TermKind::Lam || d->premises.size() != 1 || !t->ann) return false;
    if (d->type->kind != TypeKind::Arrow) return false;
    return type_eq(d->type->lhs, t->ann) && type_eq(d->type->rhs, prem(0).type) &&
           ctx_binds_lam(prem(0).ctx, t->var, t->ann);
  }
  if (r == "->e") {
    if (t->kind != TermKind::App || t->elim->kind != ElimKind::TermArg) return false;
    if (d->premises.size() != 2) return false;
    const TypePtr& f = prem(0).type;
    return f->kind == TypeKind::Arrow && type_eq(f->lhs, prem(1).type) && type_eq(f->rhs, d->type);
  }
  if (r == "boti") {
    if (t->kind != TermKind::Name || d->premises.size() != 1) return false;
    return d->type->kind == TypeKind::Bot && ctx_binds_mu(d->ctx, t->var, prem(0).type);
  }
  if (r == "bote") {
    if (t->kind != TermKind::Mu || d->premises.size() != 1) return false;
    return prem(0).type->kind == TypeKind::Bot && ctx_binds_mu(prem(0).ctx, t->var, d->type);
  }
  if (r == "andi") {
    if (t->kind != TermKind::Pair || d->premises.size() != 2) return false;
    return d->type->kind == TypeKind::And && type_eq(d->type->lhs, prem(0).type) &&
           type_eq(d->type->rhs, prem(1).type);
  }
  if (r == "ande") {
    if (t->kind != TermKind::App || t->elim->kind != ElimKind::Proj) return false;
    if (d->premises.size() != 1 || prem(0).type->kind != TypeKind::And) return false;
    return type_eq(d->type, t->elim->idx == 1 ? prem(0).type->lhs : prem(0).type->rhs);
  }
  if (r == "ori") {
    if (t->kind != TermKind::Inj || d->premises.size() != 1) return false;
    if (d->type->kind != TypeKind::Or) return false;
    return type_eq(t->idx == 1 ? d->type->lhs : d->type->rhs, prem(0).type);
  }
  if (r == "ore") {
    if (t->kind != TermKind::App || t->elim->kind != ElimKind::Case) return false;
    if (d->premises.size() != 3 || prem(0).type->kind != TypeKind::Or) return false;
    return type_eq(d->type, prem(1).type) && type_eq(d->type, prem(2).type) &&
           ctx_binds_lam(prem(1).ctx, t->elim->x1, prem(0).type->lhs) &&
           ctx_binds_lam(prem(2).ctx, t->elim->x2, prem(0).type->rhs);
  }
  if (r == "approx")
    return d->premises.size() == 1 && types_congruent(prem(0).type, d->type, eqs);
  return false;
}

namespace {

void deriv_print(const DerivationPtr& d, int depth, std::string& out) {
  out.append(depth * 2, ' ');
  out += d->rule + ": " + print_term(d->term) + " : " + print_type(d->type) + "\n";
  for (auto& p : d->premises) deriv_print(p, depth + 1, out);
}

}  // namespace

std::string derivation_to_string(const DerivationPtr& d) {
  std::string out;
  deriv_print(d, 0, out);
  return out;
}

}  // namespace lmcalc
