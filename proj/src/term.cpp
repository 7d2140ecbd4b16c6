#include "lmcalc/term.hpp"

#include <map>
#include <stdexcept>

namespace lmcalc {

TermPtr mk_var(std::string x) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->var = std::move(x);
  return t;
}

TermPtr mk_const(std::string atom) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Const;
  t->var = std::move(atom);
  return t;
}

TermPtr mk_lam(std::string x, TypePtr ann, TermPtr body) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Lam;
  t->var = std::move(x);
  t->ann = std::move(ann);
  t->lhs = std::move(body);
  return t;
}

TermPtr mk_app(TermPtr f, ElimPtr e) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::App;
  t->lhs = std::move(f);
  t->elim = std::move(e);
  return t;
}

TermPtr mk_app(TermPtr f, TermPtr arg) { return mk_app(std::move(f), mk_arg(std::move(arg))); }

TermPtr mk_pair(TermPtr l, TermPtr r) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Pair;
  t->lhs = std::move(l);
  t->rhs = std::move(r);
  return t;
}

TermPtr mk_inj(int idx, TypePtr ann, TermPtr body) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Inj;
  t->idx = idx;
  t->ann = std::move(ann);
  t->lhs = std::move(body);
  return t;
}

TermPtr mk_mu(std::string a, TypePtr ann, TermPtr body) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Mu;
  t->var = std::move(a);
  t->ann = std::move(ann);
  t->lhs = std::move(body);
  return t;
}

TermPtr mk_name(std::string a, TermPtr body) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Name;
  t->var = std::move(a);
  t->lhs = std::move(body);
  return t;
}

ElimPtr mk_arg(TermPtr t) {
  auto e = std::make_shared<Elim>();
  e->kind = ElimKind::TermArg;
  e->arg = std::move(t);
  return e;
}

ElimPtr mk_proj(int idx) {
  auto e = std::make_shared<Elim>();
  e->kind = ElimKind::Proj;
  e->idx = idx;
  return e;
}

ElimPtr mk_case(std::string x1, TermPtr n1, std::string x2, TermPtr n2) {
  auto e = std::make_shared<Elim>();
  e->kind = ElimKind::Case;
  e->x1 = std::move(x1);
  e->n1 = std::move(n1);
  e->x2 = std::move(x2);
  e->n2 = std::move(n2);
  return e;
}

std::string position_to_string(const Position& p) {
  if (p.empty()) return "-";
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(p[i]);
  }
  return s;
}

TermPtr subterm_at(const TermPtr& t, const Position& p) {
  TermPtr cur = t;
  for (int i : p) {
    if (!cur) throw std::out_of_range("position off the term");
    switch (cur->kind) {
      case TermKind::Lam:
      case TermKind::Mu:
      case TermKind::Name:
      case TermKind::Inj:
        if (i != 0) throw std::out_of_range("position off the term");
        cur = cur->lhs;
        break;
      case TermKind::Pair:
        if (i == 0) cur = cur->lhs;
        else if (i == 1) cur = cur->rhs;
        else throw std::out_of_range("position off the term");
        break;
      case TermKind::App:
        if (i == 0) cur = cur->lhs;
        else if (i == 1 && cur->elim->kind == ElimKind::TermArg) cur = cur->elim->arg;
        else if (i == 1 && cur->elim->kind == ElimKind::Case) cur = cur->elim->n1;
        else if (i == 2 && cur->elim->kind == ElimKind::Case) cur = cur->elim->n2;
        else throw std::out_of_range("position off the term");
        break;
      default:
        throw std::out_of_range("position off the term");
    }
  }
  if (!cur) throw std::out_of_range("position off the term");
  return cur;
}

namespace {

void free_vars_rec(const TermPtr& t, std::set<std::string>& lam_bound,
                   std::set<std::string>& mu_bound, FreeVars& out) {
  switch (t->kind) {
    case TermKind::Var:
      if (!lam_bound.count(t->var)) out.lam.insert(t->var);
      break;
    case TermKind::Const:
      break;
    case TermKind::Lam: {
      bool fresh = lam_bound.insert(t->var).second;
      free_vars_rec(t->lhs, lam_bound, mu_bound, out);
      if (fresh) lam_bound.erase(t->var);
      break;
    }
    case TermKind::Mu: {
      bool fresh = mu_bound.insert(t->var).second;
      free_vars_rec(t->lhs, lam_bound, mu_bound, out);
      if (fresh) mu_bound.erase(t->var);
      break;
    }
    case TermKind::Name:
      if (!mu_bound.count(t->var)) out.mu.insert(t->var);
      free_vars_rec(t->lhs, lam_bound, mu_bound, out);
      break;
    case TermKind::Inj:
      free_vars_rec(t->lhs, lam_bound, mu_bound, out);
      break;
    case TermKind::Pair:
      free_vars_rec(t->lhs, lam_bound, mu_bound, out);
      free_vars_rec(t->rhs, lam_bound, mu_bound, out);
      break;
    case TermKind::App: {
      free_vars_rec(t->lhs, lam_bound, mu_bound, out);
      const Elim& e = *t->elim;
      if (e.kind == ElimKind::TermArg) {
        free_vars_rec(e.arg, lam_bound, mu_bound, out);
      } else if (e.kind == ElimKind::Case) {
        bool f1 = lam_bound.insert(e.x1).second;
        free_vars_rec(e.n1, lam_bound, mu_bound, out);
        if (f1) lam_bound.erase(e.x1);
        bool f2 = lam_bound.insert(e.x2).second;
        free_vars_rec(e.n2, lam_bound, mu_bound, out);
        if (f2) lam_bound.erase(e.x2);
      }
      break;
    }
  }
}

}  // namespace

FreeVars free_vars(const TermPtr& t) {
  FreeVars out;
  std::set<std::string> lb, mb;
  free_vars_rec(t, lb, mb, out);
  return out;
}

bool free_lam_var(const TermPtr& t, const std::string& x) { return free_vars(t).lam.count(x) != 0; }
bool free_mu_var(const TermPtr& t, const std::string& a) { return free_vars(t).mu.count(a) != 0; }

int mu_occurrences(const TermPtr& t, const std::string& a) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
      return 0;
    case TermKind::Mu:
      return t->var == a ? 0 : mu_occurrences(t->lhs, a);
    case TermKind::Name:
      return (t->var == a ? 1 : 0) + mu_occurrences(t->lhs, a);
    case TermKind::Lam:
    case TermKind::Inj:
      return mu_occurrences(t->lhs, a);
    case TermKind::Pair:
      return mu_occurrences(t->lhs, a) + mu_occurrences(t->rhs, a);
    case TermKind::App: {
      int n = mu_occurrences(t->lhs, a);
      const Elim& e = *t->elim;
      if (e.kind == ElimKind::TermArg) n += mu_occurrences(e.arg, a);
      else if (e.kind == ElimKind::Case) n += mu_occurrences(e.n1, a) + mu_occurrences(e.n2, a);
      return n;
    }
  }
  return 0;
}

int term_size(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
      return 1;
    case TermKind::Lam:
    case TermKind::Mu:
    case TermKind::Name:
    case TermKind::Inj:
      return 1 + term_size(t->lhs);
    case TermKind::Pair:
      return 1 + term_size(t->lhs) + term_size(t->rhs);
    case TermKind::App: {
      const Elim& e = *t->elim;
      int es = 0;
      if (e.kind == ElimKind::TermArg) es = term_size(e.arg);
      else if (e.kind == ElimKind::Proj) es = 1;
      else es = 1 + term_size(e.n1) + term_size(e.n2);
      return 1 + term_size(t->lhs) + es;
    }
  }
  return 0;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

namespace {

std::set<std::string> set_union(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> r = a;
  r.insert(b.begin(), b.end());
  return r;
}

// Shared worker for subst: n's free variables are precomputed.
TermPtr subst_rec(const TermPtr& m, const std::string& x, const TermPtr& n, const FreeVars& nfv) {
  if (!free_lam_var(m, x)) return m;
  switch (m->kind) {
    case TermKind::Var:
      return m->var == x ? n : m;
    case TermKind::Const:
      return m;
    case TermKind::Lam: {
      // x is free in the body here, so m->var != x.
      std::string y = m->var;
      TermPtr body = m->lhs;
      if (nfv.lam.count(y)) {
        std::string y2 = fresh_name(y, set_union(set_union(nfv.lam, free_vars(body).lam), {x}));
        body = subst(body, y, mk_var(y2));
        y = y2;
      }
      return mk_lam(y, m->ann, subst_rec(body, x, n, nfv));
    }
    case TermKind::Mu: {
      std::string a = m->var;
      TermPtr body = m->lhs;
      if (nfv.mu.count(a)) {
        std::string a2 = fresh_name(a, set_union(nfv.mu, free_vars(body).mu));
        body = mu_rename(body, a, a2);
        a = a2;
      }
      return mk_mu(a, m->ann, subst_rec(body, x, n, nfv));
    }
    case TermKind::Name:
      return mk_name(m->var, subst_rec(m->lhs, x, n, nfv));
    case TermKind::Inj:
      return mk_inj(m->idx, m->ann, subst_rec(m->lhs, x, n, nfv));
    case TermKind::Pair:
      return mk_pair(subst_rec(m->lhs, x, n, nfv), subst_rec(m->rhs, x, n, nfv));
    case TermKind::App: {
      TermPtr f = subst_rec(m->lhs, x, n, nfv);
      const Elim& e = *m->elim;
      if (e.kind == ElimKind::TermArg) return mk_app(f, mk_arg(subst_rec(e.arg, x, n, nfv)));
      if (e.kind == ElimKind::Proj) return mk_app(f, m->elim);
      auto do_branch = [&](std::string b, TermPtr body) {
        if (b == x || !free_lam_var(body, x)) return std::make_pair(b, body);
        if (nfv.lam.count(b)) {
          std::string b2 = fresh_name(b, set_union(set_union(nfv.lam, free_vars(body).lam), {x}));
          body = subst(body, b, mk_var(b2));
          b = b2;
        }
        return std::make_pair(b, subst_rec(body, x, n, nfv));
      };
      auto [x1, n1] = do_branch(e.x1, e.n1);
      auto [x2, n2] = do_branch(e.x2, e.n2);
      return mk_app(f, mk_case(x1, n1, x2, n2));
    }
  }
  return m;
}

}  // namespace

TermPtr subst(const TermPtr& m, const std::string& x, const TermPtr& n) {
  return subst_rec(m, x, n, free_vars(n));
}

TermPtr mu_rename(const TermPtr& m, const std::string& a, const std::string& b) {
  if (a == b || !free_mu_var(m, a)) return m;
  switch (m->kind) {
    case TermKind::Var:
    case TermKind::Const:
      return m;
    case TermKind::Lam:
      return mk_lam(m->var, m->ann, mu_rename(m->lhs, a, b));
    case TermKind::Inj:
      return mk_inj(m->idx, m->ann, mu_rename(m->lhs, a, b));
    case TermKind::Mu: {
      // a is free in the body here, so m->var != a.
      std::string c = m->var;
      TermPtr body = m->lhs;
      if (c == b) {
        std::string c2 = fresh_name(c, set_union(free_vars(body).mu, {a, b}));
        body = mu_rename(body, c, c2);
        c = c2;
      }
      return mk_mu(c, m->ann, mu_rename(body, a, b));
    }
    case TermKind::Name:
      return mk_name(m->var == a ? b : m->var, mu_rename(m->lhs, a, b));
    case TermKind::Pair:
      return mk_pair(mu_rename(m->lhs, a, b), mu_rename(m->rhs, a, b));
    case TermKind::App: {
      TermPtr f = mu_rename(m->lhs, a, b);
      const Elim& e = *m->elim;
      if (e.kind == ElimKind::TermArg) return mk_app(f, mk_arg(mu_rename(e.arg, a, b)));
      if (e.kind == ElimKind::Proj) return mk_app(f, m->elim);
      return mk_app(f, mk_case(e.x1, mu_rename(e.n1, a, b), e.x2, mu_rename(e.n2, a, b)));
    }
  }
  return m;
}

FreeVars elim_free_vars(const Elim& e) {
  FreeVars fv;
  if (e.kind == ElimKind::TermArg) return free_vars(e.arg);
  if (e.kind == ElimKind::Case) {
    FreeVars f1 = free_vars(e.n1), f2 = free_vars(e.n2);
    f1.lam.erase(e.x1);
    f2.lam.erase(e.x2);
    fv.lam = set_union(f1.lam, f2.lam);
    fv.mu = set_union(f1.mu, f2.mu);
  }
  return fv;
}

namespace {

TermPtr struct_rec(const TermPtr& m, const std::string& a, const ElimPtr& e, const FreeVars& efv) {
  if (!free_mu_var(m, a)) return m;
  switch (m->kind) {
    case TermKind::Var:
    case TermKind::Const:
      return m;
    case TermKind::Lam: {
      std::string y = m->var;
      TermPtr body = m->lhs;
      if (efv.lam.count(y)) {
        std::string y2 = fresh_name(y, set_union(efv.lam, free_vars(body).lam));
        body = subst(body, y, mk_var(y2));
        y = y2;
      }
      return mk_lam(y, m->ann, struct_rec(body, a, e, efv));
    }
    case TermKind::Inj:
      return mk_inj(m->idx, m->ann, struct_rec(m->lhs, a, e, efv));
    case TermKind::Mu: {
      // a is free below, so m->var != a.
      std::string c = m->var;
      TermPtr body = m->lhs;
      if (efv.mu.count(c)) {
        std::string c2 = fresh_name(c, set_union(set_union(efv.mu, free_vars(body).mu), {a}));
        body = mu_rename(body, c, c2);
        c = c2;
      }
      return mk_mu(c, m->ann, struct_rec(body, a, e, efv));
    }
    case TermKind::Name: {
      TermPtr body = struct_rec(m->lhs, a, e, efv);  // inner occurrences first
      if (m->var == a) return mk_name(a, mk_app(body, e));
      return mk_name(m->var, body);
    }
    case TermKind::Pair:
      return mk_pair(struct_rec(m->lhs, a, e, efv), struct_rec(m->rhs, a, e, efv));
    case TermKind::App: {
      TermPtr f = struct_rec(m->lhs, a, e, efv);
      const Elim& el = *m->elim;
      if (el.kind == ElimKind::TermArg) return mk_app(f, mk_arg(struct_rec(el.arg, a, e, efv)));
      if (el.kind == ElimKind::Proj) return mk_app(f, m->elim);
      auto do_branch = [&](std::string b, TermPtr body) {
        if (!free_mu_var(body, a)) return std::make_pair(b, body);
        if (efv.lam.count(b)) {
          std::string b2 = fresh_name(b, set_union(efv.lam, free_vars(body).lam));
          body = subst(body, b, mk_var(b2));
          b = b2;
        }
        return std::make_pair(b, struct_rec(body, a, e, efv));
      };
      auto [x1, n1] = do_branch(el.x1, el.n1);
      auto [x2, n2] = do_branch(el.x2, el.n2);
      return mk_app(f, mk_case(x1, n1, x2, n2));
    }
  }
  return m;
}

}  // namespace

TermPtr struct_subst(const TermPtr& m, const std::string& a, const Elim& e) {
  auto ep = std::make_shared<Elim>(e);
  return struct_rec(m, a, ep, elim_free_vars(e));
}

namespace {

bool ann_eq(const TypePtr& a, const TypePtr& b) {
  if (!a && !b) return true;
  if (!a || !b) return false;
  return type_eq(a, b);
}

struct AlphaEnv {
  std::map<std::string, int> la, lb, ma, mb;
  int next = 0;
};

bool alpha_rec(const TermPtr& a, const TermPtr& b, AlphaEnv env) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Var: {
      auto ia = env.la.find(a->var), ib = env.lb.find(b->var);
      if (ia != env.la.end() || ib != env.lb.end())
        return ia != env.la.end() && ib != env.lb.end() && ia->second == ib->second;
      return a->var == b->var;
    }
    case TermKind::Const:
      return a->var == b->var;
    case TermKind::Lam: {
      if (!ann_eq(a->ann, b->ann)) return false;
      env.la[a->var] = env.lb[b->var] = env.next++;
      return alpha_rec(a->lhs, b->lhs, env);
    }
    case TermKind::Mu: {
      if (!ann_eq(a->ann, b->ann)) return false;
      env.ma[a->var] = env.mb[b->var] = env.next++;
      return alpha_rec(a->lhs, b->lhs, env);
    }
    case TermKind::Name: {
      auto ia = env.ma.find(a->var), ib = env.mb.find(b->var);
      bool same;
      if (ia != env.ma.end() || ib != env.mb.end())
        same = ia != env.ma.end() && ib != env.mb.end() && ia->second == ib->second;
      else
        same = a->var == b->var;
      return same && alpha_rec(a->lhs, b->lhs, env);
    }
    case TermKind::Inj:
      return a->idx == b->idx && ann_eq(a->ann, b->ann) && alpha_rec(a->lhs, b->lhs, env);
    case TermKind::Pair:
      return alpha_rec(a->lhs, b->lhs, env) && alpha_rec(a->rhs, b->rhs, env);
    case TermKind::App: {
      if (!alpha_rec(a->lhs, b->lhs, env)) return false;
      const Elim& ea = *a->elim;
      const Elim& eb = *b->elim;
      if (ea.kind != eb.kind) return false;
      switch (ea.kind) {
        case ElimKind::TermArg:
          return alpha_rec(ea.arg, eb.arg, env);
        case ElimKind::Proj:
          return ea.idx == eb.idx;
        case ElimKind::Case: {
          AlphaEnv e1 = env;
          e1.la[ea.x1] = e1.lb[eb.x1] = e1.next++;
          if (!alpha_rec(ea.n1, eb.n1, e1)) return false;
          AlphaEnv e2 = env;
          e2.la[ea.x2] = e2.lb[eb.x2] = e2.next++;
          return alpha_rec(ea.n2, eb.n2, e2);
        }
      }
      return false;
    }
  }
  return false;
}

TermPtr canon_rec(const TermPtr& t, std::map<std::string, std::string> lmap,
                  std::map<std::string, std::string> mmap, int& next) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = lmap.find(t->var);
      return it == lmap.end() ? t : mk_var(it->second);
    }
    case TermKind::Const:
      return t;
    case TermKind::Lam: {
      std::string nv = "$x" + std::to_string(next++);
      lmap[t->var] = nv;
      return mk_lam(nv, t->ann, canon_rec(t->lhs, lmap, mmap, next));
    }
    case TermKind::Mu: {
      std::string nv = "$m" + std::to_string(next++);
      mmap[t->var] = nv;
      return mk_mu(nv, t->ann, canon_rec(t->lhs, lmap, mmap, next));
    }
    case TermKind::Name: {
      auto it = mmap.find(t->var);
      std::string v = it == mmap.end() ? t->var : it->second;
      return mk_name(v, canon_rec(t->lhs, lmap, mmap, next));
    }
    case TermKind::Inj:
      return mk_inj(t->idx, t->ann, canon_rec(t->lhs, lmap, mmap, next));
    case TermKind::Pair: {
      TermPtr l = canon_rec(t->lhs, lmap, mmap, next);
      return mk_pair(l, canon_rec(t->rhs, lmap, mmap, next));
    }
    case TermKind::App: {
      TermPtr f = canon_rec(t->lhs, lmap, mmap, next);
      const Elim& e = *t->elim;
      if (e.kind == ElimKind::TermArg) return mk_app(f, mk_arg(canon_rec(e.arg, lmap, mmap, next)));
      if (e.kind == ElimKind::Proj) return mk_app(f, t->elim);
      auto l1 = lmap;
      std::string v1 = "$x" + std::to_string(next++);
      l1[e.x1] = v1;
      TermPtr n1 = canon_rec(e.n1, l1, mmap, next);
      auto l2 = lmap;
      std::string v2 = "$x" + std::to_string(next++);
      l2[e.x2] = v2;
      TermPtr n2 = canon_rec(e.n2, l2, mmap, next);
      return mk_app(f, mk_case(v1, n1, v2, n2));
    }
  }
  return t;
}

void key_rec(const TermPtr& t, std::string& out) {
  switch (t->kind) {
    case TermKind::Var:
      out += "v" + t->var + ";";
      break;
    case TermKind::Const:
      out += "c" + t->var + ";";
      break;
    case TermKind::Lam:
      out += "L" + t->var + (t->ann ? ":" + type_key(t->ann) : "") + ".";
      key_rec(t->lhs, out);
      break;
    case TermKind::Mu:
      out += "M" + t->var + (t->ann ? ":" + type_key(t->ann) : "") + ".";
      key_rec(t->lhs, out);
      break;
    case TermKind::Name:
      out += "N" + t->var + ".";
      key_rec(t->lhs, out);
      break;
    case TermKind::Inj:
      out += "I" + std::to_string(t->idx) + (t->ann ? ":" + type_key(t->ann) : "") + ".";
      key_rec(t->lhs, out);
      break;
    case TermKind::Pair:
      out += "P(";
      key_rec(t->lhs, out);
      out += ",";
      key_rec(t->rhs, out);
      out += ")";
      break;
    case TermKind::App: {
      out += "A(";
      key_rec(t->lhs, out);
      const Elim& e = *t->elim;
      if (e.kind == ElimKind::TermArg) {
        out += "!";
        key_rec(e.arg, out);
      } else if (e.kind == ElimKind::Proj) {
        out += "#" + std::to_string(e.idx);
      } else {
        out += "?" + e.x1 + ".";
        key_rec(e.n1, out);
        out += "|" + e.x2 + ".";
        key_rec(e.n2, out);
      }
      out += ")";
      break;
    }
  }
}

}  // namespace

bool alpha_eq(const TermPtr& a, const TermPtr& b) { return alpha_rec(a, b, AlphaEnv{}); }

TermPtr canonicalize(const TermPtr& t) {
  int next = 0;
  return canon_rec(t, {}, {}, next);
}

std::string canonical_key(const TermPtr& t) {
  std::string out;
  key_rec(canonicalize(t), out);
  return out;
}

bool sort_allows(const TermPtr& t, Sort s) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
      return true;
    case TermKind::Lam:
      return sort_allows(t->lhs, s);
    case TermKind::Mu:
    case TermKind::Name:
      return s != Sort::Lambda && sort_allows(t->lhs, s);
    case TermKind::Pair:
      return s == Sort::Full && sort_allows(t->lhs, s) && sort_allows(t->rhs, s);
    case TermKind::Inj:
      return s == Sort::Full && sort_allows(t->lhs, s);
    case TermKind::App: {
      if (!sort_allows(t->lhs, s)) return false;
      const Elim& e = *t->elim;
      if (e.kind == ElimKind::TermArg) return sort_allows(e.arg, s);
      return s == Sort::Full && (e.kind == ElimKind::Proj ||
                                 (sort_allows(e.n1, s) && sort_allows(e.n2, s)));
    }
  }
  return false;
}

namespace {

void names_rec(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Var:
      out.insert(t->var);
      break;
    case TermKind::Const:
      break;
    case TermKind::Lam:
    case TermKind::Mu:
      out.insert(t->var);
      names_rec(t->lhs, out);
      break;
    case TermKind::Name:
      out.insert(t->var);
      names_rec(t->lhs, out);
      break;
    case TermKind::Inj:
      names_rec(t->lhs, out);
      break;
    case TermKind::Pair:
      names_rec(t->lhs, out);
      names_rec(t->rhs, out);
      break;
    case TermKind::App: {
      names_rec(t->lhs, out);
      const Elim& e = *t->elim;
      if (e.kind == ElimKind::TermArg) names_rec(e.arg, out);
      else if (e.kind == ElimKind::Case) {
        out.insert(e.x1);
        out.insert(e.x2);
        names_rec(e.n1, out);
        names_rec(e.n2, out);
      }
      break;
    }
  }
}

}  // namespace

std::set<std::string> all_var_names(const TermPtr& t) {
  std::set<std::string> out;
  names_rec(t, out);
  return out;
}

TermPtr strip_annotations(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
      return t;
    case TermKind::Lam:
      return mk_lam(t->var, nullptr, strip_annotations(t->lhs));
    case TermKind::Mu:
      return mk_mu(t->var, nullptr, strip_annotations(t->lhs));
    case TermKind::Name:
      return mk_name(t->var, strip_annotations(t->lhs));
    case TermKind::Inj:
      return mk_inj(t->idx, nullptr, strip_annotations(t->lhs));
    case TermKind::Pair:
      return mk_pair(strip_annotations(t->lhs), strip_annotations(t->rhs));
    case TermKind::App: {
      TermPtr f = strip_annotations(t->lhs);
      const Elim& e = *t->elim;
      if (e.kind == ElimKind::TermArg) return mk_app(f, mk_arg(strip_annotations(e.arg)));
      if (e.kind == ElimKind::Proj) return mk_app(f, t->elim);
      return mk_app(f, mk_case(e.x1, strip_annotations(e.n1), e.x2, strip_annotations(e.n2)));
    }
  }
  return t;
}

const char* to_string(Sort s) {
  switch (s) {
    case Sort::Lambda: return "lambda";
    case Sort::LambdaMu: return "mu";
    case Sort::Full: return "full";
  }
  return "?";
}

}  // namespace lmcalc
