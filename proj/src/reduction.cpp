#include "lmcalc/reduction.hpp"

#include <algorithm>
#include <deque>

#include "lmcalc/text.hpp"

namespace lmcalc {

const char* to_string(StepLabel l) {
  switch (l) {
    case StepLabel::Beta: return "beta";
    case StepLabel::MuArg: return "mu-arg";
    case StepLabel::MuProj: return "mu-proj";
    case StepLabel::MuCase: return "mu-case";
    case StepLabel::PairProj: return "pair-proj";
    case StepLabel::CaseInj: return "case-inj";
    case StepLabel::PermArg: return "perm-arg";
    case StepLabel::PermProj: return "perm-proj";
    case StepLabel::PermCase: return "perm-case";
    case StepLabel::Rho: return "rho";
    case StepLabel::Theta: return "theta";
  }
  return "?";
}

bool is_bm(StepLabel l) {
  return l == StepLabel::Beta || l == StepLabel::MuArg || l == StepLabel::MuProj ||
         l == StepLabel::MuCase;
}

std::string label_string(StepLabel l, bool mu_zero) {
  std::string s = to_string(l);
  if (mu_zero && (l == StepLabel::MuArg || l == StepLabel::MuProj || l == StepLabel::MuCase))
    s += "0";
  return s;
}

bool RuleSet::allows(StepLabel l) const {
  switch (l) {
    case StepLabel::Beta: return beta;
    case StepLabel::MuArg:
    case StepLabel::MuProj:
    case StepLabel::MuCase: return mu;
    case StepLabel::PairProj:
    case StepLabel::CaseInj: return pair_case;
    case StepLabel::PermArg:
    case StepLabel::PermProj:
    case StepLabel::PermCase: return perm;
    case StepLabel::Rho: return rho;
    case StepLabel::Theta: return theta;
  }
  return false;
}

RuleSet RuleSet::beta_only() { return {.beta = true}; }
RuleSet RuleSet::betamu() { return {.beta = true, .mu = true}; }
RuleSet RuleSet::betamu_rt() { return {.beta = true, .mu = true, .rho = true, .theta = true}; }
RuleSet RuleSet::full() { return {.beta = true, .mu = true, .pair_case = true, .perm = true}; }
RuleSet RuleSet::full_rt() {
  return {.beta = true, .mu = true, .pair_case = true, .perm = true, .rho = true, .theta = true};
}
RuleSet RuleSet::rho_only() { return {.rho = true}; }
RuleSet RuleSet::rho_theta() { return {.rho = true, .theta = true}; }

std::optional<RuleSet> rule_set_by_name(const std::string& name) {
  if (name == "beta") return RuleSet::beta_only();
  if (name == "betamu") return RuleSet::betamu();
  if (name == "betamu-rt") return RuleSet::betamu_rt();
  if (name == "full") return RuleSet::full();
  if (name == "full-rt") return RuleSet::full_rt();
  if (name == "rho") return RuleSet::rho_only();
  if (name == "rho-theta") return RuleSet::rho_theta();
  return std::nullopt;
}

RhoThetaStats& rho_theta_stats() {
  static RhoThetaStats stats;
  return stats;
}

namespace {

std::set<std::string> join(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

// At most one rule shape applies at any node.
std::optional<Redex> root_redex(const TermPtr& m) {
  switch (m->kind) {
    case TermKind::App: {
      const Elim& e = *m->elim;
      const TermPtr& f = m->lhs;
      bool f_is_case = f->kind == TermKind::App && f->elim->kind == ElimKind::Case;
      bool mu0 = f->kind == TermKind::Mu && mu_occurrences(f->lhs, f->var) <= 1;
      switch (e.kind) {
        case ElimKind::TermArg:
          if (f->kind == TermKind::Lam) return Redex{{}, StepLabel::Beta, false};
          if (f->kind == TermKind::Mu) return Redex{{}, StepLabel::MuArg, mu0};
          if (f_is_case) return Redex{{}, StepLabel::PermArg, false};
          break;
        case ElimKind::Proj:
          if (f->kind == TermKind::Pair) return Redex{{}, StepLabel::PairProj, false};
          if (f->kind == TermKind::Mu) return Redex{{}, StepLabel::MuProj, mu0};
          if (f_is_case) return Redex{{}, StepLabel::PermProj, false};
          break;
        case ElimKind::Case:
          if (f->kind == TermKind::Inj) return Redex{{}, StepLabel::CaseInj, false};
          if (f->kind == TermKind::Mu) return Redex{{}, StepLabel::MuCase, mu0};
          if (f_is_case) return Redex{{}, StepLabel::PermCase, false};
          break;
      }
      break;
    }
    case TermKind::Name:
      if (m->lhs->kind == TermKind::Mu) return Redex{{}, StepLabel::Rho, false};
      break;
    case TermKind::Mu:
      if (m->lhs->kind == TermKind::Name && m->lhs->var == m->var &&
          !free_mu_var(m->lhs->lhs, m->var))
        return Redex{{}, StepLabel::Theta, false};
      break;
    default:
      break;
  }
  return std::nullopt;
}

void redexes_rec(const TermPtr& m, const RuleSet& rs, Position& pos, std::vector<Redex>& out) {
  if (auto r = root_redex(m); r && rs.allows(r->label)) {
    r->pos = pos;
    out.push_back(*r);
  }
  auto child = [&](const TermPtr& c, int i) {
    pos.push_back(i);
    redexes_rec(c, rs, pos, out);
    pos.pop_back();
  };
  switch (m->kind) {
    case TermKind::Var:
    case TermKind::Const:
      break;
    case TermKind::Lam:
    case TermKind::Mu:
    case TermKind::Name:
    case TermKind::Inj:
      child(m->lhs, 0);
      break;
    case TermKind::Pair:
      child(m->lhs, 0);
      child(m->rhs, 1);
      break;
    case TermKind::App: {
      child(m->lhs, 0);
      const Elim& e = *m->elim;
      if (e.kind == ElimKind::TermArg) child(e.arg, 1);
      if (e.kind == ElimKind::Case) {
        child(e.n1, 1);
        child(e.n2, 2);
      }
      break;
    }
  }
}

[[noreturn]] void no_redex(StepLabel label) {
  throw std::invalid_argument(std::string("no ") + to_string(label) +
                              " redex at the given position");
}

TermPtr apply_rule(const TermPtr& m, StepLabel label) {
  switch (label) {
    case StepLabel::Beta: {
      if (m->kind != TermKind::App || m->elim->kind != ElimKind::TermArg ||
          m->lhs->kind != TermKind::Lam)
        no_redex(label);
      return subst(m->lhs->lhs, m->lhs->var, m->elim->arg);
    }
    case StepLabel::MuArg:
    case StepLabel::MuProj:
    case StepLabel::MuCase: {
      ElimKind want = label == StepLabel::MuArg    ? ElimKind::TermArg
                      : label == StepLabel::MuProj ? ElimKind::Proj
                                                   : ElimKind::Case;
      if (m->kind != TermKind::App || m->elim->kind != want || m->lhs->kind != TermKind::Mu)
        no_redex(label);
      const Elim& e = *m->elim;
      std::string a = m->lhs->var;
      TermPtr body = m->lhs->lhs;
      FreeVars efv = elim_free_vars(e);
      if (efv.mu.count(a)) {
        std::string a2 = fresh_name(a, join(efv.mu, free_vars(body).mu));
        body = mu_rename(body, a, a2);
        a = a2;
      }
      // The annotation survives when the redex type determines it locally.
      TypePtr ann;
      const TypePtr& old = m->lhs->ann;
      if (old && e.kind == ElimKind::TermArg && old->kind == TypeKind::Arrow) ann = old->rhs;
      if (old && e.kind == ElimKind::Proj && old->kind == TypeKind::And)
        ann = e.idx == 1 ? old->lhs : old->rhs;
      return mk_mu(a, ann, struct_subst(body, a, e));
    }
    case StepLabel::PairProj: {
      if (m->kind != TermKind::App || m->elim->kind != ElimKind::Proj ||
          m->lhs->kind != TermKind::Pair)
        no_redex(label);
      return m->elim->idx == 1 ? m->lhs->lhs : m->lhs->rhs;
    }
    case StepLabel::CaseInj: {
      if (m->kind != TermKind::App || m->elim->kind != ElimKind::Case ||
          m->lhs->kind != TermKind::Inj)
        no_redex(label);
      const Elim& e = *m->elim;
      return m->lhs->idx == 1 ? subst(e.n1, e.x1, m->lhs->lhs)
                              : subst(e.n2, e.x2, m->lhs->lhs);
    }
    case StepLabel::PermArg:
    case StepLabel::PermProj:
    case StepLabel::PermCase: {
      ElimKind want = label == StepLabel::PermArg    ? ElimKind::TermArg
                      : label == StepLabel::PermProj ? ElimKind::Proj
                                                     : ElimKind::Case;
      if (m->kind != TermKind::App || m->elim->kind != want ||
          m->lhs->kind != TermKind::App || m->lhs->elim->kind != ElimKind::Case)
        no_redex(label);
      const Elim& inner = *m->lhs->elim;
      ElimPtr outer = m->elim;
      FreeVars efv = elim_free_vars(*outer);
      auto push = [&](std::string x, TermPtr n) {
        if (efv.lam.count(x)) {
          std::string x2 = fresh_name(x, join(efv.lam, free_vars(n).lam));
          n = subst(n, x, mk_var(x2));
          x = x2;
        }
        return std::pair<std::string, TermPtr>(x, mk_app(n, outer));
      };
      auto [x1, n1] = push(inner.x1, inner.n1);
      auto [x2, n2] = push(inner.x2, inner.n2);
      return mk_app(m->lhs->lhs, mk_case(x1, n1, x2, n2));
    }
    case StepLabel::Rho: {
      if (m->kind != TermKind::Name || m->lhs->kind != TermKind::Mu) no_redex(label);
      return mu_rename(m->lhs->lhs, m->lhs->var, m->var);
    }
    case StepLabel::Theta: {
      if (m->kind != TermKind::Mu || m->lhs->kind != TermKind::Name ||
          m->lhs->var != m->var || free_mu_var(m->lhs->lhs, m->var))
        no_redex(label);
      return m->lhs->lhs;
    }
  }
  no_redex(label);
}

TermPtr apply_tracked(const TermPtr& m, StepLabel label) {
  TermPtr r = apply_rule(m, label);
  if (label == StepLabel::Rho || label == StepLabel::Theta) {
    RhoThetaStats& st = rho_theta_stats();
    st.steps.fetch_add(1, std::memory_order_relaxed);
    if (term_size(r) >= term_size(m)) st.violations.fetch_add(1, std::memory_order_relaxed);
  }
  return r;
}

TermPtr contract_rec(const TermPtr& t, const Position& pos, size_t i, StepLabel label) {
  if (i == pos.size()) return apply_tracked(t, label);
  int k = pos[i];
  auto down = [&](const TermPtr& c) { return contract_rec(c, pos, i + 1, label); };
  switch (t->kind) {
    case TermKind::Lam:
      if (k == 0) return mk_lam(t->var, t->ann, down(t->lhs));
      break;
    case TermKind::Mu:
      if (k == 0) return mk_mu(t->var, t->ann, down(t->lhs));
      break;
    case TermKind::Name:
      if (k == 0) return mk_name(t->var, down(t->lhs));
      break;
    case TermKind::Inj:
      if (k == 0) return mk_inj(t->idx, t->ann, down(t->lhs));
      break;
    case TermKind::Pair:
      if (k == 0) return mk_pair(down(t->lhs), t->rhs);
      if (k == 1) return mk_pair(t->lhs, down(t->rhs));
      break;
    case TermKind::App: {
      if (k == 0) return mk_app(down(t->lhs), t->elim);
      const Elim& e = *t->elim;
      if (e.kind == ElimKind::TermArg && k == 1) return mk_app(t->lhs, mk_arg(down(e.arg)));
      if (e.kind == ElimKind::Case && k == 1)
        return mk_app(t->lhs, mk_case(e.x1, down(e.n1), e.x2, e.n2));
      if (e.kind == ElimKind::Case && k == 2)
        return mk_app(t->lhs, mk_case(e.x1, e.n1, e.x2, down(e.n2)));
      break;
    }
    default:
      break;
  }
  throw std::invalid_argument("invalid position " + position_to_string(pos));
}

size_t longest_path(const ReductionGraph& g) {
  // DP over an acyclic, fully expanded graph.
  std::vector<int64_t> memo(g.nodes.size(), -1);
  std::vector<std::pair<size_t, size_t>> st;
  st.emplace_back(0, 0);
  while (!st.empty()) {
    auto& [u, ei] = st.back();
    if (memo[u] >= 0) {
      st.pop_back();
      continue;
    }
    if (ei < g.nodes[u].succ.size()) {
      size_t v = g.nodes[u].succ[ei].target;
      ++ei;
      if (memo[v] < 0) st.emplace_back(v, 0);
    } else {
      int64_t best = 0;
      for (const GraphEdge& e : g.nodes[u].succ)
        best = std::max(best, 1 + memo[e.target]);
      memo[u] = best;
      st.pop_back();
    }
  }
  return static_cast<size_t>(memo[0]);
}

}  // namespace

std::vector<Redex> redexes(const TermPtr& m, const RuleSet& rs) {
  std::vector<Redex> out;
  Position pos;
  redexes_rec(m, rs, pos, out);
  return out;
}

bool is_normal(const TermPtr& m, const RuleSet& rs) { return redexes(m, rs).empty(); }

TermPtr contract(const TermPtr& m, const Position& pos, StepLabel label) {
  return contract_rec(m, pos, 0, label);
}

size_t Trace::lg_bm() const {
  size_t n = 0;
  for (const Step& s : steps)
    if (is_bm(s.label)) ++n;
  return n;
}

std::string Trace::to_string() const {
  std::string out = "0: " + print_term(start) + "\n";
  size_t n = 0;
  for (const Step& s : steps) {
    out += std::to_string(++n) + ": " + label_string(s.label, s.mu_zero) + "@" +
           position_to_string(s.pos) + " -> " + print_term(s.result) + "\n";
  }
  out += "lg=" + std::to_string(lg()) + " lg_bm=" + std::to_string(lg_bm());
  return out;
}

Trace concat(const Trace& a, const Trace& b) {
  if (!alpha_eq(a.end(), b.start))
    throw std::logic_error("trace concatenation: endpoints do not match");
  Trace out = a;
  TermPtr cur = a.end();
  for (const Step& s : b.steps) {
    cur = contract(cur, s.pos, s.label);
    out.steps.push_back({s.pos, s.label, s.mu_zero, cur});
  }
  return out;
}

std::optional<Step> step(const TermPtr& m, const RuleSet& rs) {
  std::vector<Redex> rds = redexes(m, rs);
  if (rds.empty()) return std::nullopt;
  const Redex& r = rds.front();
  return Step{r.pos, r.label, r.mu_zero, contract(m, r.pos, r.label)};
}

Trace normalize(const TermPtr& m, const RuleSet& rs, size_t max_steps) {
  Trace t;
  t.start = m;
  TermPtr cur = m;
  for (size_t i = 0; i < max_steps; ++i) {
    auto s = step(cur, rs);
    if (!s) break;
    cur = s->result;
    t.steps.push_back(*s);
  }
  return t;
}

ReductionGraph reduction_graph(const TermPtr& m, const RuleSet& rs, size_t fuel) {
  ReductionGraph g;
  g.nodes.push_back({m, {}, false});
  g.index[canonical_key(m)] = 0;
  std::deque<size_t> queue{0};
  while (!queue.empty()) {
    if (g.expansions >= fuel) {
      g.complete = false;
      break;
    }
    size_t u = queue.front();
    queue.pop_front();
    ++g.expansions;
    TermPtr cur = g.nodes[u].term;
    std::vector<GraphEdge> edges;
    for (const Redex& r : redexes(cur, rs)) {
      TermPtr res = contract(cur, r.pos, r.label);
      std::string key = canonical_key(res);
      auto [it, fresh] = g.index.try_emplace(key, g.nodes.size());
      if (fresh) {
        g.nodes.push_back({res, {}, false});
        queue.push_back(it->second);
      }
      edges.push_back({r, it->second});
    }
    g.nodes[u].succ = std::move(edges);
    g.nodes[u].expanded = true;
  }
  return g;
}

std::optional<Trace> find_loop(const ReductionGraph& g) {
  enum { White, Gray, Black };
  std::vector<int> color(g.nodes.size(), White);
  struct Frame {
    size_t node;
    size_t edge = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({0});
  color[0] = Gray;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const std::vector<GraphEdge>& succ = g.nodes[f.node].succ;
    if (f.edge == succ.size()) {
      color[f.node] = Black;
      stack.pop_back();
      continue;
    }
    const GraphEdge& e = succ[f.edge++];
    if (color[e.target] == Gray) {
      // The chosen edges along the stack plus this back edge close a cycle.
      Trace t;
      t.start = g.nodes[0].term;
      TermPtr cur = t.start;
      for (const Frame& fr : stack) {
        const Redex& r = g.nodes[fr.node].succ[fr.edge - 1].redex;
        cur = contract(cur, r.pos, r.label);
        t.steps.push_back({r.pos, r.label, r.mu_zero, cur});
      }
      return t;
    }
    if (color[e.target] == White) {
      color[e.target] = Gray;
      stack.push_back({e.target});
    }
  }
  return std::nullopt;
}

std::optional<size_t> eta(const TermPtr& m, const RuleSet& rs, size_t fuel) {
  ReductionGraph g = reduction_graph(m, rs, fuel);
  if (find_loop(g))
    throw CycleError("the longest reduction is undefined: the reduction graph has a cycle");
  if (!g.complete) return std::nullopt;
  return longest_path(g);
}

SnVerdict sn_verdict(const TermPtr& m, const RuleSet& rs, size_t fuel) {
  ReductionGraph g = reduction_graph(m, rs, fuel);
  SnVerdict v;
  v.expansions = g.expansions;
  if (auto loop = find_loop(g)) {
    v.status = SnStatus::Loop;
    v.loop = std::move(loop);
    return v;
  }
  if (!g.complete) {
    v.status = SnStatus::Unknown;
    return v;
  }
  v.status = SnStatus::Sn;
  v.eta = longest_path(g);
  return v;
}

SearchResult find_trace(const TermPtr& m, const RuleSet& rs, const TraceQuery& q) {
  size_t bm_cap = q.exact_bm ? *q.exact_bm : q.min_bm;
  std::set<std::string> target_keys;
  for (const TermPtr& t : q.targets) target_keys.insert(canonical_key(t));

  auto state_key = [](const std::string& ck, size_t bm, size_t st) {
    return std::to_string(bm) + ":" + std::to_string(st) + ":" + ck;
  };
  struct Info {
    std::string parent;  // empty for the start state
    Redex redex;
    TermPtr term;
    size_t bm = 0;
    size_t st = 0;
  };
  std::map<std::string, Info> visited;
  std::deque<std::string> queue;

  std::string start_ck = canonical_key(m);
  std::string start_key = state_key(start_ck, 0, 0);
  visited[start_key] = {"", Redex{}, m, 0, 0};
  queue.push_back(start_key);

  auto is_goal = [&](const std::string& ck, size_t bm, size_t st) {
    if (!target_keys.count(ck)) return false;
    if (st < q.min_steps || bm < q.min_bm) return false;
    if (q.exact_bm && bm != *q.exact_bm) return false;
    return true;
  };

  SearchResult res;
  while (!queue.empty()) {
    if (res.dequeued >= q.fuel) {
      res.complete = false;
      return res;
    }
    std::string key = queue.front();
    queue.pop_front();
    ++res.dequeued;
    Info info = visited.at(key);
    std::string ck = canonical_key(info.term);
    if (is_goal(ck, info.bm, info.st)) {
      // Rebuild the trace by re-applying the recorded redexes from m.
      std::vector<Redex> path;
      for (std::string k = key; k != start_key; k = visited.at(k).parent)
        path.push_back(visited.at(k).redex);
      std::reverse(path.begin(), path.end());
      Trace t;
      t.start = m;
      TermPtr cur = m;
      for (const Redex& r : path) {
        cur = contract(cur, r.pos, r.label);
        t.steps.push_back({r.pos, r.label, r.mu_zero, cur});
      }
      res.trace = std::move(t);
      return res;
    }
    for (const Redex& r : redexes(info.term, rs)) {
      size_t nbm = info.bm + (is_bm(r.label) ? 1 : 0);
      if (q.exact_bm && nbm > *q.exact_bm) continue;
      nbm = std::min(nbm, bm_cap);
      size_t nst = std::min(info.st + 1, q.min_steps);
      TermPtr nt = contract(info.term, r.pos, r.label);
      std::string nk = state_key(canonical_key(nt), nbm, nst);
      if (visited.count(nk)) continue;
      visited[nk] = {key, r, nt, nbm, nst};
      queue.push_back(nk);
    }
  }
  return res;
}

SearchResult reach(const TermPtr& m, const TermPtr& target, const RuleSet& rs, size_t fuel) {
  TraceQuery q;
  q.targets = {target};
  q.fuel = fuel;
  return find_trace(m, rs, q);
}

std::vector<TermPtr> closure(const TermPtr& m, const RuleSet& rs, size_t fuel) {
  ReductionGraph g = reduction_graph(m, rs, fuel);
  if (!g.complete)
    throw std::runtime_error("closure ran out of fuel; rule set is not shrinking enough");
  std::vector<TermPtr> out;
  out.reserve(g.nodes.size());
  for (const GraphNode& n : g.nodes) out.push_back(n.term);
  return out;
}

}  // namespace lmcalc
