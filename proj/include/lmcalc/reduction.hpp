#pragma once
// One-step reduction, traces, reduction graphs, longest-reduction lengths,
// strong-normalization verdicts, and bounded reachability search.

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lmcalc/term.hpp"

namespace lmcalc {

enum class StepLabel {
  Beta,
  MuArg,
  MuProj,
  MuCase,
  PairProj,
  CaseInj,
  PermArg,
  PermProj,
  PermCase,
  Rho,
  Theta,
};

const char* to_string(StepLabel l);

// Beta or one of the mu shapes; these are the steps lg_bm counts.
bool is_bm(StepLabel l);

// "0" marks a mu step whose bound name occurs at most once in the body.
std::string label_string(StepLabel l, bool mu_zero);

struct RuleSet {
  bool beta = false;
  bool mu = false;         // MuArg, MuProj, MuCase
  bool pair_case = false;  // PairProj, CaseInj
  bool perm = false;       // PermArg, PermProj, PermCase
  bool rho = false;
  bool theta = false;

  bool allows(StepLabel l) const;

  static RuleSet beta_only();   // beta
  static RuleSet betamu();      // beta + mu
  static RuleSet betamu_rt();   // beta + mu + rho + theta
  static RuleSet full();        // beta + mu + pair_case + perm, no rho/theta
  static RuleSet full_rt();     // full + rho + theta
  static RuleSet rho_only();
  static RuleSet rho_theta();
};

// Named presets as used on the command line.
std::optional<RuleSet> rule_set_by_name(const std::string& name);

struct Redex {
  Position pos;
  StepLabel label;
  bool mu_zero = false;
};

// All enabled redexes of m in leftmost-outermost (preorder) order.
std::vector<Redex> redexes(const TermPtr& m, const RuleSet& rs);

bool is_normal(const TermPtr& m, const RuleSet& rs);

// Contracts the redex of the given shape at the given position.
// Throws std::invalid_argument if the subterm does not match the rule.
TermPtr contract(const TermPtr& m, const Position& pos, StepLabel label);

struct Step {
  Position pos;
  StepLabel label;
  bool mu_zero = false;
  TermPtr result;
};

struct Trace {
  TermPtr start;
  std::vector<Step> steps;

  TermPtr end() const { return steps.empty() ? start : steps.back().result; }
  size_t lg() const { return steps.size(); }
  size_t lg_bm() const;
  // One line per step "<n>: <label>@<path> -> <term>" plus a summary line.
  std::string to_string() const;
};

// Appends b to a; b.start must be alpha-equal to a.end().  The steps of b
// are re-applied on top of a.end(), so the result is a single valid trace.
Trace concat(const Trace& a, const Trace& b);

// Leftmost-outermost step, or nullopt on a normal form.
std::optional<Step> step(const TermPtr& m, const RuleSet& rs);

// Repeated leftmost-outermost steps, at most max_steps of them.
Trace normalize(const TermPtr& m, const RuleSet& rs, size_t max_steps = 10000);

struct GraphEdge {
  Redex redex;
  size_t target;
};

struct GraphNode {
  TermPtr term;
  std::vector<GraphEdge> succ;
  bool expanded = false;
};

// Nodes are alpha-equivalence classes keyed by canonical form; node 0 is the
// start term.  complete is false when the fuel (node expansions) ran out.
struct ReductionGraph {
  std::vector<GraphNode> nodes;
  std::map<std::string, size_t> index;
  bool complete = true;
  size_t expansions = 0;

  size_t size() const { return nodes.size(); }
};

ReductionGraph reduction_graph(const TermPtr& m, const RuleSet& rs, size_t fuel = 100000);

// A trace from node 0 whose last term is alpha-equal to an earlier one,
// if the graph has a cycle.
std::optional<Trace> find_loop(const ReductionGraph& g);

struct CycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Length of the longest reduction from m.  nullopt when the fuel ran out;
// CycleError when m is not strongly normalizing.
std::optional<size_t> eta(const TermPtr& m, const RuleSet& rs, size_t fuel = 100000);

enum class SnStatus { Sn, Loop, Unknown };

struct SnVerdict {
  SnStatus status = SnStatus::Unknown;
  size_t eta = 0;             // meaningful for Sn
  std::optional<Trace> loop;  // present for Loop
  size_t expansions = 0;
};

SnVerdict sn_verdict(const TermPtr& m, const RuleSet& rs, size_t fuel = 100000);

// Bounded breadth-first witness search.  complete means the whole reduction
// graph was explored, so an absent trace is a definite no; otherwise the
// search was cut off by fuel and an absent trace is inconclusive.
struct SearchResult {
  std::optional<Trace> trace;
  bool complete = true;
  size_t dequeued = 0;
};

SearchResult reach(const TermPtr& m, const TermPtr& target, const RuleSet& rs,
                   size_t fuel = 100000);

// Trace search with step-count constraints: reach any alpha-variant of a
// target using >= min_steps steps, >= min_bm beta/mu steps, and exactly
// exact_bm beta/mu steps when set.
struct TraceQuery {
  std::vector<TermPtr> targets;
  size_t min_steps = 0;
  size_t min_bm = 0;
  std::optional<size_t> exact_bm;
  size_t fuel = 100000;
};

SearchResult find_trace(const TermPtr& m, const RuleSet& rs, const TraceQuery& q);

// All terms reachable from m under rs, as a vector with m first.
// Intended for shrinking rule sets (rho, rho+theta), where it is finite.
std::vector<TermPtr> closure(const TermPtr& m, const RuleSet& rs, size_t fuel = 100000);

// Every rho and theta contraction is counted here, together with any
// violation of the strict size decrease those rules promise.
struct RhoThetaStats {
  std::atomic<uint64_t> steps{0};
  std::atomic<uint64_t> violations{0};
};

RhoThetaStats& rho_theta_stats();

}  // namespace lmcalc
