#pragma once
// Corpus generation and executable checks for the normalization and
// translation results: typing of the translated images, step simulation,
// postponement, commutation of the renaming rules, SN transfer, and the
// recursive-equation counterexamples.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lmcalc/reduction.hpp"
#include "lmcalc/translate.hpp"
#include "lmcalc/typing.hpp"

namespace lmcalc {

struct CorpusSpec {
  Sort sort = Sort::Lambda;
  int size_bound = 5;
  std::vector<std::string> atoms = {"A"};
  const EquationSet* eqs = nullptr;
  // Binder annotations are drawn from all types up to this node count over
  // the atoms; the enumeration is complete relative to that universe.
  int ann_size = 3;
  Context base_ctx;
};

struct CorpusItem {
  Context ctx;
  TermPtr term;
  TypePtr type;
};

// All well-typed terms over base_ctx up to the size bound, modulo alpha,
// in a deterministic order.  Terms are church-annotated.
std::vector<CorpusItem> enumerate_typed_terms(const CorpusSpec& spec);

// Streaming variant for corpora too large to keep as one vector.
void for_each_typed_term(const CorpusSpec& spec,
                         const std::function<void(const CorpusItem&)>& fn);

// All types over the atoms plus bot with at most max_size nodes.
std::vector<TypePtr> enumerate_types(const std::vector<std::string>& atoms, int max_size,
                                     bool with_and_or);

// All types of tree height at most max_depth; a leaf has height 1.
std::vector<TypePtr> enumerate_types_by_depth(const std::vector<std::string>& atoms,
                                              int max_depth, bool with_and_or);

struct RandomSpec {
  Sort sort = Sort::LambdaMu;
  std::vector<std::string> atoms = {"A"};
  int max_depth = 4;  // bound on the depth of the grown derivation
  uint64_t seed = 1;
  Context base_ctx;   // a sort-specific default is used when empty
  const EquationSet* eqs = nullptr;
};

// Type-directed synthesis: grows a derivation toward a goal type and reads
// off the term, so every item typechecks by construction.  Deterministic
// for a fixed seed.
std::vector<CorpusItem> random_typed_terms(const RandomSpec& spec, size_t count);

struct LemmaReport {
  std::string id;
  size_t tried = 0;
  size_t passed = 0;
  std::vector<std::string> failures;  // replayable witness descriptions
  size_t inconclusive = 0;

  bool ok() const { return failures.empty() && inconclusive == 0; }
  bool failed() const { return !failures.empty(); }
  void pass();
  void fail(std::string detail);
  void fuel_out(std::string detail);
  void merge(const LemmaReport& other);
  std::string summary() const;
};

// T_A typechecks at ~~A -> A for every sort-T type of height <= max_depth.
LemmaReport check_tran(const std::vector<std::string>& atoms, int max_depth);

// diamond images typecheck: for every corpus item (G, M, A) the judgment
// diamond_context(G) |- diamond(M) : A holds in sc, with spec.eqs if given.
LemmaReport check_coding_diamond(const CorpusSpec& spec);

// circle images typecheck: circle_context(G) |- circle(M) : circle_type(A)
// holds in smu, with circle_equations(spec.eqs) if given.
LemmaReport check_coding_circle(const CorpusSpec& spec);

// For every one-step reduct N of m under betamu, a beta trace of length
// >= 1 runs from diamond(m) to diamond(N).
LemmaReport check_simulation_diamond(const TermPtr& m, size_t fuel = 100000);

// The aggregate length inequality along a given betamu trace: the chained
// diamond legs form one beta trace with lg >= lg(source trace).
LemmaReport check_simulation_diamond_trace(const Trace& t, size_t fuel = 100000);

// For every one-step reduct N of m under the full rule set: some P is
// reachable from circle(m) under betamu-rt with at least one beta/mu step,
// where circle(N) reaches P by rho steps alone.
LemmaReport check_simulation_circle(const TermPtr& m, size_t fuel = 100000);

// Chains the circle simulation along a full-calculus trace, producing one
// betamu-rt trace whose lg_bm is at least the source trace length.
LemmaReport check_simulation_circle_trace(const Trace& t, size_t fuel = 100000);

// For a betamu-rt trace with at least one beta/mu step: some P satisfies
// start |>betamu+ P and P |>rhotheta* end.
LemmaReport check_postponement(const Trace& t, size_t fuel = 100000);

// One-step commutations of rho with rho/theta and with beta/mu steps.
LemmaReport check_commutation_local(const TermPtr& m, size_t fuel = 100000);

// Multi-step commutation: for P reached by rho* and Q by a betamu-rt trace
// from m, some N has P |>betamu-rt* N and Q |>rho* N with
// lg_bm(P -> N) equal to lg_bm(m -> Q).
LemmaReport check_commutation_star(const TermPtr& m, uint64_t seed, size_t samples,
                                   size_t fuel = 100000);

// SN implications between a term and its translated images.
LemmaReport check_sn_transfer(const Context& ctx, const TermPtr& m, Sort sort,
                              size_t fuel = 100000);

// M with x free and N of the matching type, both beta-SN, give M[x:=N] SN.
LemmaReport check_substitution_sn(const CorpusSpec& m_spec, int n_size_bound,
                                  size_t fuel = 100000);

// The two bad recursive equations: rejected by is_good, their looping terms
// typable, loops found quickly; the good variant accepted.
LemmaReport run_counterexamples();

// Every corpus term is strongly normalizing under its sort's full preset.
LemmaReport run_sn_sweep(const CorpusSpec& spec, size_t fuel = 100000);

// rho/theta alone terminate, every step shrinking the term.
LemmaReport check_rho_theta_termination(const RandomSpec& spec, size_t count);

// The nine one-step redex families with variable leaves, each simulated
// through circle, plus the exact golden trace for the pair projection case.
LemmaReport appendix_replay(size_t fuel = 100000);

struct VerifyOptions {
  int max_size = -1;   // <0 picks the per-lemma default
  size_t count = 0;    // 0 picks the per-lemma default
  uint64_t seed = 1;
  size_t fuel = 100000;
  std::optional<Sort> sort;  // restricts sweeps that cover several sorts
};

const std::vector<std::string>& lemma_ids();

// Dispatch by id: tran, coding1..4, sim-diamond, sim-circle, sim-aggregate,
// postpone, diag, diag-star, sn-transfer, subst-sn, snrth, mendler-counter,
// sn-sweep.  Throws std::invalid_argument on an unknown id.
LemmaReport run_lemma(const std::string& id, const VerifyOptions& opts);

}  // namespace lmcalc
