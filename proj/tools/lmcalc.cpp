// Command line front end: parsing, typing, reduction, graph search, the
// two translations, equation analysis, corpus generation, and the lemma
// harness.  Exit codes: 0 pass, 1 failed check, 2 usage or parse error,
// 3 inconclusive (fuel ran out).
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lmcalc/lemmas.hpp"
#include "lmcalc/text.hpp"

using namespace lmcalc;

namespace {

// An argument is inline text unless it names an existing file.
std::string slurp(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string term_text;
  std::string other_text;
  std::string type_text;
  std::string ctx_text;
  std::string eqs_text;
  std::string rules = "full-rt";
  std::string mode = "curry";
  std::string system = "sfull";
  std::string format = "text";
  std::string sort;
  std::string which;
  std::vector<std::string> ids;
  std::vector<std::string> atoms = {"A"};
  int max_size = -1;
  int depth = 4;
  size_t count = 0;
  size_t fuel = 100000;
  uint64_t seed = 1;
  bool show_derivation = false;
};

Mode mode_of(const Options& o) { return o.mode == "church" ? Mode::Church : Mode::Curry; }

TypeSystem system_of(const Options& o) {
  if (o.system == "s") return TypeSystem::S;
  if (o.system == "sc") return TypeSystem::Sc;
  if (o.system == "smu") return TypeSystem::Smu;
  return TypeSystem::Sfull;
}

Sort sort_of_name(const std::string& s) {
  if (s == "lambda") return Sort::Lambda;
  if (s == "lambdamu") return Sort::LambdaMu;
  return Sort::Full;
}

RuleSet rules_of(const Options& o) {
  auto rs = rule_set_by_name(o.rules);
  if (!rs) throw std::invalid_argument("unknown rule set: " + o.rules);
  return *rs;
}

// Null when --eqs was not given; storage lives in the caller.
const EquationSet* parse_eqs(const Options& o, EquationSet& storage) {
  if (o.eqs_text.empty()) return nullptr;
  storage = parse_equations(slurp(o.eqs_text));
  return &storage;
}

std::string edge_text(const Redex& r) {
  return label_string(r.label, r.mu_zero) + "@" + position_to_string(r.pos);
}

int cmd_check(const Options& o) {
  EquationSet eqs;
  const EquationSet* ep = parse_eqs(o, eqs);
  TypeSystem sys = system_of(o);
  Context ctx = parse_context(slurp(o.ctx_text));
  TermPtr m = parse_term(slurp(o.term_text), sort_of(sys), mode_of(o));
  TypePtr a = parse_type(slurp(o.type_text));
  try {
    DerivationPtr d = check(ctx, m, a, sys, ep);
    if (o.show_derivation) std::cout << derivation_to_string(d);
    std::cout << "ok: " << print_term(m) << " : " << print_type(a) << "\n";
    return 0;
  } catch (const TypeError& e) {
    std::cout << "type error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_infer(const Options& o) {
  EquationSet eqs;
  const EquationSet* ep = parse_eqs(o, eqs);
  TypeSystem sys = system_of(o);
  Context ctx = parse_context(slurp(o.ctx_text));
  TermPtr m = parse_term(slurp(o.term_text), sort_of(sys), mode_of(o));
  try {
    std::cout << print_type(infer(ctx, m, sys, ep)) << "\n";
    return 0;
  } catch (const TypeError& e) {
    std::cout << "type error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_reduce(const Options& o) {
  TermPtr m = parse_term(slurp(o.term_text), Sort::Full, mode_of(o));
  RuleSet rs = rules_of(o);
  Trace t = normalize(m, rs, o.fuel);
  if (o.format == "lines") {
    for (size_t i = 0; i < t.steps.size(); ++i) {
      const Step& s = t.steps[i];
      std::cout << i + 1 << "\t" << label_string(s.label, s.mu_zero) << "\t"
                << position_to_string(s.pos) << "\t" << print_term(s.result) << "\n";
    }
  } else {
    std::cout << t.to_string() << "\n";
  }
  if (!is_normal(t.end(), rs)) {
    std::cout << "stopped after " << t.lg() << " steps without a normal form\n";
    return 3;
  }
  return 0;
}

int cmd_graph(const Options& o) {
  TermPtr m = parse_term(slurp(o.term_text), Sort::Full, mode_of(o));
  ReductionGraph g = reduction_graph(m, rules_of(o), o.fuel);
  bool lines = o.format == "lines";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    if (lines) std::cout << "node\t" << i << "\t" << print_term(g.nodes[i].term) << "\n";
    else std::cout << "node " << i << ": " << print_term(g.nodes[i].term) << "\n";
  }
  for (size_t i = 0; i < g.nodes.size(); ++i)
    for (const GraphEdge& e : g.nodes[i].succ) {
      if (lines)
        std::cout << "edge\t" << i << "\t" << e.target << "\t"
                  << label_string(e.redex.label, e.redex.mu_zero) << "\t"
                  << position_to_string(e.redex.pos) << "\n";
      else
        std::cout << "edge " << i << " -> " << e.target << " [" << edge_text(e.redex) << "]\n";
    }
  if (!g.complete) {
    std::cout << "incomplete: fuel exhausted after " << g.expansions << " expansions\n";
    return 3;
  }
  return 0;
}

int cmd_eta(const Options& o) {
  TermPtr m = parse_term(slurp(o.term_text), Sort::Full, mode_of(o));
  try {
    std::optional<size_t> n = eta(m, rules_of(o), o.fuel);
    if (!n) {
      std::cout << "unknown: fuel exhausted\n";
      return 3;
    }
    std::cout << *n << "\n";
    return 0;
  } catch (const CycleError& e) {
    std::cout << "not strongly normalizing: " << e.what() << "\n";
    return 1;
  }
}

int cmd_sn(const Options& o) {
  TermPtr m = parse_term(slurp(o.term_text), Sort::Full, mode_of(o));
  SnVerdict v = sn_verdict(m, rules_of(o), o.fuel);
  switch (v.status) {
    case SnStatus::Sn:
      std::cout << "SN eta=" << v.eta << "\n";
      return 0;
    case SnStatus::Loop:
      std::cout << "LOOP\n" << v.loop->to_string() << "\n";
      return 1;
    case SnStatus::Unknown:
      std::cout << "unknown: fuel exhausted after " << v.expansions << " expansions\n";
      return 3;
  }
  return 2;
}

int cmd_translate(const Options& o) {
  EquationSet eqs;
  const EquationSet* ep = parse_eqs(o, eqs);
  if (o.which == "t") {
    std::cout << print_term(t_term(parse_type(slurp(o.other_text)))) << "\n";
    return 0;
  }
  if (o.which == "diamond") {
    TermPtr m = parse_term(slurp(o.other_text), Sort::LambdaMu, mode_of(o));
    std::cout << print_term(diamond(m)) << "\n";
    return 0;
  }
  TermPtr m = parse_term(slurp(o.other_text), Sort::Full, mode_of(o));
  if (!o.ctx_text.empty()) {
    Context ctx = parse_context(slurp(o.ctx_text));
    std::cout << print_term(circle_annotated(ctx, m, ep)) << "\n";
  } else {
    std::cout << print_term(circle(m)) << "\n";
  }
  return 0;
}

int cmd_good(const Options& o) {
  EquationSet eqs = parse_equations(slurp(o.eqs_text));
  GoodnessReport r = is_good(eqs);
  std::cout << r.to_string() << "\n";
  return r.good ? 0 : 1;
}

int cmd_congruent(const Options& o) {
  EquationSet eqs;
  const EquationSet* ep = parse_eqs(o, eqs);
  TypePtr a = parse_type(slurp(o.term_text));
  TypePtr b = parse_type(slurp(o.other_text));
  bool yes = type_eq(a, b) || (ep && congruent(a, b, *ep));
  std::cout << (yes ? "congruent" : "not congruent") << "\n";
  return yes ? 0 : 1;
}

int cmd_verify(const Options& o) {
  VerifyOptions vo;
  vo.max_size = o.max_size;
  vo.count = o.count;
  vo.seed = o.seed;
  vo.fuel = o.fuel;
  if (!o.sort.empty()) vo.sort = sort_of_name(o.sort);
  std::vector<std::string> ids = o.ids;
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) ids = lemma_ids();
  bool any_fail = false, any_dry = false;
  for (const std::string& id : ids) {
    LemmaReport rep = run_lemma(id, vo);
    if (o.format == "lines")
      std::cout << rep.id << "\t" << rep.tried << "\t" << rep.passed << "\t"
                << rep.failures.size() << "\t" << rep.inconclusive << "\t"
                << (rep.failed() ? "FAIL" : rep.inconclusive ? "INCONCLUSIVE" : "PASS")
                << "\n";
    else
      std::cout << rep.summary() << "\n";
    any_fail = any_fail || rep.failed();
    any_dry = any_dry || rep.inconclusive > 0;
  }
  return any_fail ? 1 : any_dry ? 3 : 0;
}

int cmd_corpus(const Options& o) {
  EquationSet eqs;
  const EquationSet* ep = parse_eqs(o, eqs);
  Sort sort = sort_of_name(o.sort.empty() ? "lambda" : o.sort);
  Context ctx = parse_context(slurp(o.ctx_text));
  std::vector<CorpusItem> items;
  if (o.count > 0) {
    RandomSpec rs;
    rs.sort = sort;
    rs.atoms = o.atoms;
    rs.max_depth = o.depth;
    rs.seed = o.seed;
    rs.base_ctx = ctx;
    rs.eqs = ep;
    items = random_typed_terms(rs, o.count);
  } else {
    CorpusSpec cs;
    cs.sort = sort;
    cs.size_bound = o.max_size < 0 ? 5 : o.max_size;
    cs.atoms = o.atoms;
    cs.eqs = ep;
    cs.base_ctx = ctx;
    items = enumerate_typed_terms(cs);
  }
  for (const CorpusItem& it : items) {
    if (o.format == "lines") std::cout << print_term(it.term) << "\t" << print_type(it.type) << "\n";
    else std::cout << print_term(it.term) << " : " << print_type(it.type) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for the simply typed lambda, lambda-mu, and full "
               "lambda-mu calculi: typing, reduction, translations, and "
               "mechanical checks of their metatheory"};
  app.require_subcommand(1);
  Options o;

  auto add_fuel = [&](CLI::App* c) { c->add_option("--fuel", o.fuel, "search budget"); };
  auto add_mode = [&](CLI::App* c) {
    c->add_option("--mode", o.mode, "church or curry")
        ->check(CLI::IsMember({"church", "curry"}));
  };
  auto add_rules = [&](CLI::App* c) {
    c->add_option("--rules", o.rules, "rule set preset")
        ->check(CLI::IsMember({"beta", "betamu", "betamu-rt", "full", "full-rt", "rho",
                               "rho-theta"}));
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "text or lines")
        ->check(CLI::IsMember({"text", "lines"}));
  };
  auto add_typing = [&](CLI::App* c) {
    c->add_option("--ctx", o.ctx_text, "typing context, inline or a file");
    c->add_option("--system", o.system, "type system")
        ->check(CLI::IsMember({"s", "sc", "smu", "sfull"}));
    c->add_option("--eqs", o.eqs_text, "recursive type equations, inline or a file");
  };

  CLI::App* c_check = app.add_subcommand("check", "typecheck a term against a type");
  c_check->add_option("term", o.term_text)->required();
  c_check->add_option("--type", o.type_text, "the expected type")->required();
  c_check->add_flag("--derivation", o.show_derivation, "print the full derivation");
  add_typing(c_check);
  add_mode(c_check);

  CLI::App* c_infer = app.add_subcommand("infer", "infer the type of a term");
  c_infer->add_option("term", o.term_text)->required();
  add_typing(c_infer);
  add_mode(c_infer);

  CLI::App* c_reduce = app.add_subcommand("reduce", "normalize by leftmost-outermost steps");
  c_reduce->add_option("term", o.term_text)->required();
  add_rules(c_reduce);
  add_fuel(c_reduce);
  add_format(c_reduce);
  add_mode(c_reduce);

  CLI::App* c_graph = app.add_subcommand("graph", "print the reduction graph");
  c_graph->add_option("term", o.term_text)->required();
  add_rules(c_graph);
  add_fuel(c_graph);
  add_format(c_graph);
  add_mode(c_graph);

  CLI::App* c_eta = app.add_subcommand("eta", "longest reduction length");
  c_eta->add_option("term", o.term_text)->required();
  add_rules(c_eta);
  add_fuel(c_eta);
  add_mode(c_eta);

  CLI::App* c_sn = app.add_subcommand("sn", "strong normalization verdict");
  c_sn->add_option("term", o.term_text)->required();
  add_rules(c_sn);
  add_fuel(c_sn);
  add_mode(c_sn);

  CLI::App* c_tr = app.add_subcommand("translate", "apply a translation");
  c_tr->add_option("which", o.which, "diamond, circle, or t")
      ->required()
      ->check(CLI::IsMember({"diamond", "circle", "t"}));
  c_tr->add_option("input", o.other_text, "a term, or a type for t")->required();
  c_tr->add_option("--ctx", o.ctx_text, "context for the annotated circle translation");
  c_tr->add_option("--eqs", o.eqs_text, "recursive type equations");
  add_mode(c_tr);

  CLI::App* c_good = app.add_subcommand("good", "decide the goodness condition");
  c_good->add_option("--eqs", o.eqs_text, "recursive type equations")->required();

  CLI::App* c_cong = app.add_subcommand("congruent", "decide type congruence");
  c_cong->add_option("a", o.term_text)->required();
  c_cong->add_option("b", o.other_text)->required();
  c_cong->add_option("--eqs", o.eqs_text, "recursive type equations");

  CLI::App* c_verify = app.add_subcommand("verify", "run lemma checks");
  c_verify->add_option("ids", o.ids, "lemma ids, or all");
  c_verify->add_option("--max-size", o.max_size, "corpus size bound");
  c_verify->add_option("--count", o.count, "number of random instances");
  c_verify->add_option("--seed", o.seed, "random seed");
  c_verify->add_option("--sort", o.sort, "restrict multi-sort sweeps")
      ->check(CLI::IsMember({"lambda", "lambdamu", "full"}));
  add_fuel(c_verify);
  add_format(c_verify);

  CLI::App* c_corpus = app.add_subcommand("corpus", "emit a typed term corpus");
  c_corpus->add_option("--sort", o.sort, "term sort")
      ->check(CLI::IsMember({"lambda", "lambdamu", "full"}));
  c_corpus->add_option("--max-size", o.max_size, "exhaustive size bound");
  c_corpus->add_option("--count", o.count, "random corpus of this many terms");
  c_corpus->add_option("--depth", o.depth, "random synthesis depth");
  c_corpus->add_option("--seed", o.seed, "random seed");
  c_corpus->add_option("--atoms", o.atoms, "atomic types")->delimiter(',');
  c_corpus->add_option("--ctx", o.ctx_text, "base typing context");
  c_corpus->add_option("--eqs", o.eqs_text, "recursive type equations");
  add_format(c_corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_check) return cmd_check(o);
    if (*c_infer) return cmd_infer(o);
    if (*c_reduce) return cmd_reduce(o);
    if (*c_graph) return cmd_graph(o);
    if (*c_eta) return cmd_eta(o);
    if (*c_sn) return cmd_sn(o);
    if (*c_tr) return cmd_translate(o);
    if (*c_good) return cmd_good(o);
    if (*c_cong) return cmd_congruent(o);
    if (*c_verify) return cmd_verify(o);
    if (*c_corpus) return cmd_corpus(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
