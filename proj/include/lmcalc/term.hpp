#pragma once

// Terms of the three calculi: plain lambda, lambda-mu, and lambda-mu with
// pairs, injections and case analysis.  Terms are immutable and shared;
// lambda variables and mu variables live in disjoint namespaces.

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "lmcalc/type.hpp"

namespace lmcalc {

enum class Sort { Lambda, LambdaMu, Full };

enum class TermKind { Var, Const, Lam, App, Pair, Inj, Mu, Name };
enum class ElimKind { TermArg, Proj, Case };

struct Term;
struct Elim;
using TermPtr = std::shared_ptr<const Term>;
using ElimPtr = std::shared_ptr<const Elim>;

struct Elim {
  ElimKind kind = ElimKind::TermArg;
  TermPtr arg;         // TermArg
  int idx = 0;         // Proj side, 1 or 2
  std::string x1, x2;  // Case binders (lambda variables)
  TermPtr n1, n2;      // Case branches
};

struct Term {
  TermKind kind = TermKind::Var;
  std::string var;     // Var name / Const atom / Lam, Mu binder / Name's mu variable
  TypePtr ann;         // annotation, may be null: Lam (x : A), Mu (the A of a : ~A), Inj (full or-type)
  int idx = 0;         // Inj side, 1 or 2
  TermPtr lhs;         // Lam/Mu/Name/Inj body, Pair left component, App function
  TermPtr rhs;         // Pair right component
  ElimPtr elim;        // App eliminator
};

TermPtr mk_var(std::string x);
TermPtr mk_const(std::string atom);
TermPtr mk_lam(std::string x, TypePtr ann, TermPtr body);
TermPtr mk_app(TermPtr f, ElimPtr e);
TermPtr mk_app(TermPtr f, TermPtr arg);  // convenience for term arguments
TermPtr mk_pair(TermPtr l, TermPtr r);
TermPtr mk_inj(int idx, TypePtr ann, TermPtr body);
TermPtr mk_mu(std::string a, TypePtr ann, TermPtr body);
TermPtr mk_name(std::string a, TermPtr body);

ElimPtr mk_arg(TermPtr t);
ElimPtr mk_proj(int idx);
ElimPtr mk_case(std::string x1, TermPtr n1, std::string x2, TermPtr n2);

// Paths of child indices; for App nodes index 0 is the function, 1 the
// term argument or first case branch, 2 the second case branch.
using Position = std::vector<int>;

std::string position_to_string(const Position& p);

// Subterm at a position; throws std::out_of_range on an invalid path.
TermPtr subterm_at(const TermPtr& t, const Position& p);

struct FreeVars {
  std::set<std::string> lam;  // free lambda variables
  std::set<std::string> mu;   // free mu variables
};

FreeVars free_vars(const TermPtr& t);
FreeVars elim_free_vars(const Elim& e);
bool free_lam_var(const TermPtr& t, const std::string& x);
bool free_mu_var(const TermPtr& t, const std::string& a);

// Number of free named occurrences (a M) of the mu variable a.
int mu_occurrences(const TermPtr& t, const std::string& a);

// Node count; eliminators count one node for a projection and one plus
// the branches for a case.  Type annotations are not counted.
int term_size(const TermPtr& t);

// Capture-avoiding M[x := N] on lambda variables.
TermPtr subst(const TermPtr& m, const std::string& x, const TermPtr& n);

// Capture-avoiding renaming M[a := b] of a free mu variable.
TermPtr mu_rename(const TermPtr& m, const std::string& a, const std::string& b);

// Structural substitution M[(a L) := (a (L e))]: every named subterm
// (a L) with this a free becomes (a (L' e)), innermost occurrences first.
TermPtr struct_subst(const TermPtr& m, const std::string& a, const Elim& e);

// Alpha-equivalence; annotations must agree where present.
bool alpha_eq(const TermPtr& a, const TermPtr& b);

// Deterministic renaming of bound variables ($x0, $m0, ... in preorder).
// Two terms are alpha-equal iff their canonical keys coincide.
TermPtr canonicalize(const TermPtr& t);
std::string canonical_key(const TermPtr& t);

// Deep sort admissibility: Lambda admits Var/Const/Lam/App-with-term-arg,
// LambdaMu adds Mu and Name, Full adds the rest.
bool sort_allows(const TermPtr& t, Sort s);

// Every lambda and mu variable name occurring in t, free or bound.
std::set<std::string> all_var_names(const TermPtr& t);

// First of base, base1, base2, ... not in avoid.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

// Structural copy without any type annotations.
TermPtr strip_annotations(const TermPtr& t);

const char* to_string(Sort s);

}  // namespace lmcalc
