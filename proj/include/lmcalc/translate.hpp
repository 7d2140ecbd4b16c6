#pragma once
// The T_A combinator family, the diamond translation from lambda-mu into
// plain lambda with constants, and the circle translation from the full
// calculus into lambda-mu.

#include <string>

#include "lmcalc/term.hpp"
#include "lmcalc/type.hpp"
#include "lmcalc/typing_context.hpp"

namespace lmcalc {

// The reserved mu variable free in every circle image.
inline const std::string phi_var = "phi";

// T_bot = \x.(x \y.y); T_X = c[X]; T_{A->B} = \x.\y.(T_B \u.(x \v.(u (v y)))).
// Closed, fully annotated, of type ~~A -> A.  Arguments must be in sort T.
TermPtr t_term(const TypePtr& a);

// The lambda variable standing in for a mu variable.
std::string diamond_var(const std::string& a);

// diamond maps mu a:~A. M to (T_A \x_a:~A. M') and (a M) to (x_a M').
// Every mu binder needs its annotation.
TermPtr diamond(const TermPtr& m);

// Mu bindings a:~B become lambda bindings x_a:~B.
Context diamond_context(const Context& ctx);

// circle on terms; never consults annotations, so curry input is fine.
// Binder annotations present in the input are mapped through circle_type.
TermPtr circle(const TermPtr& m);

// circle with source typing information, so that every binder introduced by
// the pair, injection, projection, and case clauses carries the annotation
// that makes the image typecheck.  m must be church-typed in sfull under ctx.
TermPtr circle_annotated(const Context& ctx, const TermPtr& m, const EquationSet* eqs = nullptr);

// Every type replaced by its circle_type; phi added as a mu binding of bot.
Context circle_context(const Context& ctx);

}  // namespace lmcalc
