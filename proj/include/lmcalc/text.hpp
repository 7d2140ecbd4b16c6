#pragma once

// Concrete syntax: parsing and printing of terms, types, contexts and
// equation sets.  The term grammar is
//
//   term ::= ident | "c[" ident "]" | "\" ident [":" type] "." term
//          | "(" term elim* ")" | "<" term "," term ">"
//          | "w1" ["[" type "]"] term | "w2" ["[" type "]"] term
//          | "mu" ident [":~" type] "." term | "[" ident "]" term
//   elim ::= term | "p1" | "p2" | "[" ident "." term "|" ident "." term "]"
//
// "(M e1 .. ek)" is the left-nested application, "[a] M" the named term.
// "c[" and "w1[" are single tokens: the bracket must follow immediately
// for a constant or an injection annotation; "w1 [a] x" injects a named
// term.  The identifier phi is reserved and cannot be bound by mu.

#include <stdexcept>
#include <string>
#include <vector>

#include "lmcalc/term.hpp"
#include "lmcalc/type.hpp"
#include "lmcalc/typing_context.hpp"

namespace lmcalc {

enum class Mode { Church, Curry };

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
        line(line), col(col) {}
  int line, col;
};

// type ::= ident | "bot" | type "->" type | type "/\" type | type "\/"
// type | "~" type | "(" type ")"; precedence ~ over /\ over \/ over ->,
// with -> right-associative.
TypePtr parse_type(const std::string& text);
std::string print_type(const TypePtr& t);

// Parses one term, validates the sort, and in Church mode requires an
// annotation on every Lam and Mu binder.
TermPtr parse_term(const std::string& text, Sort sort = Sort::Full, Mode mode = Mode::Curry);
std::string print_term(const TermPtr& t);

// One entry per line (or semicolon-separated): "x : type" declares a
// lambda variable, "mu a : ~type" a mu variable.  '#' starts a comment.
Context parse_context(const std::string& text);
std::string print_context(const Context& ctx);

// One equation "X = type" per line (or semicolon-separated); '#' starts
// a comment.
EquationSet parse_equations(const std::string& text);
std::string print_equations(const EquationSet& eqs);

}  // namespace lmcalc
