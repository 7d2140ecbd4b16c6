#pragma once

// Type checking and inference for the four systems: S (simply typed
// lambda), Sc (S plus constants c[X] : ~~X -> X), Smu (lambda-mu) and
// Sfull (lambda-mu with /\ and \/).  Each system can be taken modulo a
// recursive equation set; type comparisons then use the generated
// congruence and the derivation records an approx step wherever the
// comparison was not syntactic.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "lmcalc/term.hpp"
#include "lmcalc/type.hpp"
#include "lmcalc/typing_context.hpp"

namespace lmcalc {

enum class TypeSystem { S, Sc, Smu, Sfull };

Sort sort_of(TypeSystem sys);
const char* to_string(TypeSystem sys);

struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

// One rule instance; rule is one of ax, const, ->i, ->e, boti, bote,
// andi, ande, ori, ore, approx.
struct Derivation {
  std::string rule;
  Context ctx;
  TermPtr term;
  TypePtr type;
  std::vector<DerivationPtr> premises;
};

// Infers the type of a fully annotated term.  Unannotated mu binders are
// accepted when the binding's named occurrences determine the type.
TypePtr infer(const Context& ctx, const TermPtr& m, TypeSystem sys,
              const EquationSet* eqs = nullptr);

// Checks m against a and returns the full derivation; throws TypeError.
// The goal also types unannotated mu binders with no named occurrence
// when the surrounding structure passes it down to them.
DerivationPtr check(const Context& ctx, const TermPtr& m, const TypePtr& a, TypeSystem sys,
                    const EquationSet* eqs = nullptr);

// Validates every node of a derivation as an instance of its rule.
bool derivation_ok(const DerivationPtr& d, const EquationSet* eqs = nullptr);

std::string derivation_to_string(const DerivationPtr& d);

}  // namespace lmcalc
