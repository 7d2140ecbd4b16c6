#pragma once

// Type ASTs for the simple (T) and full (T') type languages, recursive
// equation sets with their generated congruence, and the polarity /
// goodness analysis used to admit recursive equations.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lmcalc {

enum class TypeKind { Atom, Bot, Arrow, And, Or };

struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct Type {
  TypeKind kind = TypeKind::Atom;
  std::string atom;   // Atom only
  TypePtr lhs, rhs;   // Arrow/And/Or components
};

TypePtr mk_atom(std::string name);
TypePtr mk_bot();
TypePtr mk_arrow(TypePtr l, TypePtr r);
TypePtr mk_and(TypePtr l, TypePtr r);
TypePtr mk_or(TypePtr l, TypePtr r);
TypePtr mk_neg(TypePtr a);   // ~A, sugar for A -> bot

bool type_eq(const TypePtr& a, const TypePtr& b);
bool is_neg(const TypePtr& a);      // Arrow(_, bot)
bool in_sort_t(const TypePtr& a);   // contains no And/Or
int type_size(const TypePtr& a);    // constructor count
int type_height(const TypePtr& a);

// Compact structural encoding, usable as a map key.
std::string type_key(const TypePtr& a);

// Sign of the occurrences of a recursion variable inside a type.
// Absent is the bottom of the lattice, Both the top.
enum class Polarity { Absent, Positive, Negative, Both };

Polarity pol_join(Polarity a, Polarity b);
Polarity pol_flip(Polarity p);
const char* to_string(Polarity p);

// Join of the signs of all occurrences of x in a.  A type a is in P+(x)
// iff the result is Positive or Absent, in P-(x) iff Negative or Absent.
Polarity polarity_of(const std::string& x, const TypePtr& a);

// A finite set of mutually recursive equations {X_i = F_i}.  Left-hand
// variables are pairwise distinct and no right-hand side is a bare
// recursion variable, so unfoldings are regular trees.
class EquationSet {
 public:
  EquationSet() = default;

  // Throws std::invalid_argument on duplicate left-hand sides or a
  // right-hand side that is a bare recursion variable.
  static EquationSet make(std::vector<std::pair<std::string, TypePtr>> defs);

  const TypePtr* find(const std::string& x) const;
  bool is_recursion_var(const std::string& x) const { return find(x) != nullptr; }
  const std::map<std::string, TypePtr>& defs() const { return defs_; }
  bool t_prime() const { return t_prime_; }
  bool empty() const { return defs_.empty(); }

 private:
  std::map<std::string, TypePtr> defs_;
  bool t_prime_ = false;   // some right-hand side uses And/Or
};

struct GoodnessReport {
  bool good = true;
  // A cycle X -> ... -> X with negative sign product when not good.
  std::vector<std::string> cycle;
  std::string to_string() const;
};

// Decides goodness by the signed dependency graph: edge X_i ->^s X_j when
// X_j occurs with sign s in F_i; good iff every cycle has positive
// product.
GoodnessReport is_good(const EquationSet& eqs);

// If the head of t is a recursion variable of eqs, replace it by its
// right-hand side (repeatedly).  Identity when eqs is null.
TypePtr head_unfold(TypePtr t, const EquationSet* eqs);

// a ~ b in the congruence generated by eqs, decided by coinductive
// comparison of the regular unfoldings with memoized pairs.
bool congruent(const TypePtr& a, const TypePtr& b, const EquationSet& eqs);

// The coding of /\ and \/ into -> and bot:
//   {A1 /\ A2}o = ~(A1o -> (A2o -> bot))
//   {A1 \/ A2}o = ~A1o -> (~A2o -> bot)
// homomorphic on atoms, bot and ->.
TypePtr circle_type(const TypePtr& a);

// Applies circle_type to every right-hand side.
EquationSet circle_equations(const EquationSet& eqs);

}  // namespace lmcalc
