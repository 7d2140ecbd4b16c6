#pragma once

// Typing contexts: lambda variables x : A and mu variables a : ~A.  The
// map for mu variables stores the A of a : ~A.

#include <map>
#include <string>

#include "lmcalc/type.hpp"

namespace lmcalc {

struct Context {
  std::map<std::string, TypePtr> lam;
  std::map<std::string, TypePtr> mu;

  bool empty() const { return lam.empty() && mu.empty(); }
};

}  // namespace lmcalc
