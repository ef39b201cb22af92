#pragma once

#include <stdexcept>
#include <string>

#include "dstl/formula.hpp"

namespace dstl {

struct AtomLimitError : std::runtime_error {
  explicit AtomLimitError(int n, int limit)
      : std::runtime_error("tautology check over " + std::to_string(n) +
                           " atoms exceeds the limit of " + std::to_string(limit)) {}
};

// Propositional tautology with modal-atom abstraction: every maximal
// <m>-subformula and every proposition of the desugared formula is one
// opaque atom.  This realizes the PC schema without enumerating it.
bool is_tautology(const FormulaPtr& f, int max_atoms = 20);

}  // namespace dstl
