#pragma once

#include <optional>
#include <vector>

#include "dstl/computation.hpp"
#include "dstl/formula.hpp"

namespace dstl {

// V(ds) = intersection of the member states' label sets.
std::set<std::string> valuation(const Computation& c, DsMask ds);

// DSL satisfaction at a distributed state, straight structural recursion.
bool satisfies(const Computation& c, DsMask ds, const FormulaPtr& f);

// A core formula bound to one computation, with per-node singleton masks
// so that evaluation at any ds is a handful of bitmask operations.
class CompiledFormula {
 public:
  CompiledFormula() = default;
  CompiledFormula(const Computation& c, const FormulaPtr& f);

  bool eval(DsMask ds) const { return eval_node(root_, ds); }
  DsMask singleton_mask() const { return nodes_.empty() ? 0 : nodes_[root_].sat1; }

  // Monotone under adding states to ds (true for formulas whose every
  // proposition sits under a location operator at positive polarity).
  bool union_monotone() const { return mono_; }

 private:
  struct Node {
    FKind kind;
    int a = -1, b = -1;
    DsMask mask = 0;  // Prop: states carrying it; Loc: comp_mask & sat1(child)
    DsMask sat1 = 0;  // states whose singleton satisfies this node
  };
  int add(const Computation& c, const FormulaPtr& f);
  bool eval_node(int i, DsMask ds) const;
  static void polarity(const std::vector<Node>& nodes, int i, bool positive, bool& mono);

  std::vector<Node> nodes_;
  int root_ = -1;
  bool mono_ = false;
};

struct ValidResult {
  bool valid = false;
  std::optional<DsMask> witness;  // smallest failing ds in enumeration order
};

// M |=_T F for a plain DSL formula: every nonempty ds satisfies F.
ValidResult valid(const Computation& c, const FormulaPtr& f, int cap = 24, int jobs = 1);

}  // namespace dstl
