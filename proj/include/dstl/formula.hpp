#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace dstl {

// DSL formula constructors. Core constructors are Prop, False_, Not, And,
// Loc; the rest is surface sugar removed by desugar().
enum class FKind : std::uint8_t {
  Prop,
  False_,
  Not,
  And,
  Loc,
  True_,
  Or,
  Implies,
  Iff,
  Box,
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FKind kind;
  std::string name;  // Prop: proposition; Loc/Box: component
  FormulaPtr lhs;
  FormulaPtr rhs;

  static FormulaPtr prop(std::string p);
  static FormulaPtr falsum();
  static FormulaPtr verum();
  static FormulaPtr lnot(FormulaPtr a);
  static FormulaPtr land(FormulaPtr a, FormulaPtr b);
  static FormulaPtr lor(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr iff(FormulaPtr a, FormulaPtr b);
  static FormulaPtr loc(std::string comp, FormulaPtr a);
  static FormulaPtr box(std::string comp, FormulaPtr a);
};

bool equal(const FormulaPtr& a, const FormulaPtr& b);
bool is_core(const FormulaPtr& f);

// Sugar removal: ⊤ = ~false, F|G = ~(~F & ~G), F->G = ~(F & ~G),
// F<->G = (F->G)&(G->F), [m]F = ~<m>~F.  Double negations introduced by
// the unfolding (and any written in the source) are collapsed, so the
// result is a fixpoint of desugaring.
FormulaPtr desugar(const FormulaPtr& f);

// Temporal layer.  Operands are DSL formulae; no nesting.
enum class TKind : std::uint8_t {
  Plain,
  LeadsTo,
  Because,
  LeadsToC,
  BecauseC,
  Unless,
  Init,
  Stable,  // sugar: stable F = F unless false
};

struct TemporalFormula {
  TKind kind = TKind::Plain;
  FormulaPtr lhs;
  FormulaPtr rhs;  // unset for Plain/Init/Stable
};

bool equal(const TemporalFormula& a, const TemporalFormula& b);
TemporalFormula desugar(const TemporalFormula& t);

const char* tkind_name(TKind k);

}  // namespace dstl
