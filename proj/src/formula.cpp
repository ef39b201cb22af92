#include "dstl/formula.hpp"

#include <utility>

namespace dstl {

namespace {

FormulaPtr mk(FKind k, std::string name, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->name = std::move(name);
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}

}  // namespace

FormulaPtr Formula::prop(std::string p) { return mk(FKind::Prop, std::move(p), nullptr, nullptr); }
FormulaPtr Formula::falsum() { return mk(FKind::False_, {}, nullptr, nullptr); }
FormulaPtr Formula::verum() { return mk(FKind::True_, {}, nullptr, nullptr); }
FormulaPtr Formula::lnot(FormulaPtr a) { return mk(FKind::Not, {}, std::move(a), nullptr); }
FormulaPtr Formula::land(FormulaPtr a, FormulaPtr b) {
  return mk(FKind::And, {}, std::move(a), std::move(b));
}
FormulaPtr Formula::lor(FormulaPtr a, FormulaPtr b) {
  return mk(FKind::Or, {}, std::move(a), std::move(b));
}
FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  return mk(FKind::Implies, {}, std::move(a), std::move(b));
}
FormulaPtr Formula::iff(FormulaPtr a, FormulaPtr b) {
  return mk(FKind::Iff, {}, std::move(a), std::move(b));
}
FormulaPtr Formula::loc(std::string comp, FormulaPtr a) {
  return mk(FKind::Loc, std::move(comp), std::move(a), nullptr);
}
FormulaPtr Formula::box(std::string comp, FormulaPtr a) {
  return mk(FKind::Box, std::move(comp), std::move(a), nullptr);
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name) return false;
  return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

bool is_core(const FormulaPtr& f) {
  if (!f) return true;
  switch (f->kind) {
    case FKind::Prop:
    case FKind::False_:
      return true;
    case FKind::Not:
    case FKind::Loc:
      return is_core(f->lhs);
    case FKind::And:
      return is_core(f->lhs) && is_core(f->rhs);
    default:
      return false;
  }
}

namespace {

// Negation with double-negation collapse; keeps desugared formulae in a
// stable normal form so that structural matching works across the dual
// definitions ([m]F = ~<m>~F, F->G = ~(F & ~G), ...).
FormulaPtr norm_not(FormulaPtr a) {
  if (a->kind == FKind::Not) return a->lhs;
  return Formula::lnot(std::move(a));
}

}  // namespace

FormulaPtr desugar(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Prop:
    case FKind::False_:
      return f;
    case FKind::Not:
      return norm_not(desugar(f->lhs));
    case FKind::And: {
      auto a = desugar(f->lhs), b = desugar(f->rhs);
      if (a == f->lhs && b == f->rhs) return f;
      return Formula::land(std::move(a), std::move(b));
    }
    case FKind::Loc: {
      auto a = desugar(f->lhs);
      if (a == f->lhs) return f;
      return Formula::loc(f->name, std::move(a));
    }
    case FKind::True_:
      return Formula::lnot(Formula::falsum());
    case FKind::Or:
      return norm_not(Formula::land(norm_not(desugar(f->lhs)), norm_not(desugar(f->rhs))));
    case FKind::Implies:
      return norm_not(Formula::land(desugar(f->lhs), norm_not(desugar(f->rhs))));
    case FKind::Iff: {
      auto a = desugar(f->lhs), b = desugar(f->rhs);
      auto ab = norm_not(Formula::land(a, norm_not(b)));
      auto ba = norm_not(Formula::land(b, norm_not(a)));
      return Formula::land(std::move(ab), std::move(ba));
    }
    case FKind::Box:
      return norm_not(Formula::loc(f->name, norm_not(desugar(f->lhs))));
  }
  return f;  // unreachable
}

bool equal(const TemporalFormula& a, const TemporalFormula& b) {
  if (a.kind != b.kind) return false;
  return equal(a.lhs, b.lhs) && equal(a.rhs, b.rhs);
}

TemporalFormula desugar(const TemporalFormula& t) {
  TemporalFormula out;
  if (t.kind == TKind::Stable) {
    out.kind = TKind::Unless;
    out.lhs = desugar(t.lhs);
    out.rhs = Formula::falsum();
    return out;
  }
  out.kind = t.kind;
  out.lhs = desugar(t.lhs);
  out.rhs = t.rhs ? desugar(t.rhs) : nullptr;
  return out;
}

const char* tkind_name(TKind k) {
  switch (k) {
    case TKind::Plain: return "plain";
    case TKind::LeadsTo: return "leads_to";
    case TKind::Because: return "because";
    case TKind::LeadsToC: return "leads_to_c";
    case TKind::BecauseC: return "because_c";
    case TKind::Unless: return "unless";
    case TKind::Init: return "init";
    case TKind::Stable: return "stable";
  }
  return "?";
}

}  // namespace dstl
