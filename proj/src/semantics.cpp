#include "dstl/semantics.hpp"

#include <bit>
#include <future>
#include <thread>

namespace dstl {

std::set<std::string> valuation(const Computation& c, DsMask ds) {
  std::set<std::string> out;
  bool first = true;
  for (DsMask rest = ds; rest;) {
    int g = std::countr_zero(rest);
    rest &= rest - 1;
    const auto& ls = c.labels(g);
    if (first) {
      out = ls;
      first = false;
    } else {
      std::set<std::string> keep;
      for (const auto& p : out)
        if (ls.count(p)) keep.insert(p);
      out.swap(keep);
    }
  }
  return out;
}

bool satisfies(const Computation& c, DsMask ds, const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Prop:
      return (ds & ~c.label_mask(f->name)) == 0;
    case FKind::False_:
      return false;
    case FKind::Not:
      return !satisfies(c, ds, f->lhs);
    case FKind::And:
      return satisfies(c, ds, f->lhs) && satisfies(c, ds, f->rhs);
    case FKind::Loc: {
      int comp = c.component_index(f->name);
      if (comp < 0) return false;
      for (DsMask rest = ds & c.comp_mask(comp); rest;) {
        int g = std::countr_zero(rest);
        rest &= rest - 1;
        if (satisfies(c, 1ull << g, f->lhs)) return true;
      }
      return false;
    }
    default:
      return satisfies(c, ds, desugar(f));
  }
}

CompiledFormula::CompiledFormula(const Computation& c, const FormulaPtr& f) {
  root_ = add(c, desugar(f));
  mono_ = true;
  polarity(nodes_, root_, true, mono_);
}

int CompiledFormula::add(const Computation& c, const FormulaPtr& f) {
  Node n;
  n.kind = f->kind;
  switch (f->kind) {
    case FKind::Prop:
      n.mask = c.label_mask(f->name);
      n.sat1 = n.mask;
      break;
    case FKind::False_:
      break;
    case FKind::Not:
      n.a = add(c, f->lhs);
      n.sat1 = ~nodes_[n.a].sat1 & c.full_mask();
      break;
    case FKind::And:
      n.a = add(c, f->lhs);
      n.b = add(c, f->rhs);
      n.sat1 = nodes_[n.a].sat1 & nodes_[n.b].sat1;
      break;
    case FKind::Loc: {
      n.a = add(c, f->lhs);
      int comp = c.component_index(f->name);
      n.mask = comp < 0 ? 0 : (c.comp_mask(comp) & nodes_[n.a].sat1);
      n.sat1 = n.mask;
      break;
    }
    default:
      break;  // unreachable: input is desugared
  }
  nodes_.push_back(n);
  return static_cast<int>(nodes_.size()) - 1;
}

bool CompiledFormula::eval_node(int i, DsMask ds) const {
  const Node& n = nodes_[i];
  switch (n.kind) {
    case FKind::Prop:
      return (ds & ~n.mask) == 0;
    case FKind::False_:
      return false;
    case FKind::Not:
      return !eval_node(n.a, ds);
    case FKind::And:
      return eval_node(n.a, ds) && eval_node(n.b, ds);
    case FKind::Loc:
      return (ds & n.mask) != 0;
    default:
      return false;
  }
}

void CompiledFormula::polarity(const std::vector<Node>& nodes, int i, bool positive, bool& mono) {
  const Node& n = nodes[i];
  switch (n.kind) {
    case FKind::Prop:
      // Bare proposition: valuation shrinks under union, so it is only
      // monotone at negative polarity.
      if (positive) mono = false;
      break;
    case FKind::False_:
      break;
    case FKind::Loc:
      if (!positive) mono = false;  // negated location adds refuters under union
      break;
    case FKind::Not:
      polarity(nodes, n.a, !positive, mono);
      break;
    case FKind::And:
      polarity(nodes, n.a, positive, mono);
      polarity(nodes, n.b, positive, mono);
      break;
    default:
      break;
  }
}

namespace {

std::optional<DsMask> first_failure(const Computation& c, const CompiledFormula& cf, DsMask from,
                                    DsMask to) {
  for (DsMask ds = from; ds <= to; ++ds)
    if (!cf.eval(ds)) return ds;
  return std::nullopt;
}

}  // namespace

ValidResult valid(const Computation& c, const FormulaPtr& f, int cap, int jobs) {
  if (c.total_states() > cap) throw CapExceededError(c.total_states(), cap);
  CompiledFormula cf(c, f);
  DsMask last = c.full_mask();
  std::optional<DsMask> witness;
  if (jobs <= 1 || last < 4096) {
    witness = first_failure(c, cf, 1, last);
  } else {
    // Chunked scan; the reported witness is the minimum over chunks, so
    // the outcome is independent of the worker count.
    int workers = std::min<std::uint64_t>(jobs, 64);
    DsMask chunk = last / workers + 1;
    std::vector<std::future<std::optional<DsMask>>> futs;
    for (int w = 0; w < workers; ++w) {
      DsMask lo = 1 + chunk * w;
      DsMask hi = std::min<DsMask>(last, lo + chunk - 1);
      if (lo > last) break;
      futs.push_back(std::async(std::launch::async,
                                [&c, &cf, lo, hi] { return first_failure(c, cf, lo, hi); }));
    }
    for (auto& fu : futs) {
      auto r = fu.get();
      if (r && (!witness || *r < *witness)) witness = r;
    }
  }
  return {!witness.has_value(), witness};
}

}  // namespace dstl
