#include "dstl/tautology.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dstl/parser.hpp"

namespace dstl {

namespace {

struct AtomTable {
  std::unordered_map<std::string, int> index;
  int intern(const FormulaPtr& f) {
    auto key = render(f);
    auto [it, fresh] = index.emplace(std::move(key), static_cast<int>(index.size()));
    (void)fresh;
    return it->second;
  }
};

// Core formula over atom indices; Loc subtrees are not descended into.
struct BoolNode {
  enum K { Atom, False_, Not, And } k;
  int atom = -1;
  int a = -1, b = -1;
};

int build(const FormulaPtr& f, AtomTable& atoms, std::vector<BoolNode>& nodes) {
  BoolNode n;
  switch (f->kind) {
    case FKind::Prop:
    case FKind::Loc:
      n.k = BoolNode::Atom;
      n.atom = atoms.intern(f);
      break;
    case FKind::False_:
      n.k = BoolNode::False_;
      break;
    case FKind::Not:
      n.k = BoolNode::Not;
      n.a = build(f->lhs, atoms, nodes);
      break;
    case FKind::And:
      n.k = BoolNode::And;
      n.a = build(f->lhs, atoms, nodes);
      n.b = build(f->rhs, atoms, nodes);
      break;
    default:
      // desugar() ran first; only core constructors remain
      n.k = BoolNode::False_;
      break;
  }
  nodes.push_back(n);
  return static_cast<int>(nodes.size()) - 1;
}

bool eval(const std::vector<BoolNode>& nodes, int i, std::uint32_t assignment) {
  const BoolNode& n = nodes[i];
  switch (n.k) {
    case BoolNode::Atom: return (assignment >> n.atom) & 1u;
    case BoolNode::False_: return false;
    case BoolNode::Not: return !eval(nodes, n.a, assignment);
    case BoolNode::And: return eval(nodes, n.a, assignment) && eval(nodes, n.b, assignment);
  }
  return false;
}

}  // namespace

bool is_tautology(const FormulaPtr& f, int max_atoms) {
  AtomTable atoms;
  std::vector<BoolNode> nodes;
  int root = build(desugar(f), atoms, nodes);
  int n = static_cast<int>(atoms.index.size());
  if (n > max_atoms) throw AtomLimitError(n, max_atoms);
  std::uint32_t count = 1u << n;
  for (std::uint32_t a = 0; a < count; ++a)
    if (!eval(nodes, root, a)) return false;
  return true;
}

}  // namespace dstl
