#include <doctest.h>

#include <vector>

#include "dstl/formula.hpp"
#include "dstl/parser.hpp"
#include "dstl/tautology.hpp"

using namespace dstl;

namespace {

// tiny deterministic generator for round-trip properties
struct Gen {
  std::uint64_t s;
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % n); }

  FormulaPtr formula(int depth) {
    if (depth == 0) {
      switch (below(4)) {
        case 0: return Formula::verum();
        case 1: return Formula::falsum();
        default: return Formula::prop(std::string(1, 'p' + below(3)));
      }
    }
    switch (below(8)) {
      case 0: return Formula::lnot(formula(depth - 1));
      case 1: return Formula::land(formula(depth - 1), formula(depth - 1));
      case 2: return Formula::lor(formula(depth - 1), formula(depth - 1));
      case 3: return Formula::implies(formula(depth - 1), formula(depth - 1));
      case 4: return Formula::iff(formula(depth - 1), formula(depth - 1));
      case 5: return Formula::loc(below(2) ? "m" : "n", formula(depth - 1));
      case 6: return Formula::box(below(2) ? "m" : "n", formula(depth - 1));
      default: return formula(0);
    }
  }
};

// independent truth-table oracle: substitute atom values, fold constants
bool eval_subst(const FormulaPtr& f, const std::vector<std::pair<std::string, bool>>& atoms) {
  std::string key = render(f);
  for (const auto& [k, v] : atoms)
    if (k == key) return v;
  switch (f->kind) {
    case FKind::False_: return false;
    case FKind::Not: return !eval_subst(f->lhs, atoms);
    case FKind::And: return eval_subst(f->lhs, atoms) && eval_subst(f->rhs, atoms);
    default: return false;  // Prop/Loc are atoms, handled above
  }
}

void collect_atoms(const FormulaPtr& f, std::vector<std::string>& out) {
  if (f->kind == FKind::Prop || f->kind == FKind::Loc) {
    std::string key = render(f);
    for (const auto& k : out)
      if (k == key) return;
    out.push_back(key);
    return;
  }
  if (f->lhs) collect_atoms(f->lhs, out);
  if (f->rhs) collect_atoms(f->rhs, out);
}

bool brute_force_tautology(const FormulaPtr& f) {
  FormulaPtr core = desugar(f);
  std::vector<std::string> atoms;
  collect_atoms(core, atoms);
  REQUIRE(atoms.size() <= 6);
  for (unsigned a = 0; a < (1u << atoms.size()); ++a) {
    std::vector<std::pair<std::string, bool>> env;
    for (std::size_t i = 0; i < atoms.size(); ++i) env.emplace_back(atoms[i], (a >> i) & 1);
    if (!eval_subst(core, env)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parse builds the expected ASTs") {
  auto f = parse_dsl("<m> p & <n> q");
  REQUIRE(f->kind == FKind::And);
  CHECK(f->lhs->kind == FKind::Loc);
  CHECK(f->lhs->name == "m");
  CHECK(f->lhs->lhs->name == "p");
  CHECK(f->rhs->name == "n");

  CHECK(equal(desugar(parse_dsl("true")), Formula::lnot(Formula::falsum())));

  // [t](dep -> p) unfolds the box into ~<t>~(...)
  auto g = desugar(parse_dsl("[t](dep -> p)"));
  auto expect = desugar(
      Formula::lnot(Formula::loc("t", Formula::lnot(Formula::implies(Formula::prop("dep"),
                                                                     Formula::prop("p"))))));
  CHECK(equal(g, expect));
}

TEST_CASE("precedence and associativity") {
  CHECK(render(parse_dsl("a -> b -> c")) == "a -> b -> c");
  CHECK(equal(parse_dsl("a -> b -> c"),
              Formula::implies(Formula::prop("a"),
                               Formula::implies(Formula::prop("b"), Formula::prop("c")))));
  CHECK(equal(parse_dsl("~a & b | c"),
              Formula::lor(Formula::land(Formula::lnot(Formula::prop("a")), Formula::prop("b")),
                           Formula::prop("c"))));
  CHECK(equal(parse_dsl("<m> p & q"), Formula::land(Formula::loc("m", Formula::prop("p")),
                                                    Formula::prop("q"))));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_dsl("p &"), ParseError);
  CHECK_THROWS_AS(parse_dsl("(p"), ParseError);
  CHECK_THROWS_AS(parse_dsl("p @ q"), ParseError);
  std::set<std::string> comps{"m"};
  CHECK_THROWS_AS(parse_dsl("<n> p", &comps), ParseError);
  CHECK_NOTHROW(parse_dsl("<m> p", &comps));
}

TEST_CASE("temporal parsing") {
  auto t = parse_temporal("<m> p leads_to <n> q & <o> r");
  CHECK(t.kind == TKind::LeadsTo);
  CHECK(t.lhs->kind == FKind::Loc);
  CHECK(t.rhs->kind == FKind::And);

  auto s = desugar(parse_temporal("stable p"));
  CHECK(s.kind == TKind::Unless);
  CHECK(s.rhs->kind == FKind::False_);

  auto i = parse_temporal("init <m> true");
  CHECK(i.kind == TKind::Init);
  CHECK(i.lhs->kind == FKind::Loc);

  CHECK_THROWS_AS(parse_temporal("p leads_to q unless r"), ParseError);
}

TEST_CASE("render round-trips") {
  CHECK(render(parse_dsl("<m> p & <n> q")) == "<m> p & <n> q");
  TemporalFormula stable;
  stable.kind = TKind::Unless;
  stable.lhs = Formula::prop("p");
  stable.rhs = Formula::falsum();
  CHECK(render(stable) == "p unless false");
  CHECK(render(stable, true) == "stable p");
  CHECK(render(Formula::box("t", Formula::prop("key"))) == "[t] key");
}

TEST_CASE("round-trip property on generated formulae") {
  Gen g{42};
  for (int i = 0; i < 500; ++i) {
    auto f = g.formula(1 + g.below(3));
    auto back = parse_dsl(render(f));
    CHECK(equal(back, f));
  }
}

TEST_CASE("desugar is idempotent and core-only") {
  Gen g{7};
  for (int i = 0; i < 500; ++i) {
    auto f = g.formula(1 + g.below(3));
    auto d = desugar(f);
    CHECK(is_core(d));
    CHECK(equal(desugar(d), d));
  }
  CHECK(equal(desugar(Formula::box("m", Formula::prop("f"))),
              Formula::lnot(Formula::loc("m", Formula::lnot(Formula::prop("f"))))));
  auto st = desugar(TemporalFormula{TKind::Stable, Formula::loc("m", Formula::lnot(Formula::prop("e"))), nullptr});
  CHECK(st.kind == TKind::Unless);
  CHECK(st.rhs->kind == FKind::False_);
}

TEST_CASE("tautology oracle") {
  CHECK(is_tautology(parse_dsl("((key & dep) -> p) -> (key -> (dep -> p))")));
  CHECK(is_tautology(parse_dsl("<m> p -> <m> p")));
  CHECK_FALSE(is_tautology(parse_dsl("<m>(p & q) -> <m> p")));  // distinct opaque atoms
  CHECK_FALSE(is_tautology(parse_dsl("p | q")));
  CHECK(is_tautology(parse_dsl("p | ~p")));
  CHECK(is_tautology(parse_dsl("true")));
  CHECK_FALSE(is_tautology(parse_dsl("false")));

  // atom limit
  std::string big = "a0";
  for (int i = 1; i < 25; ++i) big += " & a" + std::to_string(i);
  CHECK_THROWS_AS(is_tautology(parse_dsl(big)), AtomLimitError);
}

TEST_CASE("tautology oracle agrees with brute force on small formulae") {
  Gen g{1234};
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    auto f = g.formula(1 + g.below(2));
    std::vector<std::string> atoms;
    collect_atoms(desugar(f), atoms);
    if (atoms.size() > 4) continue;
    ++checked;
    CHECK(is_tautology(f) == brute_force_tautology(f));
  }
  CHECK(checked > 100);
}
