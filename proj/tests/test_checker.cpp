#include <doctest.h>

#include "dstl/checker.hpp"
#include "dstl/lab.hpp"
#include "dstl/parser.hpp"

using namespace dstl;

namespace {

const char* kTemporalExamples =
    "component m: 6\n"
    "labels m.0: p\nlabels m.1: q\nlabels m.2: r\nlabels m.3: u z\n"
    "labels m.4: z\nlabels m.5: z\n"
    "component n: 6\n"
    "labels n.0: p t\nlabels n.1: u\nlabels n.2: v\nlabels n.3: p u\n"
    "labels n.4: w t\nlabels n.5: t\n"
    "msg m.1 -> n.2\nmsg n.4 -> m.3\n";

const char* kUnlessExamples =
    "component m: 6\n"
    "labels m.0: p\nlabels m.1: q z\nlabels m.2: r z\nlabels m.3: u z\n"
    "labels m.4: z\nlabels m.5: z\n"
    "component n: 6\n"
    "labels n.0: p t\nlabels n.1: u p\nlabels n.2: v p\nlabels n.3: p u\n"
    "labels n.4: w t\nlabels n.5: t\n"
    "msg m.1 -> n.2\nmsg n.4 -> m.3\n";

const char* kStableModel =
    "component m: 6\n"
    "labels m.0: p\nlabels m.1: p\nlabels m.2: r z\nlabels m.3: u z\n"
    "labels m.4: z\nlabels m.5: z\n"
    "component n: 6\n"
    "labels n.0: p t\nlabels n.1: u p\nlabels n.2: v p\nlabels n.3: p u\n"
    "labels n.4: p w t\nlabels n.5: p t\n"
    "msg m.1 -> n.2\nmsg n.4 -> m.3\n";

const char* kSeModel =
    "component m: 6\n"
    "labels m.0: p\nlabels m.1: p\nlabels m.2: p r z\nlabels m.3: p u z\n"
    "labels m.4: p z\nlabels m.5: p z\n"
    "component n: 6\n"
    "labels n.0: p t\nlabels n.1: u\nlabels n.2: v p\nlabels n.3: u\n"
    "labels n.4: w t\nlabels n.5: p t\n"
    "msg m.1 -> n.2\nmsg n.4 -> m.3\n";

bool holds(const Computation& c, const char* text) {
  return check(c, parse_temporal(text)).holds;
}

}  // namespace

TEST_CASE("temporal operator example verdicts") {
  Computation c = load_model(kTemporalExamples);
  CHECK(holds(c, "<n>u leads_to <m>u"));
  CHECK(holds(c, "<m>p & <n>v leads_to <m>z & <n>t"));
  CHECK(holds(c, "<m>q leads_to <n>v"));
  CHECK(holds(c, "<m>p & <n>v leads_to_c <m>q"));
  CHECK(holds(c, "<n>w because <n>p & <n>u"));
  CHECK(holds(c, "<n>w because <n>(p & u)"));
}

TEST_CASE("unless example verdicts") {
  Computation c = load_model(kUnlessExamples);
  CHECK(holds(c, "<n>p unless <n>t"));
}

TEST_CASE("witness pairs for the pictured leads_to examples") {
  Computation c = load_model(kTemporalExamples);
  auto bit = [&](const char* comp, int idx) {
    return DsMask{1} << c.gid({c.component_index(comp), idx});
  };
  // {last z-run state of m, (p,u)-state of n} is followed by the
  // rectangled pair under the causal order
  CHECK(c.leq(bit("m", 4) | bit("n", 3), bit("m", 3) | bit("m", 5)));
  // the closely witness: p-state of m with the q-state, v-state kept
  CHECK(c.leq_c(bit("m", 0) | bit("n", 2), bit("m", 1) | bit("n", 2)));
}

TEST_CASE("the unless side condition bites on the growing-chain model") {
  Computation c = load_model(counterexample_corpus()[0].model);
  auto v = check(c, parse_temporal("<n>p unless <n>q"));
  CHECK_FALSE(v.holds);
  REQUIRE(v.failing_ds.has_value());
  // the stuck obligation is the first p-state of n
  CHECK(*v.failing_ds == (1ull << c.gid({c.component_index("n"), 0})));
}

TEST_CASE("stable example: stable p holds, p is not invariant") {
  Computation c = load_model(kStableModel);
  CHECK(holds(c, "init p"));
  CHECK(holds(c, "stable p"));
  CHECK_FALSE(check(c, parse_temporal("p")).holds);
}

TEST_CASE("SE example: init and stable give the box") {
  Computation c = load_model(kSeModel);
  CHECK(holds(c, "init <m>p"));
  CHECK(holds(c, "stable <m>p"));
  CHECK(holds(c, "[m]p"));
}

TEST_CASE("cancellation model: premises hold, conclusion fails") {
  Computation c = load_model(counterexample_corpus()[1].model);
  CHECK(holds(c, "<m>p unless <m>p & <n>q"));
  CHECK(holds(c, "<m>p & <n>q unless <m>r & <n>s"));
  CHECK_FALSE(holds(c, "<m>p | (<m>p & <n>q) unless <m>r & <n>s"));
}

TEST_CASE("reflexive introduction forms hold on random models") {
  GenParams p;
  p.seed = 3;
  for (int t = 0; t < 15; ++t) {
    Computation c = random_computation(p, t);
    std::string m = c.component_name(0);
    CHECK(holds(c, ("<" + m + ">a leads_to <" + m + ">a").c_str()));
    CHECK(holds(c, ("<" + m + ">a leads_to_c <" + m + ">a").c_str()));
    CHECK(holds(c, ("<" + m + ">a & b unless <" + m + ">a & b").c_str()));
    CHECK(holds(c, ("init <" + m + ">true").c_str()));
  }
}

TEST_CASE("a leads_to obligation past the end of the trace is false with a witness") {
  Computation c = load_model("component m: 2\nlabels m.0: q\nlabels m.1: p\n");
  auto v = check(c, parse_temporal("p leads_to q"));
  CHECK_FALSE(v.holds);
  REQUIRE(v.failing_ds.has_value());
  CHECK(*v.failing_ds == 2);  // the p-state singleton
}

TEST_CASE("unless discharges vacuously only on wholly terminal states") {
  // p on the last state of m: nothing follows inside the fragment
  Computation c = load_model("component m: 2\nlabels m.1: p\n");
  CHECK(holds(c, "stable p"));
  // but with a successor that drops p it fails
  Computation c2 = load_model("component m: 3\nlabels m.1: p\n");
  CHECK_FALSE(holds(c2, "stable p"));
}

TEST_CASE("check equals naive_check on fixtures and random instances") {
  std::vector<std::string> fixtures = {kTemporalExamples, kUnlessExamples, kStableModel, kSeModel};
  for (const auto& f : counterexample_corpus()) fixtures.push_back(f.model);
  const char* formulas[] = {
      "<n>u leads_to <m>u",  "<m>q leads_to <n>v",      "p leads_to q | z",
      "<n>w because <n>u",   "q because p",             "<m>p leads_to_c <m>q",
      "<n>v because_c <n>u", "<n>p unless <n>t",        "p unless q | t",
      "stable p",            "init <m>p",               "[m](p | q)",
      "p | q",               "<m>true & <n>true leads_to <m>z & <n>t",
  };
  for (const auto& model : fixtures) {
    Computation c = load_model(model);
    if (c.component_count() < 2) continue;
    for (const char* text : formulas) {
      auto a = check(c, parse_temporal(text));
      auto b = naive_check(c, parse_temporal(text), 12);
      REQUIRE_MESSAGE(a.holds == b.holds, "fixture disagrees on ", text);
    }
  }

  GenParams p;
  p.comp_min = 1;
  p.states_max = 3;
  p.seed = 2024;
  for (int t = 0; t < 60; ++t) {
    Computation c = random_computation(p, t);
    if (c.total_states() > 6) continue;
    std::string m = c.component_name(0);
    const std::string texts[] = {
        "a leads_to b",
        "<" + m + ">a leads_to <" + m + ">b",
        "<" + m + ">a because b",
        "<" + m + ">(a & b) unless <" + m + ">c",
        "a unless b",
        "stable <" + m + ">a",
        "init a",
        "<" + m + ">a leads_to_c <" + m + ">(b | c)",
        "b because_c <" + m + ">a",
    };
    for (const auto& text : texts) {
      auto x = check(c, parse_temporal(text));
      auto y = naive_check(c, parse_temporal(text), 12);
      REQUIRE_MESSAGE(x.holds == y.holds, "random model disagrees on ", text);
    }
  }
}

TEST_CASE("closely verdicts imply the plain ones") {
  GenParams p;
  p.seed = 77;
  for (int t = 0; t < 30; ++t) {
    Computation c = random_computation(p, t);
    std::string m = c.component_name(0);
    std::string n = c.component_name(c.component_count() - 1);
    const std::string pairs[][2] = {
        {"<" + m + ">a leads_to_c <" + n + ">b", "<" + m + ">a leads_to <" + n + ">b"},
        {"<" + m + ">a because_c <" + n + ">b", "<" + m + ">a because <" + n + ">b"},
    };
    for (const auto& pr : pairs)
      if (check(c, parse_temporal(pr[0])).holds) CHECK(check(c, parse_temporal(pr[1])).holds);
  }
}

TEST_CASE("check_spec reports in document order and aggregates") {
  Computation c = load_model(kTemporalExamples);
  auto doc = parse_spec("# a comment\nw -> t\n<n>u leads_to <m>u\n\n<n>(w -> t)\n",
                        c.component_set());
  REQUIRE(doc.size() == 3);
  SpecReport r = check_spec(c, doc);
  CHECK(r.rows[0].verdict.holds);
  CHECK(r.rows[1].verdict.holds);
  CHECK_FALSE(r.rows[2].verdict.holds);
  CHECK_FALSE(r.all_hold);

  SpecReport empty = check_spec(c, {});
  CHECK(empty.all_hold);

  std::string json = report_json(c, r);
  CHECK(json.find("dstl-report/1") != std::string::npos);
  CHECK(json.find("failing_ds") != std::string::npos);
}

TEST_CASE("spec parsing validates components") {
  Computation c = load_model(kTemporalExamples);
  CHECK_THROWS_AS(parse_spec("<zz>p leads_to p\n", c.component_set()), ParseError);
}

TEST_CASE("cap checks") {
  Computation c = load_model("component m: 30\n");
  CHECK_THROWS_AS(check(c, parse_temporal("p leads_to q"), 24), CapExceededError);
}
