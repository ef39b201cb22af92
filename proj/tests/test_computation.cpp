#include <doctest.h>

#include <bit>

#include "dstl/computation.hpp"
#include "dstl/lab.hpp"

using namespace dstl;

namespace {

// the three-component figure: m has 4 states, n 5, o 3, with a message
// from m's 2nd state into n, one from n into o, one from n into m
const char* kFigureModel =
    "component m: 4\n"
    "component n: 5\n"
    "component o: 3\n"
    "msg m.1 -> n.2\n"
    "msg n.3 -> o.2\n"
    "msg n.4 -> m.3\n";

DsMask bit(const Computation& c, const char* comp, int idx) {
  return 1ull << c.gid({c.component_index(comp), idx});
}

}  // namespace

TEST_CASE("figure model builds and closes") {
  Computation c = load_model(kFigureModel);
  CHECK(c.component_count() == 3);
  CHECK(c.total_states() == 12);

  auto g = [&](const char* comp, int idx) { return c.gid({c.component_index(comp), idx}); };
  CHECK(c.in_reach_star(g("m", 0), g("m", 1)));
  CHECK(c.in_reach_star(g("m", 0), g("n", 2)));
  CHECK(c.in_reach_star(g("m", 1), g("n", 2)));
  CHECK(c.in_reach_star(g("n", 1), g("m", 3)));
  for (int s = 0; s < c.total_states(); ++s) CHECK(c.in_reach_star(s, s));

  // o never sends, so nothing in o reaches m or n
  CHECK_FALSE(c.in_reach_star(g("o", 0), g("m", 3)));
  CHECK(c.concurrent({c.component_index("m"), 2}, {c.component_index("n"), 2}));
  CHECK_FALSE(c.concurrent({c.component_index("m"), 1}, {c.component_index("n"), 2}));
}

TEST_CASE("smallest model") {
  Computation c = load_model("component m: 1\n");
  CHECK(c.total_states() == 1);
  CHECK(c.initial_ds() == 1);
  CHECK(c.leq(1, 1));
  CHECK(c.leq_c(1, 1));
}

TEST_CASE("build rejects malformed models") {
  CHECK_THROWS_AS(load_model("component m: 0\n"), ModelError);
  CHECK_THROWS_AS(load_model("component m: 2\nmsg m.0 -> m.1\n"), ModelError);
  CHECK_THROWS_AS(load_model("component m: 2\ncomponent n: 2\nmsg m.0 -> q.1\n"), ModelError);
  CHECK_THROWS_AS(load_model("component m: 2\nlabels m.0: p\nlabels m.0: q\n"), ModelError);
  CHECK_THROWS_AS(load_model("component m: 2\ncomponent m: 3\n"), ModelError);
  // cycle: m.1 -> n.1 and n.0 -> m.0 gives m.0 < m.1 -> n.1 and n.0 < n.1, n.0 -> m.0
  CHECK_THROWS_AS(
      load_model("component m: 2\ncomponent n: 2\nmsg m.1 -> n.1\nmsg n.1 -> m.0\n"),
      ModelError);
}

TEST_CASE("no cross pairs without messages") {
  Computation c = load_model("component m: 3\ncomponent n: 3\n");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(c.concurrent({0, i}, {1, j}));
}

TEST_CASE("leq examples") {
  Computation c = load_model(kFigureModel);
  DsMask a = bit(c, "m", 0) | bit(c, "n", 0);
  CHECK(c.leq(a, a));  // reflexive
  CHECK(c.leq(a, bit(c, "m", 1) | bit(c, "n", 2)));
  // backward quantifier: every member of the right side must be reached
  CHECK_FALSE(c.leq(bit(c, "m", 3), bit(c, "m", 3) | bit(c, "o", 0)));
  // leq_c is one step at most
  CHECK(c.leq_c(bit(c, "m", 0), bit(c, "m", 1)));
  CHECK_FALSE(c.leq_c(bit(c, "m", 0), bit(c, "m", 2)));
  CHECK(c.leq_c(bit(c, "m", 1), bit(c, "n", 2)));  // message step
}

TEST_CASE("leq is a preorder and leq_c implies leq (exhaustive small model)") {
  Computation c = load_model(
      "component m: 2\ncomponent n: 2\nmsg m.0 -> n.1\n");
  DsMask full = c.full_mask();
  for (DsMask a = 1; a <= full; ++a) {
    CHECK(c.leq(a, a));
    for (DsMask b = 1; b <= full; ++b) {
      if (c.leq_c(a, b)) CHECK(c.leq(a, b));
      for (DsMask d = 1; d <= full; ++d)
        if (c.leq(a, b) && c.leq(b, d)) CHECK(c.leq(a, d));
    }
  }
}

TEST_CASE("leq agrees with a direct quantifier loop on random models") {
  GenParams p;
  p.seed = 99;
  for (int t = 0; t < 20; ++t) {
    Computation c = random_computation(p, t);
    if (c.total_states() > 10) continue;
    DsMask full = c.full_mask();
    for (DsMask a = 1; a <= full; a += 7)
      for (DsMask b = 1; b <= full; b += 5) {
        bool fwd = true, bwd = true;
        for (int s = 0; s < c.total_states(); ++s) {
          if ((a >> s) & 1) {
            bool any = false;
            for (int u = 0; u < c.total_states(); ++u)
              if (((b >> u) & 1) && c.in_reach_star(s, u)) any = true;
            fwd = fwd && any;
          }
          if ((b >> s) & 1) {
            bool any = false;
            for (int u = 0; u < c.total_states(); ++u)
              if (((a >> u) & 1) && c.in_reach_star(u, s)) any = true;
            bwd = bwd && any;
          }
        }
        CHECK(c.leq(a, b) == (fwd && bwd));
      }
  }
}

TEST_CASE("R restricted to one component is the successor chain") {
  Computation c = load_model(kFigureModel);
  for (int i = 0; i < c.component_count(); ++i)
    for (int j = 0; j < c.state_count(i); ++j) {
      DsMask local = c.succ(c.gid({i, j})) & c.comp_mask(i);
      if (j + 1 < c.state_count(i))
        CHECK(local == (1ull << c.gid({i, j + 1})));
      else
        CHECK(local == 0);
    }
}

TEST_CASE("initial ds has one state per component") {
  Computation c = load_model(kFigureModel);
  DsMask init = c.initial_ds();
  CHECK(std::popcount(init) == c.component_count());
  for (int i = 0; i < c.component_count(); ++i)
    CHECK(std::popcount(init & c.comp_mask(i)) == 1);
}

TEST_CASE("enumeration yields every nonempty subset once") {
  for (int n = 1; n <= 10; ++n) {
    std::string text = "component m: " + std::to_string(n) + "\n";
    Computation c = load_model(text);
    DsEnumerator e(c);
    std::uint64_t count = 0, prev = 0;
    while (!e.done()) {
      DsMask ds = e.next();
      CHECK(ds > prev);
      prev = ds;
      ++count;
    }
    CHECK(count == (1ull << n) - 1);
  }
}

TEST_CASE("enumeration cap") {
  Computation c = load_model("component m: 30\n");
  CHECK_THROWS_AS(DsEnumerator(c, 24), CapExceededError);
  Computation small = load_model("component m: 2\n");
  CHECK_NOTHROW(DsEnumerator(small, 24));
}

TEST_CASE("model round-trips through write_model") {
  Computation c = load_model(
      "component m: 2\nlabels m.0: p q\ncomponent n: 1\nlabels n.0: r\nmsg m.0 -> n.0\n");
  Computation c2 = load_model(write_model(c));
  CHECK(c2.total_states() == c.total_states());
  CHECK(c2.labels(0) == c.labels(0));
  CHECK(c2.messages().size() == 1);
}
