#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dstl/computation.hpp"
#include "dstl/formula.hpp"

namespace dstl {

// Explicit Kripke model with one reachability relation per component.
struct KripkeModel {
  std::vector<std::string> components;
  std::vector<std::string> worlds;
  // edges[i] holds (from, to) world indices for component i
  std::vector<std::set<std::pair<int, int>>> edges;
  std::vector<std::set<std::string>> valuation;

  int world_index(const std::string& id) const;
  int component_index(const std::string& name) const;
};

struct UnknownWorldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool kripke_satisfies(const KripkeModel& km, int world, const FormulaPtr& f);

// Frame conditions on the reachability relations:
//   rc1  (u,v) in R_i  ->  (v,v) in R_i
//   rc2  (u,v) in R_i  ->  (v,w) in R_i  ->  v = w
//   rc3  (u,v) in R_i  ->  no (v,w) in R_j for j != i
struct FrameViolation {
  int condition;  // 1..3
  int comp_i;
  int comp_j;  // = comp_i except for rc3
  int u, v, w;  // w = -1 for rc1
};

std::vector<FrameViolation> validate_frame(const KripkeModel& km);

// The frame of distributed states of a computation: worlds are the
// nonempty subsets of S, (ds, ds') in R_i iff ds' = {s} with s in
// S_i & ds.  Exponential: testing oracle only, capped at 12 states.
KripkeModel ds_frame(const Computation& c, int cap = 12);

// Test-fixture serialization:
//   world <id> / edge <comp>: <id> -> <id> / val <id>: p q
std::string write_kripke(const KripkeModel& km);
KripkeModel parse_kripke(const std::string& text);

}  // namespace dstl
