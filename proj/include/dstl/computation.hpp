#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dstl {

using DsMask = std::uint64_t;  // nonempty set of states, component-major bit numbering

struct StateId {
  int comp = 0;
  int index = 0;
  friend bool operator==(const StateId& a, const StateId& b) {
    return a.comp == b.comp && a.index == b.index;
  }
};

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceededError : std::runtime_error {
  explicit CapExceededError(int states, int cap)
      : std::runtime_error("model has " + std::to_string(states) +
                           " states; exhaustive checking is capped at " + std::to_string(cap)) {}
};

// Declaration as read from a model file; build() validates it.
struct ComputationDecl {
  struct Comp {
    std::string name;
    int count = 0;
    std::vector<std::set<std::string>> labels;  // sized to count by build()
  };
  std::vector<Comp> comps;
  struct Msg {
    std::string src_comp;
    int src_index;
    std::string dst_comp;
    int dst_index;
  };
  std::vector<Msg> msgs;
};

// A finite space-time diagram.  Immutable after build(); the causal
// closures are precomputed as per-state bitmasks.
class Computation {
 public:
  int component_count() const { return static_cast<int>(comp_names_.size()); }
  const std::string& component_name(int c) const { return comp_names_[c]; }
  int component_index(const std::string& name) const;  // -1 when absent
  std::set<std::string> component_set() const;

  int state_count(int c) const { return counts_[c]; }
  int total_states() const { return n_; }
  int gid(StateId s) const { return offsets_[s.comp] + s.index; }
  StateId state_of(int g) const;
  const std::set<std::string>& labels(int g) const { return labels_[g]; }

  DsMask full_mask() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }
  DsMask comp_mask(int c) const { return comp_mask_[c]; }
  DsMask label_mask(const std::string& prop) const;
  DsMask terminal_mask() const { return terminal_; }

  // R / R= / R* as successor masks per state.
  DsMask succ(int g) const { return succ_[g]; }
  DsMask succ_eq(int g) const { return succ_[g] | (1ull << g); }
  DsMask reach_star(int g) const { return reach_[g]; }
  DsMask reach_star_rev(int g) const { return reach_rev_[g]; }

  bool in_reach_star(int from, int to) const { return (reach_[from] >> to) & 1; }
  bool concurrent(StateId a, StateId b) const;

  // Orders on distributed states (both sides quantified, per the model
  // definition): every member of a reaches into b and every member of b
  // is reached from a.
  bool leq(DsMask a, DsMask b) const;    // over R*
  bool leq_c(DsMask a, DsMask b) const;  // over R=

  DsMask initial_ds() const;

  std::string ds_to_string(DsMask ds) const;  // "m.0 n.2"

  const std::vector<ComputationDecl::Msg>& messages() const { return msgs_; }

  friend Computation build(const ComputationDecl& decl);

 private:
  std::vector<std::string> comp_names_;
  std::vector<int> counts_;
  std::vector<int> offsets_;
  int n_ = 0;
  std::vector<std::set<std::string>> labels_;
  std::vector<DsMask> comp_mask_;
  std::vector<DsMask> succ_;       // R
  std::vector<DsMask> reach_;      // R*
  std::vector<DsMask> reach_rev_;  // {x : (x, s) in R*}
  DsMask terminal_ = 0;
  std::vector<ComputationDecl::Msg> msgs_;
};

Computation build(const ComputationDecl& decl);

// Nonempty subsets of S in ascending bitmask order.
class DsEnumerator {
 public:
  DsEnumerator(const Computation& c, int cap = 24);
  bool done() const { return next_ > last_; }
  DsMask next() { return next_++; }

 private:
  DsMask next_ = 1;
  DsMask last_;
};

// Model file format (line oriented, '#' comments):
//   component <name>: <state-count>
//   labels <name>.<index>: p q r
//   msg <name>.<index> -> <name>.<index>
ComputationDecl parse_model(const std::string& text);
Computation load_model(const std::string& text);
std::string write_model(const Computation& c);

}  // namespace dstl
