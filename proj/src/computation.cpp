#include "dstl/computation.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace dstl {

int Computation::component_index(const std::string& name) const {
  for (int i = 0; i < component_count(); ++i)
    if (comp_names_[i] == name) return i;
  return -1;
}

std::set<std::string> Computation::component_set() const {
  return {comp_names_.begin(), comp_names_.end()};
}

StateId Computation::state_of(int g) const {
  for (int c = component_count() - 1; c >= 0; --c)
    if (g >= offsets_[c]) return {c, g - offsets_[c]};
  return {0, 0};
}

DsMask Computation::label_mask(const std::string& prop) const {
  DsMask m = 0;
  for (int g = 0; g < n_; ++g)
    if (labels_[g].count(prop)) m |= 1ull << g;
  return m;
}

bool Computation::concurrent(StateId a, StateId b) const {
  int ga = gid(a), gb = gid(b);
  return !in_reach_star(ga, gb) && !in_reach_star(gb, ga);
}

bool Computation::leq(DsMask a, DsMask b) const {
  DsMask covered = 0;
  for (DsMask rest = a; rest;) {
    int g = std::countr_zero(rest);
    rest &= rest - 1;
    if (!(reach_[g] & b)) return false;
    covered |= reach_[g];
  }
  return (b & ~covered) == 0;
}

bool Computation::leq_c(DsMask a, DsMask b) const {
  DsMask covered = 0;
  for (DsMask rest = a; rest;) {
    int g = std::countr_zero(rest);
    rest &= rest - 1;
    DsMask se = succ_[g] | (1ull << g);
    if (!(se & b)) return false;
    covered |= se;
  }
  return (b & ~covered) == 0;
}

DsMask Computation::initial_ds() const {
  DsMask m = 0;
  for (int c = 0; c < component_count(); ++c) m |= 1ull << offsets_[c];
  return m;
}

std::string Computation::ds_to_string(DsMask ds) const {
  std::string out;
  for (DsMask rest = ds; rest;) {
    int g = std::countr_zero(rest);
    rest &= rest - 1;
    StateId s = state_of(g);
    if (!out.empty()) out += ' ';
    out += comp_names_[s.comp] + "." + std::to_string(s.index);
  }
  return out;
}

Computation build(const ComputationDecl& decl) {
  Computation c;
  if (decl.comps.empty()) throw ModelError("model declares no components");
  int offset = 0;
  for (const auto& comp : decl.comps) {
    if (comp.name.empty()) throw ModelError("component with empty name");
    if (c.component_index(comp.name) >= 0)
      throw ModelError("component '" + comp.name + "' declared twice");
    if (comp.count < 1)
      throw ModelError("component '" + comp.name + "' has no states");
    c.comp_names_.push_back(comp.name);
    c.counts_.push_back(comp.count);
    c.offsets_.push_back(offset);
    offset += comp.count;
  }
  c.n_ = offset;
  if (c.n_ > 64) throw ModelError("more than 64 states are not supported");

  c.labels_.assign(c.n_, {});
  for (int i = 0; i < static_cast<int>(decl.comps.size()); ++i) {
    const auto& comp = decl.comps[i];
    for (int j = 0; j < static_cast<int>(comp.labels.size()); ++j) {
      if (j >= comp.count)
        throw ModelError("label index out of range in component '" + comp.name + "'");
      c.labels_[c.offsets_[i] + j] = comp.labels[j];
    }
  }

  c.comp_mask_.resize(c.component_count());
  for (int i = 0; i < c.component_count(); ++i) {
    DsMask m = 0;
    for (int j = 0; j < c.counts_[i]; ++j) m |= 1ull << (c.offsets_[i] + j);
    c.comp_mask_[i] = m;
  }

  // R: local succession plus communications.
  c.succ_.assign(c.n_, 0);
  for (int i = 0; i < c.component_count(); ++i)
    for (int j = 0; j + 1 < c.counts_[i]; ++j)
      c.succ_[c.offsets_[i] + j] |= 1ull << (c.offsets_[i] + j + 1);
  for (const auto& m : decl.msgs) {
    int sc = c.component_index(m.src_comp);
    int dc = c.component_index(m.dst_comp);
    if (sc < 0) throw ModelError("message from undeclared component '" + m.src_comp + "'");
    if (dc < 0) throw ModelError("message to undeclared component '" + m.dst_comp + "'");
    if (sc == dc)
      throw ModelError("message within component '" + m.src_comp +
                       "'; local order comes from the state sequence");
    if (m.src_index < 0 || m.src_index >= c.counts_[sc] || m.dst_index < 0 ||
        m.dst_index >= c.counts_[dc])
      throw ModelError("message endpoint out of range");
    c.succ_[c.gid({sc, m.src_index})] |= 1ull << c.gid({dc, m.dst_index});
    c.msgs_.push_back(m);
  }

  // R* by iterating mask propagation to a fixpoint, then check that the
  // closure is antisymmetric (the diagram is a partial order).
  c.reach_.resize(c.n_);
  for (int g = 0; g < c.n_; ++g) c.reach_[g] = c.succ_[g] | (1ull << g);
  for (bool changed = true; changed;) {
    changed = false;
    for (int g = 0; g < c.n_; ++g) {
      DsMask acc = c.reach_[g];
      for (DsMask rest = c.reach_[g]; rest;) {
        int h = std::countr_zero(rest);
        rest &= rest - 1;
        acc |= c.reach_[h];
      }
      if (acc != c.reach_[g]) {
        c.reach_[g] = acc;
        changed = true;
      }
    }
  }
  for (int g = 0; g < c.n_; ++g)
    for (int h = g + 1; h < c.n_; ++h)
      if (c.in_reach_star(g, h) && c.in_reach_star(h, g)) {
        StateId a = c.state_of(g), b = c.state_of(h);
        throw ModelError("causal cycle through " + c.comp_names_[a.comp] + "." +
                         std::to_string(a.index) + " and " + c.comp_names_[b.comp] + "." +
                         std::to_string(b.index));
      }

  c.reach_rev_.assign(c.n_, 0);
  for (int g = 0; g < c.n_; ++g)
    for (DsMask rest = c.reach_[g]; rest;) {
      int h = std::countr_zero(rest);
      rest &= rest - 1;
      c.reach_rev_[h] |= 1ull << g;
    }

  for (int g = 0; g < c.n_; ++g)
    if (!c.succ_[g]) c.terminal_ |= 1ull << g;

  return c;
}

DsEnumerator::DsEnumerator(const Computation& c, int cap) {
  if (c.total_states() > cap) throw CapExceededError(c.total_states(), cap);
  last_ = c.full_mask();
}

namespace {

void fail(int lineno, const std::string& msg) {
  throw ModelError("line " + std::to_string(lineno) + ": " + msg);
}

// "name.index" -> pair
std::pair<std::string, int> parse_state_ref(const std::string& tok, int lineno) {
  auto dot = tok.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 >= tok.size())
    fail(lineno, "expected <component>.<index>, got '" + tok + "'");
  int idx;
  try {
    std::size_t used;
    idx = std::stoi(tok.substr(dot + 1), &used);
    if (used != tok.size() - dot - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    fail(lineno, "bad state index in '" + tok + "'");
    return {};
  }
  return {tok.substr(0, dot), idx};
}

}  // namespace

ComputationDecl parse_model(const std::string& text) {
  ComputationDecl decl;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::set<std::pair<std::string, int>> labelled;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "component") {
      std::string rest;
      std::getline(ls, rest);
      auto colon = rest.find(':');
      if (colon == std::string::npos) fail(lineno, "expected 'component <name>: <count>'");
      std::istringstream name_s(rest.substr(0, colon)), count_s(rest.substr(colon + 1));
      ComputationDecl::Comp comp;
      int count;
      if (!(name_s >> comp.name) || !(count_s >> count))
        fail(lineno, "expected 'component <name>: <count>'");
      comp.count = count;
      comp.labels.resize(std::max(count, 0));
      decl.comps.push_back(std::move(comp));
    } else if (word == "labels") {
      std::string ref;
      if (!(ls >> ref)) fail(lineno, "expected 'labels <component>.<index>: p q'");
      if (!ref.empty() && ref.back() == ':') ref.pop_back();
      auto [name, idx] = parse_state_ref(ref, lineno);
      auto* comp = [&]() -> ComputationDecl::Comp* {
        for (auto& cd : decl.comps)
          if (cd.name == name) return &cd;
        return nullptr;
      }();
      if (!comp) fail(lineno, "labels for undeclared component '" + name + "'");
      if (idx < 0 || idx >= comp->count) fail(lineno, "state index out of range in labels");
      if (!labelled.insert({name, idx}).second)
        fail(lineno, "duplicate labels for state " + name + "." + std::to_string(idx));
      std::string p;
      while (ls >> p) {
        if (p == ":") continue;
        if (!p.empty() && p.front() == ':') p.erase(p.begin());
        if (!p.empty()) comp->labels[idx].insert(p);
      }
    } else if (word == "msg") {
      std::string src, arrow, dst;
      if (!(ls >> src >> arrow >> dst) || arrow != "->")
        fail(lineno, "expected 'msg <c>.<i> -> <c>.<i>'");
      auto [sc, si] = parse_state_ref(src, lineno);
      auto [tc, ti] = parse_state_ref(dst, lineno);
      decl.msgs.push_back({sc, si, tc, ti});
    } else {
      fail(lineno, "unknown directive '" + word + "'");
    }
  }
  return decl;
}

Computation load_model(const std::string& text) { return build(parse_model(text)); }

std::string write_model(const Computation& c) {
  std::ostringstream out;
  for (int i = 0; i < c.component_count(); ++i)
    out << "component " << c.component_name(i) << ": " << c.state_count(i) << "\n";
  for (int i = 0; i < c.component_count(); ++i)
    for (int j = 0; j < c.state_count(i); ++j) {
      const auto& ls = c.labels(c.gid({i, j}));
      if (ls.empty()) continue;
      out << "labels " << c.component_name(i) << "." << j << ":";
      for (const auto& p : ls) out << ' ' << p;
      out << "\n";
    }
  for (const auto& m : c.messages())
    out << "msg " << m.src_comp << "." << m.src_index << " -> " << m.dst_comp << "."
        << m.dst_index << "\n";
  return out.str();
}

}  // namespace dstl
