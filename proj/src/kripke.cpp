#include "dstl/kripke.hpp"

#include <bit>
#include <sstream>

namespace dstl {

int KripkeModel::world_index(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(worlds.size()); ++i)
    if (worlds[i] == id) return i;
  return -1;
}

int KripkeModel::component_index(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(components.size()); ++i)
    if (components[i] == name) return i;
  return -1;
}

bool kripke_satisfies(const KripkeModel& km, int world, const FormulaPtr& f) {
  if (world < 0 || world >= static_cast<int>(km.worlds.size()))
    throw UnknownWorldError("world index out of range");
  switch (f->kind) {
    case FKind::Prop:
      return km.valuation[world].count(f->name) != 0;
    case FKind::False_:
      return false;
    case FKind::Not:
      return !kripke_satisfies(km, world, f->lhs);
    case FKind::And:
      return kripke_satisfies(km, world, f->lhs) && kripke_satisfies(km, world, f->rhs);
    case FKind::Loc: {
      int i = km.component_index(f->name);
      if (i < 0) return false;
      for (const auto& [u, v] : km.edges[i])
        if (u == world && kripke_satisfies(km, v, f->lhs)) return true;
      return false;
    }
    default:
      return kripke_satisfies(km, world, desugar(f));
  }
}

std::vector<FrameViolation> validate_frame(const KripkeModel& km) {
  std::vector<FrameViolation> out;
  int k = static_cast<int>(km.components.size());
  for (int i = 0; i < k; ++i) {
    for (const auto& [u, v] : km.edges[i]) {
      if (!km.edges[i].count({v, v})) out.push_back({1, i, i, u, v, -1});
      for (const auto& [v2, w] : km.edges[i])
        if (v2 == v && w != v) out.push_back({2, i, i, u, v, w});
      for (int j = 0; j < k; ++j) {
        if (j == i) continue;
        for (const auto& [v2, w] : km.edges[j])
          if (v2 == v) out.push_back({3, i, j, u, v, w});
      }
    }
  }
  return out;
}

KripkeModel ds_frame(const Computation& c, int cap) {
  if (c.total_states() > cap) throw CapExceededError(c.total_states(), cap);
  KripkeModel km;
  for (int i = 0; i < c.component_count(); ++i) km.components.push_back(c.component_name(i));
  km.edges.resize(c.component_count());
  DsMask full = c.full_mask();
  // world index = ds bitmask - 1 (ascending enumeration order)
  for (DsMask ds = 1; ds <= full; ++ds) {
    std::string id;
    for (DsMask rest = ds; rest;) {
      int g = std::countr_zero(rest);
      rest &= rest - 1;
      StateId s = c.state_of(g);
      if (!id.empty()) id += ',';
      id += c.component_name(s.comp) + "." + std::to_string(s.index);
    }
    km.worlds.push_back("{" + id + "}");
    std::set<std::string> val = c.labels(std::countr_zero(ds));
    for (DsMask rest = ds & (ds - 1); rest;) {
      int g = std::countr_zero(rest);
      rest &= rest - 1;
      std::set<std::string> keep;
      for (const auto& p : val)
        if (c.labels(g).count(p)) keep.insert(p);
      val.swap(keep);
    }
    km.valuation.push_back(std::move(val));
  }
  for (DsMask ds = 1; ds <= full; ++ds)
    for (DsMask rest = ds; rest;) {
      int g = std::countr_zero(rest);
      rest &= rest - 1;
      StateId s = c.state_of(g);
      DsMask target = 1ull << g;
      km.edges[s.comp].insert({static_cast<int>(ds - 1), static_cast<int>(target - 1)});
    }
  return km;
}

std::string write_kripke(const KripkeModel& km) {
  std::ostringstream out;
  for (const auto& w : km.worlds) out << "world " << w << "\n";
  for (int i = 0; i < static_cast<int>(km.components.size()); ++i)
    for (const auto& [u, v] : km.edges[i])
      out << "edge " << km.components[i] << ": " << km.worlds[u] << " -> " << km.worlds[v]
          << "\n";
  for (int w = 0; w < static_cast<int>(km.worlds.size()); ++w) {
    if (km.valuation[w].empty()) continue;
    out << "val " << km.worlds[w] << ":";
    for (const auto& p : km.valuation[w]) out << ' ' << p;
    out << "\n";
  }
  return out.str();
}

KripkeModel parse_kripke(const std::string& text) {
  KripkeModel km;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto world_of = [&](const std::string& id) {
    int w = km.world_index(id);
    if (w < 0)
      throw ModelError("line " + std::to_string(lineno) + ": unknown world " + id);
    return w;
  };
  auto comp_of = [&](const std::string& name) {
    int i = km.component_index(name);
    if (i < 0) {
      km.components.push_back(name);
      km.edges.emplace_back();
      return static_cast<int>(km.components.size()) - 1;
    }
    return i;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "world") {
      std::string id;
      ls >> id;
      km.worlds.push_back(id);
      km.valuation.emplace_back();
    } else if (word == "edge") {
      std::string comp, from, arrow, to;
      ls >> comp >> from >> arrow >> to;
      if (!comp.empty() && comp.back() == ':') comp.pop_back();
      km.edges[comp_of(comp)].insert({world_of(from), world_of(to)});
    } else if (word == "val") {
      std::string id;
      ls >> id;
      if (!id.empty() && id.back() == ':') id.pop_back();
      int w = world_of(id);
      std::string p;
      while (ls >> p) km.valuation[w].insert(p);
    } else {
      throw ModelError("line " + std::to_string(lineno) + ": unknown directive '" + word + "'");
    }
  }
  return km;
}

}  // namespace dstl
