#include "dstl/checker.hpp"

#include <bit>
#include <sstream>

#include "dstl/parser.hpp"

#include <json.hpp>

namespace dstl {

namespace {

DsMask union_reach(const Computation& c, DsMask ds) {
  DsMask m = 0;
  for (DsMask rest = ds; rest;) {
    int g = std::countr_zero(rest);
    rest &= rest - 1;
    m |= c.reach_star(g);
  }
  return m;
}

DsMask union_reach_rev(const Computation& c, DsMask ds) {
  DsMask m = 0;
  for (DsMask rest = ds; rest;) {
    int g = std::countr_zero(rest);
    rest &= rest - 1;
    m |= c.reach_star_rev(g);
  }
  return m;
}

DsMask union_succ_eq(const Computation& c, DsMask ds) {
  DsMask m = 0;
  for (DsMask rest = ds; rest;) {
    int g = std::countr_zero(rest);
    rest &= rest - 1;
    m |= c.succ_eq(g);
  }
  return m;
}

DsMask union_pred_eq(const Computation& c, DsMask ds) {
  DsMask m = ds;
  for (int g = 0; g < c.total_states(); ++g)
    if (c.succ(g) & ds) m |= 1ull << g;
  return m;
}

enum class Dir { Fwd, Bwd };

// exists ds' related to ds (forward: ds <= ds', backward: ds' <= ds)
// with ds' satisfying G.
bool exists_related(const Computation& c, DsMask ds, const CompiledFormula& g, bool closely,
                    Dir dir) {
  if (g.union_monotone()) {
    DsMask big;
    if (dir == Dir::Fwd)
      big = closely ? union_succ_eq(c, ds) : union_reach(c, ds);
    else
      big = closely ? union_pred_eq(c, ds) : union_reach_rev(c, ds);
    return g.eval(big);
  }
  DsMask full = c.full_mask();
  for (DsMask d2 = 1; d2 <= full; ++d2) {
    bool rel = dir == Dir::Fwd ? (closely ? c.leq_c(ds, d2) : c.leq(ds, d2))
                               : (closely ? c.leq_c(d2, ds) : c.leq(d2, ds));
    if (rel && g.eval(d2)) return true;
  }
  return false;
}

std::optional<DsMask> smallest_related_witness(const Computation& c, DsMask ds,
                                               const CompiledFormula& g, bool closely, Dir dir) {
  DsMask full = c.full_mask();
  for (DsMask d2 = 1; d2 <= full; ++d2) {
    bool rel = dir == Dir::Fwd ? (closely ? c.leq_c(ds, d2) : c.leq(ds, d2))
                               : (closely ? c.leq_c(d2, ds) : c.leq(d2, ds));
    if (rel && g.eval(d2)) return d2;
  }
  return std::nullopt;
}

// unless obligation at one ds (premise already holds there)
bool unless_discharged(const Computation& c, DsMask ds, const CompiledFormula& f,
                       const CompiledFormula& f2) {
  if ((ds & ~c.terminal_mask()) == 0) return true;  // end of the observed fragment
  DsMask cc = union_succ_eq(c, ds);
  // consequence disjunct: any ds' >=_c ds with ds' |= F'
  if (f2.union_monotone()) {
    if (f2.eval(cc)) return true;
  } else {
    DsMask full = c.full_mask();
    for (DsMask d2 = 1; d2 <= full; ++d2)
      if (c.leq_c(ds, d2) && f2.eval(d2)) return true;
  }
  // persistence disjunct: ds' >=_c ds, ds' not a superset, ds' |= F
  if (f.union_monotone()) {
    for (DsMask rest = ds & ~c.terminal_mask(); rest;) {
      int s = std::countr_zero(rest);
      rest &= rest - 1;
      if (f.eval(cc & ~(1ull << s))) return true;
    }
    return false;
  }
  DsMask full = c.full_mask();
  for (DsMask d2 = 1; d2 <= full; ++d2)
    if ((ds & ~d2) != 0 && c.leq_c(ds, d2) && f.eval(d2)) return true;
  return false;
}

std::optional<DsMask> unless_witness(const Computation& c, DsMask ds, const CompiledFormula& f,
                                     const CompiledFormula& f2) {
  DsMask full = c.full_mask();
  for (DsMask d2 = 1; d2 <= full; ++d2) {
    if (!c.leq_c(ds, d2)) continue;
    if (((ds & ~d2) != 0 && f.eval(d2)) || f2.eval(d2)) return d2;
  }
  return std::nullopt;
}

}  // namespace

Verdict check(const Computation& c, const TemporalFormula& phi_in, int cap, int jobs) {
  if (c.total_states() > cap) throw CapExceededError(c.total_states(), cap);
  TemporalFormula phi = desugar(phi_in);
  Verdict v;
  v.op = phi.kind;

  if (phi.kind == TKind::Plain) {
    auto r = valid(c, phi.lhs, cap, jobs);
    v.holds = r.valid;
    v.failing_ds = r.witness;
    return v;
  }
  if (phi.kind == TKind::Init) {
    CompiledFormula f(c, phi.lhs);
    v.holds = f.eval(c.initial_ds());
    if (!v.holds) v.failing_ds = c.initial_ds();
    return v;
  }

  CompiledFormula prem(c, phi.lhs);
  CompiledFormula cons(c, phi.rhs);
  DsMask full = c.full_mask();
  std::optional<DsMask> first_obligated;

  for (DsMask ds = 1; ds <= full; ++ds) {
    if (!prem.eval(ds)) continue;
    if (!first_obligated) first_obligated = ds;
    bool ok;
    switch (phi.kind) {
      case TKind::LeadsTo: ok = exists_related(c, ds, cons, false, Dir::Fwd); break;
      case TKind::LeadsToC: ok = exists_related(c, ds, cons, true, Dir::Fwd); break;
      case TKind::Because: ok = exists_related(c, ds, cons, false, Dir::Bwd); break;
      case TKind::BecauseC: ok = exists_related(c, ds, cons, true, Dir::Bwd); break;
      case TKind::Unless: ok = unless_discharged(c, ds, prem, cons); break;
      default: ok = false; break;
    }
    if (!ok) {
      v.holds = false;
      v.failing_ds = ds;
      return v;
    }
  }
  v.holds = true;
  if (first_obligated) {
    switch (phi.kind) {
      case TKind::LeadsTo:
        v.witness_ds = smallest_related_witness(c, *first_obligated, cons, false, Dir::Fwd);
        break;
      case TKind::LeadsToC:
        v.witness_ds = smallest_related_witness(c, *first_obligated, cons, true, Dir::Fwd);
        break;
      case TKind::Because:
        v.witness_ds = smallest_related_witness(c, *first_obligated, cons, false, Dir::Bwd);
        break;
      case TKind::BecauseC:
        v.witness_ds = smallest_related_witness(c, *first_obligated, cons, true, Dir::Bwd);
        break;
      case TKind::Unless:
        v.witness_ds = unless_witness(c, *first_obligated, prem, cons);
        break;
      default:
        break;
    }
  }
  return v;
}

// ---------------------------------------------------------------------
// Naive oracle: definition transcribed with explicit loops and its own
// reachability, no compiled masks, no monotonicity shortcuts.

namespace {

std::vector<std::vector<bool>> naive_reach(const Computation& c) {
  int n = c.total_states();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s) {
    // depth-first walk along R from s
    std::vector<int> stack{s};
    r[s][s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int t = 0; t < n; ++t)
        if ((c.succ(u) >> t) & 1 && !r[s][t]) {
          r[s][t] = true;
          stack.push_back(t);
        }
    }
  }
  return r;
}

struct NaiveCtx {
  const Computation& c;
  std::vector<std::vector<bool>> star;  // R*
  bool eq(int a, int b) const { return a == b || ((c.succ(a) >> b) & 1); }

  bool le(DsMask a, DsMask b) const {
    int n = c.total_states();
    for (int s = 0; s < n; ++s) {
      if (!((a >> s) & 1)) continue;
      bool found = false;
      for (int t = 0; t < n && !found; ++t)
        if (((b >> t) & 1) && star[s][t]) found = true;
      if (!found) return false;
    }
    for (int t = 0; t < n; ++t) {
      if (!((b >> t) & 1)) continue;
      bool found = false;
      for (int s = 0; s < n && !found; ++s)
        if (((a >> s) & 1) && star[s][t]) found = true;
      if (!found) return false;
    }
    return true;
  }

  bool le_c(DsMask a, DsMask b) const {
    int n = c.total_states();
    for (int s = 0; s < n; ++s) {
      if (!((a >> s) & 1)) continue;
      bool found = false;
      for (int t = 0; t < n && !found; ++t)
        if (((b >> t) & 1) && eq(s, t)) found = true;
      if (!found) return false;
    }
    for (int t = 0; t < n; ++t) {
      if (!((b >> t) & 1)) continue;
      bool found = false;
      for (int s = 0; s < n && !found; ++s)
        if (((a >> s) & 1) && eq(s, t)) found = true;
      if (!found) return false;
    }
    return true;
  }

  bool all_terminal(DsMask ds) const {
    for (int s = 0; s < c.total_states(); ++s)
      if (((ds >> s) & 1) && c.succ(s) != 0) return false;
    return true;
  }
};

}  // namespace

Verdict naive_check(const Computation& c, const TemporalFormula& phi_in, int cap) {
  if (c.total_states() > cap) throw CapExceededError(c.total_states(), cap);
  TemporalFormula phi = desugar(phi_in);
  NaiveCtx ctx{c, naive_reach(c)};
  DsMask full = c.full_mask();
  Verdict v;
  v.op = phi.kind;

  if (phi.kind == TKind::Plain) {
    for (DsMask ds = 1; ds <= full; ++ds)
      if (!satisfies(c, ds, phi.lhs)) {
        v.holds = false;
        v.failing_ds = ds;
        return v;
      }
    v.holds = true;
    return v;
  }
  if (phi.kind == TKind::Init) {
    v.holds = satisfies(c, c.initial_ds(), phi.lhs);
    if (!v.holds) v.failing_ds = c.initial_ds();
    return v;
  }

  for (DsMask ds = 1; ds <= full; ++ds) {
    if (!satisfies(c, ds, phi.lhs)) continue;
    bool ok = false;
    switch (phi.kind) {
      case TKind::LeadsTo:
        for (DsMask d2 = 1; d2 <= full && !ok; ++d2)
          if (ctx.le(ds, d2) && satisfies(c, d2, phi.rhs)) ok = true;
        break;
      case TKind::Because:
        for (DsMask d2 = 1; d2 <= full && !ok; ++d2)
          if (ctx.le(d2, ds) && satisfies(c, d2, phi.rhs)) ok = true;
        break;
      case TKind::LeadsToC:
        for (DsMask d2 = 1; d2 <= full && !ok; ++d2)
          if (ctx.le_c(ds, d2) && satisfies(c, d2, phi.rhs)) ok = true;
        break;
      case TKind::BecauseC:
        for (DsMask d2 = 1; d2 <= full && !ok; ++d2)
          if (ctx.le_c(d2, ds) && satisfies(c, d2, phi.rhs)) ok = true;
        break;
      case TKind::Unless:
        if (ctx.all_terminal(ds)) {
          ok = true;
          break;
        }
        for (DsMask d2 = 1; d2 <= full && !ok; ++d2) {
          if (!ctx.le_c(ds, d2)) continue;
          bool superset = (ds & ~d2) == 0;
          if ((!superset && satisfies(c, d2, phi.lhs)) || satisfies(c, d2, phi.rhs)) ok = true;
        }
        break;
      default:
        break;
    }
    if (!ok) {
      v.holds = false;
      v.failing_ds = ds;
      return v;
    }
  }
  v.holds = true;
  return v;
}

// ---------------------------------------------------------------------

std::vector<std::pair<std::string, TemporalFormula>> parse_spec(
    const std::string& text, const std::set<std::string>& components) {
  std::vector<std::pair<std::string, TemporalFormula>> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    bool blank = true;
    for (char ch : line)
      if (!isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) continue;
    try {
      out.emplace_back(line, parse_temporal(line, &components));
    } catch (const ParseError& e) {
      throw ParseError(e.pos, "spec line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

SpecReport check_spec(const Computation& c,
                      const std::vector<std::pair<std::string, TemporalFormula>>& doc, int cap,
                      int jobs) {
  SpecReport r;
  for (const auto& [text, tf] : doc) {
    SpecRow row;
    row.text = text;
    row.formula = tf;
    row.verdict = check(c, tf, cap, jobs);
    r.all_hold = r.all_hold && row.verdict.holds;
    r.rows.push_back(std::move(row));
  }
  return r;
}

std::string report_text(const Computation& c, const SpecReport& r) {
  std::ostringstream out;
  for (const auto& row : r.rows) {
    out << (row.verdict.holds ? "holds  " : "FAILS  ") << render(row.formula);
    if (row.verdict.failing_ds)
      out << "   [failing ds: {" << c.ds_to_string(*row.verdict.failing_ds) << "}]";
    else if (row.verdict.witness_ds)
      out << "   [witness ds: {" << c.ds_to_string(*row.verdict.witness_ds) << "}]";
    out << "\n";
  }
  out << (r.all_hold ? "all formulae hold" : "some formulae fail") << "\n";
  return out.str();
}

namespace {

nlohmann::json ds_json(const Computation& c, DsMask ds) {
  nlohmann::json arr = nlohmann::json::array();
  for (DsMask rest = ds; rest;) {
    int g = std::countr_zero(rest);
    rest &= rest - 1;
    StateId s = c.state_of(g);
    arr.push_back(c.component_name(s.comp) + "." + std::to_string(s.index));
  }
  return arr;
}

}  // namespace

std::string report_json(const Computation& c, const SpecReport& r) {
  nlohmann::json j;
  j["schema"] = "dstl-report/1";
  j["all_hold"] = r.all_hold;
  j["results"] = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json e;
    e["input"] = row.text;
    e["formula"] = render(row.formula);
    e["operator"] = tkind_name(row.verdict.op);
    e["holds"] = row.verdict.holds;
    if (row.verdict.failing_ds) e["failing_ds"] = ds_json(c, *row.verdict.failing_ds);
    if (row.verdict.witness_ds) e["witness_ds"] = ds_json(c, *row.verdict.witness_ds);
    j["results"].push_back(std::move(e));
  }
  return j.dump(2);
}

}  // namespace dstl
