#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dstl/computation.hpp"
#include "dstl/formula.hpp"
#include "dstl/semantics.hpp"

namespace dstl {

struct Verdict {
  TKind op = TKind::Plain;
  bool holds = false;
  std::optional<DsMask> failing_ds;  // present when holds is false
  std::optional<DsMask> witness_ds;  // discharging ds' for the smallest obligated ds
};

// M |=_T phi over the given finite diagram.  Quantifiers range over the
// diagram only: a leads_to obligation with no witness inside it is false.
// For unless, a ds all of whose members are terminal states has no
// successor evidence in the fragment and its obligation is discharged;
// everywhere else the ds' not-superset side condition applies strictly.
Verdict check(const Computation& c, const TemporalFormula& phi, int cap = 24, int jobs = 1);

// Same contract, written as the unoptimized quantifier loops of the
// definition.  Independent oracle; practical to |S| ~ 12.
Verdict naive_check(const Computation& c, const TemporalFormula& phi, int cap = 12);

struct SpecRow {
  std::string text;
  TemporalFormula formula;
  Verdict verdict;
};

struct SpecReport {
  std::vector<SpecRow> rows;
  bool all_hold = true;
};

std::vector<std::pair<std::string, TemporalFormula>> parse_spec(
    const std::string& text, const std::set<std::string>& components);

SpecReport check_spec(const Computation& c,
                      const std::vector<std::pair<std::string, TemporalFormula>>& doc,
                      int cap = 24, int jobs = 1);

std::string report_text(const Computation& c, const SpecReport& r);
std::string report_json(const Computation& c, const SpecReport& r);

}  // namespace dstl
