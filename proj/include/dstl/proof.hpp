#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dstl/checker.hpp"
#include "dstl/computation.hpp"
#include "dstl/formula.hpp"

namespace dstl {

enum class Level : std::uint8_t { DSL, DSTL };

// First-order schema patterns.  Formula metavariables bind whole DSL
// subformulae, component metavariables bind component names.
struct Pattern;
using PatternPtr = std::shared_ptr<const Pattern>;

struct Pattern {
  enum K { Meta, Prop, False_, Not, And, Loc } k;
  int var = -1;            // Meta: formula variable
  int comp_var = -1;       // Loc: component variable, -1 when fixed
  std::string name;        // Prop name / fixed Loc component
  PatternPtr a, b;
};

struct TPattern {
  TKind kind = TKind::Plain;
  PatternPtr lhs, rhs;
};

struct LinePattern {
  Level level = Level::DSL;
  TPattern pat;
};

struct Binding {
  std::vector<FormulaPtr> formulas;   // indexed by formula variable
  std::vector<std::string> comps;     // indexed by component variable
};

bool match_pattern(const PatternPtr& p, const FormulaPtr& g, Binding& b);
bool match_line(const LinePattern& p, Level level, const TemporalFormula& g, Binding& b);
FormulaPtr instantiate(const PatternPtr& p, const Binding& b);
std::string render_pattern(const struct RuleSchema& schema, const TPattern& p);

struct RuleSchema {
  enum Class { Axiom, Rule } cls = Axiom;
  enum Special { None, ModusPonens, Lift } special = None;
  std::string name;
  std::vector<LinePattern> premises;
  LinePattern conclusion;
  std::vector<std::string> fvar_names;
  std::vector<std::string> cvar_names;
  std::vector<std::pair<int, int>> distinct_comps;
};

// The fixed axiom and rule catalog: the DSL system (K, DSL1, DSL2, MP,
// Nec; PC is the separate `taut` justification) plus the DSTL rules.
const std::vector<RuleSchema>& catalog();
const RuleSchema* find_rule(const std::string& name);

// Builds a schema from formula text; uppercase identifiers are
// metavariables.  Used for the catalog and for ad-hoc rules under test.
RuleSchema make_rule_schema(RuleSchema::Class cls, const std::string& name,
                            std::vector<std::pair<Level, std::string>> premises,
                            std::pair<Level, std::string> conclusion,
                            std::vector<std::pair<std::string, std::string>> distinct = {});

// ---------------------------------------------------------------------
// Proof scripts

struct Justification {
  enum Kind { Axiom, Named, Taut, Hyp } kind = Named;
  std::string name;
  std::vector<int> premises;        // 1-based line numbers
  std::vector<std::string> hints;   // optional instantiation tokens
};

struct ProofLine {
  int number = 0;
  std::string formula_text;
  TemporalFormula formula;  // desugared; Plain wraps a DSL formula
  Justification just;
  Level level = Level::DSL;  // filled in by check_proof
};

struct ProofScript {
  enum Kind { Lemma, Theorem } kind = Lemma;
  std::string name;
  std::vector<ProofLine> lines;
};

struct ProofError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<ProofScript> parse_proof_file(const std::string& text);

struct Lemma {
  std::string name;
  RuleSchema schema;  // 0-premise schemata are formula lemmas
  Level statement_level = Level::DSL;
};

class LemmaLibrary {
 public:
  const Lemma* find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }
  void add(Lemma l);  // throws ProofError on duplicate
  std::vector<std::string> names() const;

 private:
  std::vector<Lemma> lemmas_;
};

struct CheckResult {
  bool ok = true;
  int line = 0;          // first failing line when !ok
  std::string reason;
};

// Fills in the per-line levels as it goes.
CheckResult check_proof(ProofScript& script, const LemmaLibrary& lib);

// Checks the script, then registers its hypothesis/conclusion shape as a
// citable lemma (metavariables are the uppercase identifiers).
CheckResult register_lemma(ProofScript& script, LemmaLibrary& lib);

// Checks every script in file order, registering `lemma` scripts as they
// pass.  Returns the first failure, if any.
struct FileCheckResult {
  bool ok = true;
  std::string script;
  CheckResult result;
};
FileCheckResult check_proof_text(const std::string& text, LemmaLibrary& lib);

// Every line of a checked script must hold on a model of its hypotheses;
// a failure indicates a kernel bug (or a model that breaks a hypothesis).
struct BridgeRow {
  int line;
  bool holds;
};
struct BridgeReport {
  std::vector<BridgeRow> rows;
  bool all_hold = true;
};
BridgeReport soundness_bridge(const Computation& c, const ProofScript& script, int cap = 24);

}  // namespace dstl
