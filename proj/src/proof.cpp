#include "dstl/proof.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "dstl/parser.hpp"
#include "dstl/tautology.hpp"

namespace dstl {

namespace {

bool is_metavar_name(const std::string& s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

struct VarTable {
  std::vector<std::string>* fvars;
  std::vector<std::string>* cvars;
  int fvar(const std::string& n) {
    for (int i = 0; i < static_cast<int>(fvars->size()); ++i)
      if ((*fvars)[i] == n) return i;
    fvars->push_back(n);
    return static_cast<int>(fvars->size()) - 1;
  }
  int cvar(const std::string& n) {
    for (int i = 0; i < static_cast<int>(cvars->size()); ++i)
      if ((*cvars)[i] == n) return i;
    cvars->push_back(n);
    return static_cast<int>(cvars->size()) - 1;
  }
};

PatternPtr to_pattern(const FormulaPtr& core, VarTable& vars) {
  auto p = std::make_shared<Pattern>();
  switch (core->kind) {
    case FKind::Prop:
      if (is_metavar_name(core->name)) {
        p->k = Pattern::Meta;
        p->var = vars.fvar(core->name);
      } else {
        p->k = Pattern::Prop;
        p->name = core->name;
      }
      break;
    case FKind::False_:
      p->k = Pattern::False_;
      break;
    case FKind::Not:
      p->k = Pattern::Not;
      p->a = to_pattern(core->lhs, vars);
      break;
    case FKind::And:
      p->k = Pattern::And;
      p->a = to_pattern(core->lhs, vars);
      p->b = to_pattern(core->rhs, vars);
      break;
    case FKind::Loc:
      p->k = Pattern::Loc;
      if (is_metavar_name(core->name))
        p->comp_var = vars.cvar(core->name);
      else
        p->name = core->name;
      p->a = to_pattern(core->lhs, vars);
      break;
    default:
      throw ProofError("schema formula not desugared");
  }
  return p;
}

TPattern to_tpattern(const TemporalFormula& t, VarTable& vars) {
  TPattern out;
  out.kind = t.kind;
  out.lhs = to_pattern(t.lhs, vars);
  if (t.rhs) out.rhs = to_pattern(t.rhs, vars);
  return out;
}

LinePattern make_line_pattern(Level level, const std::string& text, VarTable& vars) {
  TemporalFormula t = desugar(parse_temporal(text));
  if (level == Level::DSL && t.kind != TKind::Plain)
    throw ProofError("DSL schema line with a temporal operator: " + text);
  return {level, to_tpattern(t, vars)};
}

RuleSchema make_schema(RuleSchema::Class cls, const std::string& name,
                       std::vector<std::pair<Level, std::string>> premises,
                       std::pair<Level, std::string> conclusion,
                       std::vector<std::pair<std::string, std::string>> distinct = {},
                       RuleSchema::Special special = RuleSchema::None) {
  RuleSchema s;
  s.cls = cls;
  s.special = special;
  s.name = name;
  VarTable vars{&s.fvar_names, &s.cvar_names};
  for (auto& [lvl, text] : premises) s.premises.push_back(make_line_pattern(lvl, text, vars));
  s.conclusion = make_line_pattern(conclusion.first, conclusion.second, vars);
  for (auto& [a, b] : distinct) {
    int ia = -1, ib = -1;
    for (int i = 0; i < static_cast<int>(s.cvar_names.size()); ++i) {
      if (s.cvar_names[i] == a) ia = i;
      if (s.cvar_names[i] == b) ib = i;
    }
    s.distinct_comps.push_back({ia, ib});
  }
  return s;
}

std::vector<RuleSchema> build_catalog() {
  using L = Level;
  std::vector<RuleSchema> cat;
  auto ax = RuleSchema::Axiom;
  auto ru = RuleSchema::Rule;

  // DSL axiom system (PC is the `taut` justification)
  cat.push_back(make_schema(ax, "K", {}, {L::DSL, "[M](F -> G) -> ([M]F -> [M]G)"}));
  cat.push_back(make_schema(ax, "DSL1", {}, {L::DSL, "[M]([M]F <-> F)"}));
  cat.push_back(make_schema(ax, "DSL2", {}, {L::DSL, "[M][N]false"}, {{"M", "N"}}));
  cat.push_back(make_schema(ru, "MP", {{L::DSL, "F"}, {L::DSL, "F -> G"}}, {L::DSL, "G"}, {},
                            RuleSchema::ModusPonens));
  cat.push_back(make_schema(ru, "Nec", {{L::DSL, "F"}}, {L::DSL, "[M]F"}));

  // bridge from the DSL system into the temporal one
  cat.push_back(
      make_schema(ru, "LIFT", {{L::DSL, "F"}}, {L::DSTL, "F"}, {}, RuleSchema::Lift));

  // operator introduction / elimination
  cat.push_back(make_schema(ax, "LcI", {}, {L::DSTL, "F leads_to_c F"}));
  cat.push_back(make_schema(ax, "BcI", {}, {L::DSTL, "F because_c F"}));
  cat.push_back(make_schema(ru, "LI", {{L::DSTL, "F leads_to_c G"}}, {L::DSTL, "F leads_to G"}));
  cat.push_back(make_schema(ru, "BI", {{L::DSTL, "F because_c G"}}, {L::DSTL, "F because G"}));
  cat.push_back(make_schema(ax, "UI", {}, {L::DSTL, "F unless F"}));
  cat.push_back(make_schema(ru, "InI", {{L::DSTL, "F"}}, {L::DSTL, "init F"}));
  cat.push_back(make_schema(ru, "SI", {{L::DSTL, "F"}}, {L::DSTL, "stable F"}));
  cat.push_back(make_schema(ru, "SE", {{L::DSTL, "init <M>F"}, {L::DSTL, "stable <M>F"}},
                            {L::DSTL, "[M]F"}));

  // transitivity and weak cancellation
  cat.push_back(make_schema(ru, "LTR", {{L::DSTL, "F leads_to G"}, {L::DSTL, "G leads_to H"}},
                            {L::DSTL, "F leads_to H"}));
  cat.push_back(make_schema(ru, "BTR", {{L::DSTL, "F because G"}, {L::DSTL, "G because H"}},
                            {L::DSTL, "F because H"}));
  cat.push_back(make_schema(ru, "UC",
                            {{L::DSTL, "<M>F unless <M>G"}, {L::DSTL, "<M>G unless <M>H"}},
                            {L::DSTL, "<M>F | <M>G unless <M>H"}));

  // premise strengthening / consequence weakening families
  const char* ops[4] = {"leads_to", "because", "leads_to_c", "because_c"};
  const char* tag[4] = {"L", "B", "Lc", "Bc"};
  for (int i = 0; i < 4; ++i) {
    std::string op = ops[i];
    cat.push_back(make_schema(
        ru, std::string(tag[i]) + "SW",
        {{L::DSTL, "G -> F"}, {L::DSTL, "F " + op + " H"}, {L::DSTL, "H -> I"}},
        {L::DSTL, "G " + op + " I"}));
    cat.push_back(make_schema(ru, std::string(tag[i]) + "PD",
                              {{L::DSTL, "F " + op + " H"}, {L::DSTL, "G " + op + " H"}},
                              {L::DSTL, "F | G " + op + " H"}));
    cat.push_back(make_schema(ru, std::string(tag[i]) + "CC",
                              {{L::DSTL, "G " + op + " F"}, {L::DSTL, "G " + op + " H"}},
                              {L::DSTL, "G " + op + " F & H"}));
  }

  cat.push_back(make_schema(ru, "UCW", {{L::DSTL, "F unless G"}, {L::DSTL, "G -> H"}},
                            {L::DSTL, "F unless H"}));
  cat.push_back(make_schema(ru, "UD", {{L::DSTL, "F unless G"}, {L::DSTL, "H unless I"}},
                            {L::DSTL, "F | H unless G | I"}));
  cat.push_back(make_schema(ru, "IW", {{L::DSTL, "init F"}, {L::DSTL, "F -> G"}},
                            {L::DSTL, "init G"}));

  // notification and confluence
  cat.push_back(make_schema(
      ru, "Notif",
      {{L::DSTL, "F because G"}, {L::DSTL, "G leads_to <M>H"}, {L::DSTL, "stable <M>H"}},
      {L::DSTL, "F & <M>true leads_to <M>H"}));
  cat.push_back(make_schema(ru, "Conf", {{L::DSTL, "stable <M>F"}, {L::DSTL, "stable <M>G"}},
                            {L::DSTL, "<M>F & <M>G -> <M>(F & G)"}));

  // the initial distributed state has exactly one state per component
  cat.push_back(make_schema(ax, "I1", {}, {L::DSTL, "init <M>true"}));
  cat.push_back(make_schema(ru, "I2", {{L::DSTL, "init <M>F"}}, {L::DSTL, "init [M]F"}));
  cat.push_back(make_schema(ru, "I3", {{L::DSTL, "init [M]F"}}, {L::DSTL, "init <M>F"}));

  return cat;
}

}  // namespace

const std::vector<RuleSchema>& catalog() {
  static const std::vector<RuleSchema> cat = build_catalog();
  return cat;
}

RuleSchema make_rule_schema(RuleSchema::Class cls, const std::string& name,
                            std::vector<std::pair<Level, std::string>> premises,
                            std::pair<Level, std::string> conclusion,
                            std::vector<std::pair<std::string, std::string>> distinct) {
  return make_schema(cls, name, std::move(premises), std::move(conclusion), std::move(distinct));
}

const RuleSchema* find_rule(const std::string& name) {
  for (const auto& r : catalog())
    if (r.name == name) return &r;
  return nullptr;
}

bool match_pattern(const PatternPtr& p, const FormulaPtr& g, Binding& b) {
  switch (p->k) {
    case Pattern::Meta: {
      auto& slot = b.formulas[p->var];
      if (!slot) {
        slot = g;
        return true;
      }
      return equal(slot, g);
    }
    case Pattern::Prop:
      return g->kind == FKind::Prop && g->name == p->name;
    case Pattern::False_:
      return g->kind == FKind::False_;
    case Pattern::Not:
      if (g->kind == FKind::Not) return match_pattern(p->a, g->lhs, b);
      // Instances are kept double-negation free, so ~X can also match a
      // positive g by taking X = ~g.
      return match_pattern(p->a, Formula::lnot(g), b);
    case Pattern::And:
      return g->kind == FKind::And && match_pattern(p->a, g->lhs, b) &&
             match_pattern(p->b, g->rhs, b);
    case Pattern::Loc: {
      if (g->kind != FKind::Loc) return false;
      if (p->comp_var >= 0) {
        auto& slot = b.comps[p->comp_var];
        if (slot.empty())
          slot = g->name;
        else if (slot != g->name)
          return false;
      } else if (p->name != g->name) {
        return false;
      }
      return match_pattern(p->a, g->lhs, b);
    }
  }
  return false;
}

bool match_line(const LinePattern& p, Level level, const TemporalFormula& g, Binding& b) {
  if (p.level != level) return false;
  if (p.pat.kind != g.kind) return false;
  if (!match_pattern(p.pat.lhs, g.lhs, b)) return false;
  if (p.pat.rhs) return g.rhs && match_pattern(p.pat.rhs, g.rhs, b);
  return true;
}

FormulaPtr instantiate(const PatternPtr& p, const Binding& b) {
  switch (p->k) {
    case Pattern::Meta:
      return b.formulas[p->var] ? b.formulas[p->var] : Formula::prop("?");
    case Pattern::Prop:
      return Formula::prop(p->name);
    case Pattern::False_:
      return Formula::falsum();
    case Pattern::Not: {
      auto inner = instantiate(p->a, b);
      return inner->kind == FKind::Not ? inner->lhs : Formula::lnot(inner);
    }
    case Pattern::And:
      return Formula::land(instantiate(p->a, b), instantiate(p->b, b));
    case Pattern::Loc: {
      std::string comp = p->comp_var >= 0
                             ? (b.comps[p->comp_var].empty() ? "?" : b.comps[p->comp_var])
                             : p->name;
      return Formula::loc(comp, instantiate(p->a, b));
    }
  }
  return Formula::falsum();
}

namespace {

FormulaPtr pattern_as_formula(const RuleSchema& s, const PatternPtr& p) {
  switch (p->k) {
    case Pattern::Meta:
      return Formula::prop(s.fvar_names[p->var]);
    case Pattern::Prop:
      return Formula::prop(p->name);
    case Pattern::False_:
      return Formula::falsum();
    case Pattern::Not:
      return Formula::lnot(pattern_as_formula(s, p->a));
    case Pattern::And:
      return Formula::land(pattern_as_formula(s, p->a), pattern_as_formula(s, p->b));
    case Pattern::Loc:
      return Formula::loc(p->comp_var >= 0 ? s.cvar_names[p->comp_var] : p->name,
                          pattern_as_formula(s, p->a));
  }
  return Formula::falsum();
}

}  // namespace

std::string render_pattern(const RuleSchema& s, const TPattern& p) {
  TemporalFormula t;
  t.kind = p.kind;
  t.lhs = pattern_as_formula(s, p.lhs);
  if (p.rhs) t.rhs = pattern_as_formula(s, p.rhs);
  return render(t, true);
}

// ---------------------------------------------------------------------
// Script parsing

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

Justification parse_justification(const std::string& text, int lineno) {
  Justification j;
  std::istringstream in(text);
  std::string tok;
  if (!(in >> tok)) throw ProofError("line " + std::to_string(lineno) + ": empty justification");
  if (tok == "axiom") {
    j.kind = Justification::Axiom;
    if (!(in >> j.name))
      throw ProofError("line " + std::to_string(lineno) + ": missing axiom name");
  } else if (tok == "taut") {
    j.kind = Justification::Taut;
  } else if (tok == "hyp") {
    j.kind = Justification::Hyp;
  } else {
    j.kind = Justification::Named;
    j.name = tok;
  }
  while (in >> tok) {
    if (std::all_of(tok.begin(), tok.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      j.premises.push_back(std::stoi(tok));
    else
      j.hints.push_back(tok);
  }
  return j;
}

}  // namespace

std::vector<ProofScript> parse_proof_file(const std::string& text) {
  std::vector<ProofScript> scripts;
  std::optional<ProofScript> cur;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.rfind("lemma ", 0) == 0 || line.rfind("theorem ", 0) == 0) {
      if (cur) throw ProofError("line " + std::to_string(lineno) + ": unterminated script");
      ProofScript s;
      s.kind = line[0] == 'l' ? ProofScript::Lemma : ProofScript::Theorem;
      s.name = trim(line.substr(line.find(' ')));
      if (s.name.empty())
        throw ProofError("line " + std::to_string(lineno) + ": script without a name");
      cur = std::move(s);
      continue;
    }
    if (line == "qed") {
      if (!cur || cur->lines.empty())
        throw ProofError("line " + std::to_string(lineno) + ": qed outside a script");
      scripts.push_back(std::move(*cur));
      cur.reset();
      continue;
    }
    if (!cur) throw ProofError("line " + std::to_string(lineno) + ": proof line outside a script");
    auto dot = line.find('.');
    if (dot == std::string::npos)
      throw ProofError("line " + std::to_string(lineno) + ": expected '<n>. <formula> ; <just>'");
    int number;
    try {
      number = std::stoi(line.substr(0, dot));
    } catch (const std::exception&) {
      throw ProofError("line " + std::to_string(lineno) + ": bad line number");
    }
    auto semi = line.find(';', dot);
    if (semi == std::string::npos)
      throw ProofError("line " + std::to_string(lineno) + ": missing '; <justification>'");
    ProofLine pl;
    pl.number = number;
    pl.formula_text = trim(line.substr(dot + 1, semi - dot - 1));
    if (number != static_cast<int>(cur->lines.size()) + 1)
      throw ProofError("line " + std::to_string(lineno) + ": lines must be numbered 1,2,...");
    try {
      pl.formula = desugar(parse_temporal(pl.formula_text));
    } catch (const ParseError& e) {
      throw ProofError("line " + std::to_string(lineno) + ": " + e.what());
    }
    pl.just = parse_justification(trim(line.substr(semi + 1)), lineno);
    cur->lines.push_back(std::move(pl));
  }
  if (cur) throw ProofError("unterminated script '" + cur->name + "' (missing qed)");
  return scripts;
}

// ---------------------------------------------------------------------
// Library

const Lemma* LemmaLibrary::find(const std::string& name) const {
  for (const auto& l : lemmas_)
    if (l.name == name) return &l;
  return nullptr;
}

void LemmaLibrary::add(Lemma l) {
  if (find(l.name)) throw ProofError("lemma '" + l.name + "' registered twice");
  lemmas_.push_back(std::move(l));
}

std::vector<std::string> LemmaLibrary::names() const {
  std::vector<std::string> out;
  for (const auto& l : lemmas_) out.push_back(l.name);
  return out;
}

// ---------------------------------------------------------------------
// Kernel

namespace {

struct LineFail {
  int line;
  std::string reason;
};

Level infer_hyp_level(const TemporalFormula& f) {
  return f.kind == TKind::Plain ? Level::DSL : Level::DSTL;
}

std::string level_name(Level l) { return l == Level::DSL ? "DSL" : "DSTL"; }

// Checks one rule application; premises are matched against cited lines
// in citation order under a single consistent assignment.
std::optional<std::string> apply_schema(const RuleSchema& schema,
                                        const std::vector<const ProofLine*>& cited,
                                        const ProofLine& line, Level& out_level) {
  if (cited.size() != schema.premises.size())
    return schema.name + " takes " + std::to_string(schema.premises.size()) + " premise(s), " +
           std::to_string(cited.size()) + " cited";

  Binding b;
  b.formulas.resize(schema.fvar_names.size());
  b.comps.resize(schema.cvar_names.size());

  if (schema.special == RuleSchema::ModusPonens) {
    Level lvl = cited.empty() ? Level::DSL : cited[0]->level;
    for (const auto* p : cited) {
      if (p->level != lvl) return "MP premises must share one level";
      if (p->formula.kind != TKind::Plain) return "MP applies to plain formulae";
    }
    if (line.formula.kind != TKind::Plain) return "MP concludes a plain formula";
    for (std::size_t i = 0; i < cited.size(); ++i)
      if (!match_line({Level::DSL, schema.premises[i].pat}, Level::DSL, cited[i]->formula, b))
        return "premise " + std::to_string(i + 1) + " does not match " +
               render_pattern(schema, schema.premises[i].pat);
    if (!match_line({Level::DSL, schema.conclusion.pat}, Level::DSL, line.formula, b))
      return "conclusion does not match " + render_pattern(schema, schema.conclusion.pat);
    out_level = lvl;
    return std::nullopt;
  }

  if (schema.special == RuleSchema::Lift) {
    if (cited[0]->level != Level::DSL) return "LIFT takes a DSL line";
    if (cited[0]->formula.kind != TKind::Plain || line.formula.kind != TKind::Plain)
      return "LIFT applies to plain formulae";
    if (!equal(cited[0]->formula.lhs, line.formula.lhs))
      return "LIFT must restate the cited formula";
    out_level = Level::DSTL;
    return std::nullopt;
  }

  for (std::size_t i = 0; i < schema.premises.size(); ++i) {
    if (cited[i]->level != schema.premises[i].level)
      return "premise " + std::to_string(i + 1) + " must be a " +
             level_name(schema.premises[i].level) + " line";
    if (!match_line(schema.premises[i], cited[i]->level, cited[i]->formula, b))
      return "premise " + std::to_string(i + 1) + " does not match " +
             render_pattern(schema, schema.premises[i].pat);
  }
  if (!match_line(schema.conclusion, schema.conclusion.level, line.formula, b)) {
    // Report the expected shape; for axioms this is the whole schema.
    return schema.cls == RuleSchema::Axiom
               ? "not an instance of " + schema.name + ": " +
                     render_pattern(schema, schema.conclusion.pat)
               : "conclusion does not match " + render_pattern(schema, schema.conclusion.pat);
  }
  for (auto [i, j] : schema.distinct_comps)
    if (i >= 0 && j >= 0 && b.comps[i] == b.comps[j])
      return schema.name + " requires distinct components, got '" + b.comps[i] + "' twice";

  // Optional instantiation hints: component names first, then one
  // formula for the first formula metavariable.
  std::size_t h = 0;
  for (; h < line.just.hints.size() && h < b.comps.size(); ++h)
    if (!b.comps[h].empty() && line.just.hints[h] != b.comps[h])
      return "instantiation hint '" + line.just.hints[h] + "' conflicts with inferred '" +
             b.comps[h] + "'";
  if (h < line.just.hints.size()) {
    std::string ftext;
    for (; h < line.just.hints.size(); ++h) ftext += line.just.hints[h] + " ";
    try {
      FormulaPtr hf = desugar(parse_dsl(ftext));
      if (!b.formulas.empty() && b.formulas[0] && !equal(hf, b.formulas[0]))
        return "formula hint does not match the inferred instantiation";
    } catch (const ParseError&) {
      return "unparsable instantiation hint";
    }
  }
  out_level = schema.conclusion.level;
  return std::nullopt;
}

std::optional<LineFail> check_line(std::vector<ProofLine>& lines, std::size_t idx,
                                   const LemmaLibrary& lib) {
  ProofLine& line = lines[idx];
  auto fail = [&](const std::string& r) { return LineFail{line.number, r}; };

  std::vector<const ProofLine*> cited;
  for (int n : line.just.premises) {
    if (n <= 0 || n > static_cast<int>(idx))
      return fail("citation of line " + std::to_string(n) + " is not strictly earlier");
    cited.push_back(&lines[n - 1]);
  }

  switch (line.just.kind) {
    case Justification::Taut: {
      if (line.formula.kind != TKind::Plain) return fail("taut applies to plain formulae");
      if (!cited.empty()) return fail("taut cites no premises");
      try {
        if (!is_tautology(line.formula.lhs)) return fail("not a propositional tautology");
      } catch (const AtomLimitError& e) {
        return fail(e.what());
      }
      line.level = Level::DSL;
      return std::nullopt;
    }
    case Justification::Hyp: {
      if (!cited.empty()) return fail("hyp cites no premises");
      line.level = infer_hyp_level(line.formula);
      return std::nullopt;
    }
    case Justification::Axiom:
    case Justification::Named: {
      const RuleSchema* schema = find_rule(line.just.name);
      if (line.just.kind == Justification::Axiom && schema && schema->cls != RuleSchema::Axiom)
        return fail("'" + line.just.name + "' is a rule, not an axiom");
      if (schema) {
        Level lvl = Level::DSL;
        if (auto err = apply_schema(*schema, cited, line, lvl)) return fail(*err);
        line.level = lvl;
        return std::nullopt;
      }
      const Lemma* lemma = lib.find(line.just.name);
      if (!lemma) return fail("unknown rule or lemma '" + line.just.name + "'");
      Level lvl = Level::DSL;
      if (auto err = apply_schema(lemma->schema, cited, line, lvl)) return fail(*err);
      line.level = lvl;
      return std::nullopt;
    }
  }
  return fail("unrecognized justification");
}

}  // namespace

CheckResult check_proof(ProofScript& script, const LemmaLibrary& lib) {
  if (script.lines.empty()) return {false, 0, "empty script"};
  for (std::size_t i = 0; i < script.lines.size(); ++i)
    if (auto f = check_line(script.lines, i, lib)) return {false, f->line, f->reason};
  return {};
}

CheckResult register_lemma(ProofScript& script, LemmaLibrary& lib) {
  CheckResult r = check_proof(script, lib);
  if (!r.ok) return r;

  Lemma lemma;
  lemma.name = script.name;
  RuleSchema& s = lemma.schema;
  s.name = script.name;
  VarTable vars{&s.fvar_names, &s.cvar_names};
  for (const auto& line : script.lines)
    if (line.just.kind == Justification::Hyp)
      s.premises.push_back({line.level, to_tpattern(line.formula, vars)});
  const ProofLine& last = script.lines.back();
  s.conclusion = {last.level, to_tpattern(last.formula, vars)};
  s.cls = s.premises.empty() ? RuleSchema::Axiom : RuleSchema::Rule;
  lemma.statement_level = last.level;
  lib.add(std::move(lemma));
  return r;
}

FileCheckResult check_proof_text(const std::string& text, LemmaLibrary& lib) {
  auto scripts = parse_proof_file(text);
  for (auto& s : scripts) {
    CheckResult r =
        s.kind == ProofScript::Lemma ? register_lemma(s, lib) : check_proof(s, lib);
    if (!r.ok) return {false, s.name, r};
  }
  return {};
}

BridgeReport soundness_bridge(const Computation& c, const ProofScript& script, int cap) {
  BridgeReport report;
  for (const auto& line : script.lines) {
    Verdict v = check(c, line.formula, cap);
    report.rows.push_back({line.number, v.holds});
    report.all_hold = report.all_hold && v.holds;
  }
  return report;
}

}  // namespace dstl
