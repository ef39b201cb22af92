#include "dstl/lab.hpp"

#include <algorithm>

#include "dstl/parser.hpp"

namespace dstl {

namespace {

struct Rng {
  std::uint64_t s;
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int below(int n) { return n <= 0 ? 0 : static_cast<int>(next() % n); }
  bool chance(double p) { return (next() >> 11) * 0x1.0p-53 < p; }
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed ^ (trial * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull);
  z ^= z >> 33;
  z *= 0xff51afd7ed558ccdull;
  z ^= z >> 33;
  return z;
}

std::string prop_name(int i) { return std::string(1, static_cast<char>('a' + i)); }

ComputationDecl sample_decl(const GenParams& p, Rng& rng) {
  static const char* names[] = {"m", "n", "o", "c3", "c4", "c5", "c6", "c7"};
  ComputationDecl decl;
  int k = p.comp_min + rng.below(p.comp_max - p.comp_min + 1);
  for (int i = 0; i < k; ++i) {
    ComputationDecl::Comp comp;
    comp.name = i < 8 ? names[i] : "c" + std::to_string(i);
    comp.count = p.states_min + rng.below(p.states_max - p.states_min + 1);
    comp.labels.resize(comp.count);
    for (int j = 0; j < comp.count; ++j)
      for (int a = 0; a < p.alphabet; ++a)
        if (rng.chance(0.45)) comp.labels[j].insert(prop_name(a));
    decl.comps.push_back(std::move(comp));
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      for (int si = 0; si < decl.comps[i].count; ++si)
        if (rng.chance(p.msg_density)) {
          int dj = rng.below(decl.comps[j].count);
          decl.msgs.push_back({decl.comps[i].name, si, decl.comps[j].name, dj});
        }
    }
  return decl;
}

}  // namespace

Computation random_computation(const GenParams& p, std::uint64_t trial) {
  Rng rng{mix(p.seed, trial)};
  for (;;) {
    try {
      return build(sample_decl(p, rng));
    } catch (const ModelError&) {
      // sampled a causal cycle; the stream moves on, so just retry
    }
  }
}

// ---------------------------------------------------------------------
// Metavariable instantiation

namespace {

std::string some_label(const Computation& c, Rng& rng) {
  std::vector<std::string> pool;
  for (int g = 0; g < c.total_states(); ++g)
    for (const auto& p : c.labels(g)) pool.push_back(p);
  if (pool.empty()) return "a";
  return pool[rng.below(static_cast<int>(pool.size()))];
}

std::string label_of_state(const Computation& c, int g, Rng& rng) {
  const auto& ls = c.labels(g);
  if (ls.empty()) return some_label(c, rng);
  int k = rng.below(static_cast<int>(ls.size()));
  auto it = ls.begin();
  std::advance(it, k);
  return *it;
}

// little formula inside a location operator
FormulaPtr gen_inner(const Computation& c, Rng& rng) {
  switch (rng.below(10)) {
    case 0: return Formula::lnot(Formula::prop(some_label(c, rng)));
    case 1: return Formula::land(Formula::prop(some_label(c, rng)),
                                 Formula::prop(some_label(c, rng)));
    case 2: return Formula::verum();
    default: return Formula::prop(some_label(c, rng));
  }
}

FormulaPtr gen_loc_atom(const Computation& c, Rng& rng) {
  int comp = rng.below(c.component_count());
  return Formula::loc(c.component_name(comp), gen_inner(c, rng));
}

// positive boolean combination of located atoms (monotone under union)
FormulaPtr gen_mono(const Computation& c, Rng& rng, int depth = 2) {
  if (depth == 0 || rng.chance(0.55)) return gen_loc_atom(c, rng);
  auto a = gen_mono(c, rng, depth - 1);
  auto b = gen_mono(c, rng, depth - 1);
  return rng.chance(0.5) ? Formula::land(a, b) : Formula::lor(a, b);
}

FormulaPtr gen_any(const Computation& c, Rng& rng, int depth = 2) {
  if (rng.chance(0.08)) return Formula::prop(some_label(c, rng));
  auto f = gen_mono(c, rng, depth);
  if (rng.chance(0.15)) f = Formula::lnot(f);
  return f;
}

// formulas that hold in every model (propositional shape)
FormulaPtr gen_validish(const Computation& c, Rng& rng) {
  auto x = gen_loc_atom(c, rng);
  return rng.chance(0.5) ? Formula::lor(x, Formula::lnot(x)) : Formula::implies(x, x);
}

int fvar_index(const RuleSchema& s, const std::string& name) {
  for (int i = 0; i < static_cast<int>(s.fvar_names.size()); ++i)
    if (s.fvar_names[i] == name) return i;
  return -1;
}

void set_fvar(const RuleSchema& s, Binding& b, const std::string& name, FormulaPtr f) {
  int i = fvar_index(s, name);
  if (i >= 0) b.formulas[i] = desugar(f);
}

FormulaPtr get_fvar(const RuleSchema& s, const Binding& b, const std::string& name) {
  int i = fvar_index(s, name);
  return i >= 0 ? b.formulas[i] : nullptr;
}

Binding instantiate_vars(const RuleSchema& s, const Computation& c, Rng& rng) {
  Binding b;
  b.formulas.resize(s.fvar_names.size());
  b.comps.resize(s.cvar_names.size());

  // components: distinct assignment when possible
  std::vector<int> comp_pool;
  for (int i = 0; i < c.component_count(); ++i) comp_pool.push_back(i);
  for (std::size_t i = 0; i < b.comps.size(); ++i) {
    int pick = rng.below(static_cast<int>(comp_pool.size()));
    b.comps[i] = c.component_name(comp_pool[pick]);
    if (comp_pool.size() > 1) comp_pool.erase(comp_pool.begin() + pick);
  }

  const std::string& name = s.name;
  auto ends_with = [&](const char* suf) {
    std::string t(suf);
    return name.size() >= t.size() && name.compare(name.size() - t.size(), t.size(), t) == 0;
  };

  // defaults
  for (std::size_t i = 0; i < b.formulas.size(); ++i)
    if (!b.formulas[i]) b.formulas[i] = desugar(gen_any(c, rng));

  if (name == "MP" || name == "Nec" || name == "LIFT" || name == "InI" || name == "SI") {
    if (rng.chance(0.7)) set_fvar(s, b, "F", gen_validish(c, rng));
    if (name == "MP" && rng.chance(0.7))
      set_fvar(s, b, "G", Formula::lor(get_fvar(s, b, "F"), gen_loc_atom(c, rng)));
  } else if (ends_with("SW")) {
    // premises G -> F, F op H, H -> I: keep the implications honest
    if (rng.chance(0.7))
      set_fvar(s, b, "G", Formula::land(get_fvar(s, b, "F"), gen_loc_atom(c, rng)));
    if (rng.chance(0.7))
      set_fvar(s, b, "I", Formula::lor(get_fvar(s, b, "H"), gen_loc_atom(c, rng)));
  } else if (ends_with("CC")) {
    // union argument needs monotone consequence operands
    set_fvar(s, b, "F", gen_mono(c, rng));
    set_fvar(s, b, "H", gen_mono(c, rng));
  } else if (ends_with("PD")) {
    if (rng.chance(0.3)) set_fvar(s, b, "G", get_fvar(s, b, "F"));
  } else if (name == "UCW") {
    if (rng.chance(0.7))
      set_fvar(s, b, "H", Formula::lor(get_fvar(s, b, "G"), gen_loc_atom(c, rng)));
  } else if (name == "IW") {
    if (rng.chance(0.6)) {
      int comp = rng.below(c.component_count());
      set_fvar(s, b, "F",
               Formula::loc(c.component_name(comp),
                            Formula::prop(label_of_state(c, c.gid({comp, 0}), rng))));
    }
    if (rng.chance(0.7))
      set_fvar(s, b, "G", Formula::lor(get_fvar(s, b, "F"), gen_loc_atom(c, rng)));
  } else if (name == "SE" || name == "I2" || name == "I3") {
    int comp = c.component_index(b.comps[0]);
    if (rng.chance(0.6))
      set_fvar(s, b, "F", Formula::prop(label_of_state(c, c.gid({comp, 0}), rng)));
    else
      set_fvar(s, b, "F", gen_inner(c, rng));
  } else if (name == "UC" || name == "Conf") {
    int comp = c.component_index(b.comps[0]);
    int last = c.gid({comp, c.state_count(comp) - 1});
    for (const char* v : {"F", "G", "H"})
      if (fvar_index(s, v) >= 0)
        set_fvar(s, b, v,
                 rng.chance(0.5) ? Formula::prop(label_of_state(c, last, rng))
                                 : gen_inner(c, rng));
  } else if (name == "Notif") {
    int comp = c.component_index(b.comps[0]);
    int last = c.gid({comp, c.state_count(comp) - 1});
    set_fvar(s, b, "H",
             rng.chance(0.5) ? Formula::prop(label_of_state(c, last, rng))
                             : gen_inner(c, rng));
    auto located = Formula::loc(b.comps[0], get_fvar(s, b, "H"));
    if (rng.chance(0.5)) set_fvar(s, b, "G", located);
    if (rng.chance(0.4)) set_fvar(s, b, "F", get_fvar(s, b, "G"));
  } else if (name == "GeneralCancellation") {
    for (const char* v : {"F", "G", "H"})
      if (rng.chance(0.5)) set_fvar(s, b, v, gen_mono(c, rng, 1));
  } else if (name == "BoxElim") {
    if (rng.chance(0.5))
      set_fvar(s, b, "F",
               Formula::lor(Formula::prop(some_label(c, rng)),
                            Formula::prop(some_label(c, rng))));
  }
  return b;
}

TemporalFormula instantiate_line(const TPattern& pat, const Binding& b) {
  TemporalFormula t;
  t.kind = pat.kind;
  t.lhs = instantiate(pat.lhs, b);
  if (pat.rhs) t.rhs = instantiate(pat.rhs, b);
  return desugar(t);
}

const RuleSchema* invalid_rule_schema(const std::string& name) {
  static const RuleSchema gc = make_rule_schema(
      RuleSchema::Rule, "GeneralCancellation",
      {{Level::DSTL, "F unless G"}, {Level::DSTL, "G unless H"}},
      {Level::DSTL, "F | G unless H"});
  static const RuleSchema box_elim =
      make_rule_schema(RuleSchema::Rule, "BoxElim", {}, {Level::DSTL, "F"});
  if (name == "GeneralCancellation") return &gc;
  if (name == "BoxElim") return &box_elim;
  return nullptr;
}

struct Instance {
  std::vector<TemporalFormula> premises;
  TemporalFormula conclusion;
};

Instance make_instance(const RuleSchema& s, const Computation& c, const Binding& b) {
  Instance inst;
  if (s.name == "BoxElim") {
    // one [c]F premise per component of the model; conclusion F
    FormulaPtr f = b.formulas.empty() ? Formula::falsum() : b.formulas[0];
    for (int i = 0; i < c.component_count(); ++i) {
      TemporalFormula t;
      t.kind = TKind::Plain;
      t.lhs = desugar(Formula::box(c.component_name(i), f));
      inst.premises.push_back(t);
    }
    TemporalFormula g;
    g.kind = TKind::Plain;
    g.lhs = f;
    inst.conclusion = g;
    return inst;
  }
  for (const auto& p : s.premises) inst.premises.push_back(instantiate_line(p.pat, b));
  inst.conclusion = instantiate_line(s.conclusion.pat, b);
  return inst;
}

bool violates(const Computation& c, const Instance& inst) {
  for (const auto& p : inst.premises)
    if (!check(c, p, 32).holds) return false;
  return !check(c, inst.conclusion, 32).holds;
}

// Greedy minimization: drop states, labels and messages while the
// instance keeps violating the rule.
ComputationDecl decl_of(const Computation& c) {
  ComputationDecl d;
  for (int i = 0; i < c.component_count(); ++i) {
    ComputationDecl::Comp comp;
    comp.name = c.component_name(i);
    comp.count = c.state_count(i);
    comp.labels.resize(comp.count);
    for (int j = 0; j < comp.count; ++j) comp.labels[j] = c.labels(c.gid({i, j}));
    d.comps.push_back(std::move(comp));
  }
  d.msgs = c.messages();
  return d;
}

bool decl_violates(const ComputationDecl& d, const Instance& inst) {
  try {
    Computation c = build(d);
    return violates(c, inst);
  } catch (const ModelError&) {
    return false;
  }
}

ComputationDecl remove_state(const ComputationDecl& d, int comp, int idx) {
  ComputationDecl out = d;
  auto& cd = out.comps[comp];
  cd.count -= 1;
  cd.labels.erase(cd.labels.begin() + idx);
  std::vector<ComputationDecl::Msg> msgs;
  for (auto m : out.msgs) {
    if (m.src_comp == cd.name) {
      if (m.src_index == idx) continue;
      if (m.src_index > idx) m.src_index -= 1;
    }
    if (m.dst_comp == cd.name) {
      if (m.dst_index == idx) continue;
      if (m.dst_index > idx) m.dst_index -= 1;
    }
    msgs.push_back(m);
  }
  out.msgs = std::move(msgs);
  return out;
}

ComputationDecl shrink(ComputationDecl d, const Instance& inst) {
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t ci = 0; ci < d.comps.size() && !progress; ++ci) {
      if (d.comps[ci].count <= 1) continue;
      for (int j = 0; j < d.comps[ci].count && !progress; ++j) {
        auto cand = remove_state(d, static_cast<int>(ci), j);
        if (decl_violates(cand, inst)) {
          d = std::move(cand);
          progress = true;
        }
      }
    }
    if (progress) continue;
    for (std::size_t ci = 0; ci < d.comps.size() && !progress; ++ci)
      for (int j = 0; j < d.comps[ci].count && !progress; ++j)
        for (const auto& p : d.comps[ci].labels[j]) {
          auto cand = d;
          cand.comps[ci].labels[j].erase(p);
          if (decl_violates(cand, inst)) {
            d = std::move(cand);
            progress = true;
            break;
          }
        }
    if (progress) continue;
    for (std::size_t k = 0; k < d.msgs.size() && !progress; ++k) {
      auto cand = d;
      cand.msgs.erase(cand.msgs.begin() + k);
      if (decl_violates(cand, inst)) {
        d = std::move(cand);
        progress = true;
      }
    }
  }
  return d;
}

std::optional<std::pair<Computation, Instance>> corpus_instance(const std::string& rule);

}  // namespace

bool known_invalid_rule(const std::string& rule) {
  return rule == "GeneralCancellation" || rule == "BoxElim";
}

std::vector<std::string> fuzzable_rules() {
  std::vector<std::string> out;
  for (const auto& r : catalog()) out.push_back(r.name);
  out.push_back("GeneralCancellation");
  out.push_back("BoxElim");
  return out;
}

FuzzReport fuzz_rule(const std::string& rule, int trials, const GenParams& p) {
  const RuleSchema* schema = find_rule(rule);
  if (!schema) schema = invalid_rule_schema(rule);
  if (!schema) throw std::invalid_argument("unknown rule '" + rule + "'");

  FuzzReport report;
  report.rule = rule;

  auto run_instance = [&](const Computation& c, const Instance& inst, std::uint64_t trial) {
    bool premises_hold = true;
    for (const auto& pr : inst.premises)
      if (!check(c, pr, 32).holds) {
        premises_hold = false;
        break;
      }
    if (!premises_hold) return;
    report.non_vacuous += 1;
    if (check(c, inst.conclusion, 32).holds) return;
    FuzzViolation v;
    v.trial = trial;
    ComputationDecl small = shrink(decl_of(c), inst);
    v.model = write_model(build(small));
    for (const auto& pr : inst.premises) v.premises.push_back(render(pr, true));
    v.conclusion = render(inst.conclusion, true);
    report.violations.push_back(std::move(v));
  };

  if (known_invalid_rule(rule)) {
    if (auto ci = corpus_instance(rule)) {
      report.trials += 1;
      run_instance(ci->first, ci->second, 0);
    }
  }

  for (int t = 0; t < trials; ++t) {
    report.trials += 1;
    Computation c = random_computation(p, static_cast<std::uint64_t>(t) + 1);
    Rng rng{mix(p.seed ^ 0x5eedf0f0ull, static_cast<std::uint64_t>(t) + 1)};
    Binding b = instantiate_vars(*schema, c, rng);
    Instance inst = make_instance(*schema, c, b);
    run_instance(c, inst, static_cast<std::uint64_t>(t) + 1);
  }
  return report;
}

// ---------------------------------------------------------------------
// Fixed counterexample corpus

namespace {

const char* kSideConditionModel =
    "component m: 6\n"
    "labels m.0: p\nlabels m.1: q z\nlabels m.2: r z\nlabels m.3: u z\n"
    "labels m.4: z\nlabels m.5: z\n"
    "component n: 6\n"
    "labels n.0: p t\nlabels n.1: u\nlabels n.2: v\nlabels n.3: r\n"
    "labels n.4: t\nlabels n.5: t\n"
    "msg m.1 -> n.2\nmsg n.4 -> m.3\n";

const char* kCancellationModel =
    "component m: 6\n"
    "labels m.0: p\nlabels m.1: p\nlabels m.2: r\nlabels m.3: u z\n"
    "labels m.4: z\nlabels m.5: z\n"
    "component n: 6\n"
    "labels n.0: p t\nlabels n.1: u\nlabels n.2: q\nlabels n.3: s\n"
    "labels n.4: w t\nlabels n.5: p t\n"
    "msg m.1 -> n.2\nmsg n.4 -> m.3\n";

const char* kIncompletenessModel =
    "component m: 3\n"
    "labels m.0: p\nlabels m.1: q\nlabels m.2: q\n";

const char* kD2ConverseModel =
    "component m: 2\n"
    "labels m.0: p\nlabels m.1: q\n";

std::optional<std::pair<Computation, Instance>> corpus_instance(const std::string& rule) {
  auto plain = [](const std::string& t) {
    TemporalFormula f;
    f.kind = TKind::Plain;
    f.lhs = desugar(parse_dsl(t));
    return f;
  };
  if (rule == "GeneralCancellation") {
    Instance inst;
    inst.premises.push_back(desugar(parse_temporal("<m>p unless <m>p & <n>q")));
    inst.premises.push_back(desugar(parse_temporal("<m>p & <n>q unless <m>r & <n>s")));
    inst.conclusion = desugar(parse_temporal("<m>p | (<m>p & <n>q) unless <m>r & <n>s"));
    return std::make_pair(load_model(kCancellationModel), std::move(inst));
  }
  if (rule == "BoxElim") {
    Instance inst;
    inst.premises.push_back(plain("[m](p | q)"));
    inst.conclusion = plain("p | q");
    return std::make_pair(load_model(kIncompletenessModel), std::move(inst));
  }
  return std::nullopt;
}

}  // namespace

const std::vector<CorpusFixture>& counterexample_corpus() {
  static const std::vector<CorpusFixture> corpus = {
      {"unless-side-condition",
       kSideConditionModel,
       {{"<n>p unless <n>q", false}}},
      {"cancellation",
       kCancellationModel,
       {{"<m>p unless <m>p & <n>q", true},
        {"<m>p & <n>q unless <m>r & <n>s", true},
        {"<m>p | (<m>p & <n>q) unless <m>r & <n>s", false}}},
      {"incompleteness",
       kIncompletenessModel,
       {{"[m](p | q)", true}, {"p | q", false}}},
      {"d2-converse",
       kD2ConverseModel,
       {{"<m>(p & q) -> <m>p & <m>q", true}, {"<m>p & <m>q -> <m>(p & q)", false}}},
  };
  return corpus;
}

}  // namespace dstl
