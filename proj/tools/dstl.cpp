#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dstl/checker.hpp"
#include "dstl/computation.hpp"
#include "dstl/lab.hpp"
#include "dstl/parser.hpp"
#include "dstl/proof.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_validate(const std::string& model_path) {
  dstl::Computation c;
  try {
    c = dstl::load_model(slurp(model_path));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << "model ok: " << c.component_count() << " component(s), " << c.total_states()
            << " state(s), " << c.messages().size() << " message(s)\n";
  int pairs = 0;
  for (int g = 0; g < c.total_states(); ++g)
    pairs += std::popcount(c.reach_star(g));
  std::cout << "causal pairs in R*: " << pairs << "\n";
  for (int i = 0; i < c.component_count(); ++i)
    std::cout << "  " << c.component_name(i) << ": " << c.state_count(i) << " state(s)\n";
  return 0;
}

int cmd_check(const std::string& model_path, const std::string& spec_path, int cap, bool json,
              int jobs) {
  dstl::Computation c;
  std::vector<std::pair<std::string, dstl::TemporalFormula>> doc;
  try {
    c = dstl::load_model(slurp(model_path));
    doc = dstl::parse_spec(slurp(spec_path), c.component_set());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (cap < c.total_states()) {
    std::cerr << "error: model has " << c.total_states() << " states, above the cap of " << cap
              << "; raise --cap to check it\n";
    return 3;
  }
  try {
    dstl::SpecReport r = dstl::check_spec(c, doc, cap, jobs);
    std::cout << (json ? dstl::report_json(c, r) : dstl::report_text(c, r));
    if (json) std::cout << "\n";
    return r.all_hold ? 0 : 1;
  } catch (const dstl::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

int cmd_prove(const std::vector<std::string>& scripts, const std::string& lib_path) {
  dstl::LemmaLibrary lib;
  try {
    if (!lib_path.empty()) {
      auto r = dstl::check_proof_text(slurp(lib_path), lib);
      if (!r.ok) {
        std::cerr << "library " << lib_path << ": script '" << r.script << "' fails at line "
                  << r.result.line << ": " << r.result.reason << "\n";
        return 1;
      }
    }
    for (const auto& path : scripts) {
      auto r = dstl::check_proof_text(slurp(path), lib);
      if (!r.ok) {
        std::cerr << path << ": script '" << r.script << "' fails at line " << r.result.line
                  << ": " << r.result.reason << "\n";
        return 1;
      }
      std::cout << path << ": ok\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int cmd_fuzz(const std::string& rule, int trials, std::uint64_t seed, bool json) {
  dstl::GenParams params;
  params.seed = seed;
  std::vector<std::string> rules;
  if (rule == "all")
    rules = dstl::fuzzable_rules();
  else
    rules.push_back(rule);

  bool ok = true;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rules) {
    dstl::FuzzReport rep;
    try {
      rep = dstl::fuzz_rule(r, trials, params);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    bool expected_invalid = dstl::known_invalid_rule(r);
    bool rule_ok = expected_invalid ? !rep.violations.empty() : rep.violations.empty();
    ok = ok && rule_ok;
    bool low_coverage = !expected_invalid && rep.non_vacuous * 20 < rep.trials;
    if (json) {
      nlohmann::json e;
      e["rule"] = rep.rule;
      e["trials"] = rep.trials;
      e["non_vacuous"] = rep.non_vacuous;
      e["violations"] = nlohmann::json::array();
      for (const auto& v : rep.violations) {
        nlohmann::json vj;
        vj["trial"] = v.trial;
        vj["model"] = v.model;
        vj["premises"] = v.premises;
        vj["conclusion"] = v.conclusion;
        e["violations"].push_back(vj);
      }
      e["expected_invalid"] = expected_invalid;
      e["low_coverage"] = low_coverage;
      e["ok"] = rule_ok;
      out.push_back(std::move(e));
    } else {
      std::cout << rep.rule << ": " << rep.trials << " trials, " << rep.non_vacuous
                << " non-vacuous, " << rep.violations.size() << " violation(s)"
                << (expected_invalid ? " [violations expected]" : "")
                << (low_coverage ? " [insufficient coverage]" : "")
                << (rule_ok ? "" : "  <-- UNEXPECTED") << "\n";
      for (const auto& v : rep.violations) {
        std::cout << "  violating instance (trial " << v.trial << "):\n";
        for (const auto& p : v.premises) std::cout << "    premise:    " << p << "\n";
        std::cout << "    conclusion: " << v.conclusion << "\n";
        std::istringstream ms(v.model);
        std::string ml;
        while (std::getline(ms, ml)) std::cout << "    | " << ml << "\n";
      }
    }
  }
  if (json) std::cout << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DSL/DSTL toolkit: check temporal formulae on space-time diagrams, "
               "verify proof scripts, fuzz inference rules"};
  app.require_subcommand(1);

  std::string model, spec, lib, rule;
  std::vector<std::string> scripts;
  int cap = 24, trials = 500, jobs = 1;
  std::uint64_t seed = 0;
  bool json = false;

  auto* validate = app.add_subcommand("validate", "parse and validate a model file");
  validate->add_option("model", model)->required();

  auto* chk = app.add_subcommand("check", "check a spec against a model");
  chk->add_option("model", model)->required();
  chk->add_option("--spec", spec)->required();
  chk->add_option("--cap", cap);
  chk->add_option("--jobs", jobs);
  chk->add_flag("--json", json);

  auto* prove = app.add_subcommand("prove", "check proof scripts");
  prove->add_option("scripts", scripts)->required();
  prove->add_option("--lib", lib);

  auto* fuzz = app.add_subcommand("fuzz", "fuzz-test rule soundness on random models");
  fuzz->add_option("rule", rule)->required();
  fuzz->add_option("--trials", trials);
  fuzz->add_option("--seed", seed);
  fuzz->add_flag("--json", json);

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) return cmd_validate(model);
  if (chk->parsed()) return cmd_check(model, spec, cap, json, jobs);
  if (prove->parsed()) return cmd_prove(scripts, lib);
  if (fuzz->parsed()) return cmd_fuzz(rule, trials, seed, json);
  return 2;
}
