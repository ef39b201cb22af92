#include <doctest.h>

#include <fstream>
#include <sstream>

#include "dstl/lab.hpp"
#include "dstl/parser.hpp"
#include "dstl/proof.hpp"

using namespace dstl;

namespace {

std::string corpus_file(const std::string& name) {
  std::ifstream in(std::string(DSTL_CORPUS_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing corpus file ", name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProofScript parse_one(const std::string& text) {
  auto scripts = parse_proof_file(text);
  REQUIRE(scripts.size() == 1);
  return scripts[0];
}

}  // namespace

TEST_CASE("catalog carries the full rule set") {
  const char* expected[] = {"K",    "DSL1", "DSL2", "MP",   "Nec",  "LIFT", "LcI",  "BcI",
                            "LI",   "BI",   "UI",   "InI",  "SI",   "SE",   "LTR",  "BTR",
                            "UC",   "LSW",  "LPD",  "LCC",  "BSW",  "BPD",  "BCC",  "LcSW",
                            "LcPD", "LcCC", "BcSW", "BcPD", "BcCC", "UCW",  "UD",   "IW",
                            "Notif", "Conf", "I1",  "I2",   "I3"};
  for (const char* name : expected) CHECK_MESSAGE(find_rule(name), "missing ", name);

  // DSL2 instance demands distinct components
  CHECK(find_rule("DSL2")->distinct_comps.size() == 1);
  // Notif takes three premises
  CHECK(find_rule("Notif")->premises.size() == 3);
  // UI is an axiom schema
  CHECK(find_rule("UI")->cls == RuleSchema::Axiom);
}

TEST_CASE("axiom instances check and bad ones are rejected") {
  LemmaLibrary lib;
  auto good = parse_one(
      "theorem t1\n"
      "1. [m][n]false ; axiom DSL2\n"
      "qed\n");
  CHECK(check_proof(good, lib).ok);

  auto same_comp = parse_one(
      "theorem t2\n"
      "1. [m][m]false ; axiom DSL2\n"
      "qed\n");
  auto r = check_proof(same_comp, lib);
  CHECK_FALSE(r.ok);
  CHECK(r.reason.find("distinct") != std::string::npos);

  auto ui = parse_one(
      "theorem t3\n"
      "1. p unless p ; UI\n"
      "qed\n");
  CHECK(check_proof(ui, lib).ok);

  auto not_instance = parse_one(
      "theorem t4\n"
      "1. p unless q ; UI\n"
      "qed\n");
  CHECK_FALSE(check_proof(not_instance, lib).ok);
}

TEST_CASE("a compact axiom 4 script checks") {
  LemmaLibrary lib;
  auto script = parse_one(
      "lemma Ax4\n"
      "1. [m]([m]F <-> F) ; axiom DSL1 m\n"
      "2. ([m]F <-> F) -> (F -> [m]F) ; taut\n"
      "3. [m](([m]F <-> F) -> (F -> [m]F)) ; Nec 2\n"
      "4. [m](([m]F <-> F) -> (F -> [m]F)) -> ([m]([m]F <-> F) -> [m](F -> [m]F)) ; axiom K\n"
      "5. [m]([m]F <-> F) -> [m](F -> [m]F) ; MP 3 4\n"
      "6. [m](F -> [m]F) ; MP 1 5\n"
      "7. [m](F -> [m]F) -> ([m]F -> [m][m]F) ; axiom K\n"
      "8. [m]F -> [m][m]F ; MP 6 7\n"
      "qed\n");
  auto r = register_lemma(script, lib);
  CHECK_MESSAGE(r.ok, "line ", r.line, ": ", r.reason);
  CHECK(lib.contains("Ax4"));

  // re-registering is a duplicate
  auto again = parse_one("lemma Ax4\n1. p -> p ; taut\nqed\n");
  CHECK_THROWS_AS(register_lemma(again, lib), ProofError);
}

TEST_CASE("mutations of a sound script are rejected") {
  LemmaLibrary lib;
  const char* text =
      "theorem mpchain\n"
      "1. p ; hyp\n"
      "2. p -> q ; hyp\n"
      "3. q ; MP 1 2\n"
      "qed\n";
  auto script = parse_one(text);
  CHECK(check_proof(script, lib).ok);

  // swap MP premise order
  auto swapped = parse_one(
      "theorem mpchain\n"
      "1. p ; hyp\n"
      "2. p -> q ; hyp\n"
      "3. q ; MP 2 1\n"
      "qed\n");
  auto r1 = check_proof(swapped, lib);
  CHECK_FALSE(r1.ok);
  CHECK(r1.line == 3);

  // cite line 3 instead of 2
  auto shifted = parse_one(
      "theorem mpchain\n"
      "1. p ; hyp\n"
      "2. p -> q ; hyp\n"
      "3. q ; MP 1 3\n"
      "qed\n");
  auto r2 = check_proof(shifted, lib);
  CHECK_FALSE(r2.ok);
  CHECK(r2.line == 3);
  CHECK(r2.reason.find("earlier") != std::string::npos);
}

TEST_CASE("levels are enforced") {
  LemmaLibrary lib;
  // Nec on a DSTL line is a level violation
  auto bad = parse_one(
      "theorem lift_then_nec\n"
      "1. p -> p ; taut\n"
      "2. p -> p ; LIFT 1\n"
      "3. [m](p -> p) ; Nec 2\n"
      "qed\n");
  auto r = check_proof(bad, lib);
  CHECK_FALSE(r.ok);
  CHECK(r.line == 3);

  // LSW needs its side implications at the temporal level
  auto unlifted = parse_one(
      "theorem needs_lift\n"
      "1. <m>a leads_to <m>b ; hyp\n"
      "2. <m>a -> <m>a ; taut\n"
      "3. <m>b -> <m>b ; taut\n"
      "4. <m>a leads_to <m>b ; LSW 2 1 3\n"
      "qed\n");
  auto r2 = check_proof(unlifted, lib);
  CHECK_FALSE(r2.ok);
  CHECK(r2.line == 4);
  CHECK(r2.reason.find("DSTL") != std::string::npos);
}

TEST_CASE("temporal rules apply schematically") {
  LemmaLibrary lib;
  auto script = parse_one(
      "theorem chain\n"
      "1. <m>a leads_to <m>b ; hyp\n"
      "2. <m>b leads_to <n>c ; hyp\n"
      "3. <m>a leads_to <n>c ; LTR 1 2\n"
      "4. <m>a -> <m>a ; taut\n"
      "5. <m>a -> <m>a ; LIFT 4\n"
      "6. <n>c -> <n>c | <m>b ; taut\n"
      "7. <n>c -> <n>c | <m>b ; LIFT 6\n"
      "8. <m>a leads_to <n>c | <m>b ; LSW 5 3 7\n"
      "9. init <m>true ; I1\n"
      "10. init [m]true ; I2 9\n"
      "qed\n");
  auto r = check_proof(script, lib);
  CHECK_MESSAGE(r.ok, "line ", r.line, ": ", r.reason);
}

TEST_CASE("a notification rule instance with a located target") {
  LemmaLibrary lib;
  auto script = parse_one(
      "theorem notif_instance\n"
      "1. <n>p because <m>q ; hyp\n"
      "2. <m>q leads_to <m>r ; hyp\n"
      "3. stable <m>r ; hyp\n"
      "4. <n>p & <m>true leads_to <m>r ; Notif 1 2 3\n"
      "qed\n");
  auto r = check_proof(script, lib);
  CHECK_MESSAGE(r.ok, "line ", r.line, ": ", r.reason);
}

TEST_CASE("lemma library: registration order and citation") {
  LemmaLibrary lib;
  auto file = corpus_file("lemmas.proofs");
  auto r = check_proof_text(file, lib);
  CHECK_MESSAGE(r.ok, "script ", r.script, " line ", r.result.line, ": ", r.result.reason);
  for (const char* name : {"Ax4", "D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "Cor1", "Cor2"})
    CHECK_MESSAGE(lib.contains(name), "library missing ", name);

  // citing a lemma before registration fails
  LemmaLibrary fresh;
  auto uses_d3 = parse_one(
      "theorem early\n"
      "1. [m](a -> b) -> (<m>a -> <m>b) ; D3\n"
      "qed\n");
  CHECK_FALSE(check_proof(uses_d3, fresh).ok);
  CHECK(check_proof(uses_d3, lib).ok);
}

TEST_CASE("soundness bridge on the private keys run") {
  LemmaLibrary lib;
  auto rlib = check_proof_text(corpus_file("lemmas.proofs"), lib);
  REQUIRE(rlib.ok);
  auto scripts = parse_proof_file(corpus_file("private_keys.proofs"));
  Computation c = load_model(corpus_file("private_keys.model"));
  for (auto& s : scripts) {
    auto r = check_proof(s, lib);
    REQUIRE_MESSAGE(r.ok, s.name, " line ", r.line, ": ", r.reason);
    auto bridge = soundness_bridge(c, s);
    for (const auto& row : bridge.rows)
      CHECK_MESSAGE(row.holds, s.name, ": line ", row.line, " must hold on the model");
  }
}

TEST_CASE("soundness bridge on the leader election run") {
  LemmaLibrary lib;
  REQUIRE(check_proof_text(corpus_file("lemmas.proofs"), lib).ok);
  auto scripts = parse_proof_file(corpus_file("leader_election2.proofs"));
  Computation c = load_model(corpus_file("leader_election2.model"));
  for (auto& s : scripts) {
    auto r = check_proof(s, lib);
    REQUIRE_MESSAGE(r.ok, s.name, " line ", r.line, ": ", r.reason);
    auto bridge = soundness_bridge(c, s);
    CHECK(bridge.all_hold);
    for (const auto& row : bridge.rows)
      CHECK_MESSAGE(row.holds, s.name, ": line ", row.line, " must hold on the model");
  }
}

TEST_CASE("proof file parse errors") {
  CHECK_THROWS_AS(parse_proof_file("lemma x\n1. p ; taut\n"), ProofError);   // no qed
  CHECK_THROWS_AS(parse_proof_file("1. p ; taut\nqed\n"), ProofError);       // no header
  CHECK_THROWS_AS(parse_proof_file("lemma x\n2. p ; taut\nqed\n"), ProofError);  // numbering
  CHECK_THROWS_AS(parse_proof_file("lemma x\n1. p\nqed\n"), ProofError);     // no justification
}
