/*
  circuit-engine — command-line surface of the verification engine.

  Subcommands:
    analyze <spec.json>    classify a circuit surface and decide the cycle
                           relation, with certificates
    verify-suite           run the full verification battery
    equal                  decide equality of two words in a supported group
    nf                     print the Garside normal form of a word

  Exit codes: 0 pass, 1 a verification check failed (or `equal` answered
  false), 2 usage or spec errors.
*/

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "circuit/affine.hpp"
#include "circuit/garside.hpp"
#include "circuit/report.hpp"
#include "circuit/verify.hpp"

namespace {

using circuit::CoxType;
using circuit::Word;

enum class Group { A, B, D, Atilde };

int run_analyze(const std::string& path, bool json_output) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open spec file: " << path << "\n";
    return 2;
  }
  nlohmann::json spec;
  try {
    in >> spec;
  } catch (const std::exception& e) {
    std::cerr << "malformed JSON in " << path << ": " << e.what() << "\n";
    return 2;
  }
  circuit::CircuitSurface surface = circuit::surface_from_json(spec);
  circuit::AnalysisReport report = circuit::decide_cycle_relation(surface);
  if (json_output)
    std::cout << circuit::report_to_json(report).dump(2) << "\n";
  else
    std::cout << circuit::report_to_text(report);
  return 0;
}

int run_verify(int n_max, bool json_output) {
  circuit::VerificationRun run = circuit::run_verification(n_max);
  if (json_output) {
    nlohmann::json checks = nlohmann::json::array();
    for (const circuit::CheckResult& c : run.checks)
      checks.push_back({{"criterion", c.criterion},
                        {"name", c.name},
                        {"passed", c.passed},
                        {"detail", c.detail},
                        {"seconds", c.seconds}});
    std::cout << nlohmann::json{{"n_max", run.n_max},
                                {"all_passed", run.all_passed()},
                                {"checks", std::move(checks)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << circuit::render_text(run);
  }
  return run.all_passed() ? 0 : 1;
}

int run_equal(Group g, int n, const std::string& lhs, const std::string& rhs,
              bool json_output) {
  bool answer = false;
  if (g == Group::Atilde) {
    answer = circuit::affine_equal(circuit::AffineWord::parse(n, lhs),
                                   circuit::AffineWord::parse(n, rhs));
  } else {
    CoxType t = g == Group::A ? CoxType::A : g == Group::B ? CoxType::B : CoxType::D;
    const circuit::GarsideEngine& eng = circuit::engine_for(t, n);
    answer = eng.equal(Word::parse(eng.alphabet(), lhs), Word::parse(eng.alphabet(), rhs));
  }
  if (json_output)
    std::cout << nlohmann::json{{"equal", answer}}.dump() << "\n";
  else
    std::cout << (answer ? "true" : "false") << "\n";
  return answer ? 0 : 1;
}

int run_nf(Group g, int n, const std::string& text, bool json_output) {
  if (g == Group::Atilde) {
    std::cerr << "nf supports types A, B, D only (the affine group is decided "
                 "through its type B embedding)\n";
    return 2;
  }
  CoxType t = g == Group::A ? CoxType::A : g == Group::B ? CoxType::B : CoxType::D;
  const circuit::GarsideEngine& eng = circuit::engine_for(t, n);
  circuit::NormalForm nf = eng.normal_form(Word::parse(eng.alphabet(), text));
  if (json_output) {
    std::cout << circuit::nf_to_json(nf).dump() << "\n";
  } else {
    std::cout << "p = " << nf.inf << ", factors (" << nf.canonical_length() << "):";
    for (const circuit::SignedPerm& f : nf.factors) std::cout << " " << f.str();
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification engine for cycle relations between Dehn twists"};
  app.require_subcommand(1);

  bool json_output = false;
  bool text_output = false;
  auto add_format_flags = [&](CLI::App* sub) {
    sub->add_flag("--json", json_output, "emit JSON");
    sub->add_flag("--text", text_output, "emit plain text (default)");
  };

  auto* analyze = app.add_subcommand("analyze", "analyze a surface spec file");
  std::string spec_path;
  analyze->add_option("spec", spec_path, "surface spec JSON file")->required();
  add_format_flags(analyze);

  auto* verify = app.add_subcommand("verify-suite", "run the verification battery");
  int n_max = 8;
  verify->add_option("--n-max", n_max, "largest circuit size for the group checks")
      ->check(CLI::Range(3, 8));
  add_format_flags(verify);

  std::map<std::string, Group> group_names{
      {"A", Group::A}, {"B", Group::B}, {"D", Group::D}, {"Atilde", Group::Atilde}};

  auto* equal = app.add_subcommand("equal", "decide equality of two words");
  Group eq_group = Group::A;
  int eq_n = 3;
  std::string lhs, rhs;
  equal->add_option("--type", eq_group, "group family")
      ->transform(CLI::CheckedTransformer(group_names))
      ->required();
  equal->add_option("--n", eq_n, "rank parameter (strands for A)")->required();
  equal->add_option("--lhs", lhs, "left word")->required();
  equal->add_option("--rhs", rhs, "right word")->required();
  add_format_flags(equal);

  auto* nf = app.add_subcommand("nf", "Garside normal form of a word");
  Group nf_group = Group::A;
  int nf_n = 3;
  std::string word_text;
  nf->add_option("--type", nf_group, "group family")
      ->transform(CLI::CheckedTransformer(group_names))
      ->required();
  nf->add_option("--n", nf_n, "rank parameter (strands for A)")->required();
  nf->add_option("--word", word_text, "word to normalize")->required();
  add_format_flags(nf);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(spec_path, json_output && !text_output);
    if (*verify) return run_verify(n_max, json_output && !text_output);
    if (*equal) return run_equal(eq_group, eq_n, lhs, rhs, json_output && !text_output);
    if (*nf) return run_nf(nf_group, nf_n, word_text, json_output && !text_output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
