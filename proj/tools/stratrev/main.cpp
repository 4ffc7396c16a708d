// stratrev: resolve conflicting information in stratified propositional
// knowledge bases.
//
// Exit codes: 0 success / positive verdict, 1 input error, 2 negative
// verdict, 3 resource cap exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stratrev/engine.hpp"
#include "stratrev/lex.hpp"
#include "stratrev/parser.hpp"
#include "stratrev/semantics.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNegative = 2;
constexpr int kExitCapExceeded = 3;

using namespace stratrev;

std::string join_formulas(const Base& base) {
  std::string out;
  for (const auto& f : base) {
    if (!out.empty()) out += ", ";
    out += f.text();
  }
  return out;
}

std::string model_line(const Interpretation& w) {
  std::string out = "{";
  bool first = true;
  for (const auto& name : w.true_atoms()) {
    if (!first) out += ", ";
    out += name;
    first = false;
  }
  return out + "}";
}

struct ReviseConfig {
  std::string kb_path;
  std::string phi_text;
  std::string method = "dma";
  std::string output_mode;  // empty = the method's native mode
  bool json = false;
  bool explain = false;
};

RevisionOutcome run_method(const std::string& method, const StratifiedKB& kb,
                           const Formula& phi) {
  if (method == "dma") return dma(kb, phi);
  if (method == "whole-dma") return whole_dma(kb, phi);
  if (method == "dr") return dr(kb, phi);
  return cmr(kb, phi);
}

nlohmann::json trace_json(const std::vector<StratumTrace>& trace) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : trace) {
    nlohmann::json entry;
    entry["stratum"] = t.stratum;
    entry["action"] = to_string(t.action);
    if (t.weakening_size)
      entry["k"] = *t.weakening_size;
    else
      entry["k"] = nullptr;
    arr.push_back(std::move(entry));
  }
  return arr;
}

void print_trace_text(const std::vector<StratumTrace>& trace) {
  for (const auto& t : trace) {
    std::cout << "# stratum " << t.stratum << ": " << to_string(t.action);
    if (t.weakening_size) std::cout << " (k=" << *t.weakening_size << ")";
    if (!t.kernel_part.empty())
      std::cout << "; kernel: " << join_formulas(t.kernel_part);
    std::cout << "\n";
  }
}

int cmd_revise(const ReviseConfig& cfg) {
  StratifiedKB kb = load_stratified_kb(cfg.kb_path);
  Formula phi = parse_formula(cfg.phi_text);
  RevisionOutcome outcome = run_method(cfg.method, kb, phi);
  Signature run_sig = signature_of(kb, phi);

  bool want_models =
      cfg.output_mode.empty() ? !outcome.is_base() : cfg.output_mode == "models";

  std::optional<Base> base_view;
  std::optional<ModelSet> model_view;
  if (want_models) {
    model_view = outcome.model_set ? *outcome.model_set
                                   : enumerate_models(*outcome.base, run_sig);
  } else {
    base_view = outcome.base
                    ? *outcome.base
                    : Base{formula_of_models(*outcome.model_set)};
  }

  if (cfg.json) {
    nlohmann::json doc;
    doc["method"] = cfg.method;
    if (base_view) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& f : *base_view) arr.push_back(f.text());
      doc["base"] = std::move(arr);
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (std::size_t i = 0; i < model_view->size(); ++i)
        arr.push_back(model_view->interpretation(i).true_atoms());
      doc["models"] = std::move(arr);
    }
    doc["trace"] = trace_json(outcome.trace);
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }

  if (base_view) {
    for (const auto& f : *base_view) std::cout << f.text() << "\n";
  } else {
    for (std::size_t i = 0; i < model_view->size(); ++i)
      std::cout << model_line(model_view->interpretation(i)) << "\n";
  }
  if (cfg.explain) print_trace_text(outcome.trace);
  return kExitOk;
}

int cmd_kernel(const std::string& kb_path, const std::string& base_path,
               const std::string& phi_text) {
  Base target;
  if (!base_path.empty())
    target = load_base_file(base_path);
  else
    target = load_stratified_kb(kb_path).union_all();
  if (!phi_text.empty()) target.insert(parse_formula(phi_text));

  auto found = conflicts(target);
  if (found.empty()) {
    std::cout << "consistent\n";
    return kExitOk;
  }
  Base all;
  for (const auto& c : found) {
    std::cout << "conflict: " << join_formulas(c) << "\n";
    for (const auto& f : c) all.insert(f);
  }
  std::cout << "kernel: " << join_formulas(all) << "\n";
  return kExitOk;
}

int cmd_lex(const std::string& kb_path, const std::string& phi_text,
            const std::string& query_text) {
  StratifiedKB kb = load_stratified_kb(kb_path);
  Formula phi = parse_formula(phi_text);
  Formula query = parse_formula(query_text);
  bool verdict = lex_entails(kb, phi, query);
  std::cout << (verdict ? "true" : "false") << "\n";
  return verdict ? kExitOk : kExitNegative;
}

int cmd_check_equiv(const std::string& left_path,
                    const std::string& right_path) {
  Base left = load_base_file(left_path);
  Base right = load_base_file(right_path);
  bool verdict = equivalent(left, right);
  std::cout << (verdict ? "true" : "false") << "\n";
  return verdict ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conflict-resolving revision for stratified propositional "
               "knowledge bases"};
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t atom_cap = 0;
  app.add_option("--atom-cap", atom_cap,
                 "Model enumeration limit in atoms (default 24)")
      ->envname("STRATREV_ATOM_CAP");

  ReviseConfig revise_cfg;
  auto* revise = app.add_subcommand(
      "revise", "Revise a stratified KB with a sure formula");
  revise->add_option("--kb", revise_cfg.kb_path, "Stratified KB file")
      ->required();
  revise->add_option("--phi", revise_cfg.phi_text, "Sure formula")->required();
  revise->add_option("--method", revise_cfg.method,
                     "Revision method (default dma)")
      ->check(CLI::IsMember({"dma", "whole-dma", "dr", "cmr"}));
  revise->add_option("--output", revise_cfg.output_mode,
                     "Render as a formula base or as models")
      ->check(CLI::IsMember({"base", "models"}));
  revise->add_flag("--json", revise_cfg.json, "Machine-readable output");
  revise->add_flag("--explain", revise_cfg.explain,
                   "Print the per-stratum trace");

  std::string kernel_kb, kernel_base, kernel_phi;
  auto* kern = app.add_subcommand(
      "kernel", "List minimal conflicts and the kernel of a base");
  auto* kern_kb_opt =
      kern->add_option("--kb", kernel_kb, "Stratified KB file (strata are "
                                          "flattened)");
  kern->add_option("--base", kernel_base, "Flat base file, one formula per "
                                          "line")
      ->excludes(kern_kb_opt);
  kern->add_option("--phi", kernel_phi, "Optional sure formula to include");

  std::string lex_kb, lex_phi, lex_query;
  auto* lex = app.add_subcommand(
      "lex", "Decide lexicographic consequence (oracle; small inputs only)");
  lex->add_option("--kb", lex_kb, "Stratified KB file")->required();
  lex->add_option("--phi", lex_phi, "Sure formula")->required();
  lex->add_option("--query", lex_query, "Formula to test")->required();

  std::string equiv_left, equiv_right;
  auto* equiv = app.add_subcommand(
      "check-equiv", "Decide logical equivalence of two formula lists");
  equiv->add_option("left", equiv_left, "Base file")->required();
  equiv->add_option("right", equiv_right, "Base file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (atom_cap != 0) set_enumeration_cap(atom_cap);
    if (revise->parsed()) return cmd_revise(revise_cfg);
    if (kern->parsed()) {
      if (kernel_kb.empty() && kernel_base.empty()) {
        std::cerr << "error: kernel needs --kb or --base\n";
        return kExitInputError;
      }
      return cmd_kernel(kernel_kb, kernel_base, kernel_phi);
    }
    if (lex->parsed()) return cmd_lex(lex_kb, lex_phi, lex_query);
    if (equiv->parsed()) return cmd_check_equiv(equiv_left, equiv_right);
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
