// permtri.cpp
//
// Command-line front end.  Exit codes: 0 all checks pass, 1 a certificate,
// theorem or identity check failed, 2 usage error.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "config.hpp"
#include "permtri/export.hpp"
#include "permtri/report.hpp"

using namespace permtri;
using nlohmann::json;

namespace {

constexpr int kDeskCap = 1152;

std::string file_stem(const CoxeterSystem& W, const std::vector<int>& word) {
  std::string out;
  for (char ch : W.label())
    if (std::isalnum(static_cast<unsigned char>(ch))) out += ch;
  return out + "-" + format_word(word);
}

void emit(const RunConfig& cfg, const std::string& name, const std::string& content) {
  if (cfg.out_dir.empty()) {
    std::cout << content;
    return;
  }
  std::filesystem::create_directories(cfg.out_dir);
  std::ofstream(std::filesystem::path(cfg.out_dir) / name, std::ios::binary) << content;
}

std::vector<Elem> select_elements(const CoxeterSystem& W, const std::string& spec) {
  if (spec == "all") return W.coxeter_elements();
  std::vector<int> word;
  try {
    word = parse_word(spec);
  } catch (const InvalidInput& e) {
    throw UsageError(std::string("malformed Coxeter word: ") + e.what());
  }
  for (int s : word)
    if (s < 0 || s >= W.rank()) throw UsageError("generator out of range in '" + spec + "'");
  if (!W.is_standard_coxeter_word(word))
    throw UsageError("'" + spec + "' is not a standard Coxeter element (each generator exactly once)");
  return {W.from_word(word)};
}

int run(const RunConfig& cfg) {
  BuildOptions bo;
  bo.size_cap = cfg.size_cap;
  bo.cache_dir = cfg.cache_dir;
  CoxeterSystem W = cfg.matrix.empty() ? CoxeterSystem::build(cfg.group, bo)
                                       : CoxeterSystem::from_matrix(parse_matrix(cfg.matrix), bo);

  if (cfg.command == "build") {
    json j = {{"group", W.label()},
              {"rank", W.rank()},
              {"order", W.order()},
              {"reflections", W.num_reflections()},
              {"degrees", W.degrees()},
              {"coxeter_number", W.coxeter_number()},
              {"field", W.field()->describe()}};
    json words = json::array();
    for (Elem c : W.coxeter_elements()) words.push_back(format_word(W.reduced_word(c)));
    j["coxeter_elements"] = words;
    emit(cfg, "group-" + file_stem(W, {}) + ".json", j.dump(2) + "\n");
    return 0;
  }

  const bool suites = cfg.command == "theorems" || cfg.command == "conjectures" || cfg.command == "report";
  if (suites && W.order() > kDeskCap && !cfg.allow_large)
    throw UsageError("|W| = " + std::to_string(W.order()) + " exceeds the desk-scale cap of " +
                     std::to_string(kDeskCap) + " for " + cfg.command + "; pass --allow-large to override");
  if (W.order() > kDeskCap) std::cerr << "warning: |W| = " << W.order() << ", this may take a long time\n";

  auto elements = select_elements(W, cfg.c);
  auto seed = parse_base_point(cfg.base_point);
  const bool to_stdout = cfg.out_dir.empty();

  if (cfg.command == "export-off" || cfg.command == "export-svg") {
    if (to_stdout && elements.size() > 1) throw UsageError("exporting several Coxeter elements needs --out");
    if (cfg.command == "export-svg" && W.rank() != 3) throw UsageError("export-svg needs a rank-3 group");
    for (Elem c : elements) {
      Sbdw T(W, c);
      std::string stem = file_stem(W, T.dual().c_word());
      if (cfg.command == "export-off") emit(cfg, stem + ".off", export_off(T, base_point(W, seed)));
      else emit(cfg, stem + ".svg", export_svg(T));
    }
    return 0;
  }

  RunOptions opt;
  opt.seed = seed;
  opt.lp_attempts = cfg.lp_attempts;
  opt.regular = cfg.command == "regular" || (cfg.command == "report" && W.field()->is_rational());
  opt.theorems = cfg.command == "theorems" || cfg.command == "report";
  opt.conjectures = cfg.command == "conjectures" || cfg.command == "report";
  opt.jv = cfg.command == "jv" || cfg.command == "report";

  bool all_pass = true;
  json reports = json::array();
  for (Elem c : elements) {
    RunOutcome o = run_report(W, c, opt);
    all_pass = all_pass && o.pass;
    std::cerr << W.label() << " c=" << o.report["coxeter_element_word"].get<std::string>() << ": "
              << (o.pass ? "PASS" : "FAIL") << " (" << o.report["cell_count"] << " cells)\n";
    if (to_stdout) reports.push_back(std::move(o.report));
    else emit(cfg, "report-" + file_stem(W, W.reduced_word(c)) + ".json", o.report.dump(2) + "\n");
  }
  if (to_stdout) std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    auto cfg = parse_run_config(argc, argv);
    if (!cfg) return 0;
    return run(*cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const GroupTooLarge& e) {
    std::cerr << "group too large: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
