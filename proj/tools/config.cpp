// config.cpp

#include "config.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

const std::vector<std::string> kCommands = {"build", "verify", "regular", "theorems", "conjectures",
                                            "jv", "export-off", "export-svg", "report"};
const char* const kCacheEnv = "PERMTRI_CACHE_DIR";

std::optional<std::uint64_t> parse_base_point(const std::string& text) {
  if (text == "canonical") return std::nullopt;
  if (text.rfind("seed:", 0) == 0 && text.size() > 5) {
    std::string digits = text.substr(5);
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 19)
      return std::stoull(digits);
  }
  throw UsageError("base point must be 'canonical' or 'seed:N', got '" + text + "'");
}

std::vector<std::vector<int>> parse_matrix(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed Coxeter matrix: ") + e.what());
  }
  if (!j.is_array()) throw UsageError("Coxeter matrix must be a JSON array of arrays");
  std::vector<std::vector<int>> m;
  for (const auto& row : j) {
    if (!row.is_array()) throw UsageError("Coxeter matrix must be a JSON array of arrays");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw UsageError("Coxeter matrix entries must be integers");
      r.push_back(x.get<int>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

std::optional<RunConfig> parse_run_config(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"permtri: triangulations of W-permutahedra from reduced T-words"};
  std::string config_path;
  app.add_option("command", cfg.command, "one of: build verify regular theorems conjectures jv "
                                         "export-off export-svg report")
      ->required()
      ->check(CLI::IsMember(kCommands));
  auto* o_group = app.add_option("--group", cfg.group, "type label, e.g. A3, B4, H3, I2(5), A1xA2");
  auto* o_matrix = app.add_option("--matrix", cfg.matrix, "Coxeter matrix as JSON, e.g. [[1,3],[3,1]]");
  auto* o_c = app.add_option("--c", cfg.c, "Coxeter element word (s1s2s3) or 'all'");
  auto* o_bp = app.add_option("--base-point", cfg.base_point, "canonical or seed:N");
  auto* o_out = app.add_option("--out", cfg.out_dir, "output directory (default: stdout)");
  auto* o_cache = app.add_option("--cache-dir", cfg.cache_dir, "group table cache directory");
  auto* o_cap = app.add_option("--size-cap", cfg.size_cap, "maximum group order to enumerate");
  auto* o_lp = app.add_option("--lp-attempts", cfg.lp_attempts, "epsilon halvings in the regularity search");
  app.add_option("--config", config_path, "JSON config file; flags take precedence");
  auto* o_large = app.add_flag("--allow-large", cfg.allow_large, "lift the |W| <= 1152 cap of the suites");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw UsageError("cannot read config file " + config_path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("malformed config file: ") + e.what());
    }
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    auto take = [&](const char* key, CLI::Option* opt, auto& field) {
      if (!j.contains(key) || opt->count() > 0) return;
      try {
        j.at(key).get_to(field);
      } catch (const nlohmann::json::exception&) {
        throw UsageError(std::string("bad value for '") + key + "' in config file");
      }
    };
    take("group", o_group, cfg.group);
    take("coxeter_element", o_c, cfg.c);
    take("base_point", o_bp, cfg.base_point);
    take("output_dir", o_out, cfg.out_dir);
    take("cache_dir", o_cache, cfg.cache_dir);
    take("size_cap", o_cap, cfg.size_cap);
    take("lp_attempts", o_lp, cfg.lp_attempts);
    take("allow_large", o_large, cfg.allow_large);
    if (j.contains("matrix") && o_matrix->count() == 0) cfg.matrix = j.at("matrix").dump();
    for (auto it = j.begin(); it != j.end(); ++it) {
      static const std::vector<std::string> known = {"group", "coxeter_element", "base_point", "output_dir",
                                                     "cache_dir", "size_cap", "lp_attempts", "allow_large",
                                                     "matrix"};
      if (std::find(known.begin(), known.end(), it.key()) == known.end())
        throw UsageError("unknown config key '" + it.key() + "'");
    }
  }
  if (cfg.cache_dir.empty()) {
    if (const char* env = std::getenv(kCacheEnv)) cfg.cache_dir = env;
  }
  if (cfg.group.empty() == cfg.matrix.empty()) throw UsageError("give exactly one of --group and --matrix");
  if (cfg.lp_attempts < 1) throw UsageError("--lp-attempts must be positive");
  parse_base_point(cfg.base_point);
  return cfg;
}
