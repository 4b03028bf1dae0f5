// config.hpp
//
// Run configuration for the permtri command line: flags, with an optional JSON
// config file supplying defaults that flags override.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string group;       // type label, e.g. "A3", "I2(5)", "A1xB2"
  std::string matrix;      // JSON Coxeter matrix, alternative to group
  std::string c = "all";   // word such as "s1s2s3", or "all"
  std::string base_point = "canonical";  // canonical | seed:N
  std::string out_dir;     // empty: write to stdout
  std::string cache_dir;
  std::size_t size_cap = 2'000'000;
  int lp_attempts = 60;
  bool allow_large = false;
};

extern const std::vector<std::string> kCommands;
extern const char* const kCacheEnv;

// Returns nullopt after printing help.  Throws UsageError on bad input.
std::optional<RunConfig> parse_run_config(int argc, char** argv);

// "canonical" gives nullopt, "seed:N" gives N.
std::optional<std::uint64_t> parse_base_point(const std::string& text);

std::vector<std::vector<int>> parse_matrix(const std::string& json_text);
