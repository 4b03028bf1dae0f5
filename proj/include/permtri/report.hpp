// report.hpp
//
// JSON reports for one (W, c).

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "permtri/theorems.hpp"

namespace permtri {

struct RunOptions {
  std::optional<std::uint64_t> seed;  // base point; canonical when empty
  int lp_attempts = 60;
  bool regular = false;
  bool theorems = false;
  bool conjectures = false;
  bool jv = false;
};

struct RunOutcome {
  nlohmann::json report;
  bool pass = true;  // certificates, and every requested theorem, regularity and identity check
};

std::string scalar_json(const Scalar& s);
nlohmann::json vec_json(const Vec& v);

// Certifies the triangulation and runs the requested suites.
RunOutcome run_report(const CoxeterSystem& W, Elem c, const RunOptions& opt);

}  // namespace permtri
