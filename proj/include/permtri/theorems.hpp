// theorems.hpp
//
// Exhaustive checks of the structural theorems about the triangulation, the
// q-identity over maximal noncrossing chains, the noncrossing Bruhat order and
// the conjecture scans.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "permtri/sbdw.hpp"

namespace permtri {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // counterexample or summary
};

struct TheoremReport {
  std::vector<CheckResult> checks;
  int class_count = 0;  // distinct Class_c(u)
  Rational cat_plus;
  bool all_pass() const;
};

// Translation-free test: a label-preserving isomorphism of the edge-labelled
// intervals [u1, u1 c]_B and [u2, u2 c]_B, searched by propagation from the bottom.
bool reflection_isomorphic(const Sbdw& T, Elem u1, Elem u2);

// Six checks, exhaustive over W_c^+ and the reduced T-words of c.
TheoremReport theorem_suite(const Sbdw& T);

struct JvResult {
  std::vector<long long> lhs;  // coefficient of q^k
  std::vector<Rational> rhs;
  bool equal = false;
};

// sum over chains of q^{wt}, wt = number of length descents along e = pi_0, ..., pi_r = c,
// against r!/|W| prod_i (d_i + q (h - d_i)).
JvResult jv_polynomial(const DualStructure& D);

struct NcbOrder {
  std::vector<std::vector<Elem>> up;        // covers w < w'
  std::map<std::pair<Elem, Elem>, int> label;  // reflection w^{-1} w'
  bool labels_consistent = true;
  bool diamonds_connected = true;
  bool basification = true;
  int diamonds_checked = 0;
  std::string failure;
  bool ok() const { return labels_consistent && diamonds_connected && basification; }
};

NcbOrder ncb_order(const Sbdw& T);

struct PosetAnalysis {
  bool lattice = false;
  bool sd_meet = false;
  bool sd_join = false;
  std::vector<std::pair<int, int>> hasse;  // (lower, upper)
  std::string witness;
};

// leq must be reflexive and transitive.
PosetAnalysis analyze_poset(const std::vector<std::vector<char>>& leq);
// Reflexive-transitive closure of a cover digraph on n elements.
std::vector<std::vector<char>> closure_of_covers(const std::vector<std::vector<int>>& up);

struct ConjectureScan {
  bool ncb_lattice = false;
  bool class_lattice = false;
  bool class_semidistributive = false;
  bool class_regular = false;
  bool adjacency_facet = false;
  std::vector<std::string> witnesses;
  bool all_pass() const {
    return ncb_lattice && class_lattice && class_semidistributive && class_regular && adjacency_facet;
  }
};

// Class_c(u) ordered by containment of cones spanned by delta vectors.
std::vector<std::vector<char>> class_poset(const Sbdw& T, Elem u, const std::vector<Vec>& delta);

ConjectureScan conjecture_scan(const Sbdw& T, const Certificate& cert, const NcbOrder& ncb);

}  // namespace permtri
