// sbdw.hpp
//
// The triangulation of the W-permutahedron indexed by
// Omega = {(u, pi) : u in W_c^+, pi a reduced T-word of c, u pi concordant},
// its facet and volume certificates, and the regularity certificate.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permtri/absolute.hpp"
#include "permtri/cambrian.hpp"
#include "permtri/geometry.hpp"

namespace permtri {

struct Cell {
  Elem u = 0;
  int chain = -1;               // index into DualStructure::chains()
  std::vector<Elem> vertices;   // u pi_0, ..., u pi_r, a saturated Bruhat chain
};

class Sbdw {
 public:
  Sbdw(const CoxeterSystem& W, Elem c);
  Sbdw(const Sbdw&) = delete;
  Sbdw& operator=(const Sbdw&) = delete;

  const CoxeterSystem& group() const { return *W_; }
  const DualStructure& dual() const { return dual_; }
  Elem c() const { return dual_.c(); }
  // Cambrian structure for c^{-1} (word reversed(c_word)).
  const Cambrian& cinv_cambrian() const { return cinv_; }
  const std::vector<Elem>& w_plus() const { return w_plus_; }
  bool in_w_plus(Elem u) const { return plus_flag_[u] != 0; }

  // u pi_0 <_B u pi_1 <_B ... <_B u pi_r.
  bool concordant(Elem u, const TChain& chain) const;
  // Cells sorted by (u, chain index).
  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<int>& cells_of(Elem u) const { return by_u_[u]; }
  // Class_c(u), sorted class indices.
  std::vector<int> classes_of(Elem u) const;
  // Index of the decreasing class in Class_c(u); -1 when there is none.
  int decreasing_class(Elem u) const;
  std::vector<Elem> bruhat_interval(Elem lo, Elem hi) const;

 private:
  const CoxeterSystem* W_;
  DualStructure dual_;
  Cambrian cinv_;
  std::vector<Elem> w_plus_;
  std::vector<char> plus_flag_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> by_u_;
};

struct InteriorFacet {
  int cell_a, omit_a, cell_b, omit_b;
  bool diamond;  // same u and same omitted index; otherwise an index-0 / index-r shift
};

struct BoundaryFacet {
  int cell, omitted;
  Elem coset_min;  // least element of the coset x W_{S - s}
  int s;
};

struct Certificate {
  bool nondegenerate = false;
  bool facet_matched = false;
  bool volume_equal = false;
  std::vector<Scalar> dets;
  Scalar volume_sum, volume_oracle;
  std::vector<InteriorFacet> interior;
  std::vector<BoundaryFacet> boundary;
  std::string failure;
  bool ok() const { return nondegenerate && facet_matched && volume_equal; }
};

Certificate certify(const Sbdw& T, const Vec& y, ApexRule rule = ApexRule::MinIndex);

// Height of the vertex w y: <gamma, w^{-1} y> - eps 2^{l(w)}.
Scalar lift_height(const CoxeterSystem& W, const Vec& gamma, const Vec& y, const Rational& eps, Elem w);

struct HeightCheck {
  bool ok = false;
  bool folding_ok = false;  // local condition across interior facets
  int cell = -1;            // first failing cell
  Elem violator = -1;       // vertex on or below that cell's lifted hyperplane
  std::string message;
};

HeightCheck check_heights(const Sbdw& T, const Certificate& cert, const Vec& y, const Vec& gamma,
                          const Rational& eps);

struct Regularity {
  bool found_gamma = false;
  bool certified = false;
  bool negated_gamma = false;
  Vec gamma;
  Rational epsilon;
  int attempts = 0;
  std::string failure;
};

// Finds a totally stable gamma by LP and halves eps from 1 until the heights
// certify the triangulation as regular, for at most max_attempts values of eps.
Regularity certify_regular(const Sbdw& T, const Certificate& cert, const Vec& y, int max_attempts = 60);

}  // namespace permtri
