// sbdw.cpp

#include "permtri/sbdw.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace permtri {

Sbdw::Sbdw(const CoxeterSystem& W, Elem c)
    : W_(&W), dual_(W, c), cinv_(W, dual_.c_inverse_word()), plus_flag_(W.order(), 0), by_u_(W.order()) {
  w_plus_ = w_c_plus(W, c);
  for (Elem u : w_plus_) plus_flag_[u] = 1;
  const int r = W.rank();
  for (Elem u : w_plus_) {
    Elem top = W.multiply(u, c);
    std::vector<Elem> path{u};
    TChain labels;
    std::vector<Cell> found;
    std::function<void(Elem)> dfs = [&](Elem x) {
      if (static_cast<int>(labels.size()) == r) {
        if (x != top) throw InternalError("saturated chain misses uc");
        int idx = dual_.chain_index(labels);
        if (idx < 0) throw InternalError("saturated chain label is not a reduced T-word of c");
        found.push_back(Cell{u, idx, path});
        return;
      }
      for (Elem z : W.bruhat_covers(x)) {
        if (!W.bruhat_leq(z, top)) continue;
        labels.push_back(W.reflection_index(W.multiply(W.inverse(x), z)));
        path.push_back(z);
        dfs(z);
        path.pop_back();
        labels.pop_back();
      }
    };
    dfs(u);
    std::sort(found.begin(), found.end(), [](const Cell& a, const Cell& b) { return a.chain < b.chain; });
    for (auto& cell : found) {
      by_u_[u].push_back(static_cast<int>(cells_.size()));
      cells_.push_back(std::move(cell));
    }
  }
}

bool Sbdw::concordant(Elem u, const TChain& chain) const {
  Elem x = u;
  for (int t : chain) {
    Elem z = W_->times_reflection(x, t);
    if (W_->length(z) <= W_->length(x)) return false;
    x = z;
  }
  return true;
}

std::vector<int> Sbdw::classes_of(Elem u) const {
  std::set<int> out;
  for (int k : by_u_[u]) out.insert(dual_.class_of_chain(cells_[k].chain));
  return {out.begin(), out.end()};
}

int Sbdw::decreasing_class(Elem u) const {
  for (int k : classes_of(u))
    if (dual_.classes()[k].decreasing) return k;
  return -1;
}

std::vector<Elem> Sbdw::bruhat_interval(Elem lo, Elem hi) const {
  std::vector<Elem> out;
  for (Elem w = 0; w < W_->order(); ++w)
    if (W_->length(w) >= W_->length(lo) && W_->length(w) <= W_->length(hi) && W_->bruhat_leq(lo, w) &&
        W_->bruhat_leq(w, hi))
      out.push_back(w);
  return out;
}

namespace {

std::vector<Vec> orbit(const CoxeterSystem& W, const Vec& y) {
  std::vector<Vec> pts(W.order());
  for (Elem w = 0; w < W.order(); ++w) pts[w] = W.act(w, y);
  return pts;
}

Scalar abs_scalar(const Scalar& s) { return s.sign() < 0 ? -s : s; }

}  // namespace

Certificate certify(const Sbdw& T, const Vec& y, ApexRule rule) {
  const CoxeterSystem& W = T.group();
  const int r = W.rank();
  if (!in_fundamental_chamber(W, y)) throw InvalidInput("base point outside the fundamental chamber");
  Certificate cert;
  auto pts = orbit(W, y);
  const auto& cells = T.cells();

  cert.nondegenerate = true;
  cert.volume_sum = W.zero();
  for (std::size_t k = 0; k < cells.size(); ++k) {
    std::vector<Vec> verts;
    for (Elem w : cells[k].vertices) verts.push_back(pts[w]);
    Scalar d = simplex_det(verts);
    if (d.is_zero() && cert.nondegenerate) {
      cert.nondegenerate = false;
      cert.failure = "degenerate cell " + std::to_string(k);
    }
    cert.volume_sum += abs_scalar(d);
    cert.dets.push_back(std::move(d));
  }

  std::map<std::vector<Elem>, std::vector<std::pair<int, int>>> facets;
  for (std::size_t k = 0; k < cells.size(); ++k)
    for (int i = 0; i <= r; ++i) {
      std::vector<Elem> key;
      for (int j = 0; j <= r; ++j)
        if (j != i) key.push_back(cells[k].vertices[j]);
      std::sort(key.begin(), key.end());
      facets[key].emplace_back(static_cast<int>(k), i);
    }

  cert.facet_matched = true;
  auto fail = [&](const std::string& why) {
    if (cert.facet_matched) cert.failure += (cert.failure.empty() ? "" : "; ") + why;
    cert.facet_matched = false;
  };
  std::map<std::pair<Elem, int>, bool> coset_ok;
  for (const auto& [key, owners] : facets) {
    if (owners.size() > 2) {
      fail("facet shared by " + std::to_string(owners.size()) + " cells");
      continue;
    }
    if (owners.size() == 2) {
      auto [a, ia] = owners[0];
      auto [b, ib] = owners[1];
      std::vector<Vec> va, vb;
      for (Elem w : key) va.push_back(pts[w]);
      vb = va;
      va.push_back(pts[cells[a].vertices[ia]]);
      vb.push_back(pts[cells[b].vertices[ib]]);
      if (simplex_det(va).sign() * simplex_det(vb).sign() >= 0)
        fail("cells " + std::to_string(a) + " and " + std::to_string(b) + " on the same side of a facet");
      bool diamond = cells[a].u == cells[b].u && ia == ib && ia > 0 && ia < r;
      bool shift = cells[a].u != cells[b].u && ((ia == 0 && ib == r) || (ia == r && ib == 0));
      if (!diamond && !shift) fail("interior facet of unexpected type");
      cert.interior.push_back({a, ia, b, ib, diamond});
      continue;
    }
    auto [a, ia] = owners[0];
    Elem x0 = key.front();
    Elem x0inv = W.inverse(x0);
    unsigned used = 0;
    for (Elem x : key) used |= W.support(W.multiply(x0inv, x));
    int s = -1;
    for (int j = 0; j < r && s < 0; ++j)
      if (!(used >> j & 1)) s = j;
    if (s < 0) {
      fail("unmatched facet of cell " + std::to_string(a) + " is not on the boundary");
      continue;
    }
    Elem cmin = x0;
    for (Elem w = 0; w < W.order(); ++w)
      if (!(W.support(W.multiply(x0inv, w)) >> s & 1)) {
        cmin = w;
        break;
      }
    Mat mx = W.matrix(x0inv);
    auto coord = [&](Elem w) { return dot(mx[s], pts[w]); };
    auto it = coset_ok.find({cmin, s});
    if (it == coset_ok.end()) {
      bool ok = true;
      for (Elem w = 0; w < W.order() && ok; ++w) {
        bool in_coset = !(W.support(W.multiply(x0inv, w)) >> s & 1);
        int sg = (coord(w) - y[s]).sign();
        if (in_coset ? sg != 0 : sg >= 0) ok = false;
      }
      it = coset_ok.emplace(std::make_pair(cmin, s), ok).first;
    }
    if (!it->second) fail("coset functional does not support its coset");
    if (coord(cells[a].vertices[ia]) >= y[s]) fail("cell crosses a boundary facet");
    cert.boundary.push_back({a, ia, cmin, s});
  }

  cert.volume_oracle = permutahedron_volume(W, y, rule);
  cert.volume_equal = cert.volume_sum == cert.volume_oracle;
  if (!cert.volume_equal)
    cert.failure += (cert.failure.empty() ? "" : "; ") + std::string("volume sum differs from oracle");
  return cert;
}

Scalar lift_height(const CoxeterSystem& W, const Vec& gamma, const Vec& y, const Rational& eps, Elem w) {
  mpz_class p = 1;
  p <<= W.length(w);
  Rational shift = eps * Rational(p);
  return W.pair(gamma, W.act(W.inverse(w), y)) - Scalar(W.field(), shift);
}

HeightCheck check_heights(const Sbdw& T, const Certificate& cert, const Vec& y, const Vec& gamma,
                          const Rational& eps) {
  const CoxeterSystem& W = T.group();
  const int r = W.rank();
  auto pts = orbit(W, y);
  std::vector<Scalar> h(W.order());
  for (Elem w = 0; w < W.order(); ++w) h[w] = lift_height(W, gamma, y, eps, w);
  const auto& cells = T.cells();
  std::vector<Vec> planes(cells.size());
  HeightCheck out;
  out.ok = true;
  auto above = [&](int k, Elem w) {
    Scalar v = planes[k][r];
    for (int j = 0; j < r; ++j) v += planes[k][j] * pts[w][j];
    return (h[w] - v).sign();
  };
  for (std::size_t k = 0; k < cells.size(); ++k) {
    Mat m(r + 1, Vec(r + 1));
    Vec rhs(r + 1);
    for (int i = 0; i <= r; ++i) {
      Elem w = cells[k].vertices[i];
      for (int j = 0; j < r; ++j) m[i][j] = pts[w][j];
      m[i][r] = W.one();
      rhs[i] = h[w];
    }
    auto sol = solve(m, rhs);
    if (!sol) throw InternalError("degenerate cell in height check");
    planes[k] = *sol;
  }
  for (std::size_t k = 0; k < cells.size() && out.ok; ++k) {
    std::vector<char> in_cell(W.order(), 0);
    for (Elem w : cells[k].vertices) in_cell[w] = 1;
    for (Elem w = 0; w < W.order(); ++w) {
      if (in_cell[w] || above(static_cast<int>(k), w) > 0) continue;
      out.ok = false;
      out.cell = static_cast<int>(k);
      out.violator = w;
      out.message = "vertex " + W.word_string(w) + " not strictly above the lifted cell " + std::to_string(k) +
                    " (u = " + W.word_string(cells[k].u) + ")";
      break;
    }
  }
  out.folding_ok = true;
  for (const auto& f : cert.interior) {
    if (above(f.cell_a, cells[f.cell_b].vertices[f.omit_b]) <= 0 ||
        above(f.cell_b, cells[f.cell_a].vertices[f.omit_a]) <= 0) {
      out.folding_ok = false;
      break;
    }
  }
  if (out.ok && !out.folding_ok) {
    out.ok = false;
    out.message = "local folding condition fails";
  }
  return out;
}

Regularity certify_regular(const Sbdw& T, const Certificate& cert, const Vec& y, int max_attempts) {
  Regularity reg;
  if (!cert.ok()) {
    reg.failure = "triangulation certificate failed";
    return reg;
  }
  std::optional<Vec> gamma;
  try {
    gamma = find_stable_gamma(T.dual(), y);
  } catch (const InvalidInput& e) {
    reg.failure = e.what();
    return reg;
  }
  if (!gamma) {
    reg.failure = "no totally stable gamma for this base point";
    return reg;
  }
  reg.found_gamma = true;
  for (int sign : {1, -1}) {
    Vec g = sign > 0 ? *gamma : scale(*gamma, -T.group().one());
    Rational eps(1);
    for (int k = 0; k < max_attempts; ++k, eps /= 2) {
      ++reg.attempts;
      HeightCheck hc = check_heights(T, cert, y, g, eps);
      if (hc.ok) {
        reg.certified = true;
        reg.negated_gamma = sign < 0;
        reg.gamma = g;
        reg.epsilon = eps;
        return reg;
      }
      reg.failure = hc.message;
    }
  }
  reg.gamma = *gamma;
  return reg;
}

}  // namespace permtri
