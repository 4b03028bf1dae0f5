// geometry.cpp

#include "permtri/geometry.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "permtri/lp.hpp"

namespace permtri {

Vec base_point(const CoxeterSystem& W, std::optional<std::uint64_t> seed) {
  if (!seed) return W.canonical_base_point();
  std::mt19937_64 rng(*seed);
  Vec y = zero_vec(W.field(), W.rank());
  for (int s = 0; s < W.rank(); ++s) {
    Rational a(static_cast<long>(49 + rng() % 97), 97);
    a.canonicalize();
    y = add(y, scale(W.fundamental_weight(s), Scalar(W.field(), a)));
  }
  return y;
}

std::string base_point_name(std::optional<std::uint64_t> seed) {
  return seed ? "seed:" + std::to_string(*seed) : "canonical";
}

bool in_fundamental_chamber(const CoxeterSystem& W, const Vec& y) {
  for (int s = 0; s < W.rank(); ++s)
    if (W.pair(W.root(s), y).sign() <= 0) return false;
  return true;
}

std::vector<Vec> delta_vectors(const DualStructure& D) {
  const CoxeterSystem& W = D.group();
  SortingWord sw = sorting_word(W, W.w0(), D.c_inverse_word());
  std::vector<Vec> delta(W.num_reflections());
  Elem prefix = W.identity();
  Elem cinv = W.inverse(D.c());
  for (std::size_t i = 0; i < sw.letters.size(); ++i) {
    int s = sw.letters[i];
    int t = W.root_image(prefix, s);
    delta[t] = W.act(prefix, W.fundamental_weight(s));
    Vec lhs = sub(delta[t], W.act(cinv, delta[t]));
    if (lhs != W.coroot(t)) throw InternalError("delta vector fails (1 - c^{-1}) delta = coroot");
    prefix = W.rmul(prefix, s);
  }
  return delta;
}

std::vector<Vec> chamber_rays(const CoxeterSystem& W, Elem u) {
  Elem uinv = W.inverse(u);
  std::vector<Vec> rays;
  for (int s = 0; s < W.rank(); ++s) rays.push_back(W.act(uinv, W.fundamental_weight(s)));
  return rays;
}

bool cone_contains(const std::vector<Vec>& inner, const std::vector<Vec>& outer) {
  const int r = static_cast<int>(outer.size());
  Mat basis(r, Vec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) basis[i][j] = outer[j][i];
  auto inv = inverse(basis);
  if (!inv) throw InvalidInput("outer rays are not linearly independent");
  for (const Vec& v : inner)
    for (const Scalar& coef : mat_vec(*inv, v))
      if (coef.sign() < 0) return false;
  return true;
}

Scalar simplex_det(const std::vector<Vec>& verts) {
  const int r = static_cast<int>(verts.size()) - 1;
  Mat m(r, Vec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m[i][j] = verts[j + 1][i] - verts[0][i];
  return det(m);
}

namespace {

class Puller {
 public:
  Puller(const CoxeterSystem& W, ApexRule rule) : W_(W), rule_(rule) {}

  std::vector<Elem> coset(Elem x, unsigned J) const {
    std::vector<Elem> out{x};
    std::vector<char> seen(W_.order(), 0);
    seen[x] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (int s = 0; s < W_.rank(); ++s)
        if (J >> s & 1) {
          Elem y = W_.rmul(out[i], s);
          if (!seen[y]) {
            seen[y] = 1;
            out.push_back(y);
          }
        }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Simplices (vertex lists) triangulating the face x W_J.
  const std::vector<std::vector<Elem>>& triangulate(Elem x, unsigned J) {
    std::vector<Elem> elems = coset(x, J);
    auto key = std::make_pair(elems.front(), J);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<std::vector<Elem>> out;
    if (J == 0) {
      out.push_back({elems.front()});
    } else {
      Elem apex = rule_ == ApexRule::MinIndex ? elems.front()
                  : rule_ == ApexRule::MaxIndex ? elems.back()
                                                : elems[elems.size() / 2];
      for (int j = 0; j < W_.rank(); ++j) {
        if (!(J >> j & 1)) continue;
        unsigned K = J & ~(1u << j);
        std::vector<char> done(W_.order(), 0);
        for (Elem z : elems) {
          if (done[z]) continue;
          std::vector<Elem> facet = coset(z, K);
          for (Elem f : facet) done[f] = 1;
          if (std::binary_search(facet.begin(), facet.end(), apex)) continue;
          for (auto simplex : triangulate(z, K)) {
            simplex.push_back(apex);
            out.push_back(std::move(simplex));
          }
        }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  const CoxeterSystem& W_;
  ApexRule rule_;
  std::map<std::pair<Elem, unsigned>, std::vector<std::vector<Elem>>> memo_;
};

}  // namespace

Scalar permutahedron_volume(const CoxeterSystem& W, const Vec& y, ApexRule rule) {
  if (!in_fundamental_chamber(W, y)) throw InvalidInput("base point outside the fundamental chamber");
  Puller p(W, rule);
  unsigned all = (1u << W.rank()) - 1;
  std::vector<Vec> pts(W.order());
  for (Elem w = 0; w < W.order(); ++w) pts[w] = W.act(w, y);
  Scalar total = W.zero();
  for (const auto& simplex : p.triangulate(W.identity(), all)) {
    std::vector<Vec> verts;
    for (Elem w : simplex) verts.push_back(pts[w]);
    Scalar d = simplex_det(verts);
    if (d.is_zero()) throw InternalError("degenerate simplex in pulling triangulation");
    total += d.sign() < 0 ? -d : d;
  }
  return total;
}

Scalar stability_slope(const CoxeterSystem& W, const Vec& gamma, const Vec& y, int t) {
  return W.pair(gamma, W.coroot(t)) / W.pair(W.root(t), y);
}

bool is_totally_stable(const DualStructure& D, const Vec& gamma, const Vec& y) {
  const CoxeterSystem& W = D.group();
  const int N = W.num_reflections();
  std::vector<Scalar> mu(N);
  for (int t = 0; t < N; ++t) mu[t] = stability_slope(W, gamma, y, t);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (a != b && D.heap_leq(a, b) && !(mu[a] < mu[b])) return false;
  return true;
}

std::optional<Vec> find_stable_gamma(const DualStructure& D, const Vec& y) {
  const CoxeterSystem& W = D.group();
  if (!W.field()->is_rational()) throw InvalidInput("stability LP needs a rational realization");
  const int r = W.rank(), N = W.num_reflections();
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (int t = 0; t < N; ++t)
    for (int t2 = 0; t2 < N; ++t2) {
      if (t == t2 || !D.heap_leq(t, t2)) continue;
      Rational yt = W.pair(W.root(t), y).rational_part();
      Rational yt2 = W.pair(W.root(t2), y).rational_part();
      std::vector<Rational> row(r);
      for (int j = 0; j < r; ++j)
        row[j] = W.coroot(t)[j].rational_part() * yt2 - W.coroot(t2)[j].rational_part() * yt;
      A.push_back(row);
      b.push_back(-1);
    }
  auto g = lp_feasible(A, b);
  if (!g) return std::nullopt;
  // g_j = <gamma, a_j^v> = sum_i f_i C_ij, so C^T f = g.
  Vec gv(r);
  for (int j = 0; j < r; ++j) gv[j] = Scalar(W.field(), (*g)[j]);
  auto f = solve(transpose(W.cartan()), gv);
  if (!f) throw InternalError("singular Cartan matrix");
  if (!is_totally_stable(D, *f, y)) throw InternalError("LP solution is not totally stable");
  return f;
}

}  // namespace permtri
