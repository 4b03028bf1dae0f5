// oracles.cpp

#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "permtri/linalg.hpp"

namespace oracle {

using namespace permtri;

Perm perm_of_word(int n, const std::vector<int>& word) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int a : word) std::swap(p[a], p[a + 1]);  // p o s_a
  return p;
}

Perm perm_of(const CoxeterSystem& W, Elem w) { return perm_of_word(W.rank() + 1, W.reduced_word(w)); }

int perm_inversions(const Perm& p) {
  int k = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) k += p[i] > p[j];
  return k;
}

int perm_cycles(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  int k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++k;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = 1;
  }
  return k;
}

std::pair<int, int> transposition(const CoxeterSystem& W, Elem t) {
  Perm p = perm_of(W, t);
  std::vector<int> moved;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) moved.push_back(static_cast<int>(i) + 1);
  if (moved.size() != 2) return {0, 0};
  return {moved[0], moved[1]};
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      if (j != i) out += " ";
      out += std::to_string(j + 1);
      seen[j] = 1;
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

bool bruhat_subword(const CoxeterSystem& W, Elem u, Elem v) {
  std::vector<char> reach(W.order(), 0), next;
  reach[0] = 1;
  for (int s : W.reduced_word(v)) {
    next = reach;
    for (Elem x = 0; x < W.order(); ++x)
      if (reach[x]) next[W.rmul(x, s)] = 1;
    reach.swap(next);
  }
  return reach[u] != 0;
}

std::vector<Elem> covers_by_reflections(const CoxeterSystem& W, Elem x) {
  std::vector<Elem> out;
  for (int t = 0; t < W.num_reflections(); ++t) {
    Elem y = W.multiply(x, W.reflection(t));
    if (W.length(y) == W.length(x) + 1) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Elem>> saturated_chains(const CoxeterSystem& W, Elem lo, Elem hi) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> path{lo};
  std::function<void(Elem)> walk = [&](Elem x) {
    if (x == hi) {
      out.push_back(path);
      return;
    }
    if (W.length(x) >= W.length(hi)) return;
    for (Elem y : covers_by_reflections(W, x)) {
      if (!bruhat_subword(W, y, hi)) continue;
      path.push_back(y);
      walk(y);
      path.pop_back();
    }
  };
  walk(lo);
  return out;
}

std::vector<int> reflection_lengths_bfs(const CoxeterSystem& W) {
  std::vector<int> dist(W.order(), -1);
  std::deque<Elem> q{0};
  dist[0] = 0;
  while (!q.empty()) {
    Elem x = q.front();
    q.pop_front();
    for (int t = 0; t < W.num_reflections(); ++t) {
      Elem y = W.multiply(x, W.reflection(t));
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> reduced_t_words(const CoxeterSystem& W, Elem c) {
  const int r = W.rank(), N = W.num_reflections();
  std::vector<std::vector<int>> out;
  std::vector<int> word(r, 0);
  while (true) {
    Elem p = 0;
    for (int t : word) p = W.multiply(p, W.reflection(t));
    if (p == c) out.push_back(word);
    int i = r - 1;
    while (i >= 0 && word[i] == N - 1) word[i--] = 0;
    if (i < 0) break;
    ++word[i];
  }
  return out;
}

std::set<std::pair<Elem, std::vector<int>>> omega(const CoxeterSystem& W, Elem c) {
  std::set<std::pair<Elem, std::vector<int>>> out;
  const int r = W.rank();
  for (Elem u = 0; u < W.order(); ++u) {
    Elem uc = W.multiply(u, c);
    if (W.length(uc) != W.length(u) + r) continue;
    for (const auto& chain : saturated_chains(W, u, uc)) {
      std::vector<int> tw;
      Elem prefix = 0;
      bool ok = true;
      for (std::size_t i = 1; i < chain.size(); ++i) {
        Elem t = W.multiply(W.inverse(chain[i - 1]), chain[i]);
        int idx = W.reflection_index(t);
        if (idx < 0) ok = false;
        tw.push_back(idx);
        prefix = W.multiply(prefix, t);
      }
      if (ok && prefix == c) out.insert({u, tw});
    }
  }
  return out;
}

bool sortable_recursive(const CoxeterSystem& W, Elem w, std::vector<int> c_word) {
  if (w == 0) return true;
  if (c_word.empty()) return false;
  int s = c_word.front();
  Elem sw = W.lmul(s, w);
  if (W.length(sw) < W.length(w)) {
    std::rotate(c_word.begin(), c_word.begin() + 1, c_word.end());
    return sortable_recursive(W, sw, c_word);
  }
  if (W.support(w) & (1u << s)) return false;
  c_word.erase(c_word.begin());
  return sortable_recursive(W, w, c_word);
}

std::map<std::pair<int, int>, bool> heap_by_commutation(const CoxeterSystem& W, const std::vector<int>& word) {
  const auto& m = W.coxeter_matrix();
  std::set<std::vector<int>> seen{word};
  std::deque<std::vector<int>> q{word};
  while (!q.empty()) {
    auto w = q.front();
    q.pop_front();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (m[w[i]][w[i + 1]] != 2) continue;
      auto v = w;
      std::swap(v[i], v[i + 1]);
      if (seen.insert(v).second) q.push_back(v);
    }
  }
  const int N = W.num_reflections();
  std::vector<std::vector<char>> before(N, std::vector<char>(N, 1));
  for (const auto& w : seen) {
    auto inv = W.inversion_sequence(w);
    std::vector<int> pos(N, -1);
    for (std::size_t i = 0; i < inv.size(); ++i) pos[inv[i]] = static_cast<int>(i);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        if (pos[a] < 0 || pos[b] < 0 || pos[a] > pos[b]) before[a][b] = 0;
  }
  std::map<std::pair<int, int>, bool> out;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) out[{a, b}] = before[a][b] != 0;
  return out;
}

std::vector<Vec> delta_by_solving(const CoxeterSystem& W, Elem c) {
  const int r = W.rank();
  Mat m = W.matrix(W.inverse(c));
  Mat a = identity_mat(W.field(), r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a[i][j] -= m[i][j];
  std::vector<Vec> out;
  for (int t = 0; t < W.num_reflections(); ++t) out.push_back(*solve(a, W.coroot(t)));
  return out;
}

Scalar zonotope_volume(const CoxeterSystem& W) {
  const int r = W.rank(), N = W.num_reflections();
  Scalar sum = W.zero();
  std::vector<int> pick(r);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    Mat m(r, Vec(r, W.zero()));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) m[i][j] = W.coroot(pick[j])[i];
    Scalar d = det(m);
    sum += d.sign() < 0 ? -d : d;
    int i = r - 1;
    while (i >= 0 && pick[i] == N - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  long long f = 1;
  for (int k = 2; k <= r; ++k) f *= k;
  return sum.mul_rational(Rational(static_cast<long>(f)));
}

std::vector<Rational> jv_rhs(int r, long long order, int h, const std::vector<int>& degrees) {
  std::vector<Rational> poly{Rational(1)};
  for (int d : degrees) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k] * d;
      next[k + 1] += poly[k] * (h - d);
    }
    poly = next;
  }
  long long f = 1;
  for (int k = 2; k <= r; ++k) f *= k;
  Rational factor(static_cast<long>(f), static_cast<long>(order));
  factor.canonicalize();
  for (auto& x : poly) x *= factor;
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  return poly;
}

bool heights_regular(const Sbdw& T, const Vec& y, const Vec& gamma, const Rational& eps) {
  const CoxeterSystem& W = T.group();
  const int r = W.rank();
  std::vector<Scalar> h;
  std::vector<Vec> pts;
  for (Elem w = 0; w < W.order(); ++w) {
    h.push_back(lift_height(W, gamma, y, eps, w));
    pts.push_back(W.act(w, y));
  }
  for (const auto& cell : T.cells()) {
    Mat a;
    Vec b;
    for (Elem v : cell.vertices) {
      Vec row = pts[v];
      row.push_back(W.one());
      a.push_back(row);
      b.push_back(h[v]);
    }
    auto coef = solve(a, b);
    if (!coef) return false;
    std::set<Elem> in(cell.vertices.begin(), cell.vertices.end());
    for (Elem w = 0; w < W.order(); ++w) {
      if (in.count(w)) continue;
      Scalar plane = (*coef)[r];
      for (int i = 0; i < r; ++i) plane += (*coef)[i] * pts[w][i];
      if (!(h[w] > plane)) return false;
    }
  }
  return true;
}

bool is_lattice(const std::vector<std::vector<char>>& leq) {
  const int n = static_cast<int>(leq.size());
  auto unique_extreme = [&](bool upper) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::vector<int> bounds;
        for (int x = 0; x < n; ++x)
          if (upper ? (leq[a][x] && leq[b][x]) : (leq[x][a] && leq[x][b])) bounds.push_back(x);
        int found = 0;
        for (int x : bounds) {
          bool extreme = true;
          for (int y : bounds)
            if (upper ? !leq[x][y] : !leq[y][x]) extreme = false;
          found += extreme;
        }
        if (found != 1) return false;
      }
    return true;
  };
  return unique_extreme(true) && unique_extreme(false);
}

}  // namespace oracle
