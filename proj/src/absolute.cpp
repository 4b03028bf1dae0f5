// absolute.cpp

#include "permtri/absolute.hpp"

#include <algorithm>
#include <functional>

namespace permtri {

int reflection_length(const CoxeterSystem& W, Elem w) {
  Mat m = W.matrix(w);
  for (int i = 0; i < W.rank(); ++i) m[i][i] -= W.one();
  return rank(m);
}

DualStructure::DualStructure(const CoxeterSystem& W, Elem c)
    : W_(&W), c_(c), lt_(W.order(), -1), nc_flag_(W.order(), 0) {
  c_word_ = W.reduced_word(c);
  if (!W.is_standard_coxeter_word(c_word_)) throw InvalidInput("element is not a standard Coxeter element");
  enumerate_chains();
  build_heap();
  build_classes();
}

int DualStructure::lT(Elem w) const {
  if (lt_[w] < 0) lt_[w] = static_cast<signed char>(reflection_length(*W_, w));
  return lt_[w];
}

bool DualStructure::in_nc(Elem w) const { return nc_flag_[w] != 0; }

void DualStructure::enumerate_chains() {
  const int r = W_->rank(), N = W_->num_reflections();
  auto below_c = [&](Elem x) { return lT(x) + lT(W_->multiply(W_->inverse(x), c_)) == r; };
  TChain prefix;
  std::function<void(Elem)> dfs = [&](Elem x) {
    if (!nc_flag_[x]) {
      nc_flag_[x] = 1;
      nc_.push_back(x);
    }
    int depth = static_cast<int>(prefix.size());
    if (depth == r) {
      if (x != c_) throw InternalError("T-word does not multiply to c");
      chain_lookup_[prefix] = static_cast<int>(chains_.size());
      chains_.push_back(prefix);
      return;
    }
    for (int t = 0; t < N; ++t) {
      Elem y = W_->times_reflection(x, t);
      if (lT(y) != depth + 1 || !below_c(y)) continue;
      prefix.push_back(t);
      dfs(y);
      prefix.pop_back();
    }
  };
  dfs(W_->identity());
  std::sort(nc_.begin(), nc_.end());
}

int DualStructure::chain_index(const TChain& chain) const {
  auto it = chain_lookup_.find(chain);
  return it == chain_lookup_.end() ? -1 : it->second;
}

std::vector<Elem> DualStructure::chain_prefixes(const TChain& chain) const {
  std::vector<Elem> out{W_->identity()};
  for (int t : chain) out.push_back(W_->times_reflection(out.back(), t));
  return out;
}

void DualStructure::build_heap() {
  const int N = W_->num_reflections();
  SortingWord sw = sorting_word(*W_, W_->w0(), c_word_);
  heap_seq_ = W_->inversion_sequence(sw.letters);
  const auto& m = W_->coxeter_matrix();
  std::vector<std::vector<char>> pos(N, std::vector<char>(N, 0));
  for (int i = 0; i < N; ++i) {
    pos[i][i] = 1;
    for (int j = i + 1; j < N; ++j)
      if (m[sw.letters[i]][sw.letters[j]] != 2) pos[i][j] = 1;
  }
  for (int k = 0; k < N; ++k)
    for (int i = 0; i < N; ++i)
      if (pos[i][k])
        for (int j = 0; j < N; ++j)
          if (pos[k][j]) pos[i][j] = 1;
  heap_.assign(N, std::vector<char>(N, 0));
  heap_pos_.assign(N, -1);
  for (int i = 0; i < N; ++i) heap_pos_[heap_seq_[i]] = i;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) heap_[heap_seq_[i]][heap_seq_[j]] = pos[i][j];

  SortingWord cw = sorting_word(*W_, W_->w0(), c_inverse_word());
  cluster_seq_ = W_->inversion_sequence(cw.letters);
}

bool DualStructure::is_increasing(const TChain& chain) const {
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j)
      if (heap_leq(chain[j], chain[i])) return false;
  return true;
}

bool DualStructure::is_decreasing(const TChain& chain) const {
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j)
      if (heap_leq(chain[i], chain[j])) return false;
  return true;
}

void DualStructure::build_classes() {
  chain_class_.assign(chains_.size(), -1);
  for (std::size_t i = 0; i < chains_.size(); ++i) {
    Bits set;
    for (int t : chains_[i]) set.set(t);
    auto [it, fresh] = class_lookup_.emplace(set, static_cast<int>(classes_.size()));
    if (fresh) classes_.push_back(CommClass{set, {}, false, false});
    CommClass& cl = classes_[it->second];
    cl.chains.push_back(static_cast<int>(i));
    if (is_increasing(chains_[i])) cl.increasing = true;
    if (is_decreasing(chains_[i])) cl.decreasing = true;
    chain_class_[i] = it->second;
  }
  for (std::size_t k = 0; k < classes_.size(); ++k)
    if (classes_[k].increasing) {
      if (inc_class_ >= 0) throw InternalError("two increasing commutation classes");
      inc_class_ = static_cast<int>(k);
    }
}

int DualStructure::class_of_set(const Bits& set) const {
  auto it = class_lookup_.find(set);
  return it == class_lookup_.end() ? -1 : it->second;
}

std::vector<std::vector<int>> DualStructure::cluster_maximal_faces() const {
  std::vector<int> where(W_->num_reflections(), -1);
  for (std::size_t i = 0; i < cluster_seq_.size(); ++i) where[cluster_seq_[i]] = static_cast<int>(i) + 1;
  std::vector<std::vector<int>> faces;
  for (const auto& cl : classes_) {
    if (!cl.decreasing) continue;
    std::vector<int> f;
    for (int t : cl.set.members()) f.push_back(where[t]);
    std::sort(f.begin(), f.end());
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

bool DualStructure::cluster_is_flag() const {
  auto faces = cluster_maximal_faces();
  const int n = W_->num_reflections();
  std::vector<std::vector<char>> adj(n + 1, std::vector<char>(n + 1, 0));
  for (const auto& f : faces)
    for (int a : f)
      for (int b : f)
        if (a != b) adj[a][b] = 1;
  auto contained = [&](const std::vector<int>& clique) {
    for (const auto& f : faces)
      if (std::includes(f.begin(), f.end(), clique.begin(), clique.end())) return true;
    return false;
  };
  // Bron-Kerbosch over maximal cliques.
  bool ok = true;
  std::function<void(std::vector<int>, std::vector<int>, std::vector<int>)> bk =
      [&](std::vector<int> R, std::vector<int> P, std::vector<int> X) {
        if (!ok) return;
        if (P.empty() && X.empty()) {
          std::sort(R.begin(), R.end());
          if (!contained(R)) ok = false;
          return;
        }
        while (!P.empty()) {
          int v = P.back();
          std::vector<int> R2 = R, P2, X2;
          R2.push_back(v);
          for (int x : P)
            if (adj[v][x]) P2.push_back(x);
          for (int x : X)
            if (adj[v][x]) X2.push_back(x);
          bk(R2, P2, X2);
          P.pop_back();
          X.push_back(v);
        }
      };
  std::vector<int> all;
  for (int i = 1; i <= n; ++i) all.push_back(i);
  bk({}, all, {});
  return ok;
}

std::vector<int> DualStructure::rank2_closure(int t, int t2) const {
  const Vec& a = W_->root(t);
  const Vec& b = W_->root(t2);
  const int r = W_->rank();
  int ci = -1, cj = -1;
  for (int i = 0; i < r && ci < 0; ++i)
    for (int j = i + 1; j < r; ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) {
        ci = i;
        cj = j;
        break;
      }
  if (ci < 0) throw InvalidInput("rank2_closure needs two distinct reflections");
  Scalar d = a[ci] * b[cj] - a[cj] * b[ci];
  struct Item {
    int t;
    Scalar x, y;
  };
  std::vector<Item> items;
  for (int k = 0; k < W_->num_reflections(); ++k) {
    const Vec& g = W_->root(k);
    Scalar x = (g[ci] * b[cj] - g[cj] * b[ci]) / d;
    Scalar y = (a[ci] * g[cj] - a[cj] * g[ci]) / d;
    bool in_span = true;
    for (int i = 0; i < r && in_span; ++i)
      if (!(x * a[i] + y * b[i] - g[i]).is_zero()) in_span = false;
    if (in_span) items.push_back({k, x, y});
  }
  std::sort(items.begin(), items.end(),
            [](const Item& p, const Item& q) { return (p.x * q.y - p.y * q.x).sign() > 0; });
  std::vector<int> out;
  for (const auto& it : items) out.push_back(it.t);
  return out;
}

Rational cat_plus(const CoxeterSystem& W) {
  Rational total(1);
  for (const auto& comp : W.components()) {
    std::vector<std::vector<int>> sub(comp.size(), std::vector<int>(comp.size()));
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j) sub[i][j] = W.coxeter_matrix()[comp[i]][comp[j]];
    CoxeterSystem U = CoxeterSystem::from_matrix(sub);
    int h = U.coxeter_number();
    for (int d : U.degrees()) {
      Rational q(h - 2 + d, d);
      q.canonicalize();
      total *= q;
    }
  }
  return total;
}

}  // namespace permtri
