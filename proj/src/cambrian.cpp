// cambrian.cpp

#include "permtri/cambrian.hpp"

#include <algorithm>

namespace permtri {

SortingWord sorting_word(const CoxeterSystem& W, Elem w, const std::vector<int>& c_word) {
  const int r = static_cast<int>(c_word.size());
  if (r == 0) throw InvalidInput("empty Coxeter word");
  SortingWord out;
  Elem x = w;
  for (int pos = 0; x != 0; ++pos) {
    int s = c_word[pos % r];
    if (W.left_inversions(x).test(s)) {
      out.letters.push_back(s);
      out.copy_index.push_back(pos / r + 1);
      out.positions.push_back(pos);
      x = W.lmul(s, x);
    }
    if (pos > (W.num_reflections() + 2) * r) throw InternalError("sorting word did not terminate");
  }
  return out;
}

std::vector<unsigned> copy_sets(const SortingWord& sw, int copies_hint) {
  int copies = copies_hint;
  for (int k : sw.copy_index) copies = std::max(copies, k);
  std::vector<unsigned> sets(copies, 0u);
  for (std::size_t i = 0; i < sw.letters.size(); ++i) sets[sw.copy_index[i] - 1] |= 1u << sw.letters[i];
  return sets;
}

bool is_sortable(const CoxeterSystem& W, Elem w, const std::vector<int>& c_word) {
  auto sets = copy_sets(sorting_word(W, w, c_word));
  for (std::size_t k = 1; k < sets.size(); ++k)
    if ((sets[k] & ~sets[k - 1]) != 0) return false;
  return true;
}

std::vector<int> reversed(const std::vector<int>& word) { return {word.rbegin(), word.rend()}; }

Cambrian::Cambrian(const CoxeterSystem& W, std::vector<int> c_word)
    : W_(&W), word_(std::move(c_word)), sortable_(W.order(), -1), down_(W.order(), -1) {
  if (!W.is_standard_coxeter_word(word_)) throw InvalidInput("not a standard Coxeter word");
}

bool Cambrian::sortable(Elem w) const {
  if (sortable_[w] < 0) sortable_[w] = is_sortable(*W_, w, word_) ? 1 : 0;
  return sortable_[w] == 1;
}

Elem Cambrian::pi_down(Elem w) const {
  if (down_[w] >= 0) return down_[w];
  Elem best = w;
  if (!sortable(w)) {
    best = -1;
    for (int s = 0; s < W_->rank(); ++s) {
      if (!W_->right_inversions(w).test(s)) continue;
      Elem cand = pi_down(W_->rmul(w, s));
      if (best < 0 || W_->length(cand) > W_->length(best)) best = cand;
    }
  }
  down_[w] = best;
  return best;
}

std::vector<Elem> Cambrian::sortable_elements() const {
  std::vector<Elem> out;
  for (Elem w = 0; w < W_->order(); ++w)
    if (sortable(w)) out.push_back(w);
  return out;
}

std::vector<Elem> w_c_plus(const CoxeterSystem& W, Elem c) {
  std::vector<Elem> out;
  const int r = W.length(c);
  for (Elem u = 0; u < W.order(); ++u)
    if (W.length(W.multiply(u, c)) == W.length(u) + r) out.push_back(u);
  return out;
}

TChain skip_chain(const CoxeterSystem& W, Elem u, const std::vector<int>& c_word) {
  const int r = W.rank();
  std::vector<int> inv_word = reversed(c_word);
  Elem uinv = W.inverse(u);
  if (!is_sortable(W, uinv, inv_word)) throw InvalidInput("u^{-1} is not c^{-1}-sortable");
  SortingWord sw = sorting_word(W, uinv, inv_word);
  int last = sw.positions.empty() ? -1 : sw.positions.back();
  int limit = (last / r + 2) * r;
  std::vector<char> used(limit, 0);
  for (int p : sw.positions) used[p] = 1;
  std::vector<int> skip_pos(r, -1);
  for (int p = 0; p < limit; ++p) {
    int s = inv_word[p % r];
    if (!used[p] && skip_pos[s] < 0) skip_pos[s] = p;
  }
  std::vector<char> marked(limit, 0);
  for (int p = 0; p < limit; ++p) marked[p] = used[p];
  for (int s = 0; s < r; ++s) {
    if (skip_pos[s] < 0) throw InternalError("letter without a skip");
    marked[skip_pos[s]] = 1;
  }
  std::vector<std::pair<int, int>> order;  // (skip position, reflection)
  for (int s = 0; s < r; ++s) {
    Elem q = 0;
    for (int p = 0; p < skip_pos[s]; ++p)
      if (marked[p]) q = W.rmul(q, inv_word[p % r]);
    int t = W.root_image(q, s);
    if (t >= W.num_reflections()) throw InternalError("skip reflection with negative root");
    order.emplace_back(skip_pos[s], t);
  }
  std::sort(order.begin(), order.end());
  TChain chain;
  for (auto& [p, t] : order) chain.push_back(t);
  return chain;
}

}  // namespace permtri
