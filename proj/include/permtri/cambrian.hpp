// cambrian.hpp
//
// Coxeter-sorting words, sortable elements, the projection pi_down, the set
// W_c^+ and the skip construction of the decreasing class of u.

#pragma once

#include <vector>

#include "permtri/coxeter.hpp"

namespace permtri {

// Reduced T-word t_1 ... t_r, stored as reflection (positive root) indices.
using TChain = std::vector<int>;

struct SortingWord {
  std::vector<int> letters;
  std::vector<int> copy_index;  // 1-based copy of c in c^infinity
  std::vector<int> positions;   // 0-based position in c^infinity
};

// Lexicographically first subword of c_word^infinity that is a reduced word for w.
SortingWord sorting_word(const CoxeterSystem& W, Elem w, const std::vector<int>& c_word);

// Per-copy letter sets of a sorting word.
std::vector<unsigned> copy_sets(const SortingWord& sw, int copies_hint = 0);

bool is_sortable(const CoxeterSystem& W, Elem w, const std::vector<int>& c_word);

std::vector<int> reversed(const std::vector<int>& word);

// Sortable elements and the Cambrian projection for one reduced word of c.
class Cambrian {
 public:
  Cambrian(const CoxeterSystem& W, std::vector<int> c_word);

  const std::vector<int>& c_word() const { return word_; }
  bool sortable(Elem w) const;
  // Maximum sortable element below w in right weak order.
  Elem pi_down(Elem w) const;
  std::vector<Elem> sortable_elements() const;

 private:
  const CoxeterSystem* W_;
  std::vector<int> word_;
  mutable std::vector<signed char> sortable_;
  mutable std::vector<Elem> down_;
};

// u with l(uc) = l(u) + r.
std::vector<Elem> w_c_plus(const CoxeterSystem& W, Elem c);

// Decreasing chain for u from the skips of the c^{-1}-sorting word of u^{-1},
// where c^{-1} is read as the reverse of c_word.  Throws InvalidInput when u^{-1}
// is not c^{-1}-sortable.
TChain skip_chain(const CoxeterSystem& W, Elem u, const std::vector<int>& c_word);

}  // namespace permtri
