// absolute.hpp
//
// Absolute order, noncrossing partitions, reduced T-words of c, the heap
// order on inv(w0(c)), commutation classes and the c-cluster complex.

#pragma once

#include <map>
#include <vector>

#include "permtri/cambrian.hpp"
#include "permtri/coxeter.hpp"

namespace permtri {

// l_T(w) = codim of the fixed space = rank(w - 1).
int reflection_length(const CoxeterSystem& W, Elem w);

struct CommClass {
  Bits set;                    // reflections of the class
  std::vector<int> chains;     // indices into DualStructure::chains()
  bool increasing = false;     // contains the increasing T-word
  bool decreasing = false;     // contains a decreasing T-word
};

class DualStructure {
 public:
  DualStructure(const CoxeterSystem& W, Elem c);

  const CoxeterSystem& group() const { return *W_; }
  Elem c() const { return c_; }
  const std::vector<int>& c_word() const { return c_word_; }
  // c^{-1} read as reversed(c_word()).
  std::vector<int> c_inverse_word() const { return reversed(c_word_); }

  int lT(Elem w) const;
  bool in_nc(Elem w) const;
  const std::vector<Elem>& nc_elements() const { return nc_; }
  // Reduced T-words of c in lexicographic order of reflection indices.
  const std::vector<TChain>& chains() const { return chains_; }
  int chain_index(const TChain& chain) const;  // -1 when absent
  std::vector<Elem> chain_prefixes(const TChain& chain) const;  // pi_0 = e, ..., pi_r = c

  // inv(w0(c)) in sorting-word order, and the heap order t <=_c t'.
  const std::vector<int>& heap_sequence() const { return heap_seq_; }
  bool heap_leq(int t, int t2) const { return heap_[t][t2]; }
  int heap_position(int t) const { return heap_pos_[t]; }
  bool is_increasing(const TChain& chain) const;
  bool is_decreasing(const TChain& chain) const;

  const std::vector<CommClass>& classes() const { return classes_; }
  int class_of_chain(int chain_idx) const { return chain_class_[chain_idx]; }
  int class_of_set(const Bits& set) const;
  int increasing_class() const { return inc_class_; }

  // inv(w0(c^{-1})) = (a_1, ..., a_N) and the maximal faces of the cluster complex
  // as sorted 1-based positions.
  const std::vector<int>& cluster_sequence() const { return cluster_seq_; }
  std::vector<std::vector<int>> cluster_maximal_faces() const;
  bool cluster_is_flag() const;

  // Reflections of the rank-2 parabolic closure of {t, t2}, ordered p_1, ..., p_k
  // so that p_1 and p_k are the canonical generators.
  std::vector<int> rank2_closure(int t, int t2) const;

 private:
  void enumerate_chains();
  void build_heap();
  void build_classes();

  const CoxeterSystem* W_;
  Elem c_;
  std::vector<int> c_word_;
  mutable std::vector<signed char> lt_;
  std::vector<char> nc_flag_;
  std::vector<Elem> nc_;
  std::vector<TChain> chains_;
  std::map<TChain, int> chain_lookup_;
  std::vector<int> heap_seq_, heap_pos_, cluster_seq_;
  std::vector<std::vector<char>> heap_;
  std::vector<CommClass> classes_;
  std::vector<int> chain_class_;
  std::map<Bits, int> class_lookup_;
  int inc_class_ = -1;
};

// Cat^+(W) = prod over irreducible components of prod_i (h - 1 + e_i) / d_i.
Rational cat_plus(const CoxeterSystem& W);

}  // namespace permtri
