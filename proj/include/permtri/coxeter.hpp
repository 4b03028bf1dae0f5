// coxeter.hpp
//
// A finite Coxeter group in its reflection representation.  Points of V are
// written in the simple-coroot basis, linear forms in the simple-root basis,
// and <a_i, a_j^v> = cartan()[i][j].  Elements are indices into a table built
// breadth-first from the identity; element 0 is e.

#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "permtri/linalg.hpp"
#include "permtri/numfield.hpp"

namespace permtri {

using Elem = int;

// Subset of T, indexed by positive root.  Supports up to 128 reflections.
struct Bits {
  std::uint64_t w[2] = {0, 0};
  void set(int i) { w[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  int count() const { return __builtin_popcountll(w[0]) + __builtin_popcountll(w[1]); }
  bool none() const { return (w[0] | w[1]) == 0; }
  bool subset_of(const Bits& o) const { return (w[0] & ~o.w[0]) == 0 && (w[1] & ~o.w[1]) == 0; }
  Bits operator&(const Bits& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
  Bits operator|(const Bits& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
  bool operator==(const Bits& o) const { return w[0] == o.w[0] && w[1] == o.w[1]; }
  bool operator<(const Bits& o) const { return w[1] != o.w[1] ? w[1] < o.w[1] : w[0] < o.w[0]; }
  std::vector<int> members() const;
};

enum class Side { Left, Right };

struct BuildOptions {
  std::size_t size_cap = 2'000'000;
  int max_field_degree = 8;
  std::string cache_dir;  // empty: no cache
};

class CoxeterSystem {
 public:
  // Labels: A_n, B_n, C_n, D_n, E6-8, F4, G2, H3, H4, I2(m), and products joined by 'x'.
  static CoxeterSystem build(const std::string& label, const BuildOptions& opt = {});
  static CoxeterSystem from_matrix(const std::vector<std::vector<int>>& m, const BuildOptions& opt = {},
                                   const std::string& label = "matrix");
  static std::vector<std::vector<int>> matrix_for_label(const std::string& label);

  CoxeterSystem(CoxeterSystem&&) noexcept;
  CoxeterSystem& operator=(CoxeterSystem&&) noexcept;
  ~CoxeterSystem();

  const std::string& label() const { return label_; }
  int rank() const { return r_; }
  int num_reflections() const { return N_; }
  int order() const { return static_cast<int>(length_.size()); }
  const std::vector<std::vector<int>>& coxeter_matrix() const { return m_; }
  const FieldPtr& field() const { return field_; }
  const Mat& cartan() const { return cartan_; }
  bool simply_laced() const;
  bool irreducible() const;
  std::vector<std::vector<int>> components() const;
  bool loaded_from_cache() const { return from_cache_; }

  // Roots 0..N-1 are positive, root k+N is the negative of root k; roots 0..r-1 are simple.
  const Vec& root(int k) const { return roots_[k]; }
  const Vec& coroot(int k) const { return coroots_[k]; }
  Scalar pair(const Vec& form, const Vec& point) const;
  const Vec& fundamental_weight(int s) const { return weights_[s]; }
  // Sum of fundamental weights: <a_s, y> = 1 for every simple s.
  Vec canonical_base_point() const;
  Scalar zero() const { return Scalar(field_); }
  Scalar one() const { return Scalar(field_, Rational(1)); }

  // Elements.
  Elem identity() const { return 0; }
  Elem w0() const { return w0_; }
  int length(Elem w) const { return length_[w]; }
  const Bits& left_inversions(Elem w) const { return tl_[w]; }
  const Bits& right_inversions(Elem w) const { return tr_[w]; }
  std::vector<int> left_descents(Elem w) const;
  std::vector<int> right_descents(Elem w) const;
  Elem rmul(Elem w, int s) const { return rmul_[static_cast<std::size_t>(w) * r_ + s]; }
  Elem lmul(int s, Elem w) const { return lmul_[static_cast<std::size_t>(w) * r_ + s]; }
  Elem inverse(Elem w) const { return inv_[w]; }
  Elem multiply(Elem w, Elem v) const;
  Elem simple(int s) const { return rmul(0, s); }
  Elem reflection(int t) const { return refl_elem_[t]; }
  int reflection_index(Elem w) const { return refl_index_[w]; }
  Elem times_reflection(Elem w, int t) const;  // w t
  unsigned support(Elem w) const { return support_[w]; }
  // Image of root k under w.
  int root_image(Elem w, int k) const { return perm_[static_cast<std::size_t>(w) * 2 * N_ + k]; }

  std::vector<int> reduced_word(Elem w) const;  // lexicographically least reduced word
  Elem from_word(const std::vector<int>& word) const;
  // Reflection indices t_i = s_1..s_{i-1} s_i s_{i-1}..s_1; throws InvalidInput when not reduced.
  std::vector<int> inversion_sequence(const std::vector<int>& word) const;
  std::string word_string(Elem w) const;

  bool bruhat_leq(Elem u, Elem v) const;
  std::vector<Elem> bruhat_covers(Elem u) const;  // upper covers
  std::vector<Elem> bruhat_cocovers(Elem u) const;  // lower covers
  bool weak_leq(Elem u, Elem v, Side side) const;
  Elem weak_meet(Elem u, Elem v, Side side) const;
  Elem weak_join(Elem u, Elem v, Side side) const;

  std::vector<Elem> coxeter_elements() const;
  bool is_standard_coxeter_word(const std::vector<int>& word) const;

  const std::vector<int>& degrees() const { return degrees_; }
  std::vector<int> exponents() const;
  int coxeter_number() const { return h_; }

  Vec act(Elem w, const Vec& x) const;        // w x on V
  Vec act_form(Elem w, const Vec& f) const;   // w f on V*, so <w f, w x> = <f, x>
  Mat matrix(Elem w) const;                   // matrix of w on V (coroot coordinates)
  Vec reflect(int t, const Vec& x) const;     // x - <b_t, x> b_t^v

  void save_cache(const std::string& path) const;

 private:
  CoxeterSystem() = default;
  void init_realization(int max_field_degree);
  void generate_roots();
  void generate_elements(std::size_t cap);
  bool load_cache(const std::string& path);
  void derive_tables();
  std::string cache_key() const;

  std::string label_;
  int r_ = 0, N_ = 0;
  std::vector<std::vector<int>> m_;
  FieldPtr field_;
  Mat cartan_;
  std::vector<Vec> roots_, coroots_, weights_;
  std::vector<std::vector<int>> simple_perm_;  // [s][root]
  std::vector<std::uint16_t> perm_;            // [w * 2N + root]
  std::vector<Elem> rmul_, lmul_, inv_, parent_;
  std::vector<std::int8_t> letter_;
  std::vector<int> length_;
  std::vector<Bits> tl_, tr_;
  std::vector<unsigned> support_;
  std::vector<Elem> refl_elem_;
  std::vector<int> refl_index_;
  Elem w0_ = 0;
  std::vector<int> degrees_;
  int h_ = 0;
  bool from_cache_ = false;

  mutable std::unique_ptr<std::once_flag> rt_once_;
  mutable std::vector<Elem> rt_;  // [w * N + t] = w t
};

// Parse "s1s2s3", "s1 s2 s3" or "1,2,3" into 0-based generator indices.
std::vector<int> parse_word(const std::string& text);
std::string format_word(const std::vector<int>& word);

}  // namespace permtri
