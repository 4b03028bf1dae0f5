// coxeter.cpp

#include "permtri/coxeter.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>
#include <unordered_map>

namespace permtri {

std::vector<int> Bits::members() const {
  std::vector<int> out;
  for (int b = 0; b < 2; ++b) {
    std::uint64_t x = w[b];
    while (x) {
      out.push_back(b * 64 + __builtin_ctzll(x));
      x &= x - 1;
    }
  }
  return out;
}

CoxeterSystem::CoxeterSystem(CoxeterSystem&&) noexcept = default;
CoxeterSystem& CoxeterSystem::operator=(CoxeterSystem&&) noexcept = default;
CoxeterSystem::~CoxeterSystem() = default;

// ---------------------------------------------------------------- labels

namespace {

using IntMat = std::vector<std::vector<int>>;

IntMat path_matrix(int n) {
  IntMat m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
  return m;
}

void set_edge(IntMat& m, int i, int j, int v) { m[i][j] = m[j][i] = v; }

IntMat irreducible_matrix(const std::string& label) {
  static const std::regex plain("^([A-H])([0-9]+)$");
  static const std::regex dihedral("^I2\\(([0-9]+)\\)$");
  std::smatch mt;
  if (std::regex_match(label, mt, dihedral)) {
    int m = std::stoi(mt[1]);
    if (m < 2) throw InvalidInput("I2(m) needs m >= 2");
    IntMat x = path_matrix(2);
    set_edge(x, 0, 1, m);
    return x;
  }
  if (!std::regex_match(label, mt, plain)) throw InvalidInput("unknown type label: " + label);
  char t = mt[1].str()[0];
  int n = std::stoi(mt[2]);
  if (n < 1 || n > 64) throw InvalidInput("unsupported rank in label: " + label);
  IntMat x = path_matrix(n);
  switch (t) {
    case 'A':
      return x;
    case 'B':
    case 'C':
      if (n < 2) break;
      set_edge(x, n - 2, n - 1, 4);
      return x;
    case 'D':
      if (n < 4) break;
      set_edge(x, n - 2, n - 1, 2);
      set_edge(x, n - 3, n - 1, 3);
      return x;
    case 'E':
      if (n < 6 || n > 8) break;
      // Bourbaki: 1-3-4-5-...; 2 attached to 4.
      x = IntMat(n, std::vector<int>(n, 2));
      for (int i = 0; i < n; ++i) x[i][i] = 1;
      set_edge(x, 0, 2, 3);
      set_edge(x, 1, 3, 3);
      for (int i = 2; i + 1 < n; ++i) set_edge(x, i, i + 1, 3);
      return x;
    case 'F':
      if (n != 4) break;
      set_edge(x, 1, 2, 4);
      return x;
    case 'G':
      if (n != 2) break;
      set_edge(x, 0, 1, 6);
      return x;
    case 'H':
      if (n != 3 && n != 4) break;
      set_edge(x, 0, 1, 5);
      return x;
    default:
      break;
  }
  throw InvalidInput("unknown type label: " + label);
}

std::string hex64(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex << x;
  return os.str();
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string vec_key(const Vec& v) {
  std::string k;
  for (const auto& x : v) {
    for (const auto& q : x.coeffs()) {
      k += q.get_str();
      k += ',';
    }
    k += ';';
  }
  return k;
}

}  // namespace

IntMat CoxeterSystem::matrix_for_label(const std::string& label) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : label) {
    if (ch == 'x' || ch == '*') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '_') {
      cur += ch;
    }
  }
  parts.push_back(cur);
  IntMat blocks;
  int total = 0;
  std::vector<IntMat> ms;
  for (const auto& p : parts) {
    if (p.empty()) throw InvalidInput("malformed type label: " + label);
    ms.push_back(irreducible_matrix(p));
    total += static_cast<int>(ms.back().size());
  }
  IntMat out(total, std::vector<int>(total, 2));
  int off = 0;
  for (const auto& m : ms) {
    int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out[off + i][off + j] = m[i][j];
    off += n;
  }
  return out;
}

// ---------------------------------------------------------------- build

CoxeterSystem CoxeterSystem::build(const std::string& label, const BuildOptions& opt) {
  return from_matrix(matrix_for_label(label), opt, label);
}

CoxeterSystem CoxeterSystem::from_matrix(const IntMat& m, const BuildOptions& opt, const std::string& label) {
  const int r = static_cast<int>(m.size());
  if (r < 1) throw InvalidInput("Coxeter matrix must be nonempty");
  if (r > 31) throw InvalidInput("rank above 31 is not supported");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(m[i].size()) != r) throw InvalidInput("Coxeter matrix must be square");
    if (m[i][i] != 1) throw InvalidInput("Coxeter matrix diagonal must be 1");
    for (int j = 0; j < r; ++j) {
      if (m[i][j] != m[j][i]) throw InvalidInput("Coxeter matrix must be symmetric");
      if (i != j && m[i][j] < 2) throw InvalidInput("off-diagonal Coxeter matrix entries must be >= 2");
    }
  }
  CoxeterSystem W;
  W.label_ = label;
  W.r_ = r;
  W.m_ = m;
  W.rt_once_ = std::make_unique<std::once_flag>();
  W.init_realization(opt.max_field_degree);
  W.generate_roots();

  std::string path;
  if (!opt.cache_dir.empty()) path = opt.cache_dir + "/group-" + hex64(fnv1a(W.cache_key())) + ".bin";
  if (path.empty() || !W.load_cache(path)) {
    W.generate_elements(opt.size_cap);
    if (!path.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(opt.cache_dir, ec);
      W.save_cache(path);
    }
  }
  W.derive_tables();
  return W;
}

void CoxeterSystem::init_realization(int max_field_degree) {
  std::set<int> ms;
  for (int i = 0; i < r_; ++i)
    for (int j = i + 1; j < r_; ++j) ms.insert(m_[i][j]);
  field_ = field_make(ms, max_field_degree);
  const int L = field_->generator_m();
  cartan_ = Mat(r_, zero_vec(field_, r_));
  for (int i = 0; i < r_; ++i) {
    cartan_[i][i] = Scalar(field_, Rational(2));
    for (int j = i + 1; j < r_; ++j) {
      int m = m_[i][j];
      Scalar a(field_), b(field_);
      if (m == 2) {
      } else if (m == 3) {
        a = b = Scalar(field_, Rational(-1));
      } else if (m == 4) {
        a = Scalar(field_, Rational(-2));
        b = Scalar(field_, Rational(-1));
      } else if (m == 6) {
        a = Scalar(field_, Rational(-3));
        b = Scalar(field_, Rational(-1));
      } else {
        a = b = -two_cos_multiple(field_, L / m);
      }
      cartan_[i][j] = a;
      cartan_[j][i] = b;
    }
  }
  auto cinv = permtri::inverse(cartan_);
  if (!cinv) throw InvalidInput("Cartan matrix is singular: group is not finite");
  weights_.assign(r_, Vec());
  for (int s = 0; s < r_; ++s)
    for (int i = 0; i < r_; ++i) weights_[s].push_back((*cinv)[i][s]);
}

void CoxeterSystem::generate_roots() {
  // Orbit of the simple roots, with coroots carried along.
  std::vector<Vec> rts, corts;
  std::unordered_map<std::string, int> index;
  std::deque<int> queue;
  for (int i = 0; i < r_; ++i) {
    Vec e = zero_vec(field_, r_);
    e[i] = one();
    index[vec_key(e)] = i;
    rts.push_back(e);
    corts.push_back(e);
    queue.push_back(i);
  }
  const std::size_t root_cap = 20000;
  std::vector<std::vector<int>> img(r_);
  while (!queue.empty()) {
    int k = queue.front();
    queue.pop_front();
    for (int i = 0; i < r_; ++i) {
      // s_i b = b - <b, a_i^v> a_i ;  s_i b^v = b^v - <a_i, b^v> a_i^v
      Scalar pb = zero();
      for (int j = 0; j < r_; ++j)
        if (!rts[k][j].is_zero()) pb += rts[k][j] * cartan_[j][i];
      Scalar pc = zero();
      for (int j = 0; j < r_; ++j)
        if (!corts[k][j].is_zero()) pc += cartan_[i][j] * corts[k][j];
      Vec nb = rts[k], nc = corts[k];
      nb[i] -= pb;
      nc[i] -= pc;
      std::string key = vec_key(nb);
      auto it = index.find(key);
      int idx;
      if (it == index.end()) {
        idx = static_cast<int>(rts.size());
        if (rts.size() >= root_cap) throw GroupTooLarge("group too large / not finite: root orbit exceeds cap");
        index.emplace(key, idx);
        rts.push_back(nb);
        corts.push_back(nc);
        queue.push_back(idx);
      } else {
        idx = it->second;
        if (!(corts[idx] == nc)) throw InternalError("inconsistent coroot realization");
      }
      if (static_cast<int>(img[i].size()) <= k) img[i].resize(k + 1, -1);
      img[i][k] = idx;
    }
  }
  const int total = static_cast<int>(rts.size());
  if (total % 2) throw InternalError("odd number of roots");
  N_ = total / 2;
  if (N_ > 128) throw GroupTooLarge("more than 128 reflections is not supported");
  // Reindex: positives in discovery order, then their negatives.
  std::vector<int> newidx(total, -1);
  int next = 0;
  for (int k = 0; k < total; ++k) {
    int sg = 0;
    for (const auto& x : rts[k])
      if (int s = x.sign(); s != 0) {
        if (sg != 0 && s != sg) throw InternalError("root with mixed signs");
        sg = s;
      }
    if (sg > 0) newidx[k] = next++;
  }
  if (next != N_) throw InternalError("positive/negative root imbalance");
  for (int k = 0; k < total; ++k) {
    if (newidx[k] >= 0) continue;
    Vec neg = rts[k];
    for (auto& x : neg) x = -x;
    int pk = index.at(vec_key(neg));
    newidx[k] = newidx[pk] + N_;
  }
  roots_.assign(total, Vec());
  coroots_.assign(total, Vec());
  for (int k = 0; k < total; ++k) {
    roots_[newidx[k]] = rts[k];
    coroots_[newidx[k]] = corts[k];
  }
  simple_perm_.assign(r_, std::vector<int>(total));
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < total; ++k) simple_perm_[i][newidx[k]] = newidx[img[i][k]];
  for (int k = 0; k < N_; ++k)
    if (pair(roots_[k], coroots_[k]) != Scalar(field_, Rational(2)))
      throw InternalError("root/coroot pairing differs from 2");
}

void CoxeterSystem::generate_elements(std::size_t cap) {
  const int R = 2 * N_;
  perm_.clear();
  rmul_.clear();
  parent_.clear();
  letter_.clear();
  std::unordered_map<std::string, Elem> index;
  auto key_of = [&](const std::uint16_t* p) {
    std::string k(reinterpret_cast<const char*>(p), sizeof(std::uint16_t) * r_);
    return k;
  };
  std::vector<std::uint16_t> id(R);
  std::iota(id.begin(), id.end(), 0);
  perm_.insert(perm_.end(), id.begin(), id.end());
  parent_.push_back(-1);
  letter_.push_back(-1);
  index.emplace(key_of(perm_.data()), 0);
  std::vector<std::uint16_t> np(R);
  for (std::size_t w = 0; w < parent_.size(); ++w) {
    for (int s = 0; s < r_; ++s) {
      // (w s)(b) = w(s(b))
      const std::uint16_t* p = perm_.data() + w * R;
      for (int k = 0; k < R; ++k) np[k] = p[simple_perm_[s][k]];
      std::string key = key_of(np.data());
      auto it = index.find(key);
      Elem e;
      if (it == index.end()) {
        e = static_cast<Elem>(parent_.size());
        if (parent_.size() >= cap) throw GroupTooLarge("group too large / not finite: exceeds size cap");
        index.emplace(std::move(key), e);
        perm_.insert(perm_.end(), np.begin(), np.end());
        parent_.push_back(static_cast<Elem>(w));
        letter_.push_back(static_cast<std::int8_t>(s));
      } else {
        e = it->second;
      }
      rmul_.push_back(e);
    }
  }
}

void CoxeterSystem::derive_tables() {
  const std::size_t n = parent_.size();
  const int R = 2 * N_;
  length_.assign(n, 0);
  support_.assign(n, 0);
  for (std::size_t w = 1; w < n; ++w) {
    length_[w] = length_[parent_[w]] + 1;
    support_[w] = support_[parent_[w]] | (1u << letter_[w]);
  }
  tr_.assign(n, Bits{});
  for (std::size_t w = 0; w < n; ++w) {
    const std::uint16_t* p = perm_.data() + w * R;
    for (int k = 0; k < N_; ++k)
      if (p[k] >= N_) tr_[w].set(k);
    if (tr_[w].count() != length_[w]) throw InternalError("length differs from inversion count");
  }
  inv_.assign(n, 0);
  for (std::size_t w = 1; w < n; ++w) {
    Elem x = 0;
    for (Elem v = static_cast<Elem>(w); v != 0; v = parent_[v]) x = rmul(x, letter_[v]);
    inv_[w] = x;
  }
  lmul_.assign(n * r_, 0);
  for (std::size_t w = 0; w < n; ++w)
    for (int s = 0; s < r_; ++s) lmul_[w * r_ + s] = inv_[rmul(inv_[w], s)];
  tl_.assign(n, Bits{});
  for (std::size_t w = 0; w < n; ++w) tl_[w] = tr_[inv_[w]];
  w0_ = static_cast<Elem>(n - 1);
  if (length_[w0_] != N_) throw InternalError("longest element has length differing from N");

  refl_elem_.assign(N_, -1);
  refl_index_.assign(n, -1);
  for (std::size_t w = 0; w < n; ++w) {
    for (int s = 0; s < r_; ++s) {
      int k = root_image(static_cast<Elem>(w), s);
      if (k >= N_ || refl_elem_[k] >= 0) continue;
      Elem t = multiply(rmul(static_cast<Elem>(w), s), inv_[w]);
      refl_elem_[k] = t;
      refl_index_[t] = k;
    }
  }
  for (int k = 0; k < N_; ++k)
    if (refl_elem_[k] < 0) throw InternalError("reflection not reached");

  // Degrees from the Poincare polynomial by greedy division by q-integers.
  std::vector<long long> poly(N_ + 1, 0);
  for (std::size_t w = 0; w < n; ++w) ++poly[length_[w]];
  degrees_.clear();
  while (poly.size() > 1) {
    bool found = false;
    for (int d = static_cast<int>(poly.size()); d >= 2; --d) {
      // divide by 1 + q + ... + q^{d-1}: multiply by (1-q), divide by (1-q^d)
      std::vector<long long> a(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        a[i] += poly[i];
        a[i + 1] -= poly[i];
      }
      std::vector<long long> quo(a.size(), 0);
      bool ok = true;
      for (std::size_t i = 0; i < a.size(); ++i) {
        quo[i] = a[i];
        if (quo[i] != 0) {
          if (i + d >= a.size()) {
            ok = false;
            break;
          }
          a[i + d] += quo[i];
        }
      }
      if (!ok) continue;
      while (!quo.empty() && quo.back() == 0) quo.pop_back();
      if (quo.empty()) continue;
      poly = quo;
      degrees_.push_back(d);
      found = true;
      break;
    }
    if (!found) throw InternalError("Poincare polynomial does not factor into q-integers");
  }
  while (static_cast<int>(degrees_.size()) < r_) degrees_.push_back(1);
  std::sort(degrees_.begin(), degrees_.end());

  // h as the order of s_1 s_2 ... s_r.
  Elem c = 0;
  for (int s = 0; s < r_; ++s) c = rmul(c, s);
  Elem x = c;
  h_ = 1;
  while (x != 0) {
    x = multiply(x, c);
    ++h_;
  }
}

// ---------------------------------------------------------------- cache

std::string CoxeterSystem::cache_key() const {
  std::ostringstream os;
  os << "m=";
  for (const auto& row : m_)
    for (int x : row) os << x << ',';
  os << "|poly=";
  for (const auto& q : field_->min_poly()) os << q.get_str() << ',';
  return os.str();
}

namespace {
const char kMagic[] = "PERMTRI-GROUP-CACHE v1";
}

void CoxeterSystem::save_cache(const std::string& path) const {
  std::string tmp = path + ".tmp";
  std::ofstream f(tmp, std::ios::binary);
  if (!f) return;
  std::string key = cache_key();
  std::uint64_t n = parent_.size(), klen = key.size();
  std::int32_t rr = r_, nn = N_;
  f.write(kMagic, sizeof(kMagic));
  f.write(reinterpret_cast<const char*>(&klen), sizeof klen);
  f.write(key.data(), klen);
  f.write(reinterpret_cast<const char*>(&rr), sizeof rr);
  f.write(reinterpret_cast<const char*>(&nn), sizeof nn);
  f.write(reinterpret_cast<const char*>(&n), sizeof n);
  f.write(reinterpret_cast<const char*>(perm_.data()), perm_.size() * sizeof(std::uint16_t));
  f.write(reinterpret_cast<const char*>(rmul_.data()), rmul_.size() * sizeof(Elem));
  f.write(reinterpret_cast<const char*>(parent_.data()), parent_.size() * sizeof(Elem));
  f.write(reinterpret_cast<const char*>(letter_.data()), letter_.size());
  f.close();
  if (f) {
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
  }
}

bool CoxeterSystem::load_cache(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  char magic[sizeof(kMagic)];
  if (!f.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof kMagic) != 0) return false;
  std::uint64_t klen = 0, n = 0;
  if (!f.read(reinterpret_cast<char*>(&klen), sizeof klen) || klen > (1u << 20)) return false;
  std::string key(klen, '\0');
  std::int32_t rr = 0, nn = 0;
  if (!f.read(key.data(), klen) || key != cache_key()) return false;
  f.read(reinterpret_cast<char*>(&rr), sizeof rr);
  f.read(reinterpret_cast<char*>(&nn), sizeof nn);
  f.read(reinterpret_cast<char*>(&n), sizeof n);
  if (!f || rr != r_ || nn != N_ || n == 0 || n > (1ull << 31)) return false;
  std::vector<std::uint16_t> perm(n * 2 * N_);
  std::vector<Elem> rm(n * r_), par(n);
  std::vector<std::int8_t> let(n);
  f.read(reinterpret_cast<char*>(perm.data()), perm.size() * sizeof(std::uint16_t));
  f.read(reinterpret_cast<char*>(rm.data()), rm.size() * sizeof(Elem));
  f.read(reinterpret_cast<char*>(par.data()), par.size() * sizeof(Elem));
  f.read(reinterpret_cast<char*>(let.data()), let.size());
  if (!f) return false;
  for (std::size_t i = 1; i < n; ++i)
    if (par[i] < 0 || static_cast<std::size_t>(par[i]) >= i || let[i] < 0 || let[i] >= r_) return false;
  for (Elem e : rm)
    if (e < 0 || static_cast<std::uint64_t>(e) >= n) return false;
  perm_ = std::move(perm);
  rmul_ = std::move(rm);
  parent_ = std::move(par);
  letter_ = std::move(let);
  from_cache_ = true;
  return true;
}

// ---------------------------------------------------------------- queries

bool CoxeterSystem::simply_laced() const {
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j)
      if (i != j && m_[i][j] > 3) return false;
  return true;
}

std::vector<std::vector<int>> CoxeterSystem::components() const {
  std::vector<int> comp(r_, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < r_; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> cur{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < cur.size(); ++k)
      for (int j = 0; j < r_; ++j)
        if (comp[j] < 0 && m_[cur[k]][j] != 2 && j != cur[k]) {
          comp[j] = comp[s];
          cur.push_back(j);
        }
    std::sort(cur.begin(), cur.end());
    out.push_back(cur);
  }
  return out;
}

bool CoxeterSystem::irreducible() const { return components().size() == 1; }

Scalar CoxeterSystem::pair(const Vec& form, const Vec& point) const {
  Scalar acc = zero();
  for (int i = 0; i < r_; ++i) {
    if (form[i].is_zero()) continue;
    for (int j = 0; j < r_; ++j) {
      if (point[j].is_zero() || cartan_[i][j].is_zero()) continue;
      acc += form[i] * cartan_[i][j] * point[j];
    }
  }
  return acc;
}

Vec CoxeterSystem::canonical_base_point() const {
  Vec y = zero_vec(field_, r_);
  for (int s = 0; s < r_; ++s) y = add(y, weights_[s]);
  return y;
}

std::vector<int> CoxeterSystem::left_descents(Elem w) const {
  std::vector<int> out;
  for (int s = 0; s < r_; ++s)
    if (tl_[w].test(s)) out.push_back(s);
  return out;
}

std::vector<int> CoxeterSystem::right_descents(Elem w) const {
  std::vector<int> out;
  for (int s = 0; s < r_; ++s)
    if (tr_[w].test(s)) out.push_back(s);
  return out;
}

Elem CoxeterSystem::multiply(Elem w, Elem v) const {
  int letters[130];
  int k = 0;
  for (Elem x = v; x != 0; x = parent_[x]) letters[k++] = letter_[x];
  while (k > 0) w = rmul(w, letters[--k]);
  return w;
}

Elem CoxeterSystem::times_reflection(Elem w, int t) const {
  std::call_once(*rt_once_, [this] {
    const std::size_t n = parent_.size();
    rt_.assign(n * N_, 0);
    for (std::size_t w = 0; w < n; ++w)
      for (int k = 0; k < N_; ++k) rt_[w * N_ + k] = multiply(static_cast<Elem>(w), refl_elem_[k]);
  });
  return rt_[static_cast<std::size_t>(w) * N_ + t];
}

std::vector<int> CoxeterSystem::reduced_word(Elem w) const {
  std::vector<int> word;
  while (w != 0) {
    int s = 0;
    while (!tl_[w].test(s)) ++s;
    word.push_back(s);
    w = lmul(s, w);
  }
  return word;
}

Elem CoxeterSystem::from_word(const std::vector<int>& word) const {
  Elem w = 0;
  for (int s : word) {
    if (s < 0 || s >= r_) throw InvalidInput("generator index out of range");
    w = rmul(w, s);
  }
  return w;
}

std::vector<int> CoxeterSystem::inversion_sequence(const std::vector<int>& word) const {
  Elem w = from_word(word);
  if (length(w) != static_cast<int>(word.size())) throw InvalidInput("word is not reduced");
  std::vector<int> out;
  Elem prefix = 0;
  for (int s : word) {
    int k = root_image(prefix, s);
    out.push_back(k);
    prefix = rmul(prefix, s);
  }
  return out;
}

std::string CoxeterSystem::word_string(Elem w) const {
  auto word = reduced_word(w);
  if (word.empty()) return "e";
  return format_word(word);
}

bool CoxeterSystem::bruhat_leq(Elem u, Elem v) const {
  while (true) {
    if (u == 0) return true;
    if (length_[u] > length_[v]) return false;
    if (length_[u] == length_[v]) return u == v;
    int s = 0;
    while (!tl_[v].test(s)) ++s;
    if (tl_[u].test(s)) u = lmul(s, u);
    v = lmul(s, v);
  }
}

std::vector<Elem> CoxeterSystem::bruhat_covers(Elem u) const {
  std::vector<Elem> out;
  for (int t = 0; t < N_; ++t) {
    Elem x = times_reflection(u, t);
    if (length_[x] == length_[u] + 1) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> CoxeterSystem::bruhat_cocovers(Elem u) const {
  std::vector<Elem> out;
  for (int t = 0; t < N_; ++t) {
    Elem x = times_reflection(u, t);
    if (length_[x] + 1 == length_[u]) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool CoxeterSystem::weak_leq(Elem u, Elem v, Side side) const {
  return side == Side::Right ? tl_[u].subset_of(tl_[v]) : tr_[u].subset_of(tr_[v]);
}

Elem CoxeterSystem::weak_meet(Elem u, Elem v, Side side) const {
  // Climb from e inside the common lower set; the meet is its unique maximal element.
  Elem x = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s = 0; s < r_ && !moved; ++s) {
      Elem y = side == Side::Right ? rmul(x, s) : lmul(s, x);
      if (length_[y] > length_[x] && weak_leq(y, u, side) && weak_leq(y, v, side)) {
        x = y;
        moved = true;
      }
    }
  }
  return x;
}

Elem CoxeterSystem::weak_join(Elem u, Elem v, Side side) const {
  Elem x = w0_;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s = 0; s < r_ && !moved; ++s) {
      Elem y = side == Side::Right ? rmul(x, s) : lmul(s, x);
      if (length_[y] < length_[x] && weak_leq(u, y, side) && weak_leq(v, y, side)) {
        x = y;
        moved = true;
      }
    }
  }
  return x;
}

std::vector<Elem> CoxeterSystem::coxeter_elements() const {
  std::vector<int> p(r_);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Elem> out;
  do {
    out.push_back(from_word(p));
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::sort(out.begin(), out.end(), [this](Elem a, Elem b) { return reduced_word(a) < reduced_word(b); });
  return out;
}

bool CoxeterSystem::is_standard_coxeter_word(const std::vector<int>& word) const {
  if (static_cast<int>(word.size()) != r_) return false;
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < r_; ++i)
    if (sorted[i] != i) return false;
  return true;
}

std::vector<int> CoxeterSystem::exponents() const {
  std::vector<int> e;
  for (int d : degrees_) e.push_back(d - 1);
  return e;
}

Vec CoxeterSystem::act(Elem w, const Vec& x) const {
  Vec out = zero_vec(field_, r_);
  for (int j = 0; j < r_; ++j) {
    if (x[j].is_zero()) continue;
    const Vec& cr = coroots_[root_image(w, j)];
    for (int i = 0; i < r_; ++i)
      if (!cr[i].is_zero()) out[i] += cr[i] * x[j];
  }
  return out;
}

Vec CoxeterSystem::act_form(Elem w, const Vec& f) const {
  Vec out = zero_vec(field_, r_);
  for (int j = 0; j < r_; ++j) {
    if (f[j].is_zero()) continue;
    const Vec& rt = roots_[root_image(w, j)];
    for (int i = 0; i < r_; ++i)
      if (!rt[i].is_zero()) out[i] += rt[i] * f[j];
  }
  return out;
}

Mat CoxeterSystem::matrix(Elem w) const {
  Mat m(r_, zero_vec(field_, r_));
  for (int j = 0; j < r_; ++j) {
    const Vec& cr = coroots_[root_image(w, j)];
    for (int i = 0; i < r_; ++i) m[i][j] = cr[i];
  }
  return m;
}

Vec CoxeterSystem::reflect(int t, const Vec& x) const {
  Scalar p = pair(roots_[t], x);
  return sub(x, scale(coroots_[t], p));
}

// ---------------------------------------------------------------- words

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == 's' || ch == 'S' || ch == ' ' || ch == ',' || ch == '.' || ch == '*') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw InvalidInput("malformed Coxeter word: " + text);
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    int v = std::stoi(text.substr(i, j - i));
    if (v < 1) throw InvalidInput("generator indices start at 1: " + text);
    out.push_back(v - 1);
    i = j;
  }
  return out;
}

std::string format_word(const std::vector<int>& word) {
  std::string s;
  for (int x : word) s += "s" + std::to_string(x + 1);
  return s;
}

}  // namespace permtri
