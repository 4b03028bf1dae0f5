// theorems.cpp

#include "permtri/theorems.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace permtri {

bool TheoremReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

namespace {

std::string chain_string(const CoxeterSystem& W, const TChain& chain) {
  std::string out = "(";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += ", ";
    out += W.word_string(W.reflection(chain[i]));
  }
  return out + ")";
}

}  // namespace

bool reflection_isomorphic(const Sbdw& T, Elem u1, Elem u2) {
  const CoxeterSystem& W = T.group();
  Elem top1 = W.multiply(u1, T.c()), top2 = W.multiply(u2, T.c());
  auto I1 = T.bruhat_interval(u1, top1);
  auto I2 = T.bruhat_interval(u2, top2);
  if (I1.size() != I2.size()) return false;
  std::set<Elem> in1(I1.begin(), I1.end()), in2(I2.begin(), I2.end());
  auto covers_in = [&](Elem x, const std::set<Elem>& I) {
    std::vector<Elem> out;
    for (Elem z : W.bruhat_covers(x))
      if (I.count(z)) out.push_back(z);
    return out;
  };
  std::map<Elem, Elem> phi{{u1, u2}};
  std::vector<Elem> queue{u1};
  std::size_t edges1 = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    Elem fx = phi[x];
    auto up1 = covers_in(x, in1);
    auto up2 = covers_in(fx, in2);
    if (up1.size() != up2.size()) return false;
    edges1 += up1.size();
    std::set<int> labels2;
    for (Elem z : up2) labels2.insert(W.reflection_index(W.multiply(W.inverse(fx), z)));
    for (Elem z : up1) {
      int t = W.reflection_index(W.multiply(W.inverse(x), z));
      if (!labels2.count(t)) return false;
      Elem fz = W.times_reflection(fx, t);
      auto it = phi.find(z);
      if (it == phi.end()) {
        phi[z] = fz;
        queue.push_back(z);
      } else if (it->second != fz) {
        return false;
      }
    }
  }
  if (phi.size() != I1.size()) return false;
  std::set<Elem> image;
  for (auto& [x, fx] : phi) image.insert(fx);
  if (image != in2) return false;
  std::size_t edges2 = 0;
  for (Elem x : I2) edges2 += covers_in(x, in2).size();
  return edges1 == edges2;
}

TheoremReport theorem_suite(const Sbdw& T) {
  const CoxeterSystem& W = T.group();
  const DualStructure& D = T.dual();
  const auto& plus = T.w_plus();
  const auto& chains = D.chains();
  const int r = W.rank();
  TheoremReport rep;

  // (1) Four equivalent descriptions of equal concordance data.
  {
    CheckResult res{"cambrian-equivalence", true, ""};
    for (Elem u : plus) {
      auto cls = T.classes_of(u);
      int dec = 0;
      bool has_inc = false;
      for (int k : cls) {
        dec += D.classes()[k].decreasing;
        has_inc |= k == D.increasing_class();
      }
      if (!has_inc || dec != 1) {
        res.pass = false;
        res.witness = "Class_c(" + W.word_string(u) + ") has " + std::to_string(dec) +
                      " decreasing classes, increasing class present: " + (has_inc ? "yes" : "no");
        break;
      }
    }
    for (std::size_t i = 0; i < plus.size() && res.pass; ++i)
      for (std::size_t j = i + 1; j < plus.size() && res.pass; ++j) {
        Elem a = plus[i], b = plus[j];
        bool p1 = T.decreasing_class(a) == T.decreasing_class(b);
        bool p2 = T.classes_of(a) == T.classes_of(b);
        bool p3 = reflection_isomorphic(T, a, b);
        const Cambrian& cb = T.cinv_cambrian();
        bool p4 = cb.pi_down(W.inverse(a)) == cb.pi_down(W.inverse(b));
        if (p1 != p2 || p2 != p3 || p3 != p4) {
          res.pass = false;
          std::ostringstream os;
          os << "u1=" << W.word_string(a) << " u2=" << W.word_string(b) << " same D_c:" << p1
             << " same Class_c:" << p2 << " reflection-isomorphic:" << p3 << " same Cambrian class:" << p4;
          res.witness = os.str();
        }
      }
    if (res.pass) res.witness = std::to_string(plus.size()) + " elements of W_c^+";
    rep.checks.push_back(res);
  }

  auto delta = delta_vectors(D);
  // (2) Concordance iff Delta(u) inside Delta(pi).
  {
    CheckResult res{"cone-containment", true, ""};
    std::vector<Mat> inv_basis;
    for (const auto& ch : chains) {
      Mat B(r, Vec(r));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) B[i][j] = delta[ch[j]][i];
      auto inv = inverse(B);
      if (!inv) throw InternalError("delta vectors of a T-word are dependent");
      inv_basis.push_back(*inv);
    }
    std::set<std::pair<Elem, int>> omega;
    for (const auto& cell : T.cells()) omega.insert({cell.u, cell.chain});
    for (Elem u : plus) {
      auto rays = chamber_rays(W, u);
      for (std::size_t k = 0; k < chains.size() && res.pass; ++k) {
        bool inside = true;
        for (const Vec& v : rays)
          for (const Scalar& coef : mat_vec(inv_basis[k], v))
            if (coef.sign() < 0) inside = false;
        bool conc = T.concordant(u, chains[k]);
        bool in_omega = omega.count({u, static_cast<int>(k)}) > 0;
        if (conc != inside || conc != in_omega) {
          res.pass = false;
          res.witness = "u=" + W.word_string(u) + " chain=" + chain_string(W, chains[k]) +
                        " concordant:" + std::to_string(conc) + " contained:" + std::to_string(inside);
        }
      }
      if (!res.pass) break;
    }
    if (res.pass) res.witness = std::to_string(plus.size() * chains.size()) + " pairs";
    rep.checks.push_back(res);
  }

  // (3) Concordant sets are left weak intervals; (4) their bottoms sweep the sortable inverses.
  std::vector<Elem> bottoms(chains.size(), -1);
  {
    CheckResult res{"left-weak-interval", true, ""};
    for (std::size_t k = 0; k < chains.size() && res.pass; ++k) {
      std::vector<Elem> Y;
      for (Elem u : plus)
        if (T.concordant(u, chains[k])) Y.push_back(u);
      std::string name = chain_string(W, chains[k]);
      if (Y.empty()) {
        res.pass = false;
        res.witness = "no element concordant with " + name;
        break;
      }
      Elem lo = -1, hi = -1;
      for (Elem a : Y) {
        bool is_min = true, is_max = true;
        for (Elem b : Y) {
          is_min &= W.weak_leq(a, b, Side::Left);
          is_max &= W.weak_leq(b, a, Side::Left);
        }
        if (is_min) lo = a;
        if (is_max) hi = a;
      }
      if (lo < 0 || hi < 0) {
        res.pass = false;
        res.witness = "concordant set of " + name + " lacks a unique minimum or maximum";
        break;
      }
      std::size_t interval_size = 0;
      for (Elem w = 0; w < W.order(); ++w)
        if (W.weak_leq(lo, w, Side::Left) && W.weak_leq(w, hi, Side::Left)) ++interval_size;
      if (interval_size != Y.size()) {
        res.pass = false;
        res.witness = "concordant set of " + name + " is not the interval [" + W.word_string(lo) + ", " +
                      W.word_string(hi) + "]_L";
      }
      bottoms[k] = lo;
    }
    if (res.pass) res.witness = std::to_string(chains.size()) + " chains";
    rep.checks.push_back(res);
  }
  {
    CheckResult res{"sortable-vertices", true, ""};
    if (std::find(bottoms.begin(), bottoms.end(), -1) != bottoms.end()) {
      res.pass = false;
      res.witness = "skipped: interval check failed";
    } else {
      std::set<Elem> swept, sortable;
      for (std::size_t k = 0; k < chains.size(); ++k)
        for (Elem p : D.chain_prefixes(chains[k])) swept.insert(W.multiply(bottoms[k], p));
      for (Elem w = 0; w < W.order(); ++w)
        if (T.cinv_cambrian().sortable(W.inverse(w))) sortable.insert(w);
      res.pass = swept == sortable;
      res.witness = std::to_string(swept.size()) + " swept vertices, " + std::to_string(sortable.size()) +
                    " elements with c^{-1}-sortable inverse";
    }
    rep.checks.push_back(res);
  }

  // (5) Distinct Class_c(u) against Cat^+.
  {
    std::set<std::vector<int>> distinct;
    for (Elem u : plus) distinct.insert(T.classes_of(u));
    rep.class_count = static_cast<int>(distinct.size());
    rep.cat_plus = cat_plus(W);
    CheckResult res{"catalan-count", rep.cat_plus == Rational(rep.class_count), ""};
    res.witness = std::to_string(rep.class_count) + " distinct classes, Cat+ = " + rep.cat_plus.get_str();
    rep.checks.push_back(res);
  }

  // (6) Skip construction on the Cambrian representative.
  {
    CheckResult res{"skip-construction", true, ""};
    for (Elem u : plus) {
      Elem rep_u = W.inverse(T.cinv_cambrian().pi_down(W.inverse(u)));
      TChain sk = skip_chain(W, rep_u, D.c_word());
      int idx = D.chain_index(sk);
      int dec = T.decreasing_class(u);
      bool ok = idx >= 0 && D.is_decreasing(sk) && dec >= 0 && D.class_of_chain(idx) == dec &&
                T.concordant(rep_u, sk);
      if (!ok) {
        res.pass = false;
        res.witness = "u=" + W.word_string(u) + " representative=" + W.word_string(rep_u) +
                      " skips=" + chain_string(W, sk);
        break;
      }
    }
    if (res.pass) res.witness = std::to_string(plus.size()) + " elements";
    rep.checks.push_back(res);
  }
  return rep;
}

JvResult jv_polynomial(const DualStructure& D) {
  const CoxeterSystem& W = D.group();
  const int r = W.rank();
  JvResult out;
  out.lhs.assign(r + 1, 0);
  for (const auto& ch : D.chains()) {
    auto pre = D.chain_prefixes(ch);
    int wt = 0;
    for (int i = 1; i <= r; ++i) wt += W.length(pre[i]) < W.length(pre[i - 1]);
    ++out.lhs[wt];
  }
  std::vector<Rational> poly{Rational(1)};
  const int h = W.coxeter_number();
  for (int d : W.degrees()) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k] * d;
      next[k + 1] += poly[k] * (h - d);
    }
    poly = next;
  }
  Rational scale_factor(1);
  for (int i = 2; i <= r; ++i) scale_factor *= i;
  scale_factor /= W.order();
  for (auto& q : poly) q *= scale_factor;
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  while (out.lhs.size() > 1 && out.lhs.back() == 0) out.lhs.pop_back();
  out.rhs = poly;
  out.equal = poly.size() == out.lhs.size();
  for (std::size_t k = 0; out.equal && k < poly.size(); ++k) out.equal = poly[k] == Rational(static_cast<long>(out.lhs[k]));
  return out;
}

NcbOrder ncb_order(const Sbdw& T) {
  const CoxeterSystem& W = T.group();
  const DualStructure& D = T.dual();
  const auto& cells = T.cells();
  NcbOrder out;
  out.up.assign(W.order(), {});
  for (const auto& cell : cells)
    for (std::size_t i = 1; i < cell.vertices.size(); ++i) {
      Elem a = cell.vertices[i - 1], b = cell.vertices[i];
      int t = W.reflection_index(W.multiply(W.inverse(a), b));
      auto [it, fresh] = out.label.emplace(std::make_pair(a, b), t);
      if (fresh) out.up[a].push_back(b);
      else if (it->second != t) out.labels_consistent = false;
    }
  for (auto& v : out.up) std::sort(v.begin(), v.end());

  for (Elem u : T.w_plus()) {
    const auto& ids = T.cells_of(u);
    const std::size_t n = ids.size();
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> queue{0};
    seen[0] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto& va = cells[ids[queue[q]]].vertices;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& vb = cells[ids[j]].vertices;
        int diff = -1, count = 0;
        for (std::size_t i = 0; i < va.size(); ++i)
          if (va[i] != vb[i]) {
            diff = static_cast<int>(i);
            ++count;
          }
        if (count != 1) continue;
        if (!seen[j]) {
          seen[j] = 1;
          queue.push_back(j);
        }
        Elem v = va[diff - 1], x = va[diff], y = vb[diff], w = va[diff + 1];
        auto lab = [&](Elem p, Elem q2) { return W.reflection_index(W.multiply(W.inverse(p), q2)); };
        int t1 = lab(v, x), t2 = lab(x, w), t3 = lab(v, y), t4 = lab(y, w);
        auto closure = D.rank2_closure(t1, t2);
        std::set<int> canon{closure.front(), closure.back()};
        std::set<int> in_closure(closure.begin(), closure.end());
        ++out.diamonds_checked;
        bool ok = in_closure.count(t3) && in_closure.count(t4) &&
                  (canon == std::set<int>{t1, t2} || canon == std::set<int>{t3, t4});
        if (!ok && out.basification) {
          out.basification = false;
          out.failure = "diamond " + W.word_string(v) + " < " + W.word_string(x) + ", " + W.word_string(y) +
                        " < " + W.word_string(w) + " has canonical generators on neither side";
        }
      }
    }
    if (queue.size() != n && out.diamonds_connected) {
      out.diamonds_connected = false;
      out.failure = "diamond-move graph of [" + W.word_string(u) + ", uc] is disconnected";
    }
  }
  return out;
}

std::vector<std::vector<char>> closure_of_covers(const std::vector<std::vector<int>>& up) {
  const std::size_t n = up.size();
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<int> stack{static_cast<int>(a)};
    leq[a][a] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int z : up[x])
        if (!leq[a][z]) {
          leq[a][z] = 1;
          stack.push_back(z);
        }
    }
  }
  return leq;
}

PosetAnalysis analyze_poset(const std::vector<std::vector<char>>& leq) {
  const int n = static_cast<int>(leq.size());
  PosetAnalysis out;
  std::vector<int> below(n, 0), above(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq[a][b]) {
        ++below[b];
        ++above[a];
      }
  std::vector<std::vector<int>> meet(n, std::vector<int>(n, -1)), join(n, std::vector<int>(n, -1));
  out.lattice = true;
  for (int a = 0; a < n && out.lattice; ++a)
    for (int b = a; b < n && out.lattice; ++b) {
      int j = -1, m = -1;
      for (int z = 0; z < n; ++z) {
        if (leq[a][z] && leq[b][z] && (j < 0 || below[z] < below[j])) j = z;
        if (leq[z][a] && leq[z][b] && (m < 0 || above[z] < above[m])) m = z;
      }
      bool ok = j >= 0 && m >= 0;
      for (int z = 0; z < n && ok; ++z) {
        if (leq[a][z] && leq[b][z] && !leq[j][z]) ok = false;
        if (leq[z][a] && leq[z][b] && !leq[z][m]) ok = false;
      }
      if (!ok) {
        out.lattice = false;
        out.witness = "elements " + std::to_string(a) + " and " + std::to_string(b) + " lack a meet or join";
        break;
      }
      join[a][b] = join[b][a] = j;
      meet[a][b] = meet[b][a] = m;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool cover = true;
      for (int z = 0; z < n && cover; ++z)
        if (z != a && z != b && leq[a][z] && leq[z][b]) cover = false;
      if (cover) out.hasse.emplace_back(a, b);
    }
  if (!out.lattice) return out;
  out.sd_meet = out.sd_join = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (out.sd_meet && meet[x][y] == meet[x][z] && meet[x][join[y][z]] != meet[x][y]) {
          out.sd_meet = false;
          out.witness = "meet-semidistributivity fails at " + std::to_string(x) + "," + std::to_string(y) + "," +
                        std::to_string(z);
        }
        if (out.sd_join && join[x][y] == join[x][z] && join[x][meet[y][z]] != join[x][y]) {
          out.sd_join = false;
          out.witness = "join-semidistributivity fails at " + std::to_string(x) + "," + std::to_string(y) + "," +
                        std::to_string(z);
        }
      }
  return out;
}

std::vector<std::vector<char>> class_poset(const Sbdw& T, Elem u, const std::vector<Vec>& delta) {
  const auto& D = T.dual();
  auto cls = T.classes_of(u);
  const std::size_t n = cls.size();
  std::vector<std::vector<Vec>> rays(n);
  for (std::size_t i = 0; i < n; ++i)
    for (int t : D.classes()[cls[i]].set.members()) rays[i].push_back(delta[t]);
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = i == j || cone_contains(rays[i], rays[j]);
  return leq;
}

ConjectureScan conjecture_scan(const Sbdw& T, const Certificate& cert, const NcbOrder& ncb) {
  const CoxeterSystem& W = T.group();
  const auto& cells = T.cells();
  ConjectureScan out;
  {
    std::vector<std::vector<int>> up(ncb.up.begin(), ncb.up.end());
    auto pa = analyze_poset(closure_of_covers(up));
    out.ncb_lattice = pa.lattice;
    if (!pa.lattice) out.witnesses.push_back("noncrossing Bruhat order: " + pa.witness);
  }
  auto delta = delta_vectors(T.dual());
  out.class_lattice = out.class_semidistributive = out.class_regular = out.adjacency_facet = true;
  for (Elem u : T.w_plus()) {
    auto cls = T.classes_of(u);
    auto pa = analyze_poset(class_poset(T, u, delta));
    std::string tag = "Class_c(" + W.word_string(u) + ")";
    if (!pa.lattice) {
      out.class_lattice = false;
      out.witnesses.push_back(tag + ": " + pa.witness);
    } else if (!pa.sd_meet || !pa.sd_join) {
      out.class_semidistributive = false;
      out.witnesses.push_back(tag + ": " + pa.witness);
    }
    std::vector<int> degree(cls.size(), 0);
    std::set<std::pair<int, int>> hasse;
    for (auto [a, b] : pa.hasse) {
      ++degree[a];
      ++degree[b];
      hasse.insert({std::min(a, b), std::max(a, b)});
    }
    for (std::size_t i = 0; i < cls.size(); ++i)
      if (degree[i] != W.rank() - 1 && out.class_regular) {
        out.class_regular = false;
        out.witnesses.push_back(tag + ": Hasse degree " + std::to_string(degree[i]) + " at a class");
      }
    std::set<std::pair<int, int>> shared;
    auto local = [&](int cell) {
      int k = T.dual().class_of_chain(cells[cell].chain);
      return static_cast<int>(std::lower_bound(cls.begin(), cls.end(), k) - cls.begin());
    };
    for (const auto& f : cert.interior) {
      if (cells[f.cell_a].u != u || cells[f.cell_b].u != u) continue;
      int a = local(f.cell_a), b = local(f.cell_b);
      if (a != b) shared.insert({std::min(a, b), std::max(a, b)});
    }
    if (shared != hasse && out.adjacency_facet) {
      out.adjacency_facet = false;
      out.witnesses.push_back(tag + ": Hasse edges differ from facet-sharing pairs");
    }
  }
  return out;
}

}  // namespace permtri
