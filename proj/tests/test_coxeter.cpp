#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "permtri/absolute.hpp"
#include "permtri/coxeter.hpp"
#include "permtri/linalg.hpp"

using namespace permtri;

namespace {

struct Facts {
  const char* label;
  int order, N, h;
  std::vector<int> degrees;
};

// Standard tables.
const std::vector<Facts> kFacts = {
    {"A1", 2, 1, 2, {2}},           {"A2", 6, 3, 3, {2, 3}},        {"A3", 24, 6, 4, {2, 3, 4}},
    {"A4", 120, 10, 5, {2, 3, 4, 5}}, {"B2", 8, 4, 4, {2, 4}},      {"B3", 48, 9, 6, {2, 4, 6}},
    {"B4", 384, 16, 8, {2, 4, 6, 8}}, {"D4", 192, 12, 6, {2, 4, 4, 6}}, {"G2", 12, 6, 6, {2, 6}},
    {"H3", 120, 15, 10, {2, 6, 10}}, {"I2(5)", 10, 5, 5, {2, 5}},   {"I2(7)", 14, 7, 7, {2, 7}},
    {"F4", 1152, 24, 12, {2, 6, 8, 12}},
};

Elem w(const CoxeterSystem& W, std::vector<int> one_based) {
  for (int& s : one_based) --s;
  return W.from_word(one_based);
}

}  // namespace

TEST_CASE("group orders, reflections and degrees") {
  for (const auto& f : kFacts) {
    CAPTURE(f.label);
    auto W = CoxeterSystem::build(f.label);
    CHECK(W.order() == f.order);
    CHECK(W.num_reflections() == f.N);
    CHECK(W.coxeter_number() == f.h);
    CHECK(W.degrees() == f.degrees);
    CHECK(W.length(W.w0()) == f.N);
    long long prod = 1;
    int sum = 0;
    for (int d : W.degrees()) prod *= d, sum += d - 1;
    CHECK(prod == W.order());
    CHECK(sum == W.num_reflections());
  }
}

TEST_CASE("label parsing and errors") {
  CHECK_THROWS_AS(CoxeterSystem::build("Q7"), InvalidInput);
  CHECK_THROWS_AS(CoxeterSystem::build("A0"), InvalidInput);
  CHECK_THROWS_AS(CoxeterSystem::from_matrix({{1, 3}, {2, 1}}), InvalidInput);
  CHECK_THROWS_AS(CoxeterSystem::from_matrix({{1, 0}, {0, 1}}), InvalidInput);
  BuildOptions small;
  small.size_cap = 100;
  CHECK_THROWS_AS(CoxeterSystem::build("A4", small), GroupTooLarge);
  auto P = CoxeterSystem::build("A1xA2");
  CHECK(P.order() == 12);
  CHECK_FALSE(P.irreducible());
  CHECK(P.components().size() == 2);
  auto M = CoxeterSystem::from_matrix({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
  CHECK(M.order() == 24);
  CHECK(parse_word("s1s2s3") == std::vector<int>{0, 1, 2});
  CHECK(parse_word("1,3,2") == std::vector<int>{0, 2, 1});
  CHECK(format_word({0, 1}) == "s1s2");
}

TEST_CASE("small products and words") {
  auto A2 = CoxeterSystem::build("A2");
  Elem s1 = A2.simple(0), s2 = A2.simple(1);
  CHECK(A2.multiply(s1, s1) == A2.identity());
  Elem c = A2.multiply(s1, s2);
  CHECK(A2.length(c) == 2);
  CHECK(A2.reduced_word(c) == std::vector<int>{0, 1});
  CHECK(A2.reduced_word(A2.identity()).empty());
  auto w0 = A2.reduced_word(A2.w0());
  CHECK(w0.size() == 3);
  CHECK((w0 == std::vector<int>{0, 1, 0} || w0 == std::vector<int>{1, 0, 1}));
  auto A3 = CoxeterSystem::build("A3");
  CHECK(A3.multiply(A3.w0(), A3.w0()) == 0);
  CHECK(A3.left_inversions(A3.w0()).count() == 6);
  CHECK(A3.right_inversions(A3.w0()).count() == 6);
  CHECK(A3.left_inversions(0).none());
  CHECK(A3.left_descents(0).empty());
}

TEST_CASE("inversion sequences match transpositions") {
  auto A2 = CoxeterSystem::build("A2");
  std::vector<std::pair<int, int>> got;
  for (int t : A2.inversion_sequence({0, 1, 0})) got.push_back(oracle::transposition(A2, A2.reflection(t)));
  CHECK(got == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(A2.inversion_sequence({0, 0}), InvalidInput);

  auto A3 = CoxeterSystem::build("A3");
  got.clear();
  for (int t : A3.inversion_sequence({2, 1, 0, 2, 1, 2})) got.push_back(oracle::transposition(A3, A3.reflection(t)));
  CHECK(got == std::vector<std::pair<int, int>>{{3, 4}, {2, 4}, {1, 4}, {2, 3}, {1, 3}, {1, 2}});
  Elem t13 = w(A3, {1, 2, 1});
  CHECK(oracle::transposition(A3, t13) == std::pair<int, int>{1, 3});
  CHECK(A3.length(t13) == 3);
}

TEST_CASE("type A agrees with the permutation model") {
  for (std::string label : {"A2", "A3", "A4"}) {
    auto W = CoxeterSystem::build(label);
    const int n = W.rank() + 1;
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Elem> pick(0, W.order() - 1);
    for (Elem x = 0; x < W.order(); ++x) {
      auto p = oracle::perm_of(W, x);
      CHECK(W.length(x) == oracle::perm_inversions(p));
      CHECK(reflection_length(W, x) == n - oracle::perm_cycles(p));
      Elem y = pick(rng);
      auto pq = oracle::perm_of(W, W.multiply(x, y));
      auto py = oracle::perm_of(W, y);
      for (int i = 0; i < n; ++i) CHECK(pq[i] == p[py[i]]);
      // The left inversions of x are the transpositions (i j) with x^{-1}(i) > x^{-1}(j).
      oracle::Perm pinv(n);
      for (int i = 0; i < n; ++i) pinv[p[i]] = i;
      for (int t = 0; t < W.num_reflections(); ++t) {
        auto [a, b] = oracle::transposition(W, W.reflection(t));
        CHECK(W.left_inversions(x).test(t) == (pinv[a - 1] > pinv[b - 1]));
      }
    }
  }
}

TEST_CASE("Bruhat order matches the subword property") {
  for (std::string label : {"A2", "A3", "B3", "I2(5)", "H3"}) {
    CAPTURE(label);
    auto W = CoxeterSystem::build(label);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Elem> pick(0, W.order() - 1);
    const int trials = W.order() <= 48 ? W.order() * W.order() : 3000;
    for (int it = 0; it < trials; ++it) {
      Elem u = W.order() <= 48 ? it / W.order() : pick(rng);
      Elem v = W.order() <= 48 ? it % W.order() : pick(rng);
      CHECK(W.bruhat_leq(u, v) == oracle::bruhat_subword(W, u, v));
    }
    for (Elem x = 0; x < W.order(); ++x) {
      auto covers = W.bruhat_covers(x);
      std::sort(covers.begin(), covers.end());
      CHECK(covers == oracle::covers_by_reflections(W, x));
      CHECK(W.bruhat_leq(0, x));
    }
  }
  auto A2 = CoxeterSystem::build("A2");
  Elem c = A2.from_word({0, 1});
  int below = 0;
  for (Elem x = 0; x < A2.order(); ++x) below += oracle::bruhat_subword(A2, x, c);
  CHECK(below == 4);
}

TEST_CASE("lifting property on random triples") {
  auto W = CoxeterSystem::build("B3");
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<Elem> pick(0, W.order() - 1);
  std::uniform_int_distribution<int> gen(0, W.rank() - 1);
  int used = 0;
  for (int it = 0; it < 20000 && used < 300; ++it) {
    Elem u = pick(rng), x = pick(rng);
    int s = gen(rng);
    Elem us = W.rmul(u, s), xs = W.rmul(x, s);
    if (W.length(us) < W.length(u) || W.length(xs) > W.length(x) || !W.bruhat_leq(u, x)) continue;
    ++used;
    CHECK(W.bruhat_leq(u, xs));
    CHECK(W.bruhat_leq(us, x));
  }
  CHECK(used == 300);
}

TEST_CASE("weak order lattice operations") {
  auto A3 = CoxeterSystem::build("A3");
  Elem a = w(A3, {1, 2}), b = w(A3, {1, 3});
  CHECK(A3.weak_meet(a, b, Side::Right) == A3.simple(0));
  for (Elem x = 0; x < A3.order(); ++x) {
    CHECK(A3.weak_meet(x, 0, Side::Left) == 0);
    CHECK(A3.weak_meet(x, 0, Side::Right) == 0);
    CHECK(A3.weak_join(x, x, Side::Right) == x);
    CHECK(A3.weak_join(x, A3.w0(), Side::Left) == A3.w0());
  }
  // Right weak order is containment of left inversion sets.
  for (Elem x = 0; x < A3.order(); ++x)
    for (Elem y = 0; y < A3.order(); ++y) {
      CHECK(A3.weak_leq(x, y, Side::Right) == A3.left_inversions(x).subset_of(A3.left_inversions(y)));
      Elem m = A3.weak_meet(x, y, Side::Right);
      CHECK(A3.weak_leq(m, x, Side::Right));
      CHECK(A3.weak_leq(m, y, Side::Right));
      for (Elem z = 0; z < A3.order(); ++z)
        if (A3.weak_leq(z, x, Side::Right) && A3.weak_leq(z, y, Side::Right)) CHECK(A3.weak_leq(z, m, Side::Right));
    }
}

TEST_CASE("standard Coxeter elements") {
  auto A2 = CoxeterSystem::build("A2");
  CHECK(A2.coxeter_elements().size() == 2);
  for (std::string label : {"A3", "B3", "D4", "H3", "A1xA2"}) {
    CAPTURE(label);
    auto W = CoxeterSystem::build(label);
    std::vector<int> perm(W.rank());
    std::iota(perm.begin(), perm.end(), 0);
    std::set<Elem> brute;
    do brute.insert(W.from_word(perm));
    while (std::next_permutation(perm.begin(), perm.end()));
    auto cs = W.coxeter_elements();
    CHECK(std::set<Elem>(cs.begin(), cs.end()) == brute);
    CHECK(cs.size() == brute.size());
    for (Elem c : cs) {
      CHECK(W.length(c) == W.rank());
      CHECK(reflection_length(W, c) == W.rank());
    }
  }
  CHECK(CoxeterSystem::build("A3").coxeter_elements().size() == 4);
}

TEST_CASE("invariants of length and w0") {
  for (std::string label : {"A3", "B3", "H3", "D4"}) {
    auto W = CoxeterSystem::build(label);
    for (Elem x = 0; x < W.order(); ++x) {
      CHECK(W.length(x) + W.length(W.multiply(x, W.w0())) == W.num_reflections());
      CHECK(W.length(W.multiply(W.w0(), W.multiply(x, W.w0()))) == W.length(x));
      CHECK(W.length(W.inverse(x)) == W.length(x));
      CHECK(W.from_word(W.reduced_word(x)) == x);
      CHECK(static_cast<int>(W.reduced_word(x).size()) == W.length(x));
    }
  }
}

TEST_CASE("the realization is preserved by the group") {
  for (std::string label : {"B3", "H3", "I2(7)", "G2"}) {
    CAPTURE(label);
    auto W = CoxeterSystem::build(label);
    Vec y = W.canonical_base_point();
    for (int s = 0; s < W.rank(); ++s) CHECK(W.pair(W.root(s), y) == W.one());
    for (int t = 0; t < W.num_reflections(); ++t) {
      CHECK(W.pair(W.root(t), W.coroot(t)) == W.one() + W.one());
      CHECK(W.pair(W.root(t), y).sign() > 0);
      CHECK(W.reflect(t, y) == W.act(W.reflection(t), y));
    }
    for (Elem x = 0; x < W.order(); x += 3) {
      for (int k = 0; k < W.num_reflections(); ++k) {
        Vec f = W.act_form(x, W.root(k));
        CHECK(W.pair(f, W.act(x, y)) == W.pair(W.root(k), y));
        const int N = W.num_reflections();
        int img = W.root_image(x, k);
        Vec expect = img < N ? W.root(img) : scale(W.root(img - N), -W.one());
        CHECK(f == expect);
      }
      int neg = 0;
      for (int k = 0; k < W.num_reflections(); ++k) neg += W.pair(W.root(k), W.act(W.inverse(x), y)).sign() < 0;
      CHECK(neg == W.length(x));
    }
  }
}

TEST_CASE("table cache round trip") {
  auto dir = std::filesystem::temp_directory_path() / "permtri-cache-test";
  std::filesystem::remove_all(dir);
  BuildOptions opt;
  opt.cache_dir = dir.string();
  auto a = CoxeterSystem::build("B3", opt);
  CHECK_FALSE(a.loaded_from_cache());
  auto b = CoxeterSystem::build("B3", opt);
  CHECK(b.loaded_from_cache());
  REQUIRE(a.order() == b.order());
  for (Elem x = 0; x < a.order(); ++x) {
    CHECK(a.reduced_word(x) == b.reduced_word(x));
    CHECK(a.left_inversions(x) == b.left_inversions(x));
  }
  std::filesystem::remove_all(dir);
}
