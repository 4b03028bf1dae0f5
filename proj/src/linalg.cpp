// linalg.cpp

#include "permtri/linalg.hpp"

namespace permtri {

Vec zero_vec(const FieldPtr& f, int n) { return Vec(n, Scalar(f)); }

Mat identity_mat(const FieldPtr& f, int n) {
  Mat m(n, zero_vec(f, n));
  for (int i = 0; i < n; ++i) m[i][i] = Scalar(f, Rational(1));
  return m;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Vec& a, const Scalar& s) {
  Vec r = a;
  for (auto& x : r) x *= s;
  return r;
}

Scalar dot(const Vec& a, const Vec& b) {
  Scalar acc(a.at(0).field());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    acc += a[i] * b[i];
  }
  return acc;
}

Vec mat_vec(const Mat& m, const Vec& v) {
  Vec r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(dot(row, v));
  return r;
}

Mat transpose(const Mat& m) {
  if (m.empty()) return m;
  Mat t(m[0].size(), Vec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  Mat bt = transpose(b);
  Mat r(a.size(), Vec(bt.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < bt.size(); ++j) r[i][j] = dot(a[i], bt[j]);
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

// Row reduction in place; returns rank and the sign-adjusted product of pivots.
int eliminate(Mat& m, Scalar* det_out) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  bool negate = false;
  Scalar det = rows ? Scalar(m[0][0].field(), Rational(1)) : Scalar();
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = rank;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      std::swap(m[piv], m[rank]);
      negate = !negate;
    }
    Scalar inv = m[rank][c].inverse();
    if (det_out) det *= m[rank][c];
    for (int i = rank + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      Scalar f = m[i][c] * inv;
      for (int k = c; k < cols; ++k)
        if (!m[rank][k].is_zero()) m[i][k] -= f * m[rank][k];
    }
    ++rank;
  }
  if (det_out) *det_out = negate ? -det : det;
  return rank;
}

}  // namespace

Scalar det(Mat m) {
  if (m.empty()) throw InvalidInput("determinant of empty matrix");
  Scalar d;
  int r = eliminate(m, &d);
  if (r < static_cast<int>(m.size())) return Scalar(m[0][0].field());
  return d;
}

int rank(Mat m) {
  if (m.empty()) return 0;
  return eliminate(m, nullptr);
}

std::optional<Vec> solve(Mat a, const Vec& b) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[c]);
    Scalar inv = a[c][c].inverse();
    for (int k = c; k <= n; ++k) a[c][k] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (int k = c; k <= n; ++k)
        if (!a[c][k].is_zero()) a[i][k] -= f * a[c][k];
    }
  }
  Vec x;
  x.reserve(n);
  for (int i = 0; i < n; ++i) x.push_back(a[i][n]);
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  const int n = static_cast<int>(a.size());
  const FieldPtr& f = a[0][0].field();
  Mat cols;
  for (int j = 0; j < n; ++j) {
    Vec e = zero_vec(f, n);
    e[j] = Scalar(f, Rational(1));
    auto x = solve(a, e);
    if (!x) return std::nullopt;
    cols.push_back(*x);
  }
  return transpose(cols);
}

}  // namespace permtri
