// lp.cpp

#include "permtri/lp.hpp"

#include "permtri/errors.hpp"

namespace permtri {

std::optional<std::vector<Rational>> lp_feasible(const std::vector<std::vector<Rational>>& A,
                                                 const std::vector<Rational>& b) {
  const int m = static_cast<int>(A.size());
  const int n = m ? static_cast<int>(A[0].size()) : 0;
  if (m == 0) return std::vector<Rational>(n, Rational(0));
  // Columns: x+ (n), x- (n), slack (m), artificial (m), rhs.
  const int cols = 2 * n + 2 * m;
  std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(cols + 1, Rational(0)));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    Rational sgn = b[i] < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) {
      T[i][j] = sgn * A[i][j];
      T[i][n + j] = -sgn * A[i][j];
    }
    T[i][2 * n + i] = sgn;
    T[i][2 * n + m + i] = 1;
    T[i][cols] = sgn * b[i];
    basis[i] = 2 * n + m + i;
  }
  // Phase-one objective row: minimize the sum of artificials, stored as reduced costs.
  for (int j = 0; j <= cols; ++j) {
    Rational s = 0;
    for (int i = 0; i < m; ++i) s += T[i][j];
    T[m][j] = (j >= 2 * n + m && j < cols) ? Rational(0) : Rational(-s);
  }
  for (int iter = 0;; ++iter) {
    if (iter > 100000) throw InternalError("simplex did not terminate");
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (T[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][cols] / T[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw InternalError("phase one unbounded");
    Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (int j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  if (T[m][cols] != 0) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] += T[i][cols];
    else if (basis[i] < 2 * n) x[basis[i] - n] -= T[i][cols];
  }
  for (int i = 0; i < m; ++i) {
    Rational lhs = 0;
    for (int j = 0; j < n; ++j) lhs += A[i][j] * x[j];
    if (lhs > b[i]) throw InternalError("simplex returned an infeasible point");
  }
  return x;
}

}  // namespace permtri
