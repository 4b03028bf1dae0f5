// numfield.cpp

#include "permtri/numfield.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace permtri {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

Poly derivative(const Poly& p) {
  Poly d;
  for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  trim(d);
  return d;
}

Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational q = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t k = 0; k < b.size(); ++k) a[k + shift] -= q * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sturm_changes(const std::vector<Poly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int roots_in(const Poly& p, const Rational& lo, const Rational& hi) {
  std::vector<Poly> seq{p, derivative(p)};
  while (!seq.back().empty()) {
    Poly r = remainder(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    seq.push_back(r);
  }
  return sturm_changes(seq, lo) - sturm_changes(seq, hi);
}

Rational from_double(double d) {
  Rational q(d);
  return q;
}

}  // namespace

Field::Field(std::vector<Rational> min_poly, Rational lo, Rational hi, int generator_m)
    : min_poly_(std::move(min_poly)), lo_(std::move(lo)), hi_(std::move(hi)), m_(generator_m) {
  if (min_poly_.size() < 2 || min_poly_.back() != 1) throw InvalidInput("minimal polynomial must be monic of degree >= 1");
  if (!(lo_ < hi_)) throw InvalidInput("isolating interval must satisfy lo < hi");
  if (degree() > 1) {
    if (poly_sign_at(lo_) * poly_sign_at(hi_) >= 0) throw InvalidInput("isolating interval does not bracket a root");
    if (roots_in(min_poly_, lo_, hi_) != 1) throw InvalidInput("isolating interval contains more than one root");
    Rational width = 1;
    mpz_class den = 1;
    den <<= 80;
    width /= den;
    while (hi_ - lo_ > width) {
      Rational mid = (lo_ + hi_) / 2;
      if (poly_sign_at(mid) == poly_sign_at(lo_)) lo_ = mid; else hi_ = mid;
    }
  }
}

int Field::poly_sign_at(const Rational& x) const { return sgn(eval(min_poly_, x)); }

std::pair<Rational, Rational> Field::refine(const Rational& lo, const Rational& hi) const {
  Rational mid = (lo + hi) / 2;
  if (poly_sign_at(mid) == poly_sign_at(lo)) return {mid, hi};
  return {lo, mid};
}

std::string Field::describe() const {
  if (is_rational()) return "Q";
  std::ostringstream os;
  os << "Q(2cos(pi/" << m_ << "))";
  return os.str();
}

FieldPtr rational_field() {
  static const FieldPtr q = std::make_shared<const Field>(std::vector<Rational>{0, 1}, Rational(-1), Rational(1), 3);
  return q;
}

std::vector<Rational> cos_min_poly(int m) {
  if (m < 2) throw InvalidInput("Coxeter matrix entries must be >= 2");
  std::vector<long double> roots;
  for (int k = 1; k < m; ++k)
    if (std::gcd(k, 2 * m) == 1) roots.push_back(2.0L * std::cos(k * 3.14159265358979323846264338327950288L / m));
  std::vector<long double> poly{1.0L};
  for (long double r : roots) {
    std::vector<long double> next(poly.size() + 1, 0.0L);
    for (size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= r * poly[k];
    }
    poly = next;
  }
  std::vector<Rational> out;
  for (long double c : poly) out.emplace_back(static_cast<long>(std::llround(c)));
  return out;
}

FieldPtr field_make(const std::set<int>& m_values, int max_degree) {
  long L = 1;
  for (int m : m_values) {
    if (m < 2) throw InvalidInput("Coxeter matrix entries must be >= 2");
    if (m == 2 || m == 3 || m == 4 || m == 6) continue;
    L = std::lcm(L, static_cast<long>(m));
    if (L > 1000) throw InvalidInput("required field degree exceeds the configured bound");
  }
  if (L == 1) return rational_field();
  auto poly = cos_min_poly(static_cast<int>(L));
  int degree = static_cast<int>(poly.size()) - 1;
  if (degree > max_degree) throw InvalidInput("required field degree exceeds the configured bound");
  const long double pi = 3.14159265358979323846264338327950288L;
  long double theta = 2.0L * std::cos(pi / L);
  long double gap = 4.0L;
  for (int k = 2; k < L; ++k)
    if (std::gcd(static_cast<long>(k), 2 * L) == 1) gap = std::min(gap, std::fabs(theta - 2.0L * std::cos(k * pi / L)));
  Rational lo = from_double(static_cast<double>(theta - gap / 4));
  Rational hi = from_double(static_cast<double>(theta + gap / 4));
  return std::make_shared<const Field>(std::move(poly), lo, hi, static_cast<int>(L));
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(FieldPtr f) : f_(std::move(f)), c_(f_->degree(), Rational(0)) {}

Scalar::Scalar(FieldPtr f, const Rational& q) : Scalar(std::move(f)) { c_[0] = q; }

Scalar::Scalar(FieldPtr f, std::vector<Rational> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != f_->degree()) throw InvalidInput("coefficient vector length must equal field degree");
}

Scalar Scalar::theta(FieldPtr f) {
  if (f->degree() == 1) return Scalar(f, Rational(-f->min_poly()[0]));
  Scalar s(f);
  s.c_[1] = 1;
  return s;
}

void Scalar::check_same(const Scalar& b) const {
  if (f_ != b.f_ && f_->min_poly() != b.f_->min_poly()) throw InvalidInput("scalars from different fields");
}

bool Scalar::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  check_same(b);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += b.c_[k];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  check_same(b);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= b.c_[k];
  return *this;
}

Scalar& Scalar::mul_rational(const Rational& q) {
  for (auto& c : c_) c *= q;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& b) {
  check_same(b);
  const int d = f_->degree();
  if (d == 1) {
    c_[0] *= b.c_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      if (b.c_[j] != 0) prod[i + j] += c_[i] * b.c_[j];
  }
  const auto& p = f_->min_poly();
  for (int k = 2 * d - 2; k >= d; --k) {
    if (prod[k] == 0) continue;
    Rational a = prod[k];
    for (int j = 0; j <= d; ++j) prod[k - d + j] -= a * p[j];
  }
  for (int i = 0; i < d; ++i) c_[i] = prod[i];
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  const int d = f_->degree();
  if (d == 1) return Scalar(f_, Rational(1 / c_[0]));
  // Columns: coefficients of a * theta^j; solve M x = e_0.
  std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d + 1, Rational(0)));
  Scalar col = *this;
  Scalar th = theta(f_);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) M[i][j] = col.c_[i];
    col *= th;
  }
  M[0][d] = 1;
  for (int colj = 0; colj < d; ++colj) {
    int piv = colj;
    while (piv < d && M[piv][colj] == 0) ++piv;
    if (piv == d) throw ArithmeticError("singular multiplication matrix");
    std::swap(M[piv], M[colj]);
    Rational inv = 1 / M[colj][colj];
    for (int k = colj; k <= d; ++k) M[colj][k] *= inv;
    for (int i = 0; i < d; ++i) {
      if (i == colj || M[i][colj] == 0) continue;
      Rational f = M[i][colj];
      for (int k = colj; k <= d; ++k) M[i][k] -= f * M[colj][k];
    }
  }
  std::vector<Rational> x(d);
  for (int i = 0; i < d; ++i) x[i] = M[i][d];
  return Scalar(f_, std::move(x));
}

Scalar& Scalar::operator/=(const Scalar& b) {
  check_same(b);
  if (b.is_zero()) throw ArithmeticError("division by zero");
  return *this *= b.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

int Scalar::sign() const {
  if (c_.size() == 1) return sgn(c_[0]);
  if (is_zero()) return 0;
  if (is_rational()) return sgn(c_[0]);
  auto [lo, hi] = f_->isolating_interval();
  for (int iter = 0; iter < 4000; ++iter) {
    // theta > 0 for every supported generator, so powers are monotone on [lo, hi].
    Rational plo = 1, phi = 1, slo = 0, shi = 0;
    for (size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] >= 0) {
        slo += c_[k] * plo;
        shi += c_[k] * phi;
      } else {
        slo += c_[k] * phi;
        shi += c_[k] * plo;
      }
      plo *= lo;
      phi *= hi;
    }
    if (slo > 0) return 1;
    if (shi < 0) return -1;
    std::tie(lo, hi) = f_->refine(lo, hi);
  }
  throw InternalError("sign refinement did not terminate");
}

double Scalar::to_double() const {
  if (c_.size() == 1) return c_[0].get_d();
  auto [lo, hi] = f_->isolating_interval();
  long double t = Rational((lo + hi) / 2).get_d();
  long double acc = 0, p = 1;
  for (const auto& q : c_) {
    acc += static_cast<long double>(q.get_d()) * p;
    p *= t;
  }
  return static_cast<double>(acc);
}

std::string Scalar::to_string() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << (c_[k] > 0 ? "+" : "");
    os << c_[k].get_str();
    if (k == 1) os << "*t";
    if (k > 1) os << "*t^" << k;
    first = false;
  }
  return os.str();
}

Scalar two_cos_multiple(const FieldPtr& f, int k) {
  Scalar prev(f, Rational(2)), cur = Scalar::theta(f);
  if (k == 0) return prev;
  for (int j = 1; j < k; ++j) {
    Scalar next = Scalar::theta(f) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace permtri
