#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "coxcat/core.hpp"

namespace coxcat {

/// Polynomial in x, y with rational coefficients; zero terms never stored.
class Poly {
 public:
  using Exponent = std::pair<int, int>;  // (deg x, deg y)

  Poly() = default;
  Poly(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(mpq_class(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly monomial(int dx, int dy, const mpq_class& c = 1);
  static Poly x() { return monomial(1, 0); }
  static Poly y() { return monomial(0, 1); }

  const std::map<Exponent, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of x^i y^j.
  mpq_class at(int i, int j) const;
  mpq_class evaluate(const mpq_class& xv, const mpq_class& yv) const;

  /// Exact quotient by (1 - 4v), v = x (var 0) or y (var 1); false when it
  /// does not divide.
  bool divide_by_linear(int var, Poly& quotient) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly&) const = default;

 private:
  void add_term(Exponent e, const mpq_class& c);
  std::map<Exponent, mpq_class> terms_;
};

std::string to_string(const Poly& p);

/// num / ((1-4x)^ax (1-4y)^ay), reduced. The only denominators the closed
/// form of F needs.
class PolyFrac {
 public:
  PolyFrac() = default;
  PolyFrac(Poly num, int ax = 0, int ay = 0);  // NOLINT(google-explicit-constructor)
  PolyFrac(int c) : PolyFrac(Poly(c)) {}  // NOLINT(google-explicit-constructor)

  const Poly& numerator() const { return num_; }
  int x_power() const { return ax_; }
  int y_power() const { return ay_; }
  bool is_polynomial() const { return ax_ == 0 && ay_ == 0; }
  bool is_zero() const { return num_.is_zero(); }
  mpq_class evaluate(const mpq_class& xv, const mpq_class& yv) const;

  /// Throws ValidationError unless the numerator is c (1-4x)^i (1-4y)^j.
  PolyFrac inverse() const;

  PolyFrac operator+(const PolyFrac& o) const;
  PolyFrac operator-(const PolyFrac& o) const;
  PolyFrac operator*(const PolyFrac& o) const;
  PolyFrac operator-() const;
  bool operator==(const PolyFrac&) const = default;

 private:
  void normalize();
  Poly num_;
  int ax_ = 0;
  int ay_ = 0;
};

std::string to_string(const PolyFrac& f);

inline mpq_class ring_inverse(const mpq_class& c) {
  if (c == 0) throw ValidationError("division by a series with zero constant term");
  return 1 / c;
}
inline PolyFrac ring_inverse(const PolyFrac& c) {
  if (c.is_zero()) throw ValidationError("division by a series with zero constant term");
  return c.inverse();
}

/// Power series in z truncated after z^order, coefficients in R.
template <class R>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : c_(static_cast<std::size_t>(check(order)) + 1, R(0)) {}
  TruncatedSeries(int order, std::vector<R> coeffs) : TruncatedSeries(order) {
    for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
  }
  static TruncatedSeries constant(int order, R c) { return TruncatedSeries(order, {std::move(c)}); }
  /// c * z^k.
  static TruncatedSeries monomial(int order, int k, R c) {
    TruncatedSeries s(order);
    if (k <= order) s.c_[static_cast<std::size_t>(k)] = std::move(c);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  R& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<R>& coefficients() const { return c_; }

  TruncatedSeries operator+(const TruncatedSeries& o) const {
    TruncatedSeries r(order());
    for (int k = 0; k <= order(); ++k) r[k] = (*this)[k] + o[k];
    return r;
  }
  TruncatedSeries operator-(const TruncatedSeries& o) const {
    TruncatedSeries r(order());
    for (int k = 0; k <= order(); ++k) r[k] = (*this)[k] - o[k];
    return r;
  }
  TruncatedSeries operator*(const TruncatedSeries& o) const {
    TruncatedSeries r(order());
    for (int i = 0; i <= order(); ++i) {
      if (is_zero((*this)[i])) continue;
      for (int j = 0; i + j <= order(); ++j) r[i + j] = r[i + j] + (*this)[i] * o[j];
    }
    return r;
  }
  TruncatedSeries scaled(const R& c) const {
    TruncatedSeries r(order());
    for (int k = 0; k <= order(); ++k) r[k] = (*this)[k] * c;
    return r;
  }
  /// Multiplicative inverse; needs an invertible constant term.
  TruncatedSeries inverse() const {
    TruncatedSeries r(order());
    const R inv0 = ring_inverse((*this)[0]);
    r[0] = inv0;
    for (int k = 1; k <= order(); ++k) {
      R acc(0);
      for (int i = 1; i <= k; ++i) acc = acc + (*this)[i] * r[k - i];
      r[k] = -(acc * inv0);
    }
    return r;
  }
  /// Square root with constant term 1; needs constant term 1.
  TruncatedSeries sqrt() const {
    if (!((*this)[0] == R(1))) throw ValidationError("sqrt needs constant term 1");
    TruncatedSeries r(order());
    r[0] = R(1);
    const R half = ring_inverse(R(2));
    for (int k = 1; k <= order(); ++k) {
      R acc = (*this)[k];
      for (int i = 1; i < k; ++i) acc = acc - r[i] * r[k - i];
      r[k] = acc * half;
    }
    return r;
  }
  /// f(z) / z, one order lower; the constant term must vanish.
  TruncatedSeries divide_by_z() const {
    if (!is_zero((*this)[0])) throw ValidationError("division by z with nonzero constant term");
    if (order() == 0) throw ValidationError("division by z needs order >= 1");
    TruncatedSeries r(order() - 1);
    for (int k = 0; k < order(); ++k) r[k] = (*this)[k + 1];
    return r;
  }
  bool operator==(const TruncatedSeries&) const = default;

 private:
  static int check(int order) {
    if (order < 0) throw ValidationError("truncation order must be nonnegative");
    return order;
  }
  static bool is_zero(const mpq_class& c) { return c == 0; }
  static bool is_zero(const PolyFrac& c) { return c.is_zero(); }
  std::vector<R> c_;
};

using QSeries = TruncatedSeries<mpq_class>;
using FracSeries = TruncatedSeries<PolyFrac>;

/// sqrt(1-4z) from the binomial recurrence a_k = a_{k-1} * 2(2k-3)/k.
QSeries sqrt_one_minus_4z(int order);

enum class SeriesKind { C, B, A, F };

SeriesKind parse_series_kind(const std::string& name);

/// The generating functions; F from 1/(1-xyz) (1 + xyz A(x) A(y) B).
/// Coefficients are in x, y (A uses x only, C and B are constants).
FracSeries series(SeriesKind which, int order);
/// F from the closed formula with sqrt(1-4z). Coefficients may fail to be
/// polynomials.
FracSeries f_closed_form(int order);

/// sum over NC(n) of x^nn y^na.
Poly nn_na_polynomial(int n);

struct CrossCheckReport {
  struct Line {
    std::string name;
    bool ok = false;
    std::string detail;
  };
  std::vector<Line> lines;
  bool ok() const;
};

/// Factored F against enumeration, F(1,1,z) against Catalan, x<->y symmetry,
/// and the closed form against both, up to z^n_max.
CrossCheckReport cross_check(int n_max);

/// Default truncation order: $COXCAT_TRUNC_ORDER, else 12.
int default_truncation_order();

}  // namespace coxcat
