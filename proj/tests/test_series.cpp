#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "coxcat/models.hpp"
#include "coxcat/series.hpp"

using namespace coxcat;

namespace {
PolyFrac c(int v) { return PolyFrac(v); }
}  // namespace

TEST_CASE("sqrt(1-4z) squares back") {
  auto s = sqrt_one_minus_4z(15);
  auto sq = s * s;
  CHECK(sq[0] == 1);
  CHECK(sq[1] == -4);
  for (int k = 2; k <= 15; ++k) CHECK(sq[k] == 0);
  QSeries generic = QSeries(15, {1, -4}).sqrt();
  CHECK(generic == s);
}

TEST_CASE("C and B coefficients") {
  auto C = series(SeriesKind::C, 5);
  auto B = series(SeriesKind::B, 5);
  const int cs[] = {1, 1, 2, 5, 14, 42};
  const int bs[] = {0, 1, 1, 2, 5, 14};
  for (int k = 0; k <= 5; ++k) {
    CHECK(C[k] == c(cs[k]));
    CHECK(B[k] == c(bs[k]));
  }
}

TEST_CASE("B counts connected noncrossing partitions") {
  auto B = series(SeriesKind::B, 9);
  for (int n = 1; n <= 9; ++n) {
    long connected = 0;
    for (const auto& p : noncrossing_partitions(n)) connected += is_connected(p) ? 1 : 0;
    CHECK(B[n] == c(static_cast<int>(connected)));
  }
}

TEST_CASE("series identities") {
  const int order = 12;
  auto C = series(SeriesKind::C, order);
  auto B = series(SeriesKind::B, order);
  auto one = FracSeries::constant(order, PolyFrac(1));
  CHECK(C * (one - B) == one);
  auto A = series(SeriesKind::A, order);
  for (int k = 0; k <= order; ++k) {
    CHECK(A[k].evaluate(1, 1) == C[k].evaluate(1, 1));
    CHECK(A[k].is_polynomial());
  }
}

TEST_CASE("F up to z^2") {
  auto F = series(SeriesKind::F, 2);
  CHECK(F[0] == c(1));
  CHECK(F[1] == PolyFrac(Poly::monomial(1, 1)));
  CHECK(F[2] == PolyFrac(Poly::monomial(1, 1) + Poly::monomial(2, 2)));
  CHECK(to_string(F[2].numerator()) == "x^2*y^2 + x*y");
}

TEST_CASE("factored F matches enumeration, Catalan and symmetry") {
  auto report = cross_check(10);
  int checked = 0;
  for (const auto& line : report.lines) {
    if (line.name.rfind("closed", 0) == 0) continue;
    CAPTURE(line.name);
    CAPTURE(line.detail);
    CHECK(line.ok);
    ++checked;
  }
  CHECK(checked == 33);
}

TEST_CASE("the closed form is computed in the (1-4x)(1-4y) ring") {
  auto closed = f_closed_form(3);
  CHECK(closed[0] == c(1));
  CHECK(closed.order() == 3);
}

TEST_CASE("Poly and PolyFrac arithmetic") {
  Poly x = Poly::x();
  Poly p = Poly(1) - x * Poly(4);
  Poly q;
  CHECK(((x + Poly(2)) * p).divide_by_linear(0, q));
  CHECK(q == x + Poly(2));
  CHECK_FALSE((x + Poly(2)).divide_by_linear(0, q));
  PolyFrac f(p);
  CHECK(f.inverse() == PolyFrac(Poly(1), 1, 0));
  CHECK(f * f.inverse() == PolyFrac(1));
  CHECK_THROWS_AS((PolyFrac(x) + PolyFrac(1)).inverse(), ValidationError);
  CHECK(PolyFrac(Poly::monomial(1, 0, 3)).evaluate(2, 5) == 6);
  CHECK(to_string(PolyFrac(Poly(1), 1, 2)) == "(1)/((1-4x)*(1-4y)^2)");
}

TEST_CASE("series errors") {
  CHECK_THROWS_AS(QSeries(3, {0, 1}).inverse(), ValidationError);
  CHECK_THROWS_AS(QSeries(3, {2, 1}).sqrt(), ValidationError);
  CHECK_THROWS_AS(QSeries(-1), ValidationError);
  CHECK_THROWS_AS(parse_series_kind("G"), ValidationError);
  CHECK(QSeries(3, {0, 1, 2}).divide_by_z() == QSeries(2, {1, 2}));
}

TEST_CASE("truncation order from the environment") {
  setenv("COXCAT_TRUNC_ORDER", "7", 1);
  CHECK(default_truncation_order() == 7);
  setenv("COXCAT_TRUNC_ORDER", "x", 1);
  CHECK_THROWS_AS(default_truncation_order(), ValidationError);
  unsetenv("COXCAT_TRUNC_ORDER");
  CHECK(default_truncation_order() == 12);
}

// The printed closed formula for F does not expand to the enumeration; this
// corrected one does:
//   F = (1 + 2xyz(1-s) / ((2-x+xs)(2-y+ys))) / (1-xyz),  s = sqrt(1-4z).
TEST_CASE("corrected closed form of F matches enumeration") {
  const int order = 10;
  const QSeries sq = sqrt_one_minus_4z(order);
  FracSeries s(order);
  for (int k = 0; k <= order; ++k) s[k] = PolyFrac(Poly(sq[k]));
  const FracSeries one = FracSeries::constant(order, c(1));
  const PolyFrac x(Poly::x()), y(Poly::y());
  const FracSeries xyz = FracSeries::monomial(order, 1, PolyFrac(Poly::monomial(1, 1, 2)));
  const FracSeries dx = one.scaled(c(2) - x) + s.scaled(x);
  const FracSeries dy = one.scaled(c(2) - y) + s.scaled(y);
  const FracSeries plain_xyz = FracSeries::monomial(order, 1, PolyFrac(Poly::monomial(1, 1)));
  const FracSeries f = (one - plain_xyz).inverse() * (one + xyz * (one - s) * (dx * dy).inverse());
  const FracSeries factored = series(SeriesKind::F, order);
  for (int n = 0; n <= order; ++n) {
    CAPTURE(n);
    CHECK(f[n] == PolyFrac(nn_na_polynomial(n)));
    CHECK(f[n] == factored[n]);
  }
}
