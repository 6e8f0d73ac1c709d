#include "coxcat/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "coxcat/models.hpp"

namespace coxcat {

namespace {

mpq_class power(const mpq_class& b, int e) {
  mpq_class out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

// 1 - 4v
Poly linear(int var) { return Poly(1) - (var == 0 ? Poly::monomial(1, 0, 4) : Poly::monomial(0, 1, 4)); }

Poly linear_power(int var, int e) {
  Poly out(1);
  for (int i = 0; i < e; ++i) out = out * linear(var);
  return out;
}

FracSeries lift(const QSeries& s) {
  FracSeries out(s.order());
  for (int k = 0; k <= s.order(); ++k) out[k] = PolyFrac(Poly(s[k]));
  return out;
}

FracSeries catalan_series(int order) {
  FracSeries s = lift(sqrt_one_minus_4z(order + 1));
  FracSeries num = FracSeries::constant(order + 1, PolyFrac(1)) - s;
  return num.divide_by_z().scaled(PolyFrac(Poly(mpq_class(1, 2))));
}

FracSeries connected_series(int order) {
  return FracSeries::constant(order, PolyFrac(1)) - catalan_series(order).inverse();
}

// 1 / (1 - v B(z)), v = x or y
FracSeries a_series(int order, const Poly& v) {
  FracSeries one = FracSeries::constant(order, PolyFrac(1));
  return (one - connected_series(order).scaled(PolyFrac(v))).inverse();
}

std::string line_detail(const PolyFrac& got, const PolyFrac& want) {
  return "got " + to_string(got) + ", expected " + to_string(want);
}

}  // namespace

Poly::Poly(const mpq_class& c) { add_term({0, 0}, c); }

Poly Poly::monomial(int dx, int dy, const mpq_class& c) {
  Poly p;
  p.add_term({dx, dy}, c);
  return p;
}

void Poly::add_term(Exponent e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpq_class Poly::at(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

mpq_class Poly::evaluate(const mpq_class& xv, const mpq_class& yv) const {
  mpq_class out = 0;
  for (const auto& [e, c] : terms_) out += c * power(xv, e.first) * power(yv, e.second);
  return out;
}

bool Poly::divide_by_linear(int var, Poly& quotient) const {
  // group by the other variable's degree; divide each slice as a polynomial
  // in `var`: q_i = c_i + 4 q_{i-1}, remainder c_d + 4 q_{d-1} must vanish.
  std::map<int, std::map<int, mpq_class>> slices;
  for (const auto& [e, c] : terms_) {
    const int d = var == 0 ? e.first : e.second;
    const int other = var == 0 ? e.second : e.first;
    slices[other][d] = c;
  }
  Poly q;
  for (const auto& [other, coeffs] : slices) {
    const int deg = coeffs.rbegin()->first;
    if (deg == 0) return false;
    mpq_class prev = 0;
    for (int i = 0; i < deg; ++i) {
      auto it = coeffs.find(i);
      mpq_class qi = (it == coeffs.end() ? mpq_class(0) : it->second) + 4 * prev;
      if (var == 0) {
        q.add_term({i, other}, qi);
      } else {
        q.add_term({other, i}, qi);
      }
      prev = qi;
    }
    if (coeffs.rbegin()->second + 4 * prev != 0) return false;
  }
  quotient = std::move(q);
  return true;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [e, c] : terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  }
  return r;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Poly::Exponent, mpq_class>> ts(p.terms().begin(), p.terms().end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    return da != db ? da > db : a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [e, c] : ts) {
    mpq_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    auto var = [&](char v, int d) {
      if (d == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (d > 1) mono += "^" + std::to_string(d);
    };
    var('x', e.first);
    var('y', e.second);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

PolyFrac::PolyFrac(Poly num, int ax, int ay) : num_(std::move(num)), ax_(ax), ay_(ay) {
  if (ax < 0 || ay < 0) throw ValidationError("negative denominator power");
  normalize();
}

void PolyFrac::normalize() {
  if (num_.is_zero()) {
    ax_ = ay_ = 0;
    return;
  }
  Poly q;
  while (ax_ > 0 && num_.divide_by_linear(0, q)) {
    num_ = std::move(q);
    --ax_;
  }
  while (ay_ > 0 && num_.divide_by_linear(1, q)) {
    num_ = std::move(q);
    --ay_;
  }
}

mpq_class PolyFrac::evaluate(const mpq_class& xv, const mpq_class& yv) const {
  mpq_class den = power(1 - 4 * xv, ax_) * power(1 - 4 * yv, ay_);
  if (den == 0) throw ValidationError("evaluation at a pole");
  return num_.evaluate(xv, yv) / den;
}

PolyFrac PolyFrac::inverse() const {
  Poly rest = num_;
  Poly q;
  int i = 0;
  int j = 0;
  while (rest.divide_by_linear(0, q)) {
    rest = std::move(q);
    ++i;
  }
  while (rest.divide_by_linear(1, q)) {
    rest = std::move(q);
    ++j;
  }
  if (rest.terms().size() != 1 || rest.terms().begin()->first != Poly::Exponent{0, 0}) {
    throw ValidationError("coefficient " + to_string(*this) + " is not invertible");
  }
  const mpq_class c = rest.terms().begin()->second;
  return PolyFrac(Poly(1 / c) * linear_power(0, ax_) * linear_power(1, ay_), i, j);
}

PolyFrac PolyFrac::operator+(const PolyFrac& o) const {
  const int ax = std::max(ax_, o.ax_);
  const int ay = std::max(ay_, o.ay_);
  Poly a = num_ * linear_power(0, ax - ax_) * linear_power(1, ay - ay_);
  Poly b = o.num_ * linear_power(0, ax - o.ax_) * linear_power(1, ay - o.ay_);
  return PolyFrac(a + b, ax, ay);
}

PolyFrac PolyFrac::operator-(const PolyFrac& o) const { return *this + (-o); }

PolyFrac PolyFrac::operator-() const { return PolyFrac(-num_, ax_, ay_); }

PolyFrac PolyFrac::operator*(const PolyFrac& o) const {
  return PolyFrac(num_ * o.num_, ax_ + o.ax_, ay_ + o.ay_);
}

std::string to_string(const PolyFrac& f) {
  if (f.is_polynomial()) return to_string(f.numerator());
  std::string den;
  auto part = [&](const char* base, int e) {
    if (e == 0) return;
    if (!den.empty()) den += "*";
    den += base;
    if (e > 1) den += "^" + std::to_string(e);
  };
  part("(1-4x)", f.x_power());
  part("(1-4y)", f.y_power());
  return "(" + to_string(f.numerator()) + ")/(" + den + ")";
}

QSeries sqrt_one_minus_4z(int order) {
  QSeries s(order);
  s[0] = 1;
  for (int k = 1; k <= order; ++k) {
    mpq_class step(2 * (2 * k - 3), k);
    step.canonicalize();
    s[k] = s[k - 1] * step;
  }
  return s;
}

SeriesKind parse_series_kind(const std::string& name) {
  if (name == "C") return SeriesKind::C;
  if (name == "B") return SeriesKind::B;
  if (name == "A") return SeriesKind::A;
  if (name == "F") return SeriesKind::F;
  throw ValidationError("unknown series '" + name + "' (expected C, B, A or F)");
}

FracSeries series(SeriesKind which, int order) {
  switch (which) {
    case SeriesKind::C:
      return catalan_series(order);
    case SeriesKind::B:
      return connected_series(order);
    case SeriesKind::A:
      return a_series(order, Poly::x());
    case SeriesKind::F: {
      FracSeries one = FracSeries::constant(order, PolyFrac(1));
      FracSeries xyz = FracSeries::monomial(order, 1, PolyFrac(Poly::monomial(1, 1)));
      FracSeries inner = one + xyz * a_series(order, Poly::x()) * a_series(order, Poly::y()) * connected_series(order);
      return (one - xyz).inverse() * inner;
    }
  }
  throw ValidationError("unknown series");
}

FracSeries f_closed_form(int order) {
  FracSeries one = FracSeries::constant(order, PolyFrac(1));
  FracSeries s = lift(sqrt_one_minus_4z(order));
  FracSeries xyz = FracSeries::monomial(order, 1, PolyFrac(Poly::monomial(1, 1)));
  const PolyFrac x(Poly::x());
  const PolyFrac y(Poly::y());
  FracSeries num = xyz.scaled(PolyFrac(2)) * (FracSeries::constant(order, PolyFrac(3)) + s);
  FracSeries den_x = one - one.scaled(x * PolyFrac(3)) - s.scaled(x);
  FracSeries den_y = one - one.scaled(y * PolyFrac(3)) - s.scaled(y);
  return (one - xyz).inverse() * (one + num * (den_x * den_y).inverse());
}

Poly nn_na_polynomial(int n) {
  Poly out;
  for (const auto& p : noncrossing_partitions(n)) out = out + Poly::monomial(nn_count(p), na_count(p));
  return out;
}

bool CrossCheckReport::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const Line& l) { return l.ok; });
}

CrossCheckReport cross_check(int n_max) {
  if (n_max < 1) throw ValidationError("cross_check needs n_max >= 1");
  CrossCheckReport r;
  const FracSeries f = series(SeriesKind::F, n_max);
  const FracSeries closed = f_closed_form(n_max);
  for (int n = 0; n <= n_max; ++n) {
    const PolyFrac want(nn_na_polynomial(n));
    const std::string z = "z^" + std::to_string(n);
    r.lines.push_back({"factored F " + z + " = enumeration", f[n] == want, line_detail(f[n], want)});
    const mpq_class at_one = f[n].evaluate(1, 1);
    r.lines.push_back({"F(1,1) " + z + " = Catalan", at_one == catalan(n),
                       at_one.get_str() + " vs " + catalan(n).get_str()});
    Poly swapped;
    for (const auto& [e, c] : f[n].numerator().terms()) swapped = swapped + Poly::monomial(e.second, e.first, c);
    r.lines.push_back({"F " + z + " symmetric in x,y",
                       f[n].is_polynomial() && swapped == f[n].numerator(), to_string(f[n])});
    r.lines.push_back({"closed F " + z + " = enumeration", closed[n] == want, line_detail(closed[n], want)});
  }
  return r;
}

int default_truncation_order() {
  const char* env = std::getenv("COXCAT_TRUNC_ORDER");
  if (env == nullptr || *env == '\0') return 12;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 200) {
    throw ValidationError("COXCAT_TRUNC_ORDER must be an integer in [0,200], got '" + std::string(env) + "'");
  }
  return static_cast<int>(v);
}

}  // namespace coxcat
