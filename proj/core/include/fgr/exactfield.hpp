#pragma once

// Exact arithmetic in Q(sqrt2)[L], where L is a formal symbol standing for
// log 2. Every coefficient that appears in the reduction of the Fermi Golden
// Rule constant lives in this ring; floating point only enters via to_float.

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

namespace fgr {

/// Arbitrary-precision rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long numerator) : value_(numerator) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Accepts "n" or "n/d" with optional leading sign.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] std::string numerator() const { return value_.get_num().get_str(); }
  [[nodiscard]] std::string denominator() const { return value_.get_den().get_str(); }
  [[nodiscard]] std::string to_string() const { return value_.get_str(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  mpq_class value_{0};
};

/// a + b*sqrt2 with rational a, b.
struct QSqrt2 {
  Rational a;
  Rational b;

  [[nodiscard]] bool is_zero() const { return a.is_zero() && b.is_zero(); }
  QSqrt2 operator-() const { return {-a, -b}; }
  friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) { return {x.a + y.a, x.b + y.b}; }
  friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) { return {x.a - y.a, x.b - y.b}; }
  friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
    return {x.a * y.a + Rational(2) * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const QSqrt2&, const QSqrt2&) = default;

  /// Throws std::domain_error on zero.
  [[nodiscard]] QSqrt2 inverse() const;
};

/// Element of Q(sqrt2)[L]: a finite map from L-degree to a nonzero QSqrt2.
class FieldElem {
 public:
  using Terms = std::map<int, QSqrt2>;

  FieldElem() = default;
  FieldElem(long n) : FieldElem(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  FieldElem(const Rational& r);                  // NOLINT(google-explicit-constructor)
  FieldElem(const QSqrt2& q);                    // NOLINT(google-explicit-constructor)

  static FieldElem from_rational(const Rational& r) { return FieldElem(r); }
  static FieldElem sqrt2();
  static FieldElem log2();
  /// c * sqrt2^s * L^degree, with s in {0, 1}.
  static FieldElem monomial(const Rational& c, bool with_sqrt2, int l_degree);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// Highest L-degree present; -1 for zero.
  [[nodiscard]] int l_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  [[nodiscard]] QSqrt2 coefficient(int l_degree) const;
  [[nodiscard]] const Terms& terms() const { return terms_; }
  /// Canonical re-normalization; a fixed point on every value this class produces.
  [[nodiscard]] FieldElem normalized() const;

  /// Multiplicative inverse; only defined for nonzero elements free of L.
  [[nodiscard]] FieldElem inverse() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem&, const FieldElem&) = default;

  /// e.g. "-13*log2 - 71" or "1/2*sqrt2*log2 + 17/4*sqrt2". Higher L-degrees first.
  [[nodiscard]] std::string to_string() const;
  /// True when to_string() renders as one signed summand (no parentheses needed).
  [[nodiscard]] bool is_single_summand() const;

  [[nodiscard]] nlohmann::json to_json() const;
  static FieldElem from_json(const nlohmann::json& j);

 private:
  void set(int degree, QSqrt2 value);
  Terms terms_;
};

FieldElem add(const FieldElem& x, const FieldElem& y);
FieldElem mul(const FieldElem& x, const FieldElem& y);
FieldElem neg(const FieldElem& x);
bool eq(const FieldElem& x, const FieldElem& y);
inline bool is_zero(const FieldElem& x) { return x.is_zero(); }

/// Evaluates with sqrt2 and log 2 substituted. The value is computed with
/// 256-bit MPFR and then rounded once to the target type, so the result is
/// within 1 ulp of the exact value.
template <class Real>
Real to_float(const FieldElem& x);

template <>
float to_float<float>(const FieldElem& x);
template <>
double to_float<double>(const FieldElem& x);
template <>
long double to_float<long double>(const FieldElem& x);

inline double to_double(const FieldElem& x) { return to_float<double>(x); }

}  // namespace fgr
