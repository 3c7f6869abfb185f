#include "fgr/exactfield.hpp"

#include <cctype>
#include <vector>

#include <mpfr.h>

namespace fgr {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/' && !seen_slash) {
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("Rational::parse: bad character in '" + s + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
  if (q.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
  return Rational(std::move(q));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

QSqrt2 QSqrt2::inverse() const {
  // (a + b r)^{-1} = (a - b r) / (a^2 - 2 b^2); the norm vanishes only at zero.
  Rational norm = a * a - Rational(2) * b * b;
  if (norm.is_zero()) throw std::domain_error("QSqrt2: inverse of zero");
  return {a / norm, -b / norm};
}

FieldElem::FieldElem(const Rational& r) {
  if (!r.is_zero()) terms_.emplace(0, QSqrt2{r, Rational()});
}

FieldElem::FieldElem(const QSqrt2& q) {
  if (!q.is_zero()) terms_.emplace(0, q);
}

FieldElem FieldElem::sqrt2() { return FieldElem(QSqrt2{Rational(), Rational(1)}); }

FieldElem FieldElem::log2() { return monomial(Rational(1), false, 1); }

FieldElem FieldElem::monomial(const Rational& c, bool with_sqrt2, int l_degree) {
  if (l_degree < 0) throw std::invalid_argument("FieldElem::monomial: negative L-degree");
  FieldElem out;
  out.set(l_degree, with_sqrt2 ? QSqrt2{Rational(), c} : QSqrt2{c, Rational()});
  return out;
}

void FieldElem::set(int degree, QSqrt2 value) {
  if (value.is_zero()) {
    terms_.erase(degree);
  } else {
    terms_[degree] = std::move(value);
  }
}

QSqrt2 FieldElem::coefficient(int l_degree) const {
  auto it = terms_.find(l_degree);
  return it == terms_.end() ? QSqrt2{} : it->second;
}

FieldElem FieldElem::normalized() const {
  FieldElem out;
  for (const auto& [deg, q] : terms_) {
    out.set(deg, QSqrt2{Rational(q.a.raw()), Rational(q.b.raw())});
  }
  return out;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElem: inverse of zero");
  if (l_degree() > 0) throw std::domain_error("FieldElem: inverse of an element involving log2");
  return FieldElem(coefficient(0).inverse());
}

FieldElem FieldElem::operator-() const {
  FieldElem out;
  for (const auto& [deg, q] : terms_) out.terms_.emplace(deg, -q);
  return out;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  for (const auto& [deg, q] : o.terms_) set(deg, coefficient(deg) + q);
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  for (const auto& [deg, q] : o.terms_) set(deg, coefficient(deg) - q);
  return *this;
}

FieldElem operator*(const FieldElem& x, const FieldElem& y) {
  FieldElem out;
  for (const auto& [dx, qx] : x.terms_) {
    for (const auto& [dy, qy] : y.terms_) {
      out.set(dx + dy, out.coefficient(dx + dy) + qx * qy);
    }
  }
  return out;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  *this = *this * o;
  return *this;
}

namespace {

std::vector<std::string> summands(const FieldElem::Terms& terms) {
  std::vector<std::string> out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const int deg = it->first;
    std::string lpart;
    if (deg == 1) {
      lpart = "log2";
    } else if (deg > 1) {
      lpart = "log2^" + std::to_string(deg);
    }
    auto emit = [&](const Rational& c, bool sqrt2) {
      if (c.is_zero()) return;
      std::string basis = sqrt2 ? (lpart.empty() ? "sqrt2" : "sqrt2*" + lpart) : lpart;
      if (basis.empty()) {
        out.push_back(c.to_string());
      } else if (c == Rational(1)) {
        out.push_back(basis);
      } else if (c == Rational(-1)) {
        out.push_back("-" + basis);
      } else {
        out.push_back(c.to_string() + "*" + basis);
      }
    };
    emit(it->second.a, false);
    emit(it->second.b, true);
  }
  return out;
}

}  // namespace

std::string FieldElem::to_string() const {
  auto parts = summands(terms_);
  if (parts.empty()) return "0";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].front() == '-') {
      s += " - " + parts[i].substr(1);
    } else {
      s += " + " + parts[i];
    }
  }
  return s;
}

bool FieldElem::is_single_summand() const { return summands(terms_).size() == 1; }

nlohmann::json FieldElem::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [deg, q] : terms_) {
    arr.push_back({{"Ldeg", deg}, {"a", q.a.to_string()}, {"b", q.b.to_string()}});
  }
  return {{"terms", arr}};
}

FieldElem FieldElem::from_json(const nlohmann::json& j) {
  FieldElem out;
  for (const auto& t : j.at("terms")) {
    const int deg = t.at("Ldeg").get<int>();
    QSqrt2 q{Rational::parse(t.at("a").get<std::string>()),
             Rational::parse(t.at("b").get<std::string>())};
    out.set(deg, out.coefficient(deg) + q);
  }
  return out;
}

FieldElem add(const FieldElem& x, const FieldElem& y) { return x + y; }
FieldElem mul(const FieldElem& x, const FieldElem& y) { return x * y; }
FieldElem neg(const FieldElem& x) { return -x; }
bool eq(const FieldElem& x, const FieldElem& y) { return x == y; }

namespace {

constexpr mpfr_prec_t kEvalBits = 256;

struct MpfrValue {
  mpfr_t v;
  MpfrValue() { mpfr_init2(v, kEvalBits); mpfr_set_zero(v, 1); }
  ~MpfrValue() { mpfr_clear(v); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
};

void evaluate(const FieldElem& x, mpfr_t out) {
  MpfrValue root2, log2, lpow, term, tmp;
  mpfr_sqrt_ui(root2.v, 2, MPFR_RNDN);
  mpfr_const_log2(log2.v, MPFR_RNDN);
  mpfr_set_zero(out, 1);
  for (const auto& [deg, q] : x.terms()) {
    mpfr_set_q(term.v, q.a.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(tmp.v, q.b.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_fma(term.v, tmp.v, root2.v, term.v, MPFR_RNDN);
    mpfr_pow_ui(lpow.v, log2.v, static_cast<unsigned long>(deg), MPFR_RNDN);
    mpfr_mul(term.v, term.v, lpow.v, MPFR_RNDN);
    mpfr_add(out, out, term.v, MPFR_RNDN);
  }
}

}  // namespace

template <>
float to_float<float>(const FieldElem& x) {
  MpfrValue r;
  evaluate(x, r.v);
  return mpfr_get_flt(r.v, MPFR_RNDN);
}

template <>
double to_float<double>(const FieldElem& x) {
  MpfrValue r;
  evaluate(x, r.v);
  return mpfr_get_d(r.v, MPFR_RNDN);
}

template <>
long double to_float<long double>(const FieldElem& x) {
  MpfrValue r;
  evaluate(x, r.v);
  return mpfr_get_ld(r.v, MPFR_RNDN);
}

}  // namespace fgr
