#include "fgr/funcalg.hpp"

#include <array>
#include <utility>

namespace fgr {

namespace {

std::string power_factor(const char* name, int power) {
  if (power == 0) return {};
  if (power == 1) return name;
  return std::string(name) + "^" + std::to_string(power);
}

}  // namespace

std::string Monomial::to_string() const {
  std::array<std::string, 7> factors = {
      power_factor("x", x_pow),
      power_factor("sech", sech_pow),
      power_factor("tanh", tanh_pow),
      power_factor("log∘sech", logsech_pow),
      power_factor("T", T_pow),
      power_factor("T'", Tprime_pow),
      trig == Trig::Cos ? "cos" : trig == Trig::Sin ? "sin" : "",
  };
  std::string s;
  for (const auto& f : factors) {
    if (f.empty()) continue;
    if (!s.empty()) s += "·";
    s += f;
  }
  return s.empty() ? "1" : s;
}

nlohmann::json Monomial::to_json() const {
  return {{"sech", sech_pow},   {"tanh", tanh_pow}, {"x", x_pow},
          {"logsech", logsech_pow}, {"T", T_pow},   {"Tprime", Tprime_pow},
          {"trig", trig == Trig::Cos ? "cos" : trig == Trig::Sin ? "sin" : "none"}};
}

TrigClash::TrigClash(const Monomial& a, const Monomial& b)
    : std::logic_error("trig clash: " + a.to_string() + " * " + b.to_string()) {}

Unclassifiable::Unclassifiable(const Monomial& m)
    : std::runtime_error("unclassifiable monomial: " + m.to_string()), m_(m) {}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.trig != Trig::None && b.trig != Trig::None) throw TrigClash(a, b);
  return Monomial{a.sech_pow + b.sech_pow,       a.tanh_pow + b.tanh_pow,
                  a.x_pow + b.x_pow,             a.logsech_pow + b.logsech_pow,
                  a.T_pow + b.T_pow,             a.Tprime_pow + b.Tprime_pow,
                  a.trig != Trig::None ? a.trig : b.trig};
}

Parity parity(const Monomial& m) {
  // sech, log∘sech, T, cos are even; tanh, x, T', sin are odd.
  int odd = m.tanh_pow + m.x_pow + m.Tprime_pow + (m.trig == Trig::Sin ? 1 : 0);
  return (odd % 2 == 0) ? Parity::Even : Parity::Odd;
}

namespace {

// Shape of a monomial with the sech power factored out.
struct Shape {
  int tanh_pow, x_pow, logsech_pow, T_pow, Tprime_pow;
  Trig trig;
  friend bool operator==(const Shape&, const Shape&) = default;
};

constexpr std::array<std::pair<Family, Shape>, 10> kShapes = {{
    {Family::P, {0, 0, 0, 0, 0, Trig::Cos}},
    {Family::Q, {0, 0, 1, 0, 0, Trig::Cos}},
    {Family::R, {0, 0, 0, 1, 0, Trig::Cos}},
    {Family::S, {1, 0, 0, 1, 0, Trig::Sin}},
    {Family::A, {1, 1, 0, 0, 0, Trig::Cos}},
    {Family::B, {1, 0, 0, 0, 0, Trig::Sin}},
    {Family::C, {1, 0, 1, 0, 0, Trig::Sin}},
    {Family::D, {0, 1, 0, 0, 0, Trig::Sin}},
    {Family::E, {1, 0, 0, 0, 1, Trig::Cos}},
    {Family::F, {0, 0, 0, 0, 1, Trig::Sin}},
}};

}  // namespace

BasisIntegral classify(const Monomial& m) {
  if (m.sech_pow < 1) throw Unclassifiable(m);
  const Shape shape{m.tanh_pow, m.x_pow, m.logsech_pow, m.T_pow, m.Tprime_pow, m.trig};
  for (const auto& [family, s] : kShapes) {
    if (s == shape) return {family, m.sech_pow};
  }
  throw Unclassifiable(m);
}

Monomial defining_monomial(BasisIntegral bi) {
  for (const auto& [family, s] : kShapes) {
    if (family == bi.family) {
      return {bi.k, s.tanh_pow, s.x_pow, s.logsech_pow, s.T_pow, s.Tprime_pow, s.trig};
    }
  }
  throw std::logic_error("defining_monomial: unknown family");
}

FuncExpr::FuncExpr(const FieldElem& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

FuncExpr::FuncExpr(const Monomial& m, const FieldElem& c) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

FuncExpr FuncExpr::sech(int power) { return FuncExpr(Monomial{.sech_pow = power}); }
FuncExpr FuncExpr::tanh() { return FuncExpr(Monomial{.tanh_pow = 1}); }
FuncExpr FuncExpr::x() { return FuncExpr(Monomial{.x_pow = 1}); }
FuncExpr FuncExpr::logsech() { return FuncExpr(Monomial{.logsech_pow = 1}); }
FuncExpr FuncExpr::T() { return FuncExpr(Monomial{.T_pow = 1}); }
FuncExpr FuncExpr::Tprime() { return FuncExpr(Monomial{.Tprime_pow = 1}); }
FuncExpr FuncExpr::cos() { return FuncExpr(Monomial{.trig = Trig::Cos}); }
FuncExpr FuncExpr::sin() { return FuncExpr(Monomial{.trig = Trig::Sin}); }

FieldElem FuncExpr::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElem() : it->second;
}

int FuncExpr::max_l_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, c.l_degree());
  return deg;
}

void FuncExpr::add_term(const Monomial& m, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FuncExpr FuncExpr::operator-() const {
  FuncExpr out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

FuncExpr& FuncExpr::operator+=(const FuncExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FuncExpr& FuncExpr::operator-=(const FuncExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FuncExpr operator*(const FuncExpr& a, const FuncExpr& b) {
  FuncExpr out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return normalize(out);
}

std::string FuncExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.is_single_summand() ? c.to_string() : "(" + c.to_string() + ")";
    bool negative = cs.front() == '-';
    if (negative) cs.erase(0, 1);
    std::string term;
    const std::string ms = m.to_string();
    if (ms == "1") {
      term = cs;
    } else {
      term = (cs == "1") ? ms : cs + "*" + ms;
    }
    if (first) {
      s = negative ? "-" + term : term;
      first = false;
    } else {
      s += (negative ? " - " : " + ") + term;
    }
  }
  return s;
}

nlohmann::json FuncExpr::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : terms_) arr.push_back({{"monomial", m.to_json()}, {"coeff", c.to_json()}});
  return {{"terms", arr}};
}

FuncExpr normalize(const FuncExpr& e) {
  FuncExpr out;
  std::vector<std::pair<Monomial, FieldElem>> work(e.terms().begin(), e.terms().end());
  while (!work.empty()) {
    auto [m, c] = std::move(work.back());
    work.pop_back();
    if (m.tanh_pow >= 2) {
      // tanh^n = tanh^(n-2) - sech^2 tanh^(n-2)
      Monomial reduced = m;
      reduced.tanh_pow -= 2;
      Monomial shifted = reduced;
      shifted.sech_pow += 2;
      work.emplace_back(reduced, c);
      work.emplace_back(shifted, -c);
    } else {
      out += FuncExpr(m, c);
    }
  }
  return out;
}

FuncExpr mul(const FuncExpr& e1, const FuncExpr& e2) { return e1 * e2; }

BasisCombo inner_product(const FuncExpr& f, const FuncExpr& g, std::vector<Monomial>* dropped) {
  BasisCombo out;
  const FuncExpr product = mul(f, g);
  for (const auto& [m, c] : product.terms()) {
    if (parity(m) == Parity::Odd) {
      if (dropped != nullptr) dropped->push_back(m);
      continue;
    }
    out.add_term(classify(m), c);
  }
  return out;
}

FuncExpr strip_phi3_component(const FuncExpr& e) {
  return e - FuncExpr(Monomial{.sech_pow = 1}, e.coefficient(Monomial{.sech_pow = 1}));
}

namespace profiles {

namespace {

FieldElem root2() { return FieldElem::sqrt2(); }
FieldElem inv_root2() { return FieldElem::sqrt2() * FieldElem(Rational(1, 2)); }
FieldElem q(long n, long d = 1) { return FieldElem(Rational(n, d)); }

FuncExpr dphi3() { return FuncExpr(root2()) * FuncExpr(-1) * FuncExpr::sech() * FuncExpr::tanh(); }
// phi3'/phi3
FuncExpr dlog_phi3() { return -FuncExpr::tanh(); }

}  // namespace

FuncExpr phi3() { return FuncExpr(root2()) * FuncExpr::sech(); }

FuncExpr log_phi3() { return FuncExpr(q(1, 2) * FieldElem::log2()) + FuncExpr::logsech(); }

FuncExpr xi31() { return FuncExpr(1) - phi3() * phi3(); }

FuncExpr xi32() { return FuncExpr(1); }

FuncExpr R1() {
  const FieldElem c1 = inv_root2() * q(1, 4);   // 1/(4 sqrt2)
  const FieldElem c2 = inv_root2() * q(1, 2);   // 1/(2 sqrt2)
  return -(FuncExpr::x() * phi3() * dphi3()) -
         FuncExpr(c1) * (FuncExpr(3) - phi3() * phi3()) * FuncExpr::T() -
         FuncExpr(c2) * dlog_phi3() * FuncExpr::Tprime();
}

FuncExpr R2() {
  const FieldElem c1 = inv_root2() * q(3, 4);   // 3/(4 sqrt2)
  const FieldElem c2 = inv_root2() * q(1, 2);
  return FuncExpr(q(1, 2)) * phi3() * phi3() + FuncExpr(c1) * FuncExpr::T() +
         FuncExpr(c2) * dlog_phi3() * FuncExpr::Tprime();
}

FuncExpr E() {
  return FuncExpr(q(1, 2)) * phi3() * (FuncExpr(q(1, 4)) - log_phi3()) +
         FuncExpr(q(1, 2)) * FuncExpr::x() * dphi3();
}

FuncExpr F() { return E() + phi3() * log_phi3(); }

FuncExpr h31_cos_part() { return FuncExpr(q(1, 2)) * phi3() * phi3() * FuncExpr::cos(); }

FuncExpr h31_sin_part() { return dlog_phi3() * FuncExpr::sin(); }

FuncExpr h31() { return h31_cos_part() + h31_sin_part(); }

FuncExpr h32() { return dlog_phi3() * FuncExpr::sin(); }

FuncExpr G32() { return FuncExpr(2) * phi3() * xi31() * xi32(); }

FuncExpr gamma3_weight() {
  return FuncExpr(6) * FuncExpr::x() * FuncExpr::tanh() * FuncExpr::sech(2) -
         FuncExpr(q(7, 2)) * FuncExpr::sech(2);
}

FuncExpr Delta1() {
  return F() * (FuncExpr(3) * xi31() * xi31() - xi32() * xi32()) + phi3() * xi31() * xi31() +
         FuncExpr(6) * phi3() * xi31() * R1() - FuncExpr(2) * phi3() * xi32() * R2();
}

FuncExpr Delta2() { return F() * xi31() * xi32() + phi3() * R1() * xi32() + phi3() * xi31() * R2(); }

}  // namespace profiles

}  // namespace fgr
