#pragma once

// Formal algebra of the integrand functions: products of sech^k, tanh, x,
// log(sech), the kernel T = exp(-sqrt2 |.|) * sech^2, its derivative T', and a
// single cos/sin factor, with exact coefficients.

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fgr/basis.hpp"
#include "fgr/exactfield.hpp"

namespace fgr {

enum class Trig { None, Cos, Sin };
enum class Parity { Even, Odd };

struct Monomial {
  int sech_pow = 0;
  int tanh_pow = 0;
  int x_pow = 0;
  int logsech_pow = 0;
  int T_pow = 0;
  int Tprime_pow = 0;
  Trig trig = Trig::None;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  /// e.g. "x·sech^5·tanh·cos"; "1" for the unit monomial.
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] nlohmann::json to_json() const;
};

class TrigClash : public std::logic_error {
 public:
  TrigClash(const Monomial& a, const Monomial& b);
};

class Unclassifiable : public std::runtime_error {
 public:
  explicit Unclassifiable(const Monomial& m);
  [[nodiscard]] const Monomial& monomial() const { return m_; }

 private:
  Monomial m_;
};

/// Product of monomials; throws TrigClash if both carry a trig factor.
Monomial operator*(const Monomial& a, const Monomial& b);

Parity parity(const Monomial& m);

/// The (family, k) whose defining integrand is exactly m. m must be normalized.
BasisIntegral classify(const Monomial& m);

/// Inverse of classify.
Monomial defining_monomial(BasisIntegral bi);

class FuncExpr {
 public:
  using Terms = std::map<Monomial, FieldElem>;

  FuncExpr() = default;
  FuncExpr(const FieldElem& c);  // NOLINT(google-explicit-constructor)
  FuncExpr(long c) : FuncExpr(FieldElem(c)) {}  // NOLINT(google-explicit-constructor)
  FuncExpr(const Monomial& m, const FieldElem& c = FieldElem(1));

  // Generators.
  static FuncExpr sech(int power = 1);
  static FuncExpr tanh();
  static FuncExpr x();
  static FuncExpr logsech();
  static FuncExpr T();
  static FuncExpr Tprime();
  static FuncExpr cos();
  static FuncExpr sin();

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] FieldElem coefficient(const Monomial& m) const;
  [[nodiscard]] int max_l_degree() const;

  FuncExpr operator-() const;
  FuncExpr& operator+=(const FuncExpr& o);
  FuncExpr& operator-=(const FuncExpr& o);
  friend FuncExpr operator+(FuncExpr a, const FuncExpr& b) { return a += b; }
  friend FuncExpr operator-(FuncExpr a, const FuncExpr& b) { return a -= b; }
  /// Distributed and normalized; see mul().
  friend FuncExpr operator*(const FuncExpr& a, const FuncExpr& b);
  friend bool operator==(const FuncExpr&, const FuncExpr&) = default;

  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] nlohmann::json to_json() const;

 private:
  void add_term(const Monomial& m, const FieldElem& c);
  Terms terms_;
};

/// Rewrites tanh^n (n >= 2) via tanh^2 = 1 - sech^2 and merges coefficients.
FuncExpr normalize(const FuncExpr& e);

/// Normalized product. Throws TrigClash when both factors contain trig parts.
FuncExpr mul(const FuncExpr& e1, const FuncExpr& e2);

/// int f*g over the real line as a basis combination. Odd-parity monomials
/// integrate to zero and are dropped (collected into `dropped` if given).
/// Throws Unclassifiable for an even monomial outside the ten families.
BasisCombo inner_product(const FuncExpr& f, const FuncExpr& g,
                         std::vector<Monomial>* dropped = nullptr);

/// Removes the c*sech component of e. Since <phi3, h31> = 0, pairing with h31
/// is unchanged by this.
FuncExpr strip_phi3_component(const FuncExpr& e);

/// Exact profiles at p = 3 (imaginary units of the second components removed).
namespace profiles {
FuncExpr phi3();        // sqrt2 sech
FuncExpr log_phi3();    // (1/2) log2 + log sech
FuncExpr xi31();        // 1 - phi3^2
FuncExpr xi32();        // 1
FuncExpr R1();
FuncExpr R2();
FuncExpr F();           // d/dp phi_p^(p-2) at p = 3
FuncExpr E();           // d/dp phi_p at p = 3
FuncExpr h31();         // sech^2 cos - tanh sin
FuncExpr h32();         // -tanh sin
FuncExpr h31_cos_part();  // sech^2 cos
FuncExpr h31_sin_part();  // -tanh sin
FuncExpr G32();         // 2 phi3 xi31 xi32
FuncExpr gamma3_weight();  // 6 x tanh sech^2 - (7/2) sech^2
FuncExpr Delta1();      // F(3 xi31^2 - xi32^2) + phi3 xi31^2 + 6 phi3 xi31 R1 - 2 phi3 xi32 R2
FuncExpr Delta2();      // F xi31 xi32 + phi3 R1 xi32 + phi3 xi31 R2
}  // namespace profiles

}  // namespace fgr
