#pragma once

// Named basis integrals over the real line and exact linear combinations of
// them. Families (k >= 1):
//   p_k = int sech^k cos            b_k = int sech^k tanh sin
//   q_k = int sech^k logsech cos    c_k = int sech^k logsech tanh sin
//   r_k = int sech^k T cos          d_k = int x sech^k sin
//   s_k = int sech^k T tanh sin     e_k = int sech^k tanh T' cos
//   a_k = int x sech^k tanh cos     f_k = int sech^k T' sin

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fgr/exactfield.hpp"

namespace fgr {

/// Declaration order is the rendering and comparison order.
enum class Family { P, Q, R, S, A, B, C, D, E, F };

char family_letter(Family f);
std::optional<Family> family_from_letter(char c);

struct BasisIntegral {
  Family family = Family::P;
  int k = 1;

  friend auto operator<=>(const BasisIntegral&, const BasisIntegral&) = default;
  [[nodiscard]] std::string to_string() const;  // "p3"
};

/// Finite FieldElem-weighted sum of basis integrals, zero coefficients never stored.
class BasisCombo {
 public:
  using Terms = std::map<BasisIntegral, FieldElem>;

  BasisCombo() = default;
  BasisCombo(BasisIntegral bi, FieldElem coeff = FieldElem(1));  // NOLINT(google-explicit-constructor)

  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] FieldElem coefficient(BasisIntegral bi) const;
  /// Adds c * bi, dropping the entry if it cancels.
  void add_term(BasisIntegral bi, const FieldElem& c);

  /// Largest L-degree among the coefficients, -1 when empty.
  [[nodiscard]] int max_l_degree() const;
  [[nodiscard]] bool only_families(std::initializer_list<Family> allowed) const;

  BasisCombo operator-() const;
  BasisCombo& operator+=(const BasisCombo& o);
  BasisCombo& operator-=(const BasisCombo& o);
  BasisCombo& operator*=(const FieldElem& c);
  friend BasisCombo operator+(BasisCombo a, const BasisCombo& b) { return a += b; }
  friend BasisCombo operator-(BasisCombo a, const BasisCombo& b) { return a -= b; }
  friend BasisCombo operator*(BasisCombo a, const FieldElem& c) { return a *= c; }
  friend BasisCombo operator*(const FieldElem& c, BasisCombo a) { return a *= c; }
  friend bool operator==(const BasisCombo&, const BasisCombo&) = default;

  /// e.g. "sqrt2*p1 - r1 + s1"; "0" for the empty combo.
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] nlohmann::json to_json() const;
  static BasisCombo from_json(const nlohmann::json& j);

 private:
  Terms terms_;
};

}  // namespace fgr
