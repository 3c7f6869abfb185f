#include "fgr/parse.hpp"

#include <cctype>

namespace fgr {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

// scalar + combo; a well-formed expression has exactly one of them nonzero.
struct Value {
  FieldElem scalar;
  BasisCombo combo;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Value parse_all() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    skip_ws();
    Value acc;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    acc = term();
    if (negate) acc = {-acc.scalar, -acc.combo};
    while (true) {
      if (accept('+')) {
        Value t = term();
        acc.scalar += t.scalar;
        acc.combo += t.combo;
      } else if (accept('-')) {
        Value t = term();
        acc.scalar -= t.scalar;
        acc.combo -= t.combo;
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = unary();
    while (true) {
      skip_ws();
      const std::size_t op_pos = pos_;
      if (accept('*')) {
        Value rhs = unary();
        acc = multiply(acc, rhs, op_pos);
      } else if (accept('/')) {
        const std::size_t divisor_pos = pos_;
        Value rhs = unary();
        if (!rhs.combo.empty()) fail_at("cannot divide by a basis integral", divisor_pos);
        if (rhs.scalar.is_zero()) fail_at("division by zero", divisor_pos);
        if (rhs.scalar.l_degree() > 0) fail_at("cannot divide by an expression involving log2", divisor_pos);
        const FieldElem inv = rhs.scalar.inverse();
        acc = {acc.scalar * inv, acc.combo * inv};
      } else {
        return acc;
      }
    }
  }

  Value multiply(const Value& a, const Value& b, std::size_t at) const {
    const bool a_lin = !a.combo.empty();
    const bool b_lin = !b.combo.empty();
    if (a_lin && b_lin) fail_at("product of two basis integrals", at);
    if (a_lin && !b.scalar.is_zero() && !a.scalar.is_zero()) fail_at("mixed constant and basis terms in product", at);
    if (b_lin && !a.scalar.is_zero() && !b.scalar.is_zero()) fail_at("mixed constant and basis terms in product", at);
    if (a_lin) return {FieldElem(), a.combo * b.scalar};
    if (b_lin) return {FieldElem(), b.combo * a.scalar};
    return {a.scalar * b.scalar, BasisCombo()};
  }

  Value unary() {
    if (accept('-')) {
      Value v = unary();
      return {-v.scalar, -v.combo};
    }
    return power();
  }

  Value power() {
    Value base = primary();
    skip_ws();
    const std::size_t op_pos = pos_;
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    if (pos_ - start > 3) fail_at("exponent too large", start);
    if (!base.combo.empty()) fail_at("cannot raise a basis integral to a power", op_pos);
    const int n = std::stoi(std::string(text_.substr(start, pos_ - start)));
    FieldElem out(1);
    for (int i = 0; i < n; ++i) out *= base.scalar;
    return {out, BasisCombo()};
  }

  Value primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return {FieldElem(Rational::parse(text_.substr(start, pos_ - start))), BasisCombo()};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "sqrt2") return {FieldElem::sqrt2(), BasisCombo()};
      if (word == "log2") return {FieldElem::log2(), BasisCombo()};
      auto fam = family_from_letter(word[0]);
      std::size_t digits = 1;
      while (digits < word.size() && std::isdigit(static_cast<unsigned char>(word[digits]))) ++digits;
      if (!fam) {
        if (digits == word.size() && word.size() > 1) {
          fail_at("unknown family '" + std::string(1, word[0]) + "'", start);
        }
        fail_at("unknown identifier '" + std::string(word) + "'", start);
      }
      if (digits != word.size()) fail_at("unknown identifier '" + std::string(word) + "'", start);
      if (word.size() == 1) fail_at("missing index after family '" + std::string(1, word[0]) + "'", start);
      const std::string index(word.substr(1));
      if (index.size() > 6) fail_at("index too large", start + 1);
      const int k = std::stoi(index);
      if (k < 1) fail_at("index must be positive", start + 1);
      return {FieldElem(), BasisCombo(BasisIntegral{*fam, k})};
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BasisCombo parse_basis_expr(std::string_view text) {
  Value v = Parser(text).parse_all();
  if (!v.scalar.is_zero()) throw ParseError("constant term without a basis integral", 0);
  return v.combo;
}

FieldElem parse_scalar_expr(std::string_view text) {
  Value v = Parser(text).parse_all();
  if (!v.combo.empty()) throw ParseError("basis integral in a scalar expression", 0);
  return v.scalar;
}

}  // namespace fgr
