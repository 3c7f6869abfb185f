#include "fgr/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace fgr {

namespace {
constexpr std::string_view kLetters = "pqrsabcdef";
}

char family_letter(Family f) { return kLetters[static_cast<std::size_t>(f)]; }

std::optional<Family> family_from_letter(char c) {
  auto pos = kLetters.find(c);
  if (pos == std::string_view::npos) return std::nullopt;
  return static_cast<Family>(pos);
}

std::string BasisIntegral::to_string() const { return family_letter(family) + std::to_string(k); }

BasisCombo::BasisCombo(BasisIntegral bi, FieldElem coeff) { add_term(bi, coeff); }

FieldElem BasisCombo::coefficient(BasisIntegral bi) const {
  auto it = terms_.find(bi);
  return it == terms_.end() ? FieldElem() : it->second;
}

void BasisCombo::add_term(BasisIntegral bi, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(bi, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int BasisCombo::max_l_degree() const {
  int deg = -1;
  for (const auto& [bi, c] : terms_) deg = std::max(deg, c.l_degree());
  return deg;
}

bool BasisCombo::only_families(std::initializer_list<Family> allowed) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) {
    return std::find(allowed.begin(), allowed.end(), kv.first.family) != allowed.end();
  });
}

BasisCombo BasisCombo::operator-() const {
  BasisCombo out;
  for (const auto& [bi, c] : terms_) out.terms_.emplace(bi, -c);
  return out;
}

BasisCombo& BasisCombo::operator+=(const BasisCombo& o) {
  for (const auto& [bi, c] : o.terms_) add_term(bi, c);
  return *this;
}

BasisCombo& BasisCombo::operator-=(const BasisCombo& o) {
  for (const auto& [bi, c] : o.terms_) add_term(bi, -c);
  return *this;
}

BasisCombo& BasisCombo::operator*=(const FieldElem& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [bi, coeff] : terms_) coeff = coeff * c;
  return *this;
}

std::string BasisCombo::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [bi, c] : terms_) {
    const std::string name = bi.to_string();
    std::string term;
    bool negative = false;
    if (c.is_single_summand()) {
      std::string cs = c.to_string();
      if (cs.front() == '-') {
        negative = true;
        cs.erase(0, 1);
      }
      term = (cs == "1") ? name : cs + "*" + name;
    } else {
      term = "(" + c.to_string() + ")*" + name;
    }
    if (first) {
      s = negative ? "-" + term : term;
      first = false;
    } else {
      s += negative ? " - " : " + ";
      s += term;
    }
  }
  return s;
}

nlohmann::json BasisCombo::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [bi, c] : terms_) {
    arr.push_back({{"integral", bi.to_string()}, {"coeff", c.to_json()}});
  }
  return {{"terms", arr}, {"text", to_string()}};
}

BasisCombo BasisCombo::from_json(const nlohmann::json& j) {
  BasisCombo out;
  for (const auto& t : j.at("terms")) {
    const auto name = t.at("integral").get<std::string>();
    auto fam = name.empty() ? std::nullopt : family_from_letter(name[0]);
    if (!fam || name.size() < 2) throw std::invalid_argument("BasisCombo::from_json: bad integral '" + name + "'");
    const int k = std::stoi(name.substr(1));
    out.add_term({*fam, k}, FieldElem::from_json(t.at("coeff")));
  }
  return out;
}

}  // namespace fgr
