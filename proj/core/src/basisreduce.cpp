#include "fgr/basisreduce.hpp"

#include <stdexcept>

namespace fgr {

namespace {

FieldElem rat(long n, long d = 1) { return FieldElem(Rational(n, d)); }
FieldElem root2() { return FieldElem::sqrt2(); }

BasisCombo basis(Family f, int k) { return BasisCombo(BasisIntegral{f, k}); }

int base_index(int k) { return (k % 2 == 1) ? 1 : 2; }

void require_positive(BasisIntegral bi) {
  if (bi.k < 1) throw std::invalid_argument("basis index must be positive: " + bi.to_string());
}

BasisCombo derived_relation(BasisIntegral bi) {
  const int k = bi.k;
  using enum Family;
  switch (bi.family) {
    case B: return rat(k + 1) * basis(P, k + 2) - rat(k) * basis(P, k);
    case C:
      return rat(k + 1) * basis(Q, k + 2) - rat(k) * basis(Q, k) + basis(P, k + 2) - basis(P, k);
    case D: return -rat(k) * basis(A, k) + basis(P, k);
    case E: return basis(S, k) + rat(k) * basis(R, k) - rat(k + 1) * basis(R, k + 2);
    case F: return -basis(R, k) + rat(k) * basis(S, k);
    default: return BasisCombo(bi);
  }
}

BasisCombo p_expand(int k) {
  FieldElem c(1);
  for (int j = base_index(k); j < k; j += 2) c = c * rat(1 + j * j, j * (j + 1));
  return c * basis(Family::P, base_index(k));
}

BasisCombo q_expand(int k) {
  if (k <= 2) return basis(Family::Q, k);
  const int j = k - 2;
  BasisCombo out = rat(1 + j * j) * q_expand(j) - rat(2 * j + 1) * p_expand(k) + rat(2 * j) * p_expand(j);
  return out * rat(1, j * (j + 1));
}

struct RsExpansion {
  BasisCombo r;
  BasisCombo s;
};

RsExpansion rs_expand(int k) {
  int j = base_index(k);
  BasisCombo r = basis(Family::R, j);
  BasisCombo s = basis(Family::S, j);
  for (; j + 2 <= k; j += 2) {
    BasisCombo r_next = (rat(j * j - 3) * r + rat(2 * j) * s + rat(2) * root2() * p_expand(j + 2)) *
                        rat(1, j * (j + 1));
    BasisCombo s_next = (rat(j * j - 3) * s + rat(2 * (j + 1)) * r_next - rat(2 * j) * r +
                         rat(2 * (j + 3)) * root2() * p_expand(j + 4) -
                         rat(2 * (j + 2)) * root2() * p_expand(j + 2)) *
                        rat(1, (j + 1) * (j + 2));
    r = std::move(r_next);
    s = std::move(s_next);
  }
  return {r, s};
}

BasisCombo a_expand(int k) {
  if (k <= 2) return basis(Family::A, k);
  const int j = k - 2;
  BasisCombo out = rat(1 + j * j) * a_expand(j) - rat(2 * j) * p_expand(j) + rat(2 * (j + 1)) * p_expand(j + 2);
  return out * rat(1, (j + 1) * (j + 2));
}

template <class Expand>
BasisCombo rewrite(const BasisCombo& c, std::initializer_list<Family> families, Expand expand) {
  BasisCombo out;
  for (const auto& [bi, coeff] : c.terms()) {
    require_positive(bi);
    bool hit = false;
    for (Family f : families) hit = hit || (f == bi.family);
    if (hit) {
      out += coeff * expand(bi);
    } else {
      out.add_term(bi, coeff);
    }
  }
  return out;
}

}  // namespace

std::string to_string(Stage s) {
  switch (s) {
    case Stage::Raw: return "raw";
    case Stage::DerivedEliminated: return "derived_eliminated";
    case Stage::Core: return "core";
  }
  return "raw";
}

Stage stage_from_string(std::string_view s) {
  if (s == "raw") return Stage::Raw;
  if (s == "derived_eliminated") return Stage::DerivedEliminated;
  if (s == "core") return Stage::Core;
  throw std::invalid_argument("unknown stage '" + std::string(s) + "'");
}

BasisCombo eliminate_derived(const BasisCombo& c) {
  using enum Family;
  return rewrite(c, {B, C, D, E, F}, derived_relation);
}

BasisCombo reduce_p(const BasisCombo& c) {
  return rewrite(c, {Family::P}, [](BasisIntegral bi) { return p_expand(bi.k); });
}

BasisCombo reduce_q(const BasisCombo& c) {
  return rewrite(c, {Family::Q}, [](BasisIntegral bi) { return q_expand(bi.k); });
}

BasisCombo reduce_rs(const BasisCombo& c) {
  return rewrite(c, {Family::R, Family::S}, [](BasisIntegral bi) {
    auto e = rs_expand(bi.k);
    return bi.family == Family::R ? e.r : e.s;
  });
}

BasisCombo reduce_a(const BasisCombo& c) {
  return rewrite(c, {Family::A}, [](BasisIntegral bi) { return a_expand(bi.k); });
}

BasisCombo reduce_full(const BasisCombo& c) {
  return reduce_a(reduce_rs(reduce_q(reduce_p(eliminate_derived(c)))));
}

BasisCombo reduce_to_stage(const BasisCombo& c, Stage stage) {
  switch (stage) {
    case Stage::Raw: return c;
    case Stage::DerivedEliminated: return eliminate_derived(c);
    case Stage::Core: return reduce_full(c);
  }
  return c;
}

bool within_standard_range(const BasisCombo& c, int max_k) {
  for (const auto& [bi, coeff] : c.terms()) {
    if (bi.k % 2 == 0 || bi.k > max_k) return false;
  }
  return true;
}

std::vector<RewriteRule> rewrite_rules(int k) {
  using enum Family;
  std::vector<RewriteRule> rules;
  for (Family f : {B, C, D, E, F}) {
    BasisIntegral lhs{f, k};
    rules.push_back({std::string(1, family_letter(f)) + "_k", lhs, derived_relation(lhs)});
  }
  rules.push_back({"p_rec", {P, k + 2}, rat(1 + k * k, k * (k + 1)) * basis(P, k)});
  rules.push_back({"q_rec", {Q, k + 2},
                   (rat(1 + k * k) * basis(Q, k) - rat(2 * k + 1) * basis(P, k + 2) + rat(2 * k) * basis(P, k)) *
                       rat(1, k * (k + 1))});
  rules.push_back({"r_rec", {R, k + 2},
                   (rat(k * k - 3) * basis(R, k) + rat(2 * k) * basis(S, k) + rat(2) * root2() * basis(P, k + 2)) *
                       rat(1, k * (k + 1))});
  rules.push_back({"s_rec", {S, k + 2},
                   (rat(k * k - 3) * basis(S, k) + rat(2 * (k + 1)) * basis(R, k + 2) - rat(2 * k) * basis(R, k) +
                    rat(2 * (k + 3)) * root2() * basis(P, k + 4) - rat(2 * (k + 2)) * root2() * basis(P, k + 2)) *
                       rat(1, (k + 1) * (k + 2))});
  rules.push_back({"a_rec", {A, k + 2},
                   (rat(1 + k * k) * basis(A, k) - rat(2 * k) * basis(P, k) + rat(2 * (k + 1)) * basis(P, k + 2)) *
                       rat(1, (k + 1) * (k + 2))});
  return rules;
}

}  // namespace fgr
