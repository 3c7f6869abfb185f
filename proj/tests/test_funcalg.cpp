#include <doctest.h>

#include "fgr/basisreduce.hpp"
#include "fgr/funcalg.hpp"
#include "generators.hpp"

using namespace fgr;

namespace {

FieldElem r2() { return FieldElem::sqrt2(); }
FieldElem q(long n, long d = 1) { return FieldElem(Rational(n, d)); }
FuncExpr sech(int k = 1) { return FuncExpr::sech(k); }

Monomial mono(int sech_pow, int tanh_pow, int x_pow, int logsech_pow, Trig t) {
  Monomial m;
  m.sech_pow = sech_pow;
  m.tanh_pow = tanh_pow;
  m.x_pow = x_pow;
  m.logsech_pow = logsech_pow;
  m.trig = t;
  return m;
}

}  // namespace

TEST_CASE("normalize") {
  const FuncExpr t2sin(mono(0, 2, 0, 0, Trig::Sin));
  CHECK(normalize(t2sin) == FuncExpr::sin() - sech(2) * FuncExpr::sin());

  const FuncExpr lhs = mul(mul(sech(), FuncExpr::tanh()), mul(FuncExpr::tanh(), FuncExpr::sin()));
  CHECK(lhs == sech() * FuncExpr::sin() - sech(3) * FuncExpr::sin());

  const FuncExpr already = sech(3) * FuncExpr::cos() + FuncExpr::x() * FuncExpr::tanh();
  CHECK(normalize(already) == already);
}

TEST_CASE("mul") {
  CHECK(profiles::phi3() * profiles::phi3() == FuncExpr(q(2)) * sech(2));
  const FuncExpr one_minus = FuncExpr(1) - FuncExpr(q(2)) * sech(2);
  CHECK(one_minus * one_minus == FuncExpr(1) - FuncExpr(q(4)) * sech(2) + FuncExpr(q(4)) * sech(4));
  CHECK_THROWS_AS(mul(FuncExpr::cos(), FuncExpr::sin()), TrigClash);
  CHECK(mul(FuncExpr(), FuncExpr::cos()).is_zero());
}

TEST_CASE("parity") {
  for (int k = 1; k <= 9; ++k) {
    CHECK(parity(mono(k, 0, 0, 0, Trig::Cos)) == Parity::Even);
    CHECK(parity(mono(k, 0, 0, 0, Trig::Sin)) == Parity::Odd);
    CHECK(parity(mono(k, 0, 1, 0, Trig::Sin)) == Parity::Even);
  }
  Monomial tp;
  tp.Tprime_pow = 1;
  CHECK(parity(tp) == Parity::Odd);
}

TEST_CASE("classify") {
  CHECK(classify(mono(3, 0, 0, 1, Trig::Cos)) == BasisIntegral{Family::Q, 3});
  CHECK(classify(mono(5, 1, 1, 0, Trig::Cos)) == BasisIntegral{Family::A, 5});
  CHECK_THROWS_AS(classify(mono(1, 0, 2, 0, Trig::Cos)), Unclassifiable);
  CHECK_THROWS_AS(classify(mono(0, 0, 0, 0, Trig::Cos)), Unclassifiable);
}

TEST_CASE("every family integrand is even and classifies back to itself") {
  for (int f = 0; f < 10; ++f) {
    for (int k = 1; k <= 9; ++k) {
      const BasisIntegral bi{static_cast<Family>(f), k};
      const Monomial m = defining_monomial(bi);
      REQUIRE(parity(m) == Parity::Even);
      REQUIRE(classify(m) == bi);
    }
  }
}

TEST_CASE("exhaustive: even normalized monomials classify or are rejected, never misfiled") {
  int classified = 0;
  for (int s = 0; s <= 9; ++s)
    for (int t = 0; t <= 1; ++t)
      for (int x = 0; x <= 1; ++x)
        for (int l = 0; l <= 1; ++l)
          for (int T = 0; T <= 1; ++T)
            for (int Tp = 0; Tp <= 1 - T; ++Tp)
              for (Trig tr : {Trig::None, Trig::Cos, Trig::Sin}) {
                Monomial m = mono(s, t, x, l, tr);
                m.T_pow = T;
                m.Tprime_pow = Tp;
                if (parity(m) != Parity::Even) continue;
                try {
                  const BasisIntegral bi = classify(m);
                  REQUIRE(defining_monomial(bi) == m);
                  ++classified;
                } catch (const Unclassifiable&) {
                }
              }
  CHECK(classified == 90);
}

TEST_CASE("inner_product") {
  const BasisCombo g131 = inner_product(profiles::phi3() * profiles::xi31() * profiles::xi31(), profiles::h31_cos_part());
  // Before removing the phi3 component: sech^3 - 4 sech^5 + 4 sech^7 scaled by sqrt2.
  CHECK(g131 == r2() * BasisCombo({Family::P, 3}) - q(4) * r2() * BasisCombo({Family::P, 5}) +
                    q(4) * r2() * BasisCombo({Family::P, 7}));
  const BasisCombo stripped =
      inner_product(strip_phi3_component(profiles::phi3() * profiles::xi31() * profiles::xi31()), profiles::h31_cos_part());
  CHECK(stripped == q(-4) * r2() * BasisCombo({Family::P, 5}) + q(4) * r2() * BasisCombo({Family::P, 7}));

  const BasisCombo orth = inner_product(profiles::phi3(), profiles::h31());
  CHECK(orth == r2() * BasisCombo({Family::P, 3}) - r2() * BasisCombo({Family::B, 1}));
  CHECK(reduce_full(orth).empty());
  CHECK(inner_product(FuncExpr(), profiles::h31()).empty());

  std::vector<Monomial> dropped;
  CHECK(inner_product(sech(3), FuncExpr::sin(), &dropped).empty());
  CHECK(dropped.size() == 1);
}

TEST_CASE("profiles") {
  CHECK(profiles::h31() == sech(2) * FuncExpr::cos() - FuncExpr::tanh() * FuncExpr::sin());
  CHECK(profiles::xi31() == FuncExpr(1) - FuncExpr(q(2)) * sech(2));
  CHECK(profiles::xi32() == FuncExpr(1));
  const FieldElem inv4r2 = q(1, 8) * r2();
  const FuncExpr R1 = FuncExpr(q(2)) * FuncExpr::x() * FuncExpr::tanh() * sech(2) -
                      FuncExpr(inv4r2) * (FuncExpr(3) - FuncExpr(q(2)) * sech(2)) * FuncExpr::T() +
                      FuncExpr(q(1, 4) * r2()) * FuncExpr::tanh() * FuncExpr::Tprime();
  CHECK(profiles::R1() == R1);
  CHECK(profiles::h31_cos_part() + profiles::h31_sin_part() == profiles::h31());
}

TEST_CASE("property: normalize is idempotent") {
  testgen::Rng rng(101);
  for (int i = 0; i < 1000; ++i) {
    const FuncExpr e = normalize(testgen::funcexpr(rng));
    REQUIRE(normalize(e) == e);
    for (const auto& [m, c] : e.terms()) REQUIRE(m.tanh_pow <= 1);
  }
}

TEST_CASE("property: mul is commutative and associative") {
  testgen::Rng rng(202);
  for (int i = 0; i < 300; ++i) {
    const FuncExpr a = testgen::funcexpr(rng, false), b = testgen::funcexpr(rng, false),
                   c = testgen::funcexpr(rng, true);
    REQUIRE(mul(a, b) == mul(b, a));
    REQUIRE(mul(mul(a, b), c) == mul(a, mul(b, c)));
    REQUIRE(mul(a, b + c) == mul(a, b) + mul(a, c));
  }
}
