// Quantum constructions: CSS and Hermitian pairings with their guard
// clauses, the affine-invariant family with frozen parameters across a small
// grid, the odd-like pair family, and the degenerate variant including its
// beyond-budget record shape.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <vector>

#include "cyclotome/config.hpp"
#include "cyclotome/cyclic.hpp"
#include "cyclotome/error.hpp"
#include "cyclotome/field.hpp"
#include "cyclotome/quantum.hpp"

using namespace cyclotome;

namespace {

Errc code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::Internal;
}

const RunConfig kCfg;

LinearCode lin(long long n, const Field& f, std::vector<long long> els) {
  return as_linear(
      code_from_defining_set(make_defining_set(n, f, std::move(els), kCfg)));
}

long long weight(const std::vector<Fel>& v) {
  long long w = 0;
  for (const Fel x : v)
    if (x != 0) ++w;
  return w;
}

}  // namespace

TEST_CASE("singleton check numerics") {
  CHECK(singleton_check(7, 1, 3));
  CHECK(singleton_check(7, 3, 3));   // boundary
  CHECK_FALSE(singleton_check(7, 4, 3));
  CHECK(singleton_check(4, 0, 3));   // boundary at k = 0
  CHECK_FALSE(singleton_check(5, 1, 4));

  QuantumCodeRecord rec;
  rec.n = 5;
  rec.k = 5;
  rec.dist.kind = DistanceResult::Kind::infinite;
  CHECK(singleton_check(rec));  // no distance claim, nothing to violate
  rec.dist.kind = DistanceResult::Kind::lower_and_upper;
  rec.dist.d_lo = 1;
  rec.dist.d_hi = 2;
  CHECK_FALSE(singleton_check(rec));  // judged at the upper end
}

TEST_CASE("css of the Hamming code with itself") {
  const Field& f2 = Field::get(2, 1);
  const LinearCode ham = lin(7, f2, {1, 2, 4});
  const QuantumCodeRecord rec = css_construct(ham, ham, kCfg);

  CHECK(rec.n == 7);
  CHECK(rec.k == 1);
  CHECK(rec.q == 2);
  REQUIRE(rec.dist.kind == DistanceResult::Kind::exact);
  CHECK(rec.dist.d == 3);
  CHECK(rec.dist.method == DistanceResult::Method::full_enumeration);
  CHECK(weight(rec.dist.witness) == 3);
  REQUIRE(rec.pure_to.has_value());
  CHECK(*rec.pure_to == 3);
  REQUIRE(rec.degenerate.has_value());
  CHECK_FALSE(*rec.degenerate);
  CHECK(rec.family == "css_generic");
  CHECK(rec.theorem == rec.family);
  REQUIRE(rec.ingredients.size() == 2);
  CHECK(rec.ingredients[0] == "cyclic[n=7,gf=2,T={1,2,4}]");
  CHECK(rec.ingredients[1] == rec.ingredients[0]);
  CHECK(rec.singleton_ok);
}

TEST_CASE("css of the full code is a trivial stabilizer code") {
  const Field& f2 = Field::get(2, 1);
  const LinearCode full = lin(3, f2, {});
  const QuantumCodeRecord rec = css_construct(full, full, kCfg);
  CHECK(rec.n == 3);
  CHECK(rec.k == 3);
  CHECK(rec.q == 2);
  REQUIRE(rec.dist.kind == DistanceResult::Kind::exact);
  CHECK(rec.dist.d == 1);
  CHECK(rec.singleton_ok);  // boundary of the bound
}

TEST_CASE("css guard clauses") {
  const Field& f2 = Field::get(2, 1);
  const Field& f3 = Field::get(3, 1);
  const LinearCode simplex = lin(7, f2, {0, 1, 2, 4});
  CHECK(code_of([&] { css_construct(simplex, simplex, kCfg); }) ==
        Errc::DualNotContained);
  CHECK(code_of([&] { css_construct(lin(7, f2, {}), lin(7, f3, {}), kCfg); }) ==
        Errc::FieldMismatch);
  CHECK(code_of([&] { css_construct(lin(7, f2, {}), lin(5, f2, {}), kCfg); }) ==
        Errc::LengthMismatch);
}

TEST_CASE("hermitian construction edges") {
  const Field& f4 = Field::get(2, 2);
  // The zero code: every position is already a logical operator.
  const LinearCode zero = lin(5, f4, {0, 1, 2, 3, 4});
  CHECK(zero.k() == 0);
  const QuantumCodeRecord rec = hermitian_construct(zero, kCfg);
  CHECK(rec.n == 5);
  CHECK(rec.k == 5);
  CHECK(rec.q == 2);
  REQUIRE(rec.dist.kind == DistanceResult::Kind::exact);
  CHECK(rec.dist.d == 1);
  CHECK(weight(rec.dist.witness) == 1);
  REQUIRE(rec.pure_to.has_value());
  CHECK(*rec.pure_to == 1);
  CHECK(rec.family == "hermitian_generic");
  CHECK(rec.singleton_ok);

  // Alphabet of non-square order.
  const Field& f2 = Field::get(2, 1);
  CHECK(code_of([&] { hermitian_construct(lin(7, f2, {1, 2, 4}), kCfg); }) ==
        Errc::NotSquareField);
  // The full code is not inside its (zero) Hermitian dual.
  CHECK(code_of([&] { hermitian_construct(lin(3, f4, {}), kCfg); }) ==
        Errc::NotHermitianSelfOrthogonal);
}

TEST_CASE("affine family frozen grid") {
  struct Want {
    long long p;
    int r;
    int m;
    long long n;
    long long k;
    std::uint64_t q;
    long long d;  // 0 when only bounds are expected
    DistanceResult::Method method;
  };
  const std::vector<Want> grid = {
      {2, 2, 2, 4, 0, 4, 3, DistanceResult::Method::full_enumeration},
      {2, 1, 4, 16, 6, 2, 4, DistanceResult::Method::full_enumeration},
      {2, 2, 4, 16, 10, 4, 3, DistanceResult::Method::support_search},
      {2, 3, 3, 8, 4, 8, 3, DistanceResult::Method::full_enumeration},
      {3, 1, 3, 27, 19, 3, 3, DistanceResult::Method::support_search},
      {5, 1, 1, 5, 1, 5, 3, DistanceResult::Method::full_enumeration},
      {5, 1, 2, 25, 19, 5, 3, DistanceResult::Method::support_search},
      {7, 1, 1, 7, 3, 7, 3, DistanceResult::Method::full_enumeration},
  };
  for (const Want& w : grid) {
    CAPTURE(w.p);
    CAPTURE(w.r);
    CAPTURE(w.m);
    const QuantumCodeRecord rec = affine_quantum_family(w.p, w.r, w.m, kCfg);
    CHECK(rec.n == w.n);
    CHECK(rec.k == w.k);
    CHECK(rec.q == w.q);
    CHECK(rec.k == w.n - 2 - 2 * (w.m / w.r));
    REQUIRE(rec.dist.kind == DistanceResult::Kind::exact);
    CHECK(rec.dist.d == w.d);
    CHECK(rec.dist.method == w.method);
    CHECK(rec.dist.d <= w.m / w.r + 2);
    REQUIRE(rec.pure_to.has_value());
    CHECK(*rec.pure_to == w.d);
    REQUIRE(rec.degenerate.has_value());
    CHECK_FALSE(*rec.degenerate);
    CHECK(rec.family == "affine_theorem6");
    CHECK(rec.theorem == "affine_theorem6");
    REQUIRE(rec.ingredients.size() == 2);
    CHECK(rec.ingredients[0] == rec.ingredients[1]);
    CHECK(rec.singleton_ok);
  }

  // p^m = 8 over the prime field collapses to a stabilizer state whose
  // distance is only bracketed.
  const QuantumCodeRecord st = affine_quantum_family(2, 1, 3, kCfg);
  CHECK(st.n == 8);
  CHECK(st.k == 0);
  CHECK(st.q == 2);
  REQUIRE(st.dist.kind == DistanceResult::Kind::lower_and_upper);
  CHECK(st.dist.d_lo == 4);
  CHECK(st.dist.d_hi == 5);
  CHECK(st.dist.method == DistanceResult::Method::full_enumeration);
  REQUIRE(st.pure_to.has_value());
  CHECK(*st.pure_to == 4);
  CHECK_FALSE(st.degenerate.has_value());  // bounds leave it open
  REQUIRE(st.ingredients.size() == 2);
  CHECK(st.ingredients[0] == "extended[n=8,gf=2,T={1,2,4}]");
  CHECK(st.singleton_ok);
}

TEST_CASE("affine family guard clauses") {
  CHECK(code_of([] { affine_quantum_family(2, 1, 1, kCfg); }) ==
        Errc::LemmaFiveExcluded);
  CHECK(code_of([] { affine_quantum_family(2, 1, 2, kCfg); }) ==
        Errc::LemmaFiveExcluded);
  CHECK(code_of([] { affine_quantum_family(3, 1, 1, kCfg); }) ==
        Errc::LemmaFiveExcluded);
  CHECK(code_of([] { affine_quantum_family(3, 1, 2, kCfg); }) ==
        Errc::LemmaFiveExcluded);
  CHECK(code_of([] { affine_quantum_family(5, 2, 3, kCfg); }) ==
        Errc::InvalidParameters);  // r does not divide m
  CHECK(code_of([] { affine_quantum_family(6, 1, 2, kCfg); }) ==
        Errc::NotPrime);
}

TEST_CASE("odd-like pair ingredients at n = 7") {
  const DuadicConstruction ing = duadic_ingredients(7, 2, kCfg);
  CHECK(ing.splitting.n == 7);
  CHECK(ing.splitting.q == 4);
  CHECK(ing.splitting.a == 5);  // -2 normalized mod 7
  CHECK(ing.splitting.s1 == std::vector<long long>{1, 2, 4});
  CHECK(ing.splitting.s2 == std::vector<long long>{3, 5, 6});
  CHECK(ing.even_like.k == 3);
  CHECK(ing.odd_like.k == 4);
  CHECK(ing.even_like.t.elements == std::vector<long long>{0, 1, 2, 4});
  CHECK(ing.odd_like.t.elements == std::vector<long long>{1, 2, 4});
  CHECK(ing.even_like.t.alphabet->q() == 4);
}

TEST_CASE("odd-like pair records") {
  const QuantumCodeRecord r7 = duadic_quantum(7, 2, kCfg);
  CHECK(r7.n == 7);
  CHECK(r7.k == 1);
  CHECK(r7.q == 2);
  REQUIRE(r7.dist.kind == DistanceResult::Kind::exact);
  CHECK(r7.dist.d == 3);
  CHECK(r7.dist.method == DistanceResult::Method::full_enumeration);
  CHECK(r7.dist.d * r7.dist.d - r7.dist.d + 1 >= 7);
  CHECK(r7.family == "duadic_theorem14");
  CHECK(r7.theorem == "duadic_theorem14");
  REQUIRE(r7.ingredients.size() == 2);
  CHECK(r7.ingredients[0] == "cyclic[n=7,gf=4,T={0,1,2,4}]");
  CHECK(r7.ingredients[1] == "cyclic[n=7,gf=4,T={1,2,4}]");
  CHECK(r7.singleton_ok);

  const QuantumCodeRecord r11 = duadic_quantum(11, 3, kCfg);
  CHECK(r11.n == 11);
  CHECK(r11.k == 1);
  CHECK(r11.q == 3);
  REQUIRE(r11.dist.kind == DistanceResult::Kind::exact);
  CHECK(r11.dist.d == 5);
  CHECK(r11.dist.method == DistanceResult::Method::full_enumeration);
  CHECK(weight(r11.dist.witness) == 5);
  CHECK(r11.family == "duadic_theorem14");
  CHECK(r11.singleton_ok);
}

TEST_CASE("odd-like pair guard clauses") {
  CHECK(code_of([] { duadic_quantum(5, 2, kCfg); }) == Errc::OrderNotOdd);
  CHECK(code_of([] { duadic_quantum(3, 2, kCfg); }) == Errc::NoSplitting);
  CHECK(code_of([] { duadic_quantum(27, 2, kCfg); }) == Errc::NoSplitting);
  CHECK(code_of([] { duadic_quantum(9, 3, kCfg); }) == Errc::NotCoprime);
  CHECK(code_of([] { duadic_quantum(7, 6, kCfg); }) == Errc::InvalidParameters);
}

TEST_CASE("degenerate family preconditions") {
  CHECK(code_of([] { degenerate_duadic_family(9, 2, kCfg); }) ==
        Errc::PreconditionFailed);  // exponent 2 does not exceed 2z = 2
  CHECK(code_of([] { degenerate_duadic_family(125, 2, kCfg); }) ==
        Errc::PreconditionFailed);  // factor 5 is 1 mod 4
  CHECK(code_of([] { degenerate_duadic_family(21, 2, kCfg); }) ==
        Errc::PreconditionFailed);  // bare prime factors have exponent 1
  CHECK(code_of([] { degenerate_duadic_family(6, 5, kCfg); }) ==
        Errc::InvalidParameters);  // even length
  CHECK(code_of([] { degenerate_duadic_family(343, 6, kCfg); }) ==
        Errc::InvalidParameters);  // q not a prime power
  CHECK(code_of([] { degenerate_duadic_family(9, 3, kCfg); }) ==
        Errc::PreconditionFailed);  // shared factor
  // Conditions hold at 27 but the -2 multiplier fixes a coset.
  CHECK(code_of([] { degenerate_duadic_family(27, 2, kCfg); }) ==
        Errc::NoSplitting);
}

TEST_CASE("degenerate family beyond-budget records") {
  const QuantumCodeRecord big = degenerate_duadic_family(343, 2, kCfg);
  CHECK(big.n == 343);
  CHECK(big.k == 1);
  CHECK(big.q == 2);
  REQUIRE(big.dist.kind == DistanceResult::Kind::lower_and_upper);
  CHECK(big.dist.d_lo == 19);   // least d with d^2 - d + 1 >= 343
  CHECK(big.dist.d_hi == 172);  // (n - 1) / 2 + 1
  CHECK(big.dist.method == DistanceResult::Method::none);
  CHECK(big.dist.budget_spent == 0);
  REQUIRE(big.pure_to.has_value());
  CHECK(*big.pure_to == 7);
  REQUIRE(big.degenerate.has_value());
  CHECK(*big.degenerate);
  CHECK(big.family == "duadic_theorem15");
  CHECK(big.theorem == "duadic_theorem15");
  REQUIRE(big.ingredients.size() == 1);
  CHECK(big.ingredients[0] == "splitting_unconstructed[n=343,q2=4]");
  CHECK(big.singleton_ok);

  // Length 27 over GF(4): the splitting exists but its splitting field
  // overflows the field cap, so the same bound-pair shape comes back.
  const QuantumCodeRecord q4 = degenerate_duadic_family(27, 4, kCfg);
  CHECK(q4.n == 27);
  CHECK(q4.k == 1);
  CHECK(q4.q == 4);
  REQUIRE(q4.dist.kind == DistanceResult::Kind::lower_and_upper);
  CHECK(q4.dist.d_lo == 6);
  CHECK(q4.dist.d_hi == 14);
  CHECK(q4.dist.method == DistanceResult::Method::none);
  REQUIRE(q4.pure_to.has_value());
  CHECK(*q4.pure_to == 3);
  REQUIRE(q4.degenerate.has_value());
  CHECK(*q4.degenerate);
  REQUIRE(q4.ingredients.size() == 1);
  CHECK(q4.ingredients[0] == "splitting_unconstructed[n=27,q2=16]");
  CHECK(q4.singleton_ok);
}
