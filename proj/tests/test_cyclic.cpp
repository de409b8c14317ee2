// Cyclic codes from defining sets: generator polynomials, duals through both
// the set formula and the matrix route, extension, and the two distance
// engines.  The [7,4] Hamming code and its relatives anchor the golden
// values; they were worked out by hand from x^7 - 1 = (x+1)(x^3+x+1)(x^3+x^2+1).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>
#include <vector>

#include "cyclotome/config.hpp"
#include "cyclotome/cyclic.hpp"
#include "cyclotome/error.hpp"
#include "cyclotome/field.hpp"
#include "cyclotome/linalg.hpp"

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
  return as_linear(code_from_defining_set(make_defining_set(n, f, std::move(els), kCfg)));
}

long long weight(const Field& f, const std::vector<Fel>& w) {
  (void)f;
  long long c = 0;
  for (Fel x : w) c += x != 0;
  return c;
}

}  // namespace

TEST_CASE("defining sets are validated and closed") {
  const Field& f2 = Field::get(2, 1);
  const DefiningSet ds = make_defining_set(7, f2, {1, 2, 4}, kCfg);
  CHECK(ds.n == 7);
  CHECK(ds.s == 3);                      // ord_7(2)
  CHECK(ds.splitting_field->q() == 8);
  CHECK(ds.beta_exponent == 1);          // (8 - 1) / 7
  CHECK(ds.elements == std::vector<long long>{1, 2, 4});

  CHECK(code_of([&] { make_defining_set(7, f2, {1}, kCfg); }) ==
        Errc::NotCosetClosed);
  CHECK(code_of([&] { make_defining_set(7, f2, {7}, kCfg); }) ==
        Errc::OutOfRange);
  CHECK(code_of([&] { make_defining_set(9, Field::get(3, 1), {1}, kCfg); }) ==
        Errc::NotCoprime);
  CHECK(code_of([&] { make_defining_set(0, f2, {}, kCfg); }) ==
        Errc::InvalidParameters);
  // The splitting field for n = 23 over GF(9) is GF(9^11), beyond the cap.
  CHECK(code_of([&] { make_defining_set(23, Field::get(3, 2), {}, kCfg); }) ==
        Errc::SizeBudgetExceeded);
}

TEST_CASE("generator polynomials over GF(2) at n = 7") {
  const Field& f2 = Field::get(2, 1);
  const CyclicCode hamming =
      code_from_defining_set(make_defining_set(7, f2, {1, 2, 4}, kCfg));
  CHECK(hamming.g == std::vector<Fel>{1, 1, 0, 1});  // x^3 + x + 1
  CHECK(hamming.k == 4);

  const CyclicCode rep_dual =
      code_from_defining_set(make_defining_set(7, f2, {0}, kCfg));
  CHECK(rep_dual.g == std::vector<Fel>{1, 1});  // x + 1
  CHECK(rep_dual.k == 6);

  const CyclicCode full =
      code_from_defining_set(make_defining_set(7, f2, {}, kCfg));
  CHECK(full.g == std::vector<Fel>{1});
  CHECK(full.k == 7);

  const CyclicCode zero = code_from_defining_set(
      make_defining_set(7, f2, {0, 1, 2, 3, 4, 5, 6}, kCfg));
  CHECK(zero.k == 0);
  CHECK(zero.g.size() == 8);  // x^7 - 1 itself
  CHECK(code_of([&] { generator_matrix(zero); }) == Errc::ZeroCode);
}

TEST_CASE("labels name the construction") {
  const Field& f4 = Field::get(2, 2);
  const LinearCode c = lin(9, f4, {0, 1, 4, 7});
  CHECK(c.label == "cyclic[n=9,gf=4,T={0,1,4,7}]");
  CHECK(dual_code(c).label == "dual(cyclic[n=9,gf=4,T={0,1,4,7}])");
}

TEST_CASE("dual defining sets match the matrix dual") {
  const Field& f2 = Field::get(2, 1);
  const DefiningSet t = make_defining_set(7, f2, {1, 2, 4}, kCfg);
  const DefiningSet td = dual_defining_set(t);
  CHECK(td.elements == std::vector<long long>{0, 1, 2, 4});
  CHECK(dual_defining_set(td).elements == t.elements);

  const LinearCode by_set = as_linear(code_from_defining_set(td));
  const LinearCode by_mat = dual_code(as_linear(code_from_defining_set(t)));
  CHECK(by_set.gen == by_mat.gen);
}

TEST_CASE("hermitian dual defining set over GF(4)") {
  const Field& f4 = Field::get(2, 2);
  const DefiningSet t = make_defining_set(5, f4, {1, 4}, kCfg);
  const DefiningSet th = hermitian_dual_defining_set(t);
  CHECK(th.elements == std::vector<long long>{0, 1, 4});
  CHECK(hermitian_dual_defining_set(th).elements == t.elements);

  const LinearCode by_set = as_linear(code_from_defining_set(th));
  const LinearCode by_mat =
      hermitian_dual_code(as_linear(code_from_defining_set(t)));
  CHECK(by_set.gen == by_mat.gen);

  CHECK(code_of([&] {
          hermitian_dual_defining_set(
              make_defining_set(7, Field::get(2, 1), {1, 2, 4}, kCfg));
        }) == Errc::NotSquareField);
}

TEST_CASE("containment tracks reversed set inclusion") {
  const Field& f2 = Field::get(2, 1);
  const DefiningSet th = make_defining_set(7, f2, {1, 2, 4}, kCfg);
  const DefiningSet ts = make_defining_set(7, f2, {0, 1, 2, 4}, kCfg);
  CHECK(defining_set_contains(th, ts));        // Hamming contains simplex
  CHECK_FALSE(defining_set_contains(ts, th));
  CHECK(code_contains(as_linear(code_from_defining_set(th)),
                      as_linear(code_from_defining_set(ts))));
  CHECK_FALSE(code_contains(as_linear(code_from_defining_set(ts)),
                            as_linear(code_from_defining_set(th))));
}

TEST_CASE("extension prepends a parity coordinate") {
  const Field& f2 = Field::get(2, 1);
  const ExtendedCode ext = extend(
      code_from_defining_set(make_defining_set(7, f2, {1, 2, 4}, kCfg)));
  const LinearCode c = as_linear(ext);
  CHECK(c.n == 8);
  CHECK(c.k() == 4);
  CHECK(c.label == "extended[n=8,gf=2,T={1,2,4}]");
  const GfMatrix g = generator_matrix(ext);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Fel sum = 0;
    for (std::size_t j = 0; j < g.cols(); ++j) sum = f2.add(sum, g.at(i, j));
    CHECK(sum == 0);
  }
  const DistanceResult d = min_distance(c, kCfg);
  CHECK(d.kind == DistanceResult::Kind::exact);
  CHECK(d.d == 4);  // the extended Hamming code
}

TEST_CASE("exact distances by enumeration") {
  const Field& f2 = Field::get(2, 1);
  const LinearCode hamming = lin(7, f2, {1, 2, 4});
  const DistanceResult d = min_distance(hamming, kCfg);
  CHECK(d.kind == DistanceResult::Kind::exact);
  CHECK(d.method == DistanceResult::Method::full_enumeration);
  CHECK(d.d == 3);
  REQUIRE(!d.witness.empty());
  CHECK(weight(f2, d.witness) == 3);

  CHECK(min_distance(lin(7, f2, {}), kCfg).d == 1);
  const DistanceResult dz =
      min_distance(lin(7, f2, {0, 1, 2, 3, 4, 5, 6}), kCfg);
  CHECK(dz.kind == DistanceResult::Kind::infinite);
  CHECK(dz.method == DistanceResult::Method::none);
}

TEST_CASE("support search agrees with enumeration") {
  const Field& f2 = Field::get(2, 1);
  const LinearCode hamming = lin(7, f2, {1, 2, 4});
  RunConfig small = kCfg;
  small.enumeration_budget = 1;  // force the support search
  const DistanceResult d = min_distance(hamming, small);
  CHECK(d.kind == DistanceResult::Kind::exact);
  CHECK(d.method == DistanceResult::Method::support_search);
  CHECK(d.d == 3);

  // Capping the stage weight below d yields honest bounds.
  small.support_weight_max = 2;
  const DistanceResult b = min_distance(hamming, small);
  CHECK(b.kind == DistanceResult::Kind::lower_and_upper);
  CHECK(b.d_lo == 3);
  CHECK(b.d_hi >= b.d_lo);
}

TEST_CASE("minimum weight outside a subcode") {
  const Field& f2 = Field::get(2, 1);
  const LinearCode hamming = lin(7, f2, {1, 2, 4});
  const LinearCode simplex = lin(7, f2, {0, 1, 2, 4});
  const DistanceResult d = min_weight_outside(hamming, simplex, kCfg);
  CHECK(d.kind == DistanceResult::Kind::exact);
  CHECK(d.d == 3);  // simplex words all have weight 4

  const DistanceResult empty = min_weight_outside(hamming, hamming, kCfg);
  CHECK(empty.kind == DistanceResult::Kind::infinite);

  CHECK(code_of([&] { min_weight_outside(simplex, hamming, kCfg); }) ==
        Errc::NotSubcode);
}

TEST_CASE("cross-length and cross-field guards") {
  const Field& f2 = Field::get(2, 1);
  const Field& f3 = Field::get(3, 1);
  const LinearCode a = lin(7, f2, {1, 2, 4});
  const LinearCode b = lin(15, f2, {1, 2, 4, 8});
  const LinearCode c = lin(8, f3, {0});
  CHECK(code_of([&] { code_contains(a, b); }) == Errc::LengthMismatch);
  CHECK(code_of([&] { code_contains(a, c); }) == Errc::FieldMismatch);
}

TEST_CASE("GF(4) code over nine coordinates") {
  const Field& f4 = Field::get(2, 2);
  const LinearCode c = lin(9, f4, {1, 4, 7});
  CHECK(c.k() == 6);
  const DistanceResult d = min_distance(c, kCfg);
  CHECK(d.kind == DistanceResult::Kind::exact);
  CHECK(d.d == 2);
  // Dual routes agree here too.
  const DefiningSet t = make_defining_set(9, f4, {1, 4, 7}, kCfg);
  CHECK(as_linear(code_from_defining_set(dual_defining_set(t))).gen ==
        dual_code(c).gen);
}
