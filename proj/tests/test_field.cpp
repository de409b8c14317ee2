// Finite-field layer: canonical moduli, arithmetic across the three
// performance tiers, embeddings, and the error clauses the layer owns.
// Golden values below were derived by hand from the canonical-modulus rule
// (smallest base-p coefficient integer among monic irreducibles) and checked
// against the multiplication axioms.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <vector>

#include "cyclotome/error.hpp"
#include "cyclotome/field.hpp"

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

}  // namespace

TEST_CASE("canonical moduli are the smallest irreducibles") {
  using V = std::vector<long long>;
  CHECK(make_field(2, 1).modulus == V{0, 1});
  CHECK(make_field(2, 2).modulus == V{1, 1, 1});
  CHECK(make_field(2, 3).modulus == V{1, 1, 0, 1});
  CHECK(make_field(2, 4).modulus == V{1, 1, 0, 0, 1});
  CHECK(make_field(3, 2).modulus == V{1, 0, 1});
  CHECK(make_field(3, 3).modulus == V{1, 2, 0, 1});
  CHECK(make_field(5, 2).modulus == V{2, 0, 1});
  CHECK(make_field(5, 1).q == 5);
  CHECK(make_field(2, 4).q == 16);
}

TEST_CASE("GF(4) multiplication table facts") {
  const Field& f = Field::get(2, 2);
  // 2 encodes x (the primitive cube root), 3 encodes x + 1 = x^2.
  CHECK(f.mul(2, 2) == 3);
  CHECK(f.mul(2, 3) == 1);
  CHECK(f.mul(3, 3) == 2);
  CHECK(f.add(2, 3) == 1);
  CHECK(f.add(2, 2) == 0);
  CHECK(f.inv(2) == 3);
  CHECK(f.frob(2) == 3);
  CHECK(f.neg(2) == 2);
  CHECK(f.primitive_element() == 2);
  CHECK(f.element_order(2) == 3);
  CHECK(f.element_order(1) == 1);
}

TEST_CASE("GF(9) and GF(25) primitive elements") {
  const Field& f9 = Field::get(3, 2);
  // Modulus x^2 + 1, so enc 3 is x of order 4; the smallest generator is 4.
  CHECK(f9.element_order(3) == 4);
  CHECK(f9.primitive_element() == 4);
  CHECK(f9.element_order(4) == 8);

  const Field& f25 = Field::get(5, 2);
  CHECK(f25.primitive_element() == 6);
  CHECK(f25.element_order(6) == 24);

  CHECK(Field::get(2, 1).primitive_element() == 1);
}

TEST_CASE("field axioms hold on every tier") {
  // Table tier, log/exp tier, and raw polynomial tier.
  for (const Field* fp : {&Field::get(2, 3), &Field::get(13, 2),
                          &Field::get(2, 16, 1ull << 17),
                          &Field::get(2, 17, 1ull << 18)}) {
    const Field& f = *fp;
    const Fel g = f.primitive_element();
    CHECK(f.element_order(g) == f.q() - 1);
    CHECK(f.pow(g, static_cast<long long>(f.q()) - 1) == 1);
    CHECK(f.mul(g, f.inv(g)) == 1);
    CHECK(f.pow(g, -1) == f.inv(g));
    // Frobenius is the p-th power map and fixes the prime field.
    CHECK(f.frob(g) == f.pow(g, f.p()));
    CHECK(f.frob(1) == 1);
    // Distributivity spot check on small encodings.
    for (Fel a : {Fel(1), Fel(2), Fel(3)})
      for (Fel b : {Fel(1), Fel(2)}) {
        if (a >= f.q() || b >= f.q()) continue;
        CHECK(f.mul(g, f.add(a, b)) == f.add(f.mul(g, a), f.mul(g, b)));
      }
  }
}

TEST_CASE("digits round trip") {
  const Field& f27 = Field::get(3, 3);
  const std::vector<long long> d = f27.digits(14);
  CHECK(d == std::vector<long long>{2, 1, 1});
  CHECK(f27.from_digits(d) == 14);
  for (Fel a = 0; a < f27.q(); ++a) CHECK(f27.from_digits(f27.digits(a)) == a);
}

TEST_CASE("subfield embedding GF(4) into GF(16)") {
  const Field& f16 = Field::get(2, 4);
  const Field& f4 = Field::get(2, 2);
  const std::vector<Fel> img = f16.embedding_table(f4);
  REQUIRE(img.size() == 4);
  CHECK(img[0] == 0);
  CHECK(img[1] == 1);
  // The embedding is a ring homomorphism into the 5th-power subgroup.
  CHECK(f16.mul(img[2], img[2]) == img[f4.mul(2, 2)]);
  CHECK(f16.add(img[2], img[3]) == img[f4.add(2, 3)]);
  CHECK(f16.element_order(img[2]) == 3);
  for (Fel a = 0; a < 4; ++a) {
    CHECK(f16.in_subfield(f4, img[a]));
    CHECK(f16.project(f4, img[a]) == a);
  }
  CHECK_FALSE(f16.in_subfield(f4, f16.primitive_element()));
}

TEST_CASE("minimal polynomials") {
  const Field& f8 = Field::get(2, 3);
  // x generates GF(8) and its minimal polynomial is the field modulus.
  CHECK(f8.minimal_polynomial(2, 1) == std::vector<Fel>{1, 1, 0, 1});
  CHECK(f8.minimal_polynomial(0, 1) == std::vector<Fel>{0, 1});
  CHECK(f8.minimal_polynomial(1, 1) == std::vector<Fel>{1, 1});

  const Field& f16 = Field::get(2, 4);
  const Field& f4 = Field::get(2, 2);
  // Over GF(4) every GF(16) element has degree at most 2.
  const std::vector<Fel> mp = f16.minimal_polynomial(2, 2);
  CHECK(mp.size() == 3);
  CHECK(mp.back() == 1);
  // The element is a root: evaluate via the embedding.
  const std::vector<Fel> img = f16.embedding_table(f4);
  Fel acc = 0, xp = 1;
  for (Fel c : mp) {
    acc = f16.add(acc, f16.mul(img[c], xp));
    xp = f16.mul(xp, 2);
  }
  CHECK(acc == 0);
}

TEST_CASE("prime power recognition") {
  CHECK(as_prime_power(2) == std::pair<long long, int>{2, 1});
  CHECK(as_prime_power(8) == std::pair<long long, int>{2, 3});
  CHECK(as_prime_power(9) == std::pair<long long, int>{3, 2});
  CHECK(as_prime_power(49) == std::pair<long long, int>{7, 2});
  CHECK(as_prime_power(1ull << 22) == std::pair<long long, int>{2, 22});
  CHECK_FALSE(as_prime_power(1).has_value());
  CHECK_FALSE(as_prime_power(12).has_value());
  CHECK_FALSE(as_prime_power(0).has_value());
}

TEST_CASE("error clauses") {
  CHECK(code_of([] { make_field(6, 1); }) == Errc::NotPrime);
  CHECK(code_of([] { make_field(1, 1); }) == Errc::NotPrime);
  CHECK(code_of([] { make_field(2, 21); }) == Errc::SizeBudgetExceeded);
  CHECK(code_of([] { Field::get(2, 2).inv(0); }) == Errc::DivisionByZero);
  CHECK(code_of([] { Field::get(2, 2).element_order(0); }) ==
        Errc::ZeroElement);
  CHECK(code_of([] { Field::get(2, 2).add(4, 0); }) == Errc::OutOfRange);
  CHECK(code_of([] { Field::get(2, 4).embedding_table(Field::get(2, 3)); }) ==
        Errc::InvalidSubfield);
  CHECK(code_of([] {
          FieldElement a(Field::get(2, 2), 1);
          FieldElement b(Field::get(2, 3), 1);
          (void)(a + b);
        }) == Errc::MixedFields);
}

TEST_CASE("bound field elements") {
  const Field& f = Field::get(2, 2);
  CHECK(FieldElement(f, 2) * FieldElement(f, 2) == FieldElement(f, 3));
  CHECK(FieldElement(f, 2) + FieldElement(f, 3) == FieldElement(f, 1));
  CHECK(code_of([&] { FieldElement(f, 7); }) == Errc::OutOfRange);
}
