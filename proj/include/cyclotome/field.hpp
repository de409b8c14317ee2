// Exact arithmetic in GF(p^e) with a deterministic representation.
//
// The canonical modulus for GF(p^e) is the monic irreducible degree-e
// polynomial over GF(p) whose coefficient sequence, read as a base-p integer
// sum(c_i * p^i), is smallest.  Elements are encoded the same way, so enc is a
// bijection [0, p^e) <-> GF(p^e) and golden files are portable across builds.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cyclotome/error.hpp"

namespace cyclotome {

using Fel = std::uint64_t;  // element encoding, always < q

inline constexpr std::uint64_t kDefaultFieldCap = 1ull << 20;

struct FieldSpec {
  long long p = 0;
  int e = 0;
  std::uint64_t q = 0;              // p^e
  std::vector<long long> modulus;   // e+1 coefficients, ascending, monic
};

// Builds the canonical FieldSpec, validating p prime and p^e <= cap.
FieldSpec make_field(long long p, int e, std::uint64_t cap = kDefaultFieldCap);

// (p, e) with q = p^e and p prime, or nullopt when q is not a prime power.
std::optional<std::pair<long long, int>> as_prime_power(std::uint64_t q);

class Field {
 public:
  // Interned accessor: one immutable Field per (p, e).  The cap is checked on
  // every call, so a cached large field still errors for a stricter caller.
  static const Field& get(long long p, int e,
                          std::uint64_t cap = kDefaultFieldCap);

  long long p() const { return p_; }
  int e() const { return e_; }
  std::uint64_t q() const { return q_; }
  const FieldSpec& spec() const { return spec_; }
  const std::vector<long long>& modulus() const { return spec_.modulus; }

  Fel add(Fel a, Fel b) const;
  Fel sub(Fel a, Fel b) const;
  Fel neg(Fel a) const;
  Fel mul(Fel a, Fel b) const;
  Fel inv(Fel a) const;             // DivisionByZero on 0
  Fel div(Fel a, Fel b) const;
  Fel pow(Fel a, long long k) const;  // k < 0 inverts first
  Fel frob(Fel a) const;            // a^p

  std::uint64_t element_order(Fel a) const;  // ZeroElement on 0
  // Smallest encoding whose order is q-1; computed once at construction.
  Fel primitive_element() const { return primitive_; }

  std::vector<long long> digits(Fel a) const;            // e base-p digits
  Fel from_digits(const std::vector<long long>& d) const;

  // Image of every element of sub inside this field, indexed by sub encoding.
  // sub must be GF(p^r) with r | e; the image of sub's generator is the root
  // of sub's modulus with smallest encoding here, which keeps the embedding
  // deterministic.  Computed fresh per call (cheap at our sizes).
  std::vector<Fel> embedding_table(const Field& sub) const;
  Fel embed(const Field& sub, Fel x) const;
  std::optional<Fel> project(const Field& sub, Fel x) const;
  bool in_subfield(const Field& sub, Fel x) const;

  // Monic minimal polynomial of x over GF(p^r), r | e.  Coefficients are
  // returned as encodings in Field::get(p, r), ascending degree.
  std::vector<Fel> minimal_polynomial(Fel x, int r) const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  explicit Field(FieldSpec spec);

  void check(Fel a) const;
  Fel mul_raw(Fel a, Fel b) const;
  Fel add_raw(Fel a, Fel b) const;
  Fel pow_raw(Fel a, std::uint64_t k) const;
  std::uint64_t order_raw(Fel a) const;

  FieldSpec spec_;
  long long p_ = 0;
  int e_ = 0;
  std::uint64_t q_ = 0;
  std::uint64_t mod_bits_ = 0;  // p == 2: modulus as a bitmask

  // Performance tiers: full tables up to 256 elements, log/exp up to 2^16,
  // raw polynomial arithmetic beyond that.
  bool has_small_tabs_ = false;
  bool has_log_ = false;
  std::vector<Fel> add_tab_;
  std::vector<Fel> mul_tab_;
  std::vector<std::uint32_t> log_tab_;
  std::vector<Fel> exp_tab_;  // 2(q-1) entries so lookups skip a reduction

  Fel primitive_ = 0;
  std::vector<std::pair<std::uint64_t, int>> order_factors_;  // of q-1
};

// Element bound to its field; arithmetic checks that operands agree.
struct FieldElement {
  const Field* field = nullptr;
  Fel v = 0;

  FieldElement() = default;
  FieldElement(const Field& f, Fel value) : field(&f), v(value) {
    if (value >= f.q()) fail(Errc::OutOfRange, "element encoding exceeds field size");
  }

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    return FieldElement(a.same(b), a.field->add(a.v, b.v));
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    return FieldElement(a.same(b), a.field->sub(a.v, b.v));
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    return FieldElement(a.same(b), a.field->mul(a.v, b.v));
  }
  friend FieldElement operator/(FieldElement a, FieldElement b) {
    return FieldElement(a.same(b), a.field->div(a.v, b.v));
  }
  friend bool operator==(FieldElement a, FieldElement b) {
    a.same(b);
    return a.v == b.v;
  }

 private:
  const Field& same(const FieldElement& o) const {
    if (field != o.field)
      fail(Errc::MixedFields, "operands belong to different fields");
    return *field;
  }
};

}  // namespace cyclotome
