// Cyclic codes presented by defining sets, their extensions, duals, and two
// independent minimum-distance engines (exhaustive message enumeration and
// growing-support search).  Distances always report how they were obtained.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclotome/config.hpp"
#include "cyclotome/field.hpp"
#include "cyclotome/linalg.hpp"

namespace cyclotome {

// T subset of Z_n closed under multiplication by q, together with the
// splitting field GF(q^s) that hosts the primitive n-th root beta.
struct DefiningSet {
  long long n = 0;
  const Field* alphabet = nullptr;        // GF(q)
  std::vector<long long> elements;        // sorted, union of q-cosets
  const Field* splitting_field = nullptr; // GF(q^s)
  int s = 0;                              // order of q mod n
  std::uint64_t beta_exponent = 0;        // beta = alpha^((q^s - 1) / n)
};

DefiningSet make_defining_set(long long n, const Field& alphabet,
                              std::vector<long long> elements,
                              const RunConfig& cfg = RunConfig());

// {s : n - s mod n not in T}; defines the Euclidean dual code.
DefiningSet dual_defining_set(const DefiningSet& t);

// {s : -q*s mod n not in T} for alphabet GF(q^2); defines the Hermitian dual.
// NotSquareField unless the alphabet degree is even.
DefiningSet hermitian_dual_defining_set(const DefiningSet& t);

// Code containment is reversed set containment of defining sets.
bool defining_set_contains(const DefiningSet& outer, const DefiningSet& inner);

struct CyclicCode {
  DefiningSet t;
  std::vector<Fel> g;  // generator polynomial, ascending, monic
  long long k = 0;     // n - |T|
};

CyclicCode code_from_defining_set(const DefiningSet& t);

// Extension by an overall parity position, prepended at index 0:
// x_0 = -(x_1 + ... + x_n).
struct ExtendedCode {
  CyclicCode parent;
};

ExtendedCode extend(const CyclicCode& c);

// k x n matrix of shifts of g.  ZeroCode when k = 0.
GfMatrix generator_matrix(const CyclicCode& c);
GfMatrix generator_matrix(const ExtendedCode& c);

// Any linear code as a row space plus a human-readable construction label
// (labels flow into quantum provenance, so they are deterministic).
struct LinearCode {
  const Field* field = nullptr;
  long long n = 0;
  GfMatrix gen;  // row basis; 0 x n encodes the zero code
  std::string label;

  long long k() const { return static_cast<long long>(gen.rows()); }
};

LinearCode as_linear(const CyclicCode& c);
LinearCode as_linear(const ExtendedCode& c);
LinearCode dual_code(const LinearCode& c);
// Nullspace of the entrywise q-th-power generator matrix, alphabet GF(q^2).
LinearCode hermitian_dual_code(const LinearCode& c);
bool code_contains(const LinearCode& outer, const LinearCode& inner);

struct DistanceResult {
  enum class Kind { exact, lower_and_upper, infinite };
  enum class Method { full_enumeration, support_search, none };

  Kind kind = Kind::exact;
  long long d = 0;     // kind == exact
  long long d_lo = 0;  // kind == lower_and_upper
  long long d_hi = 0;
  Method method = Method::none;
  std::uint64_t budget_spent = 0;
  std::vector<Fel> witness;  // codeword attaining d / d_hi when one is known

  long long best_upper() const { return kind == Kind::exact ? d : d_hi; }
};

// Minimum weight of the code.  Enumerates all q^k codewords when that fits
// cfg.enumeration_budget, otherwise searches supports of size up to
// cfg.support_weight_max (exact if a word is found there, bounds otherwise).
// The zero code reports Kind::infinite (minimum over an empty set).
DistanceResult min_distance(const LinearCode& c, const RunConfig& cfg);

// Minimum weight over code \ sub.  NotSubcode unless sub is contained in
// code; Kind::infinite when the difference is empty.
DistanceResult min_weight_outside(const LinearCode& code,
                                  const LinearCode& sub,
                                  const RunConfig& cfg);

}  // namespace cyclotome
