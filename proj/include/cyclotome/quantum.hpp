// Quantum stabilizer codes built from classical ingredients: the CSS pairing,
// the Hermitian construction over GF(q^2), the family derived from maximal
// affine-invariant codes, and the odd-like pair family with its degenerate
// variant.  Every record carries provenance and is gated by singleton_check.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclotome/config.hpp"
#include "cyclotome/cyclic.hpp"
#include "cyclotome/cyclotomic.hpp"

namespace cyclotome {

struct QuantumCodeRecord {
  long long n = 0;
  long long k = 0;
  std::uint64_t q = 0;  // qudit alphabet size
  DistanceResult dist;
  std::optional<long long> pure_to;   // set only when known exactly
  std::optional<bool> degenerate;     // unset when undecidable at our budgets
  std::string family;                 // wire identifier, see SCHEMA.md
  std::string theorem;                // provenance label, equals family
  std::vector<std::string> ingredients;
  bool singleton_ok = false;
};

// k <= n - 2d + 2, evaluated with d for exact distances and d_hi otherwise.
bool singleton_check(long long n, long long k, long long d);
bool singleton_check(const QuantumCodeRecord& rec);

// CSS pairing of c1, c2 with dual(c2) inside c1 (checked; DualNotContained).
// k = k1 + k2 - n.  For k > 0 the distance combines the minimum weights of
// c1 \ dual(c2) and c2 \ dual(c1); for k = 0 it reports bounds from the
// ingredient distance.  pure_to is min(d(c1), d(c2)) when both are exact.
QuantumCodeRecord css_construct(const LinearCode& c1, const LinearCode& c2,
                                const RunConfig& cfg);

// Hermitian construction: c over GF(q^2) with c inside its Hermitian dual
// (checked; NotHermitianSelfOrthogonal) yields a [[n, n - 2k]]_q code whose
// distance is the minimum weight of hermitian_dual(c) \ c.  The zero code
// yields [[n, n, 1]].
QuantumCodeRecord hermitian_construct(const LinearCode& c,
                                      const RunConfig& cfg);

// Family "affine_theorem6": css of the maximal affine-invariant extended
// code (j = 0) with itself.  [[p^m, p^m - 2 - 2m/r, d]] over GF(p^r) with
// d at most m/r + 2.  Requires r | m and (p > 3 or m > 2 or r != 1); the
// excluded corner reports LemmaFiveExcluded.  For r = 1 the dual distance is
// enumerated and, when it exceeds the code distance, purity pins d exactly.
QuantumCodeRecord affine_quantum_family(long long p, int r, int m,
                                        const RunConfig& cfg);

// The classical ingredients behind duadic_quantum: the first -q splitting of
// Z_n into GF(q^2)-coset-closed halves, the even-like code (defining set
// {0} union s1) and the odd-like code (defining set s1), both over GF(q^2).
struct DuadicConstruction {
  Splitting splitting;
  CyclicCode even_like;
  CyclicCode odd_like;
};

DuadicConstruction duadic_ingredients(long long n, long long q,
                                      const RunConfig& cfg);

// Family "duadic_theorem14": [[n, 1, d]]_q from an odd-like pair over
// GF(q^2) swapped by the multiplier -q.  Requires ord_n(q^2) odd
// (OrderNotOdd); reports NoSplitting when no -q swap exists (exactly the
// points with ord_n(q) even).  Exact d satisfies d^2 - d + 1 >= n.
QuantumCodeRecord duadic_quantum(long long n, long long q,
                                 const RunConfig& cfg);

// Family "duadic_theorem15": degenerate [[n, 1, d]]_q for n whose prime
// factors p_i are all 3 mod 4 and whose exponents m_i exceed 2*z_i, where
// (t_i, z_i) = z_exponent(p_i, q).  The even-like subcode has a word of
// weight at most min p_i^{z_i} < sqrt(n) <= d, which certifies degeneracy.
// Beyond construction budgets the record carries the bound pair
// (min{d : d^2 - d + 1 >= n}, (n-1)/2 + 1) with method "none".
QuantumCodeRecord degenerate_duadic_family(long long n, long long q,
                                           const RunConfig& cfg);

}  // namespace cyclotome
