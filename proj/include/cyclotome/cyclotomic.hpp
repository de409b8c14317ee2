// Modular multiplicative machinery: cyclotomic cosets, digit dominance,
// quadratic residues, multiplier splittings of Z_n, and the exponent data
// behind the degenerate code family.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyclotome/config.hpp"
#include "cyclotome/error.hpp"

namespace cyclotome {

// Multiplicative order of q modulo n.  n = 1 returns 1 (the trivial group).
long long mult_order(long long q, long long n);

// q-cyclotomic coset of s modulo n, sorted ascending.
std::vector<long long> cyclotomic_coset(long long s, long long q, long long n);

// Every q-coset of Z_n exactly once, sorted by smallest member.
std::vector<std::vector<long long>> all_cosets(long long q, long long n);

// m base-p digits of s, least significant first.  Requires s < p^m.
std::vector<long long> p_adic_digits(long long s, long long p, int m);

// Digitwise dominance: every base-p digit of s is <= the matching digit of t.
bool precedes(long long s, long long t, long long p, int m);

bool is_square_mod(long long q, long long n);

// a * set mod n as a sorted set; a may be negative.
std::vector<long long> apply_multiplier(const std::vector<long long>& set,
                                        long long a, long long n);

// A partition of the nonzero residues into q-coset-closed halves swapped by
// the multiplier a: a*s1 = s2 and a*s2 = s1 (mod n).
struct Splitting {
  long long n = 0;
  long long q = 0;  // coset base, stored as passed (a field size, not reduced)
  std::vector<long long> s1;  // contains 1
  std::vector<long long> s2;
  long long a = 0;  // normalized to [1, n)
};

// All splittings of Z_n whose halves are q-coset closed.  With a given
// multiplier, all splittings swapped by it; without one, multipliers
// 2..n-1 coprime to n are searched and duplicate {s1, s2} pairs keep the
// smallest multiplier.  Results are sorted by s1.
std::vector<Splitting> find_splittings(
    long long n, long long q, std::optional<long long> a,
    const RunConfig& cfg = RunConfig());

// (t, z) where t is the order of q^2 modulo the prime pi and z is the exact
// power of pi dividing q^(2t) - 1.
std::pair<long long, long long> z_exponent(long long pi, long long q);

}  // namespace cyclotome
