// Residue arithmetic modulo n: cosets, dominance, squares, splittings.

#include "cyclotome/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace cyclotome {

namespace {

long long norm_mod(long long a, long long n) {
  a %= n;
  return a < 0 ? a + n : a;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(r) * base) % mod);
    base = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(base) * base) % mod);
    exp >>= 1;
  }
  return r;
}

void require_modulus(long long n) {
  if (n < 1) fail(Errc::InvalidParameters, "modulus must be positive");
}

void require_coprime(long long q, long long n, const char* what) {
  if (gcd_ll(norm_mod(q, n), n) != 1)
    fail(Errc::NotCoprime, std::string(what) + " must be coprime to n");
}

}  // namespace

long long mult_order(long long q, long long n) {
  require_modulus(n);
  if (n == 1) return 1;
  const long long qn = norm_mod(q, n);
  if (gcd_ll(qn, n) != 1)
    fail(Errc::NotCoprime, "order undefined: gcd(q, n) != 1");
  long long acc = qn;
  long long t = 1;
  while (acc != 1) {
    acc = norm_mod(acc * qn, n);
    ++t;
  }
  return t;
}

std::vector<long long> cyclotomic_coset(long long s, long long q,
                                        long long n) {
  require_modulus(n);
  require_coprime(q, n, "coset base q");
  const long long qn = norm_mod(q, n);
  std::vector<long long> coset;
  long long cur = norm_mod(s, n);
  do {
    coset.push_back(cur);
    cur = norm_mod(cur * qn, n);
  } while (cur != norm_mod(s, n));
  std::sort(coset.begin(), coset.end());
  return coset;
}

std::vector<std::vector<long long>> all_cosets(long long q, long long n) {
  require_modulus(n);
  require_coprime(q, n, "coset base q");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<long long>> parts;
  for (long long s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<long long> coset = cyclotomic_coset(s, q, n);
    for (const long long x : coset) seen[static_cast<std::size_t>(x)] = true;
    parts.push_back(std::move(coset));
  }
  // Cosets come out sorted by smallest member because s scans upward.
  return parts;
}

std::vector<long long> p_adic_digits(long long s, long long p, int m) {
  if (p < 2) fail(Errc::InvalidParameters, "digit base must be at least 2");
  if (m < 1) fail(Errc::InvalidParameters, "digit count must be positive");
  if (s < 0) fail(Errc::OutOfRange, "negative values have no digit vector");
  std::vector<long long> d(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    d[static_cast<std::size_t>(i)] = s % p;
    s /= p;
  }
  if (s != 0)
    fail(Errc::OutOfRange, "value does not fit in the requested digit count");
  return d;
}

bool precedes(long long s, long long t, long long p, int m) {
  const std::vector<long long> ds = p_adic_digits(s, p, m);
  const std::vector<long long> dt = p_adic_digits(t, p, m);
  for (int i = 0; i < m; ++i)
    if (ds[static_cast<std::size_t>(i)] > dt[static_cast<std::size_t>(i)])
      return false;
  return true;
}

bool is_square_mod(long long q, long long n) {
  require_modulus(n);
  const long long qn = norm_mod(q, n);
  for (long long x = 0; x < n; ++x)
    if (norm_mod(x * x, n) == qn) return true;
  return false;
}

std::vector<long long> apply_multiplier(const std::vector<long long>& set,
                                        long long a, long long n) {
  require_modulus(n);
  std::vector<long long> out;
  out.reserve(set.size());
  for (const long long s : set) out.push_back(norm_mod(a * norm_mod(s, n), n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Splitting> find_splittings(long long n, long long q,
                                       std::optional<long long> a,
                                       const RunConfig& cfg) {
  if (n < 3) fail(Errc::InvalidParameters, "need n >= 3 for a splitting");
  if (n % 2 == 0) fail(Errc::EvenModulus, "splittings need odd n");
  if (n > cfg.n_cap)
    fail(Errc::SearchBudgetExceeded,
         "n exceeds the splitting search cap " + std::to_string(cfg.n_cap));
  require_coprime(q, n, "coset base q");

  const std::vector<std::vector<long long>> parts = all_cosets(q, n);
  // Nonzero cosets and a residue -> coset index map.
  std::vector<const std::vector<long long>*> cosets;
  std::vector<int> coset_of(static_cast<std::size_t>(n), -1);
  for (const auto& part : parts) {
    if (part.size() == 1 && part[0] == 0) continue;
    const int idx = static_cast<int>(cosets.size());
    cosets.push_back(&part);
    for (const long long x : part) coset_of[static_cast<std::size_t>(x)] = idx;
  }

  std::vector<long long> multipliers;
  if (a.has_value()) {
    const long long an = norm_mod(*a, n);
    if (gcd_ll(an, n) != 1)
      fail(Errc::NotCoprime, "multiplier must be coprime to n");
    multipliers.push_back(an);
  } else {
    for (long long cand = 2; cand < n; ++cand)
      if (gcd_ll(cand, n) == 1) multipliers.push_back(cand);
  }

  constexpr int kMaxOrbits = 20;
  constexpr std::size_t kMaxResults = 8192;

  std::vector<Splitting> results;
  std::set<std::vector<long long>> seen;  // keyed by the half containing 1

  for (const long long mult : multipliers) {
    // Permutation induced on nonzero cosets.
    std::vector<int> image(cosets.size());
    for (std::size_t i = 0; i < cosets.size(); ++i)
      image[i] = coset_of[static_cast<std::size_t>(
          norm_mod(mult * (*cosets[i])[0], n))];

    // Orbits; any odd cycle (fixed cosets included) rules this multiplier out.
    std::vector<int> orbit_of(cosets.size(), -1);
    std::vector<std::vector<int>> orbits;
    bool odd_cycle = false;
    for (std::size_t i = 0; i < cosets.size() && !odd_cycle; ++i) {
      if (orbit_of[i] != -1) continue;
      std::vector<int> cycle;
      int cur = static_cast<int>(i);
      while (orbit_of[static_cast<std::size_t>(cur)] == -1) {
        orbit_of[static_cast<std::size_t>(cur)] =
            static_cast<int>(orbits.size());
        cycle.push_back(cur);
        cur = image[static_cast<std::size_t>(cur)];
      }
      if (cycle.size() % 2 != 0) odd_cycle = true;
      orbits.push_back(std::move(cycle));
    }
    if (odd_cycle) continue;
    if (static_cast<int>(orbits.size()) > kMaxOrbits)
      fail(Errc::SearchBudgetExceeded,
           "too many multiplier orbits to enumerate assignments");

    // Every assignment of a side to each orbit, alternating along the cycle.
    const std::uint64_t assignments = 1ull << orbits.size();
    for (std::uint64_t mask = 0; mask < assignments; ++mask) {
      std::vector<int> side(cosets.size());
      for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
        const int base = (mask >> oi) & 1;
        for (std::size_t pos = 0; pos < orbits[oi].size(); ++pos)
          side[static_cast<std::size_t>(orbits[oi][pos])] =
              base ^ static_cast<int>(pos & 1);
      }
      const int side_of_one = side[static_cast<std::size_t>(coset_of[1])];
      std::vector<long long> s1, s2;
      for (std::size_t ci = 0; ci < cosets.size(); ++ci) {
        auto& dst = (side[ci] == side_of_one) ? s1 : s2;
        dst.insert(dst.end(), cosets[ci]->begin(), cosets[ci]->end());
      }
      std::sort(s1.begin(), s1.end());
      std::sort(s2.begin(), s2.end());
      if (!seen.insert(s1).second) continue;
      if (results.size() >= kMaxResults)
        fail(Errc::SearchBudgetExceeded,
             "too many splittings to enumerate");
      Splitting sp;
      sp.n = n;
      sp.q = q;
      sp.s1 = std::move(s1);
      sp.s2 = std::move(s2);
      sp.a = mult;
      results.push_back(std::move(sp));
    }
  }

  std::sort(results.begin(), results.end(),
            [](const Splitting& x, const Splitting& y) { return x.s1 < y.s1; });
  return results;
}

std::pair<long long, long long> z_exponent(long long pi, long long q) {
  if (q < 1) fail(Errc::InvalidParameters, "q must be a positive field size");
  for (long long d = 2; d * d <= pi; ++d)
    if (pi % d == 0) fail(Errc::NotPrime, "z exponent needs a prime modulus");
  if (pi < 2) fail(Errc::NotPrime, "z exponent needs a prime modulus");
  if (q % pi == 0) fail(Errc::NotCoprime, "q must be coprime to the prime");

  const long long q2 = norm_mod(norm_mod(q, pi) * norm_mod(q, pi), pi);
  const long long t = mult_order(q2, pi);

  // Largest z with pi^z dividing q^(2t) - 1, found by testing q^(2t) = 1
  // against growing prime-power moduli.
  long long z = 0;
  std::uint64_t mod = 1;
  const auto upi = static_cast<std::uint64_t>(pi);
  const auto uq = static_cast<std::uint64_t>(q);
  while (mod <= (~0ull) / upi) {
    mod *= upi;
    if (powmod(uq % mod, static_cast<std::uint64_t>(2 * t), mod) == 1)
      ++z;
    else
      break;
  }
  if (z == 0) fail(Errc::Internal, "prime does not divide q^(2t) - 1");
  return {t, z};
}

}  // namespace cyclotome
