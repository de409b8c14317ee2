// Property suites and the acceptance checklist.  Everything here recomputes
// its claim through two independent routes (combinatorial predicate against
// matrix oracle, search against formula) and reports the first mismatch.

#include "cyclotome/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cyclotome/affine.hpp"
#include "cyclotome/cyclic.hpp"
#include "cyclotome/cyclotomic.hpp"
#include "cyclotome/error.hpp"
#include "cyclotome/field.hpp"
#include "cyclotome/linalg.hpp"
#include "cyclotome/quantum.hpp"

namespace cyclotome {

namespace {

using Outcome = std::pair<bool, std::string>;

PropertyResult run_property(const std::string& name,
                            const std::function<Outcome()>& body) {
  PropertyResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    auto [pass, detail] = body();
    r.pass = pass;
    r.detail = std::move(detail);
  } catch (const Error& e) {
    r.pass = false;
    r.detail = std::string("unexpected error: ") + e.what();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("unexpected exception: ") + e.what();
  }
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return r;
}

long long pow_ll(long long p, int m) {
  long long r = 1;
  for (int i = 0; i < m; ++i) r *= p;
  return r;
}

long long powmod_ll(long long b, long long e, long long mod) {
  unsigned __int128 acc = 1;
  unsigned __int128 base = static_cast<unsigned long long>(((b % mod) + mod) % mod);
  while (e > 0) {
    if (e & 1) acc = acc * base % static_cast<unsigned long long>(mod);
    base = base * base % static_cast<unsigned long long>(mod);
    e >>= 1;
  }
  return static_cast<long long>(acc);
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::string vec_str(const std::vector<long long>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "}";
}

LinearCode lin_of(long long n, const Field& f, std::vector<long long> els,
                  const RunConfig& cfg) {
  return as_linear(
      code_from_defining_set(make_defining_set(n, f, std::move(els), cfg)));
}

LinearCode ext_of(long long n, const Field& f, std::vector<long long> els,
                  const RunConfig& cfg) {
  return as_linear(extend(
      code_from_defining_set(make_defining_set(n, f, std::move(els), cfg))));
}

long long lo_of(const DistanceResult& d) {
  if (d.kind == DistanceResult::Kind::exact) return d.d;
  if (d.kind == DistanceResult::Kind::lower_and_upper) return d.d_lo;
  return (1ll << 62);
}

struct PrmPoint {
  long long p;
  int r;
  int m;
};

std::vector<PrmPoint> prm_grid(long long pm_cap, int r_max) {
  std::vector<PrmPoint> pts;
  for (long long p : {2ll, 3ll, 5ll, 7ll})
    for (int r = 1; r <= r_max; ++r)
      for (int m = r; pow_ll(p, m) <= pm_cap; m += r)
        pts.push_back({p, r, m});
  return pts;
}

std::string point_str(const PrmPoint& pt) {
  return "(p=" + std::to_string(pt.p) + ",r=" + std::to_string(pt.r) +
         ",m=" + std::to_string(pt.m) + ")";
}

// Defining sets of the r distinguished codes: cosets of p^j, j = 0..r-1.
std::set<std::vector<long long>> char_power_cosets(const PrmPoint& pt) {
  const long long q = pow_ll(pt.p, pt.r);
  const long long n = pow_ll(pt.p, pt.m) - 1;
  std::set<std::vector<long long>> out;
  long long pj = 1 % n;
  for (int j = 0; j < pt.r; ++j) {
    out.insert(cyclotomic_coset(pj, q, n));
    pj = n == 1 ? 0 : (pj * pt.p) % n;
  }
  return out;
}

LinearCode maximal_ext_lin(long long p, int r, int m, int j,
                           const RunConfig& cfg) {
  const long long q = pow_ll(p, r);
  const long long n = pow_ll(p, m) - 1;
  const Field& f = Field::get(p, r, cfg.field_cap);
  long long pj = 1 % n;
  for (int i = 0; i < j; ++i) pj = n == 1 ? 0 : (pj * p) % n;
  return ext_of(n, f, cyclotomic_coset(pj, q, n), cfg);
}

// ---------------------------------------------------------------------------
// Affine checks

Outcome check_maximal_iff_oracle(const std::vector<PrmPoint>& pts,
                                 const RunConfig& cfg) {
  long long checked = 0;
  for (const auto& pt : pts) {
    const long long q = pow_ll(pt.p, pt.r);
    const long long n = pow_ll(pt.p, pt.m) - 1;
    const Field& f = Field::get(pt.p, pt.r, cfg.field_cap);
    const auto expected = char_power_cosets(pt);
    for (const auto& coset : all_cosets(q, n)) {
      const ExtendedCode ext =
          extend(code_from_defining_set(make_defining_set(n, f, coset, cfg)));
      const bool oracle = affine_oracle(ext, cfg);
      const bool predicted = expected.count(coset) > 0;
      ++checked;
      if (oracle != predicted)
        return {false, "mismatch at " + point_str(pt) + " T=" + vec_str(coset) +
                           ": oracle=" + (oracle ? "true" : "false") +
                           " coset-of-char-power=" +
                           (predicted ? "true" : "false")};
    }
  }
  return {true, std::to_string(checked) +
                    " single-coset codes match the group oracle"};
}

Outcome check_maximal_count(const std::vector<PrmPoint>& pts,
                            const RunConfig& cfg) {
  for (const auto& pt : pts) {
    const auto cls = maximal_affine_invariant_codes(pt.p, pt.r, pt.m, cfg);
    if (static_cast<int>(cls.size()) != pt.r)
      return {false, point_str(pt) + ": got " + std::to_string(cls.size()) +
                         " codes, expected " + std::to_string(pt.r)};
    std::set<std::vector<long long>> distinct;
    for (const auto& c : cls) {
      if (!c.affine_invariant)
        return {false, point_str(pt) + " j=" + std::to_string(c.j) +
                           ": classified code fails the invariance criterion"};
      distinct.insert(c.t.elements);
    }
    if (distinct.size() != cls.size())
      return {false, point_str(pt) + ": defining sets collide"};
  }
  return {true, std::to_string(pts.size()) +
                    " grid points each give exactly r distinct codes"};
}

Outcome check_dual_routes(const std::vector<PrmPoint>& pts,
                          const RunConfig& cfg, bool enforce_values) {
  long long checked = 0;
  for (const auto& pt : pts) {
    for (int j = 0; j < pt.r; ++j) {
      const bool pred = dual_contained_maximal(pt.p, pt.r, pt.m, j, cfg);
      const LinearCode ext = maximal_ext_lin(pt.p, pt.r, pt.m, j, cfg);
      const bool mat = code_contains(ext, dual_code(ext));
      ++checked;
      if (pred != mat)
        return {false, "routes disagree at " + point_str(pt) +
                           " j=" + std::to_string(j) + ": predicate=" +
                           (pred ? "true" : "false") + " matrix=" +
                           (mat ? "true" : "false")};
      if (!enforce_values) continue;
      const bool sufficient = pt.p > 3 || pt.m > 2 || pt.r != 1;
      const bool exceptional =
          pt.r == 1 && ((pt.p == 2 && pt.m == 1) || (pt.p == 3 && pt.m == 1) ||
                        (pt.p == 2 && pt.m == 2));
      if (sufficient && !pred)
        return {false, "dual containment missing at covered point " +
                           point_str(pt) + " j=" + std::to_string(j)};
      if (exceptional && pred)
        return {false,
                "dual containment unexpectedly holds at exceptional point " +
                    point_str(pt)};
    }
  }
  return {true, std::to_string(checked) +
                    " (point, j) pairs agree across both routes"};
}

Outcome check_criterion_vs_oracle(const std::vector<PrmPoint>& pts,
                                  const RunConfig& cfg) {
  long long checked = 0;
  for (const auto& pt : pts) {
    const long long q = pow_ll(pt.p, pt.r);
    const long long n = pow_ll(pt.p, pt.m) - 1;
    const Field& f = Field::get(pt.p, pt.r, cfg.field_cap);
    std::vector<std::vector<long long>> nz;
    for (const auto& c : all_cosets(q, n))
      if (!(c.size() == 1 && c[0] == 0)) nz.push_back(c);
    if (nz.size() > 13) continue;  // subset sweep would not be desk-scale
    for (std::uint64_t mask = 0; mask < (1ull << nz.size()); ++mask) {
      std::vector<long long> els;
      for (std::size_t i = 0; i < nz.size(); ++i)
        if (mask >> i & 1) els.insert(els.end(), nz[i].begin(), nz[i].end());
      std::sort(els.begin(), els.end());
      const DefiningSet ds = make_defining_set(n, f, els, cfg);
      const bool crit = is_affine_invariant(ds, pt.p, pt.m);
      const bool oracle = affine_oracle(extend(code_from_defining_set(ds)), cfg);
      ++checked;
      if (crit != oracle)
        return {false, "criterion/oracle split at " + point_str(pt) +
                           " T=" + vec_str(els)};
    }
  }
  return {true, std::to_string(checked) +
                    " coset-union codes agree between criterion and oracle"};
}

// ---------------------------------------------------------------------------
// Order checks

Outcome check_order_halving(long long n_max, const std::vector<long long>& qs) {
  long long checked = 0;
  for (long long n = 1; n <= n_max; ++n)
    for (long long q : qs) {
      if (std::gcd(q % n, n) != 1) continue;
      const long long r = mult_order(q, n);
      const long long r2 = mult_order(q * q, n);
      const long long want = (r % 2 == 1) ? r : r / 2;
      ++checked;
      if (r2 != want)
        return {false, "n=" + std::to_string(n) + " q=" + std::to_string(q) +
                           ": ord(q^2)=" + std::to_string(r2) + " but ord(q)=" +
                           std::to_string(r)};
    }
  return {true, std::to_string(checked) +
                    " coprime pairs satisfy the order-halving identity"};
}

Outcome check_3mod4_parity(long long n_max, const std::vector<long long>& qs) {
  long long checked = 0;
  for (long long n = 3; n <= n_max; n += 2) {
    bool all_3mod4 = true;
    for (const auto& [p, e] : factorize(n))
      if (p % 4 != 3) all_3mod4 = false;
    if (!all_3mod4) continue;
    for (long long q : qs) {
      if (std::gcd(q % n, n) != 1) continue;
      ++checked;
      if (mult_order(q * q, n) % 2 == 0)
        return {false, "n=" + std::to_string(n) + " q=" + std::to_string(q) +
                           ": ord(q^2) is even despite 3 mod 4 factors"};
    }
  }
  return {true, std::to_string(checked) +
                    " pairs with 3-mod-4 factorizations have odd ord(q^2)"};
}

Outcome check_prime_power_lifting(const std::vector<long long>& qs) {
  long long checked = 0;
  for (long long pi : {3ll, 7ll, 11ll, 19ll, 23ll, 31ll, 43ll, 59ll})
    for (long long q : qs) {
      if (q % pi == 0) continue;
      const auto [t, z] = z_exponent(pi, q);
      if (t != mult_order(q * q, pi))
        return {false, "pi=" + std::to_string(pi) + " q=" + std::to_string(q) +
                           ": t disagrees with the order"};
      const long long piz = pow_ll(pi, static_cast<int>(z));
      if (powmod_ll(q, 2 * t, piz) != 1)
        return {false, "pi=" + std::to_string(pi) + " q=" + std::to_string(q) +
                           ": pi^z does not divide q^(2t) - 1"};
      if (piz <= (1ll << 40) && powmod_ll(q, 2 * t, piz * pi) == 1)
        return {false, "pi=" + std::to_string(pi) + " q=" + std::to_string(q) +
                           ": z is not the exact exponent"};
      for (int m = 1; pow_ll(pi, m) <= 20000; ++m) {
        const long long want =
            pow_ll(pi, std::max(0, m - static_cast<int>(z))) * t;
        ++checked;
        if (mult_order(q * q, pow_ll(pi, m)) != want)
          return {false, "pi=" + std::to_string(pi) + "^" + std::to_string(m) +
                             " q=" + std::to_string(q) +
                             ": lifting formula fails"};
      }
    }
  return {true, std::to_string(checked) +
                    " prime-power orders match the lifting formula"};
}

Outcome check_precedes_axioms() {
  for (const auto& [p, m] : std::vector<std::pair<long long, int>>{
           {2, 4}, {3, 3}, {5, 2}}) {
    const long long N = pow_ll(p, m);
    for (long long s = 0; s < N; ++s) {
      if (!precedes(s, s, p, m))
        return {false, "not reflexive at s=" + std::to_string(s)};
      const auto ds = p_adic_digits(s, p, m);
      for (long long t = 0; t < N; ++t) {
        const auto dt = p_adic_digits(t, p, m);
        bool dom = true;
        for (int i = 0; i < m; ++i)
          if (ds[static_cast<std::size_t>(i)] >
              dt[static_cast<std::size_t>(i)])
            dom = false;
        if (precedes(s, t, p, m) != dom)
          return {false, "digit characterization fails at (" +
                             std::to_string(s) + "," + std::to_string(t) + ")"};
        if (s != t && precedes(s, t, p, m) && precedes(t, s, p, m))
          return {false, "antisymmetry fails at (" + std::to_string(s) + "," +
                             std::to_string(t) + ")"};
      }
    }
    // Transitivity on the digit-dominance relation.
    for (long long s = 0; s < N; ++s)
      for (long long t = 0; t < N; ++t) {
        if (!precedes(s, t, p, m)) continue;
        for (long long u = 0; u < N; ++u)
          if (precedes(t, u, p, m) && !precedes(s, u, p, m))
            return {false, "transitivity fails at (" + std::to_string(s) + "," +
                               std::to_string(t) + "," + std::to_string(u) +
                               ")"};
      }
  }
  return {true, "digit dominance is a partial order on three sample grids"};
}

// ---------------------------------------------------------------------------
// Splitting checks

Outcome check_splitting_existence(long long n_max,
                                  const std::vector<long long>& qs,
                                  const RunConfig& cfg) {
  long long checked = 0;
  for (long long n = 3; n <= n_max; n += 2)
    for (long long q : qs) {
      if (std::gcd(q % n, n) != 1) continue;
      const bool exists = !find_splittings(n, q, std::nullopt, cfg).empty();
      const bool square = is_square_mod(q, n);
      ++checked;
      if (exists != square)
        return {false, "n=" + std::to_string(n) + " q=" + std::to_string(q) +
                           ": splittings " + (exists ? "exist" : "missing") +
                           " but q is " + (square ? "" : "not ") +
                           "a square mod n"};
    }
  return {true, std::to_string(checked) +
                    " points match the quadratic-residue test"};
}

struct PairingInfo {
  std::set<std::pair<long long, long long>> pairs;
  std::vector<long long> fixed;  // leaders of cosets mapped to themselves
};

// Induced action of the multiplier a on the nonzero base-cosets of Z_n.
PairingInfo coset_pairing(long long n, long long base, long long a) {
  PairingInfo info;
  const auto cosets = all_cosets(base, n);
  std::vector<long long> leader_of(static_cast<std::size_t>(n), 0);
  for (const auto& c : cosets)
    for (long long x : c) leader_of[static_cast<std::size_t>(x)] = c.front();
  const long long an = ((a % n) + n) % n;
  for (const auto& c : cosets) {
    if (c.size() == 1 && c[0] == 0) continue;
    const long long img =
        leader_of[static_cast<std::size_t>((an * c[0]) % n)];
    if (img == c.front()) info.fixed.push_back(c.front());
    info.pairs.insert({std::min(c.front(), img), std::max(c.front(), img)});
  }
  return info;
}

// Across the grid of odd n with ord_n(q^2) odd: the -1 and -q multipliers
// must both act without fixed cosets and induce identical pairings, and q
// itself must fix every coset.  The pairing determines the full splitting
// list, so pairing equality is checked everywhere and the literal splitting
// lists are compared where their count stays desk-scale.
Outcome check_multiplier_pairings(long long n_max,
                                  const std::vector<long long>& qs,
                                  const RunConfig& cfg, bool check_q_fixes,
                                  bool check_swaps) {
  long long points = 0, failures = 0;
  std::string first;
  for (long long q : qs)
    for (long long n = 3; n <= n_max; n += 2) {
      if (std::gcd(q % n, n) != 1) continue;
      if (mult_order(q * q, n) % 2 == 0) continue;
      ++points;
      std::string why;
      if (check_q_fixes) {
        const PairingInfo fq = coset_pairing(n, q * q, q);
        for (const auto& pr : fq.pairs)
          if (pr.first != pr.second) {
            why += "mult by q moves the coset of " +
                   std::to_string(pr.first) + "; ";
            break;
          }
      }
      if (check_swaps) {
        const PairingInfo m1 = coset_pairing(n, q * q, -1);
        const PairingInfo mq = coset_pairing(n, q * q, -q);
        if (!m1.fixed.empty())
          why += "-1 fixes the coset of " + std::to_string(m1.fixed[0]) + "; ";
        if (!mq.fixed.empty())
          why += "-q fixes the coset of " + std::to_string(mq.fixed[0]) + "; ";
        if (m1.fixed.empty() && mq.fixed.empty()) {
          if (m1.pairs != mq.pairs) why += "pairings differ; ";
          if (m1.pairs.size() <= 12) {
            try {
              const auto a1 = find_splittings(n, q * q, -1, cfg);
              const auto aq = find_splittings(n, q * q, -q, cfg);
              bool same = !a1.empty() && a1.size() == aq.size();
              for (std::size_t i = 0; same && i < a1.size(); ++i)
                same = a1[i].s1 == aq[i].s1;
              if (!same) why += "splitting lists differ; ";
            } catch (const Error&) {
              // Enumeration capped; the pairing comparison above already
              // decides equality of the splitting families.
            }
          }
        }
      }
      if (!why.empty()) {
        ++failures;
        if (first.empty())
          first = "n=" + std::to_string(n) + " q=" + std::to_string(q) + ": " +
                  why;
      }
    }
  if (failures > 0)
    return {false, std::to_string(failures) + " of " + std::to_string(points) +
                       " grid points fail; first: " + first};
  return {true, std::to_string(points) + " grid points hold"};
}

// ---------------------------------------------------------------------------
// Cyclic-code cross checks

Outcome check_dual_formulas(const std::vector<const Field*>& fields,
                            long long n_max, std::uint64_t mask_cap,
                            const RunConfig& cfg) {
  long long checked = 0;
  for (const Field* fp : fields) {
    const Field& f = *fp;
    const long long qf = static_cast<long long>(f.q());
    for (long long n = 2; n <= n_max; ++n) {
      if (std::gcd(qf % n, n) != 1) continue;
      // The splitting field depends only on (n, q). Skip points whose
      // splitting field does not fit under the cap; they are unbuildable
      // rather than wrong, and every mask at this n would hit the same wall.
      try {
        make_defining_set(n, f, {}, cfg);
      } catch (const Error& e) {
        if (e.code() == Errc::SizeBudgetExceeded) continue;
        throw;
      }
      const auto cosets = all_cosets(qf, n);
      const std::uint64_t total =
          cosets.size() >= 63 ? mask_cap : (1ull << cosets.size());
      for (std::uint64_t mask = 0; mask < std::min(total, mask_cap); ++mask) {
        std::vector<long long> els;
        for (std::size_t i = 0; i < cosets.size(); ++i)
          if (mask >> i & 1)
            els.insert(els.end(), cosets[i].begin(), cosets[i].end());
        std::sort(els.begin(), els.end());
        const DefiningSet ds = make_defining_set(n, f, els, cfg);
        const CyclicCode code = code_from_defining_set(ds);

        const LinearCode dual_by_set =
            as_linear(code_from_defining_set(dual_defining_set(ds)));
        const LinearCode dual_by_mat = dual_code(as_linear(code));
        if (!(dual_by_set.gen == dual_by_mat.gen))
          return {false, "Euclidean dual mismatch at n=" + std::to_string(n) +
                             " q=" + std::to_string(qf) + " T=" + vec_str(els)};

        const LinearCode herm_by_set = as_linear(
            code_from_defining_set(hermitian_dual_defining_set(ds)));
        const LinearCode herm_by_mat = hermitian_dual_code(as_linear(code));
        if (!(herm_by_set.gen == herm_by_mat.gen))
          return {false, "Hermitian dual mismatch at n=" + std::to_string(n) +
                             " q=" + std::to_string(qf) + " T=" + vec_str(els)};
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) +
                    " defining sets agree with the matrix duals"};
}

Outcome check_distance_engines(const std::vector<const Field*>& fields,
                               const std::vector<long long>& ns,
                               const RunConfig& cfg) {
  long long checked = 0;
  for (const Field* fp : fields) {
    const Field& f = *fp;
    const long long qf = static_cast<long long>(f.q());
    for (long long n : ns) {
      if (std::gcd(qf % n, n) != 1) continue;
      try {
        make_defining_set(n, f, {}, cfg);
      } catch (const Error& e) {
        if (e.code() == Errc::SizeBudgetExceeded) continue;
        throw;
      }
      for (const auto& coset : all_cosets(qf, n)) {
        for (int variant = 0; variant < 2; ++variant) {
          LinearCode code = lin_of(n, f, coset, cfg);
          if (variant) code = dual_code(code);
          if (code.k() == 0) continue;
          bool enum_fits = true;
          long long words = 1;
          for (long long i = 0; i < code.k(); ++i) {
            words *= qf;
            if (words > (1ll << 16)) {
              enum_fits = false;
              break;
            }
          }
          if (!enum_fits) continue;
          RunConfig ce = cfg;
          ce.enumeration_budget = 1ull << 16;
          RunConfig cs = cfg;
          cs.enumeration_budget = 1;
          const DistanceResult de = min_distance(code, ce);
          const DistanceResult dsup = min_distance(code, cs);
          if (de.kind != DistanceResult::Kind::exact ||
              de.method != DistanceResult::Method::full_enumeration)
            return {false, "enumeration did not run on " + code.label};
          ++checked;
          if (dsup.kind == DistanceResult::Kind::exact) {
            if (dsup.d != de.d)
              return {false, "engines disagree on " + code.label + ": " +
                                 std::to_string(de.d) + " vs " +
                                 std::to_string(dsup.d)};
          } else if (dsup.kind == DistanceResult::Kind::lower_and_upper) {
            if (de.d < dsup.d_lo || de.d > dsup.d_hi)
              return {false, "support bounds exclude the true distance on " +
                                 code.label};
          } else {
            return {false, "support search reported an empty code on " +
                               code.label};
          }
        }
      }
    }
  }
  return {true, std::to_string(checked) +
                    " codes give consistent distances across both engines"};
}

Outcome check_gh_product(const RunConfig& cfg) {
  const struct {
    long long n;
    long long p;
    int e;
  } pts[] = {{7, 2, 1}, {7, 2, 2}, {9, 2, 2}, {11, 3, 1}, {13, 3, 1},
             {15, 2, 1}, {17, 2, 2}};
  long long checked = 0;
  for (const auto& pt : pts) {
    const Field& f = Field::get(pt.p, pt.e, cfg.field_cap);
    const long long qf = static_cast<long long>(f.q());
    for (const auto& coset : all_cosets(qf, pt.n)) {
      const CyclicCode code =
          code_from_defining_set(make_defining_set(pt.n, f, coset, cfg));
      std::vector<long long> rest;
      for (const auto& other : all_cosets(qf, pt.n))
        if (other != coset) rest.insert(rest.end(), other.begin(), other.end());
      std::sort(rest.begin(), rest.end());
      const CyclicCode comp =
          code_from_defining_set(make_defining_set(pt.n, f, rest, cfg));
      // Multiply the two generators and compare against x^n - 1.
      std::vector<Fel> prod(code.g.size() + comp.g.size() - 1, 0);
      for (std::size_t i = 0; i < code.g.size(); ++i)
        for (std::size_t j = 0; j < comp.g.size(); ++j)
          prod[i + j] = f.add(prod[i + j], f.mul(code.g[i], comp.g[j]));
      std::vector<Fel> xn(static_cast<std::size_t>(pt.n) + 1, 0);
      xn[0] = f.neg(1);
      xn[static_cast<std::size_t>(pt.n)] = 1;
      ++checked;
      if (prod != xn)
        return {false, "g * h differs from x^n - 1 at n=" +
                           std::to_string(pt.n) + " q=" + std::to_string(qf) +
                           " T=" + vec_str(coset)};
    }
  }
  return {true, std::to_string(checked) +
                    " complementary generator pairs multiply to x^n - 1"};
}

Outcome check_dual_involution(const RunConfig& cfg) {
  long long checked = 0;
  for (const auto& [p, e, n] : std::vector<std::tuple<long long, int, long long>>{
           {2, 1, 7}, {2, 2, 7}, {2, 2, 9}, {2, 2, 15}, {3, 2, 8}}) {
    const Field& f = Field::get(p, e, cfg.field_cap);
    const long long qf = static_cast<long long>(f.q());
    const auto cosets = all_cosets(qf, n);
    for (std::uint64_t mask = 0; mask < (1ull << cosets.size()); ++mask) {
      std::vector<long long> els;
      for (std::size_t i = 0; i < cosets.size(); ++i)
        if (mask >> i & 1)
          els.insert(els.end(), cosets[i].begin(), cosets[i].end());
      std::sort(els.begin(), els.end());
      const DefiningSet ds = make_defining_set(n, f, els, cfg);
      if (dual_defining_set(dual_defining_set(ds)).elements != ds.elements)
        return {false, "Euclidean dual is not an involution at n=" +
                           std::to_string(n) + " T=" + vec_str(els)};
      if (f.e() % 2 == 0) {
        if (hermitian_dual_defining_set(hermitian_dual_defining_set(ds))
                .elements != ds.elements)
          return {false, "Hermitian dual is not an involution at n=" +
                             std::to_string(n) + " T=" + vec_str(els)};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " defining sets return after two duals"};
}

Outcome check_extension_rows(const RunConfig& cfg) {
  long long checked = 0;
  for (const auto& [p, e, n, s] :
       std::vector<std::tuple<long long, int, long long, long long>>{
           {2, 1, 7, 1}, {2, 1, 15, 1}, {3, 1, 26, 1}, {5, 1, 24, 1},
           {2, 2, 15, 1}}) {
    const Field& f = Field::get(p, e, cfg.field_cap);
    const long long qf = static_cast<long long>(f.q());
    const ExtendedCode ext = extend(code_from_defining_set(
        make_defining_set(n, f, cyclotomic_coset(s, qf, n), cfg)));
    const GfMatrix g = generator_matrix(ext);
    for (std::size_t i = 0; i < g.rows(); ++i) {
      Fel sum = 0;
      for (std::size_t j = 0; j < g.cols(); ++j) sum = f.add(sum, g.at(i, j));
      ++checked;
      if (sum != 0)
        return {false, "extended row with nonzero coordinate sum at n=" +
                           std::to_string(n) + " q=" + std::to_string(qf)};
    }
  }
  return {true, std::to_string(checked) + " extended rows sum to zero"};
}

Outcome check_containment_vs_rowspace(const RunConfig& cfg) {
  long long checked = 0;
  for (const auto& [p, e, n] : std::vector<std::tuple<long long, int, long long>>{
           {2, 1, 7}, {2, 2, 9}, {3, 1, 13}}) {
    const Field& f = Field::get(p, e, cfg.field_cap);
    const long long qf = static_cast<long long>(f.q());
    const auto cosets = all_cosets(qf, n);
    std::vector<DefiningSet> sets;
    std::vector<LinearCode> codes;
    for (std::uint64_t mask = 0; mask < (1ull << cosets.size()); ++mask) {
      std::vector<long long> els;
      for (std::size_t i = 0; i < cosets.size(); ++i)
        if (mask >> i & 1)
          els.insert(els.end(), cosets[i].begin(), cosets[i].end());
      std::sort(els.begin(), els.end());
      sets.push_back(make_defining_set(n, f, els, cfg));
      codes.push_back(as_linear(code_from_defining_set(sets.back())));
    }
    for (std::size_t a = 0; a < sets.size(); ++a)
      for (std::size_t b = 0; b < sets.size(); ++b) {
        const bool by_set = defining_set_contains(sets[a], sets[b]);
        const bool by_mat = code_contains(codes[a], codes[b]);
        ++checked;
        if (by_set != by_mat)
          return {false, "containment mismatch at n=" + std::to_string(n) +
                             " q=" + std::to_string(qf) + " outer=" +
                             vec_str(sets[a].elements) + " inner=" +
                             vec_str(sets[b].elements)};
      }
  }
  return {true, std::to_string(checked) + " containment pairs agree"};
}

// ---------------------------------------------------------------------------
// Quantum checks

Outcome check_odd_like_records(
    const std::vector<std::tuple<long long, long long, long long>>& want,
    const RunConfig& cfg, bool require_enumeration) {
  std::string summary;
  for (const auto& [n, q, d] : want) {
    const QuantumCodeRecord rec = duadic_quantum(n, q, cfg);
    if (rec.n != n || rec.k != 1 ||
        rec.q != static_cast<std::uint64_t>(q))
      return {false, "wrong parameters for n=" + std::to_string(n)};
    if (rec.dist.kind != DistanceResult::Kind::exact)
      return {false, "distance not exact for n=" + std::to_string(n)};
    if (rec.dist.d != d)
      return {false, "n=" + std::to_string(n) + ": d=" +
                         std::to_string(rec.dist.d) + ", expected " +
                         std::to_string(d)};
    if (rec.dist.d * rec.dist.d < n ||
        rec.dist.d * rec.dist.d - rec.dist.d + 1 < n)
      return {false, "square bound violated at n=" + std::to_string(n)};
    if (require_enumeration &&
        rec.dist.method != DistanceResult::Method::full_enumeration)
      return {false, "n=" + std::to_string(n) +
                         ": distance not from full enumeration"};
    if (!rec.singleton_ok)
      return {false, "Singleton gate failed at n=" + std::to_string(n)};
    summary += "[[" + std::to_string(n) + ",1," + std::to_string(d) + "]]_" +
               std::to_string(q) + " ";
  }
  return {true, summary + "reproduced with exact distances"};
}

Outcome check_p5_record(const RunConfig& cfg) {
  const QuantumCodeRecord rec = affine_quantum_family(5, 1, 2, cfg);
  if (rec.n != 25 || rec.k != 19 || rec.q != 5)
    return {false, "parameters are [[" + std::to_string(rec.n) + "," +
                       std::to_string(rec.k) + "]], expected [[25,19]]"};
  if (rec.dist.kind != DistanceResult::Kind::exact)
    return {false, "distance was not resolved exactly"};
  if (rec.dist.d < 3 || rec.dist.d > 4)
    return {false, "d=" + std::to_string(rec.dist.d) + " outside [3,4]"};
  if (!singleton_check(25, 19, rec.dist.d) || !rec.singleton_ok)
    return {false, "Singleton bound violated"};
  if (rec.family != "affine_theorem6")
    return {false, "unexpected family label " + rec.family};
  return {true, "[[25,19," + std::to_string(rec.dist.d) +
                    "]]_5 with k = 25 - 2 - 2*2 and d <= 4"};
}

Outcome check_p5_purity(const RunConfig& cfg) {
  const QuantumCodeRecord rec = affine_quantum_family(5, 1, 2, cfg);
  const Field& f5 = Field::get(5, 1, cfg.field_cap);
  const LinearCode ext = ext_of(24, f5, cyclotomic_coset(1, 5, 24), cfg);
  const DistanceResult da = min_distance(ext, cfg);
  if (da.kind != DistanceResult::Kind::exact)
    return {false, "classical distance did not resolve exactly"};
  if (rec.dist.kind != DistanceResult::Kind::exact || rec.dist.d != da.d)
    return {false, "quantum distance differs from the classical one: " +
                       std::to_string(rec.dist.d) + " vs " +
                       std::to_string(da.d)};
  if (!rec.pure_to.has_value() || *rec.pure_to != da.d)
    return {false, "purity marker missing or off"};
  return {true, "d_Q = d_classical = " + std::to_string(da.d) +
                    ", record pure to that weight"};
}

Outcome check_degenerate_27(const RunConfig& cfg) {
  bool ok = true;
  std::string notes;

  const auto sps = find_splittings(27, 4, -1, cfg);
  if (sps.empty()) {
    ok = false;
    notes += "no -1 splitting of 27 over the 4-cosets; ";
  } else {
    const Field& gf4 = Field::get(2, 2, cfg.field_cap);
    std::vector<long long> even_set = sps.front().s1;
    even_set.push_back(0);
    std::sort(even_set.begin(), even_set.end());
    const LinearCode c_even = lin_of(27, gf4, even_set, cfg);
    const LinearCode d_odd = lin_of(27, gf4, sps.front().s1, cfg);

    const DistanceResult dc = min_distance(c_even, cfg);
    if (dc.kind == DistanceResult::Kind::exact && dc.d == 3)
      notes += "even-like minimum weight is exactly 3; ";
    else {
      ok = false;
      notes += "even-like minimum weight is not 3; ";
    }

    RunConfig cfg5 = cfg;
    cfg5.support_weight_max = 5;
    const DistanceResult outside = min_weight_outside(d_odd, c_even, cfg5);
    if (lo_of(outside) >= 6)
      notes += "no odd-like word of weight <= 5; ";
    else {
      ok = false;
      notes += "odd-like word of weight " + std::to_string(lo_of(outside)) +
               " found; ";
    }
    notes += "6 > sqrt(27) > 3; ";
  }

  try {
    const QuantumCodeRecord rec = degenerate_duadic_family(27, 2, cfg);
    const bool flagged = rec.degenerate.has_value() && *rec.degenerate &&
                         rec.pure_to.has_value() && *rec.pure_to == 3 &&
                         rec.singleton_ok;
    if (flagged)
      notes += "record [[27,1]]_2 flagged degenerate with pure_to " +
               std::to_string(*rec.pure_to);
    else {
      ok = false;
      notes += "record emitted without the degeneracy markers";
    }
  } catch (const Error& e) {
    ok = false;
    notes += std::string("record construction failed: ") + e.what() +
             " (the -2 multiplier fixes a 4-coset of Z_27 because "
             "ord_27(2) = 18 is even, so no -q-swapped pair exists and the "
             "Hermitian ingredient cannot be assembled)";
  }
  return {ok, notes};
}

Outcome check_singleton_records(const RunConfig& cfg) {
  if (!singleton_check(7, 1, 3) || singleton_check(7, 1, 5) ||
      !singleton_check(5, 1, 3) || !singleton_check(4, 2, 2) ||
      singleton_check(4, 3, 2))
    return {false, "numeric Singleton cases are off"};

  const Field& f2 = Field::get(2, 1, cfg.field_cap);
  std::vector<QuantumCodeRecord> recs;
  const LinearCode hamming = lin_of(7, f2, {1, 2, 4}, cfg);
  recs.push_back(css_construct(hamming, hamming, cfg));
  const LinearCode full3 = lin_of(3, f2, {}, cfg);
  recs.push_back(css_construct(full3, full3, cfg));
  recs.push_back(affine_quantum_family(5, 1, 1, cfg));
  recs.push_back(affine_quantum_family(2, 1, 3, cfg));
  recs.push_back(duadic_quantum(7, 2, cfg));
  for (const auto& rec : recs) {
    if (!rec.singleton_ok || !singleton_check(rec))
      return {false, "record [[" + std::to_string(rec.n) + "," +
                         std::to_string(rec.k) + "]] fails the gate"};
  }
  // Spot values: the Hamming pairing gives [[7,1,3]] and the full code a
  // distance-one record.
  if (recs[0].k != 1 || recs[0].dist.kind != DistanceResult::Kind::exact ||
      recs[0].dist.d != 3)
    return {false, "Hamming CSS pairing is not [[7,1,3]]"};
  if (recs[1].k != 3 || recs[1].dist.kind != DistanceResult::Kind::exact ||
      recs[1].dist.d != 1)
    return {false, "full-code CSS pairing is not [[3,3,1]]"};
  return {true, "5 records pass the gate; numeric cases match"};
}

Outcome check_stabilizer_commutation(const RunConfig& cfg) {
  const Field& f2 = Field::get(2, 1, cfg.field_cap);
  const Field& f5 = Field::get(5, 1, cfg.field_cap);
  std::vector<std::pair<LinearCode, LinearCode>> pairs;
  const LinearCode hamming = lin_of(7, f2, {1, 2, 4}, cfg);
  pairs.push_back({hamming, hamming});
  pairs.push_back({hamming, lin_of(7, f2, {}, cfg)});
  const LinearCode p5 = ext_of(24, f5, cyclotomic_coset(1, 5, 24), cfg);
  pairs.push_back({p5, p5});
  long long checked = 0;
  for (const auto& [c1, c2] : pairs) {
    const LinearCode gx = dual_code(c2);
    const LinearCode gz = dual_code(c1);
    const GfMatrix prod = matmul(gx.gen, transpose(gz.gen));
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j)
        if (prod.at(i, j) != 0)
          return {false, "X and Z stabilizers fail to commute for " +
                             c1.label + " / " + c2.label};
    ++checked;
  }
  return {true, std::to_string(checked) + " stabilizer pairs commute"};
}

Outcome check_affine_family_grid(const RunConfig& cfg) {
  struct Want {
    long long p;
    int r;
    int m;
    std::optional<long long> exact_d;
  };
  const std::vector<Want> wants = {
      {5, 1, 1, 3}, {7, 1, 1, 3}, {2, 1, 3, std::nullopt},
      {2, 1, 4, 4},  {3, 1, 3, std::nullopt}, {2, 2, 2, 3},
      {2, 2, 4, std::nullopt}, {2, 3, 3, std::nullopt},
      {7, 2, 2, std::nullopt}, {5, 1, 2, 3}};
  std::string summary;
  for (const auto& w : wants) {
    const QuantumCodeRecord rec = affine_quantum_family(w.p, w.r, w.m, cfg);
    const long long pm = pow_ll(w.p, w.m);
    const long long k_want = pm - 2 - 2 * (w.m / w.r);
    if (rec.n != pm || rec.k != k_want)
      return {false, point_str({w.p, w.r, w.m}) + ": [[" +
                         std::to_string(rec.n) + "," + std::to_string(rec.k) +
                         "]], expected [[" + std::to_string(pm) + "," +
                         std::to_string(k_want) + "]]"};
    if (rec.family != "affine_theorem6" || rec.theorem != "affine_theorem6")
      return {false, point_str({w.p, w.r, w.m}) + ": family label drift"};
    if (!rec.singleton_ok)
      return {false, point_str({w.p, w.r, w.m}) + ": Singleton gate failed"};
    const long long cap = w.m / w.r + 2;
    if (rec.dist.kind == DistanceResult::Kind::exact) {
      if (rec.dist.d > cap)
        return {false, point_str({w.p, w.r, w.m}) + ": d exceeds m/r + 2"};
    } else if (rec.dist.kind == DistanceResult::Kind::lower_and_upper) {
      if (rec.dist.d_hi > cap)
        return {false, point_str({w.p, w.r, w.m}) + ": d_hi exceeds m/r + 2"};
    } else {
      return {false, point_str({w.p, w.r, w.m}) + ": no distance claim"};
    }
    if (w.exact_d.has_value()) {
      if (rec.dist.kind != DistanceResult::Kind::exact ||
          rec.dist.d != *w.exact_d)
        return {false, point_str({w.p, w.r, w.m}) + ": expected exact d=" +
                           std::to_string(*w.exact_d)};
    }
    summary += "[[" + std::to_string(rec.n) + "," + std::to_string(rec.k) +
               "]] ";
  }

  // The excluded corner must refuse with its dedicated clause.
  for (const auto& [p, r, m] : std::vector<std::tuple<long long, int, int>>{
           {2, 1, 1}, {2, 1, 2}, {3, 1, 1}, {3, 1, 2}}) {
    try {
      affine_quantum_family(p, r, m, cfg);
      return {false, "corner (p=" + std::to_string(p) + ",m=" +
                         std::to_string(m) + ") was not rejected"};
    } catch (const Error& e) {
      if (e.code() != Errc::LemmaFiveExcluded)
        return {false, std::string("corner rejected with wrong clause: ") +
                           e.what()};
    }
  }
  return {true, summary + "built; excluded corner rejected"};
}

Outcome check_affine_purity_p5(const RunConfig& cfg) {
  const Field& f5 = Field::get(5, 1, cfg.field_cap);
  for (int m : {1, 2}) {
    const QuantumCodeRecord rec = affine_quantum_family(5, 1, m, cfg);
    const long long n = pow_ll(5, m) - 1;
    const LinearCode ext = ext_of(n, f5, cyclotomic_coset(1 % n, 5, n), cfg);
    const DistanceResult da = min_distance(ext, cfg);
    if (da.kind != DistanceResult::Kind::exact)
      return {false, "classical distance unresolved at m=" + std::to_string(m)};
    if (rec.dist.kind != DistanceResult::Kind::exact || rec.dist.d != da.d)
      return {false, "record distance differs from the classical one at m=" +
                         std::to_string(m)};
    if (!rec.pure_to.has_value() || *rec.pure_to != da.d)
      return {false, "purity marker off at m=" + std::to_string(m)};
  }
  return {true, "records over GF(5) are pure with d equal to the classical "
                "distance"};
}

Outcome check_odd_like_pair_structure(const RunConfig& cfg) {
  for (const auto& [n, q] :
       std::vector<std::pair<long long, long long>>{{7, 2}, {11, 3}}) {
    const DuadicConstruction ing = duadic_ingredients(n, q, cfg);
    if (ing.even_like.k != (n - 1) / 2 || ing.odd_like.k != (n + 1) / 2)
      return {false, "pair dimensions off at n=" + std::to_string(n)};
    if (!defining_set_contains(ing.odd_like.t, ing.even_like.t))
      return {false, "even-like code not inside the odd-like one at n=" +
                         std::to_string(n)};
    const LinearCode ev = as_linear(ing.even_like);
    const LinearCode od = as_linear(ing.odd_like);
    if (!code_contains(od, ev))
      return {false, "row spaces contradict the containment at n=" +
                         std::to_string(n)};
    const DistanceResult out = min_weight_outside(od, ev, cfg);
    if (out.kind != DistanceResult::Kind::exact)
      return {false, "odd-like minimum weight unresolved at n=" +
                         std::to_string(n)};
    const long long d = out.d;
    if (d * d < n || d * d - d + 1 < n)
      return {false, "square bound violated at n=" + std::to_string(n)};
  }
  return {true, "pairs at n=7,11 are nested with square-bound distances"};
}

// ---------------------------------------------------------------------------
// Suites

std::vector<PropertyResult> suite_orders(const RunConfig& cfg) {
  (void)cfg;
  return {
      run_property("order_of_square_halving",
                   [] { return check_order_halving(400, {2, 3, 4, 5, 7, 8, 9}); }),
      run_property("orders_odd_for_3mod4_factors",
                   [] { return check_3mod4_parity(400, {2, 3, 4, 5, 7, 8, 9}); }),
      run_property("prime_power_order_lifting",
                   [] { return check_prime_power_lifting({2, 3, 4, 5}); }),
      run_property("precedes_is_partial_order",
                   [] { return check_precedes_axioms(); }),
  };
}

std::vector<PropertyResult> suite_affine(const RunConfig& cfg) {
  const std::vector<PrmPoint> oracle_pts = {{2, 1, 2}, {2, 1, 3}, {2, 1, 4},
                                            {3, 1, 2}, {3, 1, 3}, {2, 2, 2},
                                            {2, 2, 4}, {5, 1, 2}};
  return {
      run_property("criterion_matches_group_oracle",
                   [&] { return check_criterion_vs_oracle(oracle_pts, cfg); }),
      run_property("maximal_iff_coset_of_char_power",
                   [&] { return check_maximal_iff_oracle(prm_grid(32, 2), cfg); }),
      run_property("maximal_code_count_is_r",
                   [&] { return check_maximal_count(prm_grid(4096, 3), cfg); }),
      run_property("dual_containment_predicate_matches_matrix",
                   [&] { return check_dual_routes(prm_grid(64, 2), cfg, false); }),
      run_property("dual_containment_outside_exceptions",
                   [&] { return check_dual_routes(prm_grid(64, 2), cfg, true); }),
  };
}

std::vector<PropertyResult> suite_duadic(const RunConfig& cfg) {
  return {
      run_property("splitting_existence_iff_square",
                   [&] { return check_splitting_existence(35, {2, 3, 4, 5}, cfg); }),
      run_property("q_fixes_q2_cosets",
                   [&] {
                     return check_multiplier_pairings(99, {2, 3}, cfg, true,
                                                      false);
                   }),
      run_property("negq_and_neg1_splittings_coincide",
                   [&] {
                     return check_multiplier_pairings(99, {2, 3}, cfg, false,
                                                      true);
                   }),
      run_property("generator_times_check_is_whole",
                   [&] { return check_gh_product(cfg); }),
      run_property("dual_maps_are_involutions",
                   [&] { return check_dual_involution(cfg); }),
      run_property("dual_formulas_match_matrix_oracles",
                   [&] {
                     const std::vector<const Field*> fields = {
                         &Field::get(2, 2, cfg.field_cap),
                         &Field::get(3, 2, cfg.field_cap)};
                     return check_dual_formulas(fields, 13, 256, cfg);
                   }),
      run_property("distance_methods_agree",
                   [&] {
                     const std::vector<const Field*> fields = {
                         &Field::get(2, 2, cfg.field_cap),
                         &Field::get(3, 2, cfg.field_cap)};
                     return check_distance_engines(fields, {5, 7, 9, 11, 13},
                                                   cfg);
                   }),
      run_property("extension_rows_sum_zero",
                   [&] { return check_extension_rows(cfg); }),
      run_property("containment_matches_rowspace",
                   [&] { return check_containment_vs_rowspace(cfg); }),
      run_property("odd_like_pair_distances",
                   [&] { return check_odd_like_pair_structure(cfg); }),
      run_property("degenerate_record_n27",
                   [&] { return check_degenerate_27(cfg); }),
  };
}

std::vector<PropertyResult> suite_css(const RunConfig& cfg) {
  return {
      run_property("records_meet_singleton",
                   [&] { return check_singleton_records(cfg); }),
      run_property("css_stabilizer_commutation",
                   [&] { return check_stabilizer_commutation(cfg); }),
      run_property("affine_family_parameters",
                   [&] { return check_affine_family_grid(cfg); }),
      run_property("affine_family_purity_p5",
                   [&] { return check_affine_purity_p5(cfg); }),
  };
}

}  // namespace

std::vector<PropertyResult> verify_suite(const std::string& suite,
                                         const RunConfig& cfg) {
  if (suite == "orders") return suite_orders(cfg);
  if (suite == "affine") return suite_affine(cfg);
  if (suite == "duadic") return suite_duadic(cfg);
  if (suite == "css") return suite_css(cfg);
  if (suite == "all") {
    std::vector<PropertyResult> all;
    for (const char* s : {"orders", "affine", "duadic", "css"}) {
      auto part = verify_suite(s, cfg);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  fail(Errc::InvalidParameters, "unknown suite '" + suite + "'");
}

PropertyResult acceptance_criterion(int index, const RunConfig& cfg) {
  switch (index) {
    case 1:
      return run_property("maximal_codes_match_group_oracle", [&] {
        return check_maximal_iff_oracle(prm_grid(32, 2), cfg);
      });
    case 2:
      return run_property("maximal_code_count_equals_r", [&] {
        return check_maximal_count(prm_grid(32, 2), cfg);
      });
    case 3:
      return run_property("dual_containment_grid_and_exceptions", [&] {
        return check_dual_routes(prm_grid(64, 2), cfg, true);
      });
    case 4:
      return run_property("p5_family_record",
                          [&] { return check_p5_record(cfg); });
    case 5:
      return run_property("p5_family_purity",
                          [&] { return check_p5_purity(cfg); });
    case 6:
      return run_property("splitting_existence_iff_square", [&] {
        return check_splitting_existence(49, {2, 3, 4, 5}, cfg);
      });
    case 7:
      return run_property("order_identities", [&] {
        auto a = check_order_halving(1000, {2, 3, 4, 5, 7, 8, 9});
        if (!a.first) return a;
        auto b = check_3mod4_parity(1000, {2, 3, 4, 5, 7, 8, 9});
        if (!b.first) return b;
        auto c = check_prime_power_lifting({2, 3, 4, 5, 7, 8, 9});
        if (!c.first) return c;
        return Outcome{true, a.second + "; " + b.second + "; " + c.second};
      });
    case 8:
      return run_property("multiplier_pairings_coincide", [&] {
        return check_multiplier_pairings(255, {2, 3}, cfg, true, true);
      });
    case 9:
      return run_property("odd_like_pair_records", [&] {
        return check_odd_like_records({{7, 2, 3}, {11, 3, 5}, {23, 2, 7}}, cfg,
                                      true);
      });
    case 10:
      return run_property("degenerate_record_length_27",
                          [&] { return check_degenerate_27(cfg); });
    case 11:
      return run_property("cross_oracle_integrity", [&] {
        const std::vector<const Field*> fields = {
            &Field::get(2, 2, cfg.field_cap), &Field::get(3, 2, cfg.field_cap)};
        auto a = check_dual_formulas(fields, 17, 1024, cfg);
        if (!a.first) return a;
        auto b = check_distance_engines(
            fields, {3, 5, 7, 9, 11, 13, 15, 16, 17}, cfg);
        if (!b.first) return b;
        return Outcome{true, a.second + "; " + b.second};
      });
    default:
      fail(Errc::InvalidParameters,
           "acceptance criteria are numbered 1 through 11");
  }
}

}  // namespace cyclotome
