// Affine invariance: digit criterion, group oracle, maximal codes.

#include "cyclotome/affine.hpp"

#include <algorithm>
#include <string>

#include "cyclotome/cyclotomic.hpp"
#include "cyclotome/linalg.hpp"

namespace cyclotome {

namespace {

long long pow_ll(long long p, int m) {
  long long r = 1;
  for (int i = 0; i < m; ++i) r *= p;
  return r;
}

void validate_prm(long long p, int r, int m) {
  if (p < 2 || r < 1 || m < 1 || m % r != 0)
    fail(Errc::InvalidParameters,
         "need a prime p, r >= 1, and r dividing m");
}

// No element of T may have its negation in T; equivalent to the dual of the
// extended code sitting inside the extended code when T is a maximal set.
bool negation_free(const std::vector<long long>& t, long long n) {
  for (const long long s : t)
    if (std::binary_search(t.begin(), t.end(), (n - s) % n)) return false;
  return true;
}

}  // namespace

bool is_affine_invariant(const DefiningSet& t, long long p, int m) {
  const long long pm = pow_ll(p, m);
  if (t.n != pm - 1)
    fail(Errc::LengthMismatch, "defining set length is not p^m - 1");

  std::vector<long long> tbar = t.elements;
  if (!std::binary_search(tbar.begin(), tbar.end(), 0ll)) {
    tbar.push_back(0);
    std::sort(tbar.begin(), tbar.end());
  }
  for (const long long tt : tbar)
    for (long long s = 0; s < t.n; ++s)
      if (precedes(s, tt, p, m) &&
          !std::binary_search(tbar.begin(), tbar.end(), s))
        return false;
  return true;
}

bool affine_oracle(const ExtendedCode& c, const RunConfig& cfg) {
  (void)cfg;
  const CyclicCode& par = c.parent;
  if (par.k == 0) return true;  // nothing to move

  const Field& sf = *par.t.splitting_field;
  const long long n = par.t.n;
  const std::uint64_t big_q = sf.q();
  if (big_q != static_cast<std::uint64_t>(n) + 1)
    fail(Errc::InvalidParameters,
         "group oracle needs length p^m, i.e. n = p^m - 1");

  // Coordinate labels: position 0 holds the zero label, position 1+i holds
  // beta^i.
  const Fel beta = sf.pow(sf.primitive_element(),
                          static_cast<long long>(par.t.beta_exponent));
  std::vector<std::size_t> pos_of(big_q, 0);
  std::vector<Fel> labels(big_q, 0);
  Fel cur = 1;
  for (long long i = 0; i < n; ++i) {
    pos_of[cur] = static_cast<std::size_t>(1 + i);
    labels[static_cast<std::size_t>(1 + i)] = cur;
    cur = sf.mul(cur, beta);
  }

  const LinearCode ext = as_linear(c);
  const GfMatrix h = nullspace(ext.gen);
  const Field& af = *par.t.alphabet;

  const auto invariant_under = [&](auto&& map_label) {
    std::vector<Fel> moved(big_q, 0);
    for (std::size_t i = 0; i < ext.gen.rows(); ++i) {
      std::fill(moved.begin(), moved.end(), 0);
      for (std::size_t j = 0; j < big_q; ++j)
        moved[pos_of[map_label(labels[j])]] = ext.gen.at(i, j);
      for (std::size_t r = 0; r < h.rows(); ++r) {
        Fel syn = 0;
        for (std::size_t j = 0; j < big_q; ++j)
          if (moved[j]) syn = af.add(syn, af.mul(h.at(r, j), moved[j]));
        if (syn != 0) return false;
      }
    }
    return true;
  };

  const Fel alpha = sf.primitive_element();
  return invariant_under([&](Fel l) { return sf.mul(alpha, l); }) &&
         invariant_under([&](Fel l) { return sf.add(l, 1); });
}

std::vector<AffineClassification> maximal_affine_invariant_codes(
    long long p, int r, int m, const RunConfig& cfg) {
  validate_prm(p, r, m);
  const Field& af = Field::get(p, r, cfg.field_cap);
  const long long n = pow_ll(p, m) - 1;

  std::vector<AffineClassification> out;
  for (int j = 0; j < r; ++j) {
    long long pj = 1 % n;
    for (int i = 0; i < j; ++i) pj = (pj * p) % n;
    AffineClassification rec;
    rec.p = p;
    rec.r = r;
    rec.m = m;
    rec.j = j;
    rec.t = make_defining_set(
        n, af, cyclotomic_coset(pj, static_cast<long long>(af.q()), n), cfg);
    rec.affine_invariant = is_affine_invariant(rec.t, p, m);
    rec.dual_contained = negation_free(rec.t.elements, n);
    out.push_back(std::move(rec));
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j2 = i + 1; j2 < out.size(); ++j2)
      if (out[i].t.elements == out[j2].t.elements)
        fail(Errc::Internal, "maximal defining sets collide");
  return out;
}

bool dual_contained_maximal(long long p, int r, int m, int j,
                            const RunConfig& cfg) {
  validate_prm(p, r, m);
  if (j < 0 || j >= r)
    fail(Errc::InvalidParameters, "j must lie in [0, r)");
  const Field& af = Field::get(p, r, cfg.field_cap);
  const long long n = pow_ll(p, m) - 1;
  long long pj = 1 % n;
  for (int i = 0; i < j; ++i) pj = (pj * p) % n;
  const std::vector<long long> t =
      cyclotomic_coset(pj, static_cast<long long>(af.q()), n);
  return negation_free(t, n);
}

}  // namespace cyclotome
