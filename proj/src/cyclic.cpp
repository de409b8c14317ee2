// Cyclic code machinery and the distance engines.
//
// Minimum weights are computed by one of two fully independent methods so
// they can cross-check each other: an exhaustive odometer walk over all q^k
// messages (incremental, one row-delta per step), and a support search that
// solves for codewords column-set by column-set in increasing support size.
// The support search is exact whenever it finds a word after exhausting all
// smaller supports.

#include "cyclotome/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cyclotome/cyclotomic.hpp"

namespace cyclotome {

namespace {

std::string set_to_string(const std::vector<long long>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  s += "}";
  return s;
}

std::string cyclic_label(const DefiningSet& t, bool extended) {
  const long long len = extended ? t.n + 1 : t.n;
  return std::string(extended ? "extended" : "cyclic") + "[n=" +
         std::to_string(len) + ",gf=" + std::to_string(t.alphabet->q()) +
         ",T=" + set_to_string(t.elements) + "]";
}

// q^k if it stays within limit, otherwise nullopt.
std::optional<std::uint64_t> pow_within(std::uint64_t q, long long k,
                                        std::uint64_t limit) {
  std::uint64_t r = 1;
  for (long long i = 0; i < k; ++i) {
    if (r > limit / q) return std::nullopt;
    r *= q;
  }
  return r;
}

std::vector<std::vector<Fel>> matrix_rows(const GfMatrix& m) {
  std::vector<std::vector<Fel>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    rows[i].assign(m.row(i), m.row(i) + m.cols());
  return rows;
}

// Exhaustive walk over the span of `rows`, reporting the minimum weight among
// words whose message counter is at least `threshold` (counters order the
// messages with rows[0] as the fastest digit, so putting a subcode basis
// first and setting threshold = q^{size of that basis} scans exactly the
// words outside the subcode).
struct EnumOutcome {
  long long best = -1;
  std::vector<Fel> witness;
  std::uint64_t steps = 0;
};

EnumOutcome enumerate_span(const Field& f,
                           const std::vector<std::vector<Fel>>& rows,
                           std::size_t n, std::uint64_t threshold) {
  const std::uint64_t q = f.q();
  const std::size_t k = rows.size();

  // scaled[i] holds q contiguous copies of rows[i], one per scalar.
  std::vector<std::vector<Fel>> scaled(k);
  for (std::size_t i = 0; i < k; ++i) {
    scaled[i].assign(q * n, 0);
    for (std::uint64_t s = 0; s < q; ++s)
      for (std::size_t j = 0; j < n; ++j)
        scaled[i][s * n + j] = f.mul(static_cast<Fel>(s), rows[i][j]);
  }
  // Digit increments as field elements: step[v] takes a digit from v to v+1,
  // wrap takes q-1 back to 0.
  std::vector<Fel> step(q > 1 ? q - 1 : 0);
  for (std::uint64_t v = 0; v + 1 < q; ++v)
    step[v] = f.sub(static_cast<Fel>(v + 1), static_cast<Fel>(v));
  const Fel wrap = f.sub(0, static_cast<Fel>(q - 1));

  std::vector<Fel> word(n, 0);
  std::vector<std::uint64_t> digit(k, 0);
  long long weight = 0;

  const auto apply = [&](std::size_t i, Fel delta) {
    const Fel* dr = scaled[i].data() + static_cast<std::size_t>(delta) * n;
    for (std::size_t j = 0; j < n; ++j) {
      if (dr[j] == 0) continue;
      const Fel old = word[j];
      word[j] = f.add(old, dr[j]);
      weight += (word[j] != 0) - (old != 0);
    }
  };

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= q;

  EnumOutcome out;
  for (std::uint64_t counter = 1; counter < total; ++counter) {
    std::size_t i = 0;
    while (digit[i] == q - 1) {
      apply(i, wrap);
      digit[i] = 0;
      ++i;
    }
    apply(i, step[digit[i]]);
    ++digit[i];
    ++out.steps;
    if (counter < threshold) continue;
    if (out.best < 0 || weight < out.best) {
      out.best = weight;
      out.witness = word;
    }
  }
  return out;
}

// Support search: for every column subset of size w, solve for codewords
// living exactly on that support.  `h` is a parity check of the code; words
// with zero syndrome against `h_sub` (when given) are skipped as subcode
// members.
struct SupportOutcome {
  bool found = false;
  long long w = 0;
  std::vector<Fel> witness;
  std::uint64_t steps = 0;
  long long first_incomplete = 0;  // 0 when every visited stage was complete
};

SupportOutcome support_search(const Field& f, const GfMatrix& h,
                              const GfMatrix* h_sub, std::size_t n,
                              int w_max) {
  constexpr std::uint64_t kProjectiveCap = 1ull << 16;
  const std::uint64_t q = f.q();
  SupportOutcome out;

  for (int w = 1; w <= w_max && static_cast<std::size_t>(w) <= n; ++w) {
    bool stage_complete = true;
    std::vector<std::size_t> idx(static_cast<std::size_t>(w));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      ++out.steps;
      GfMatrix hs(f, h.rows(), static_cast<std::size_t>(w));
      for (std::size_t r = 0; r < h.rows(); ++r)
        for (int c = 0; c < w; ++c)
          hs.set(r, static_cast<std::size_t>(c),
                 h.at(r, idx[static_cast<std::size_t>(c)]));
      const GfMatrix ns = nullspace(hs);
      const std::size_t dim = ns.rows();
      if (dim > 0) {
        const std::optional<std::uint64_t> count =
            pow_within(q, static_cast<long long>(dim), kProjectiveCap);
        if (!count.has_value()) {
          stage_complete = false;
        } else {
          // Projective enumeration: first nonzero coefficient pinned to 1.
          std::vector<Fel> coef(dim, 0);
          for (std::size_t lead = 0; lead < dim; ++lead) {
            std::fill(coef.begin(), coef.end(), 0);
            coef[lead] = 1;
            while (true) {
              ++out.steps;
              std::vector<Fel> vw(static_cast<std::size_t>(w), 0);
              for (std::size_t j = lead; j < dim; ++j)
                if (coef[j])
                  row_axpy(f, coef[j], ns.row(j), vw.data(), vw.size());
              bool full_support = true;
              for (const Fel x : vw)
                if (x == 0) {
                  full_support = false;
                  break;
                }
              if (full_support) {
                bool in_sub = false;
                if (h_sub != nullptr) {
                  in_sub = true;
                  for (std::size_t r = 0; r < h_sub->rows() && in_sub; ++r) {
                    Fel syn = 0;
                    for (int c = 0; c < w; ++c)
                      syn = f.add(
                          syn, f.mul(vw[static_cast<std::size_t>(c)],
                                     h_sub->at(r, idx[static_cast<std::size_t>(
                                                      c)])));
                    if (syn != 0) in_sub = false;
                  }
                }
                if (!in_sub) {
                  out.found = true;
                  out.w = w;
                  out.witness.assign(n, 0);
                  for (int c = 0; c < w; ++c)
                    out.witness[idx[static_cast<std::size_t>(c)]] =
                        vw[static_cast<std::size_t>(c)];
                  return out;
                }
              }
              // Next coefficient vector with this leading position.
              std::size_t j = lead + 1;
              while (j < dim && coef[j] == q - 1) {
                coef[j] = 0;
                ++j;
              }
              if (j == dim) break;
              ++coef[j];
            }
          }
        }
      }
      // Next combination of columns.
      int pos = w - 1;
      while (pos >= 0 &&
             idx[static_cast<std::size_t>(pos)] ==
                 n - static_cast<std::size_t>(w - pos))
        --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int t = pos + 1; t < w; ++t)
        idx[static_cast<std::size_t>(t)] =
            idx[static_cast<std::size_t>(t - 1)] + 1;
    }
    if (!stage_complete && out.first_incomplete == 0) out.first_incomplete = w;
  }
  return out;
}

}  // namespace

DefiningSet make_defining_set(long long n, const Field& alphabet,
                              std::vector<long long> elements,
                              const RunConfig& cfg) {
  if (n < 1) fail(Errc::InvalidParameters, "code length must be positive");
  const auto q = static_cast<long long>(alphabet.q());
  if (std::gcd(((q % n) + n) % n, n) != 1)
    fail(Errc::NotCoprime, "alphabet size must be coprime to n");

  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  for (const long long s : elements)
    if (s < 0 || s >= n)
      fail(Errc::OutOfRange,
           "defining set element " + std::to_string(s) + " outside [0, n)");
  for (const long long s : elements) {
    const long long img = (s * (q % n)) % n;
    if (!std::binary_search(elements.begin(), elements.end(), img))
      fail(Errc::NotCosetClosed,
           "element " + std::to_string(s) + " maps to " + std::to_string(img) +
               " which is missing");
  }

  DefiningSet t;
  t.n = n;
  t.alphabet = &alphabet;
  t.elements = std::move(elements);
  t.s = static_cast<int>(mult_order(q, n));
  t.splitting_field =
      &Field::get(alphabet.p(), alphabet.e() * t.s, cfg.field_cap);
  t.beta_exponent = (t.splitting_field->q() - 1) / static_cast<std::uint64_t>(n);
  return t;
}

DefiningSet dual_defining_set(const DefiningSet& t) {
  DefiningSet out = t;
  out.elements.clear();
  for (long long s = 0; s < t.n; ++s) {
    const long long neg = (t.n - s) % t.n;
    if (!std::binary_search(t.elements.begin(), t.elements.end(), neg))
      out.elements.push_back(s);
  }
  return out;
}

DefiningSet hermitian_dual_defining_set(const DefiningSet& t) {
  if (t.alphabet->e() % 2 != 0)
    fail(Errc::NotSquareField,
         "Hermitian duality needs an alphabet of square order");
  long long q_sub = 1;
  for (int i = 0; i < t.alphabet->e() / 2; ++i) q_sub *= t.alphabet->p();

  DefiningSet out = t;
  out.elements.clear();
  for (long long s = 0; s < t.n; ++s) {
    const long long img = ((-q_sub * s) % t.n + t.n) % t.n;
    if (!std::binary_search(t.elements.begin(), t.elements.end(), img))
      out.elements.push_back(s);
  }
  return out;
}

bool defining_set_contains(const DefiningSet& outer,
                           const DefiningSet& inner) {
  if (outer.n != inner.n)
    fail(Errc::LengthMismatch, "containment across different lengths");
  if (outer.alphabet != inner.alphabet)
    fail(Errc::FieldMismatch, "containment across different alphabets");
  // The larger code has the smaller defining set.
  return std::includes(inner.elements.begin(), inner.elements.end(),
                       outer.elements.begin(), outer.elements.end());
}

CyclicCode code_from_defining_set(const DefiningSet& t) {
  const Field& sf = *t.splitting_field;
  const Field& alpha_f = *t.alphabet;
  const Fel beta =
      sf.pow(sf.primitive_element(), static_cast<long long>(t.beta_exponent));

  // Coset leaders within T.
  std::vector<long long> leaders;
  std::vector<bool> used(static_cast<std::size_t>(t.n), false);
  const auto q = static_cast<long long>(alpha_f.q());
  for (const long long s : t.elements) {
    if (used[static_cast<std::size_t>(s)]) continue;
    leaders.push_back(s);
    long long cur = s;
    do {
      used[static_cast<std::size_t>(cur)] = true;
      cur = (cur * (q % t.n)) % t.n;
    } while (cur != s);
  }

  std::vector<Fel> g{1};
  for (const long long s : leaders) {
    const std::vector<Fel> m = sf.minimal_polynomial(
        sf.pow(beta, s), alpha_f.e());
    std::vector<Fel> next(g.size() + m.size() - 1, 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      for (std::size_t j = 0; j < m.size(); ++j)
        next[i + j] = alpha_f.add(next[i + j], alpha_f.mul(g[i], m[j]));
    }
    g = std::move(next);
  }

  CyclicCode c;
  c.t = t;
  c.g = std::move(g);
  c.k = t.n - static_cast<long long>(t.elements.size());
  if (static_cast<long long>(c.g.size()) != t.n - c.k + 1)
    fail(Errc::Internal, "generator degree disagrees with |T|");
  return c;
}

ExtendedCode extend(const CyclicCode& c) { return ExtendedCode{c}; }

GfMatrix generator_matrix(const CyclicCode& c) {
  if (c.k == 0) fail(Errc::ZeroCode, "the zero code has no generator matrix");
  const Field& f = *c.t.alphabet;
  GfMatrix g(f, static_cast<std::size_t>(c.k),
             static_cast<std::size_t>(c.t.n));
  for (long long i = 0; i < c.k; ++i)
    for (std::size_t j = 0; j < c.g.size(); ++j)
      g.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i) + j,
            c.g[j]);
  return g;
}

GfMatrix generator_matrix(const ExtendedCode& c) {
  if (c.parent.k == 0)
    fail(Errc::ZeroCode, "the zero code has no generator matrix");
  const Field& f = *c.parent.t.alphabet;
  const GfMatrix base = generator_matrix(c.parent);
  GfMatrix g(f, base.rows(), base.cols() + 1);
  for (std::size_t i = 0; i < base.rows(); ++i) {
    Fel sum = 0;
    for (std::size_t j = 0; j < base.cols(); ++j) {
      g.set(i, j + 1, base.at(i, j));
      sum = f.add(sum, base.at(i, j));
    }
    g.set(i, 0, f.neg(sum));
  }
  return g;
}

LinearCode as_linear(const CyclicCode& c) {
  const Field& f = *c.t.alphabet;
  LinearCode out{&f, c.t.n, GfMatrix(f, 0, static_cast<std::size_t>(c.t.n)),
                 cyclic_label(c.t, false)};
  if (c.k > 0) out.gen = row_basis(generator_matrix(c));
  return out;
}

LinearCode as_linear(const ExtendedCode& c) {
  const Field& f = *c.parent.t.alphabet;
  LinearCode out{&f, c.parent.t.n + 1,
                 GfMatrix(f, 0, static_cast<std::size_t>(c.parent.t.n + 1)),
                 cyclic_label(c.parent.t, true)};
  if (c.parent.k > 0) out.gen = row_basis(generator_matrix(c));
  return out;
}

LinearCode dual_code(const LinearCode& c) {
  return LinearCode{c.field, c.n, row_basis(nullspace(c.gen)),
                    "dual(" + c.label + ")"};
}

LinearCode hermitian_dual_code(const LinearCode& c) {
  if (c.field->e() % 2 != 0)
    fail(Errc::NotSquareField,
         "Hermitian duality needs an alphabet of square order");
  const GfMatrix gq = entrywise_frobenius(c.gen, c.field->e() / 2);
  return LinearCode{c.field, c.n, row_basis(nullspace(gq)),
                    "hermitian_dual(" + c.label + ")"};
}

bool code_contains(const LinearCode& outer, const LinearCode& inner) {
  if (outer.field != inner.field)
    fail(Errc::FieldMismatch, "containment across different alphabets");
  if (outer.n != inner.n)
    fail(Errc::LengthMismatch, "containment across different lengths");
  return rowspace_contains(outer.gen, inner.gen);
}

DistanceResult min_distance(const LinearCode& c, const RunConfig& cfg) {
  DistanceResult res;
  if (c.k() == 0) {
    res.kind = DistanceResult::Kind::infinite;
    res.method = DistanceResult::Method::none;
    return res;
  }
  const Field& f = *c.field;
  const std::optional<std::uint64_t> words =
      pow_within(f.q(), c.k(), cfg.enumeration_budget);
  if (words.has_value()) {
    const EnumOutcome e = enumerate_span(
        f, matrix_rows(c.gen), static_cast<std::size_t>(c.n), 1);
    res.kind = DistanceResult::Kind::exact;
    res.d = e.best;
    res.method = DistanceResult::Method::full_enumeration;
    res.budget_spent = e.steps;
    res.witness = e.witness;
    return res;
  }

  const GfMatrix h = dual_code(c).gen;
  const SupportOutcome s =
      support_search(f, h, nullptr, static_cast<std::size_t>(c.n),
                     cfg.support_weight_max);
  res.method = DistanceResult::Method::support_search;
  res.budget_spent = s.steps;
  if (s.found && s.first_incomplete == 0) {
    res.kind = DistanceResult::Kind::exact;
    res.d = s.w;
    res.witness = s.witness;
  } else {
    res.kind = DistanceResult::Kind::lower_and_upper;
    res.d_lo = s.first_incomplete > 0 ? s.first_incomplete
                                      : cfg.support_weight_max + 1;
    res.d_hi = s.found ? s.w : c.n - c.k() + 1;
    if (s.found) res.witness = s.witness;
  }
  return res;
}

DistanceResult min_weight_outside(const LinearCode& code,
                                  const LinearCode& sub,
                                  const RunConfig& cfg) {
  if (code.field != sub.field)
    fail(Errc::FieldMismatch, "codes over different alphabets");
  if (code.n != sub.n)
    fail(Errc::LengthMismatch, "codes of different lengths");
  if (!code_contains(code, sub))
    fail(Errc::NotSubcode, "second argument is not a subcode of the first");

  DistanceResult res;
  if (code.k() == sub.k()) {
    res.kind = DistanceResult::Kind::infinite;
    res.method = DistanceResult::Method::none;
    return res;
  }

  const Field& f = *code.field;
  const std::optional<std::uint64_t> words =
      pow_within(f.q(), code.k(), cfg.enumeration_budget);
  if (words.has_value()) {
    // Basis with the subcode rows first, so the message counter tells us
    // whether the word lies inside the subcode.
    std::vector<std::vector<Fel>> rows = matrix_rows(sub.gen);
    GfMatrix acc = sub.gen;  // stays in rref
    std::vector<std::size_t> pivots = rref(acc);
    for (std::size_t i = 0; i < code.gen.rows(); ++i) {
      std::vector<Fel> v(code.gen.row(i), code.gen.row(i) + code.gen.cols());
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        const Fel coeff = v[pivots[r]];
        if (coeff) row_axpy(f, f.neg(coeff), acc.row(r), v.data(), v.size());
      }
      bool zero = true;
      for (const Fel x : v)
        if (x) {
          zero = false;
          break;
        }
      if (zero) continue;
      rows.push_back(v);
      GfMatrix next(f, rows.size(), static_cast<std::size_t>(code.n));
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t j = 0; j < rows[r].size(); ++j)
          next.set(r, j, rows[r][j]);
      acc = next;
      pivots = rref(acc);
    }
    if (static_cast<long long>(rows.size()) != code.k())
      fail(Errc::Internal, "completion basis has the wrong size");

    std::uint64_t threshold = 1;
    for (long long i = 0; i < sub.k(); ++i) threshold *= f.q();
    const EnumOutcome e =
        enumerate_span(f, rows, static_cast<std::size_t>(code.n), threshold);
    res.kind = DistanceResult::Kind::exact;
    res.d = e.best;
    res.method = DistanceResult::Method::full_enumeration;
    res.budget_spent = e.steps;
    res.witness = e.witness;
    return res;
  }

  const GfMatrix h = dual_code(code).gen;
  const GfMatrix h_sub = dual_code(sub).gen;
  const SupportOutcome s =
      support_search(f, h, &h_sub, static_cast<std::size_t>(code.n),
                     cfg.support_weight_max);
  res.method = DistanceResult::Method::support_search;
  res.budget_spent = s.steps;
  if (s.found && s.first_incomplete == 0) {
    res.kind = DistanceResult::Kind::exact;
    res.d = s.w;
    res.witness = s.witness;
  } else {
    res.kind = DistanceResult::Kind::lower_and_upper;
    res.d_lo = s.first_incomplete > 0 ? s.first_incomplete
                                      : cfg.support_weight_max + 1;
    res.d_hi = s.found ? s.w : code.n;
    if (s.found) res.witness = s.witness;
  }
  return res;
}

}  // namespace cyclotome
