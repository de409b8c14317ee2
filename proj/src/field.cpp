// Field construction and arithmetic.
//
// The modulus scan enumerates monic degree-e polynomials in encoding order
// and keeps the first irreducible one, so a field's representation never
// depends on search heuristics or RNG.  Irreducibility is decided by trial
// division against every monic polynomial of degree at most e/2; at the
// sizes this library supports (p^e up to a few million) that is fast and has
// no subtle failure modes.

#include "cyclotome/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

namespace cyclotome {

namespace {

bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomial over GF(p), coefficients ascending, no trailing zeros.
using Poly = std::vector<long long>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f by monic g.
Poly poly_mod(Poly f, const Poly& g, long long p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const long long c = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    if (c != 0) {
      for (std::size_t i = 0; i < dg; ++i)
        f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
    }
    f.pop_back();
    trim(f);
  }
  return f;
}

Poly poly_from_code(std::uint64_t code, int degree, long long p) {
  Poly f(static_cast<std::size_t>(degree) + 1, 0);
  f[degree] = 1;
  for (int i = 0; i < degree; ++i) {
    f[i] = static_cast<long long>(code % static_cast<std::uint64_t>(p));
    code /= static_cast<std::uint64_t>(p);
  }
  return f;
}

bool is_irreducible(const Poly& f, long long p) {
  const int e = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= e / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 0; code < count; ++code) {
      if (poly_mod(f, poly_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldSpec make_field(long long p, int e, std::uint64_t cap) {
  if (!is_prime_ll(p))
    fail(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (e < 1) fail(Errc::InvalidParameters, "extension degree must be positive");
  std::uint64_t q = 1;
  const auto up = static_cast<std::uint64_t>(p);
  for (int i = 0; i < e; ++i) {
    if (q > cap / up)
      fail(Errc::SizeBudgetExceeded,
           "p^e exceeds the field cap " + std::to_string(cap));
    q *= up;
  }
  FieldSpec spec;
  spec.p = p;
  spec.e = e;
  spec.q = q;
  for (std::uint64_t code = 0; code < q; ++code) {
    Poly f = poly_from_code(code, e, p);
    if (is_irreducible(f, p)) {
      spec.modulus = std::move(f);
      return spec;
    }
  }
  fail(Errc::Internal, "no irreducible polynomial of the requested degree");
}

std::optional<std::pair<long long, int>> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t rest = q;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      int e = 0;
      while (rest % d == 0) {
        rest /= d;
        ++e;
      }
      if (rest != 1) return std::nullopt;
      return std::make_pair(static_cast<long long>(d), e);
    }
  }
  return std::make_pair(static_cast<long long>(q), 1);
}

Field::Field(FieldSpec spec)
    : spec_(std::move(spec)), p_(spec_.p), e_(spec_.e), q_(spec_.q) {
  if (p_ == 2) {
    for (int i = 0; i <= e_; ++i)
      if (spec_.modulus[static_cast<std::size_t>(i)]) mod_bits_ |= 1ull << i;
  }
  std::uint64_t x = q_ - 1;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      int c = 0;
      while (x % d == 0) {
        x /= d;
        ++c;
      }
      order_factors_.emplace_back(d, c);
    }
  }
  if (x > 1) order_factors_.emplace_back(x, 1);

  for (Fel a = 1; a < q_; ++a) {
    if (order_raw(a) == q_ - 1) {
      primitive_ = a;
      break;
    }
  }
  if (primitive_ == 0) fail(Errc::Internal, "no generator of the unit group");

  if (q_ <= 65536) {
    exp_tab_.assign(2 * (q_ - 1), 0);
    log_tab_.assign(q_, 0);
    Fel cur = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
      exp_tab_[i] = cur;
      exp_tab_[i + (q_ - 1)] = cur;
      log_tab_[cur] = static_cast<std::uint32_t>(i);
      cur = mul_raw(cur, primitive_);
    }
    has_log_ = true;
  }
  if (q_ <= 256) {
    add_tab_.assign(q_ * q_, 0);
    mul_tab_.assign(q_ * q_, 0);
    for (Fel a = 0; a < q_; ++a)
      for (Fel b = 0; b < q_; ++b) {
        add_tab_[a * q_ + b] = add_raw(a, b);
        mul_tab_[a * q_ + b] = mul_raw(a, b);
      }
    has_small_tabs_ = true;
  }
}

const Field& Field::get(long long p, int e, std::uint64_t cap) {
  static std::mutex mu;
  static std::map<std::pair<long long, int>, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(p, e);
  auto it = cache.find(key);
  if (it != cache.end()) {
    if (it->second->q() > cap)
      fail(Errc::SizeBudgetExceeded,
           "p^e exceeds the field cap " + std::to_string(cap));
    return *it->second;
  }
  FieldSpec spec = make_field(p, e, cap);
  auto field = std::unique_ptr<Field>(new Field(std::move(spec)));
  const Field& ref = *field;
  cache.emplace(key, std::move(field));
  return ref;
}

void Field::check(Fel a) const {
  if (a >= q_)
    fail(Errc::OutOfRange,
         "encoding " + std::to_string(a) + " is not an element of GF(" +
             std::to_string(q_) + ")");
}

Fel Field::add_raw(Fel a, Fel b) const {
  if (p_ == 2) return a ^ b;
  const auto up = static_cast<std::uint64_t>(p_);
  Fel r = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < e_; ++i) {
    r += ((a % up) + (b % up)) % up * place;
    a /= up;
    b /= up;
    place *= up;
  }
  return r;
}

Fel Field::mul_raw(Fel a, Fel b) const {
  if (p_ == 2) {
    std::uint64_t acc = 0;
    for (int i = 0; a; ++i, a >>= 1)
      if (a & 1) acc ^= b << i;
    for (int bit = 2 * e_ - 2; bit >= e_; --bit)
      if (acc >> bit & 1) acc ^= mod_bits_ << (bit - e_);
    return acc;
  }
  const auto up = static_cast<std::uint64_t>(p_);
  std::vector<long long> da(e_), db(e_);
  for (int i = 0; i < e_; ++i) {
    da[i] = static_cast<long long>(a % up);
    a /= up;
    db[i] = static_cast<long long>(b % up);
    b /= up;
  }
  std::vector<long long> prod(2 * e_ - 1, 0);
  for (int i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < e_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (int d = 2 * e_ - 2; d >= e_; --d) {
    const long long c = prod[d];
    if (c == 0) continue;
    for (int i = 0; i < e_; ++i) {
      const std::size_t at = static_cast<std::size_t>(d - e_ + i);
      prod[at] = ((prod[at] - c * spec_.modulus[static_cast<std::size_t>(i)]) %
                      p_ + p_) % p_;
    }
    prod[d] = 0;
  }
  Fel r = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < e_; ++i) {
    r += static_cast<std::uint64_t>(prod[i]) * place;
    place *= up;
  }
  return r;
}

Fel Field::pow_raw(Fel a, std::uint64_t k) const {
  if (a == 0) return k == 0 ? 1 : 0;
  Fel r = 1;
  while (k) {
    if (k & 1) r = mul_raw(r, a);
    a = mul_raw(a, a);
    k >>= 1;
  }
  return r;
}

std::uint64_t Field::order_raw(Fel a) const {
  std::uint64_t ord = q_ - 1;
  for (const auto& [f, c] : order_factors_) {
    for (int i = 0; i < c; ++i) {
      if (ord % f == 0 && pow_raw(a, ord / f) == 1)
        ord /= f;
      else
        break;
    }
  }
  return ord;
}

Fel Field::add(Fel a, Fel b) const {
  check(a);
  check(b);
  if (has_small_tabs_) return add_tab_[a * q_ + b];
  return add_raw(a, b);
}

Fel Field::neg(Fel a) const {
  check(a);
  if (p_ == 2) return a;
  const auto up = static_cast<std::uint64_t>(p_);
  Fel r = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < e_; ++i) {
    const std::uint64_t d = a % up;
    r += (d == 0 ? 0 : up - d) * place;
    a /= up;
    place *= up;
  }
  return r;
}

Fel Field::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel Field::mul(Fel a, Fel b) const {
  check(a);
  check(b);
  if (has_small_tabs_) return mul_tab_[a * q_ + b];
  if (has_log_) {
    if (a == 0 || b == 0) return 0;
    return exp_tab_[log_tab_[a] + log_tab_[b]];
  }
  return mul_raw(a, b);
}

Fel Field::inv(Fel a) const {
  check(a);
  if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
  if (has_log_) return exp_tab_[(q_ - 1) - log_tab_[a]];
  return pow_raw(a, q_ - 2);
}

Fel Field::div(Fel a, Fel b) const { return mul(a, inv(b)); }

Fel Field::pow(Fel a, long long k) const {
  check(a);
  std::uint64_t uk;
  if (k < 0) {
    a = inv(a);
    uk = ~static_cast<std::uint64_t>(k) + 1;  // |k| without signed overflow
  } else {
    uk = static_cast<std::uint64_t>(k);
  }
  if (a == 0) return uk == 0 ? 1 : 0;
  Fel r = 1;
  while (uk) {
    if (uk & 1) r = mul(r, a);
    a = mul(a, a);
    uk >>= 1;
  }
  return r;
}

Fel Field::frob(Fel a) const { return pow(a, p_); }

std::uint64_t Field::element_order(Fel a) const {
  check(a);
  if (a == 0) fail(Errc::ZeroElement, "zero has no multiplicative order");
  return order_raw(a);
}

std::vector<long long> Field::digits(Fel a) const {
  check(a);
  const auto up = static_cast<std::uint64_t>(p_);
  std::vector<long long> d(static_cast<std::size_t>(e_));
  for (int i = 0; i < e_; ++i) {
    d[static_cast<std::size_t>(i)] = static_cast<long long>(a % up);
    a /= up;
  }
  return d;
}

Fel Field::from_digits(const std::vector<long long>& d) const {
  if (d.size() != static_cast<std::size_t>(e_))
    fail(Errc::OutOfRange, "expected " + std::to_string(e_) + " digits");
  Fel r = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < e_; ++i) {
    const long long di = d[static_cast<std::size_t>(i)];
    if (di < 0 || di >= p_)
      fail(Errc::OutOfRange, "digit " + std::to_string(di) +
                                 " is not in [0, " + std::to_string(p_) + ")");
    r += static_cast<std::uint64_t>(di) * place;
    place *= static_cast<std::uint64_t>(p_);
  }
  return r;
}

std::vector<Fel> Field::embedding_table(const Field& sub) const {
  if (sub.p_ != p_ || e_ % sub.e_ != 0)
    fail(Errc::InvalidSubfield,
         "GF(" + std::to_string(sub.q_) + ") is not a subfield of GF(" +
             std::to_string(q_) + ")");
  std::vector<Fel> table(sub.q_);
  if (sub.q_ == q_) {
    for (Fel v = 0; v < q_; ++v) table[v] = v;
    return table;
  }
  // Root of sub's modulus with smallest encoding here.  Candidates are the
  // elements of order dividing sub.q - 1, i.e. powers of g^((q-1)/(qs-1)),
  // plus zero.
  const std::uint64_t step = (q_ - 1) / (sub.q_ - 1);
  Fel anchor = q_;
  const auto eval_sub_modulus = [&](Fel x) {
    Fel val = 0;
    for (std::size_t i = sub.spec_.modulus.size(); i-- > 0;)
      val = add(mul(val, x),
                static_cast<Fel>(sub.spec_.modulus[i]));
    return val;
  };
  if (eval_sub_modulus(0) == 0) anchor = 0;
  const Fel h = pow(primitive_, static_cast<long long>(step));
  Fel cand = 1;
  for (std::uint64_t k = 0; k + 1 < sub.q_; ++k) {
    if (eval_sub_modulus(cand) == 0) anchor = std::min(anchor, cand);
    cand = mul(cand, h);
  }
  if (anchor == q_) fail(Errc::Internal, "subfield modulus has no root here");

  std::vector<Fel> anchor_pow(static_cast<std::size_t>(sub.e_));
  Fel ap = 1;
  for (int i = 0; i < sub.e_; ++i) {
    anchor_pow[static_cast<std::size_t>(i)] = ap;
    ap = mul(ap, anchor);
  }
  const auto up = static_cast<std::uint64_t>(p_);
  for (Fel v = 0; v < sub.q_; ++v) {
    Fel image = 0;
    Fel rest = v;
    for (int i = 0; i < sub.e_; ++i) {
      const Fel digit = rest % up;
      rest /= up;
      if (digit)
        image = add(image, mul(digit, anchor_pow[static_cast<std::size_t>(i)]));
    }
    table[v] = image;
  }
  return table;
}

Fel Field::embed(const Field& sub, Fel x) const {
  sub.check(x);
  return embedding_table(sub)[x];
}

std::optional<Fel> Field::project(const Field& sub, Fel x) const {
  check(x);
  const std::vector<Fel> table = embedding_table(sub);
  for (Fel v = 0; v < sub.q_; ++v)
    if (table[v] == x) return v;
  return std::nullopt;
}

bool Field::in_subfield(const Field& sub, Fel x) const {
  return project(sub, x).has_value();
}

std::vector<Fel> Field::minimal_polynomial(Fel x, int r) const {
  check(x);
  if (r < 1 || e_ % r != 0)
    fail(Errc::InvalidSubfield,
         "no subfield of degree " + std::to_string(r) + " in GF(" +
             std::to_string(q_) + ")");
  std::uint64_t qr = 1;
  for (int i = 0; i < r; ++i) qr *= static_cast<std::uint64_t>(p_);

  std::vector<Fel> orbit{x};
  for (Fel y = pow(x, static_cast<long long>(qr)); y != x;
       y = pow(y, static_cast<long long>(qr)))
    orbit.push_back(y);

  std::vector<Fel> poly{1};
  for (const Fel y : orbit) {
    std::vector<Fel> next(poly.size() + 1, 0);
    const Fel my = neg(y);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = add(next[i + 1], poly[i]);
      next[i] = add(next[i], mul(poly[i], my));
    }
    poly = std::move(next);
  }

  const Field& sub = Field::get(p_, r, q_);
  const std::vector<Fel> table = embedding_table(sub);
  std::vector<Fel> out(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    bool found = false;
    for (Fel v = 0; v < sub.q_; ++v) {
      if (table[v] == poly[i]) {
        out[i] = v;
        found = true;
        break;
      }
    }
    if (!found)
      fail(Errc::Internal, "minimal polynomial coefficient escaped GF(" +
                               std::to_string(sub.q_) + ")");
  }
  return out;
}

}  // namespace cyclotome
