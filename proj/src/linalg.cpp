// Gaussian elimination and friends.  Matrices stay small (sides well under a
// thousand), so everything is straightforward dense arithmetic.

#include "cyclotome/linalg.hpp"

#include <cstring>

namespace cyclotome {

void row_axpy(const Field& f, Fel c, const Fel* x, Fel* y, std::size_t n) {
  if (c == 0) return;
  for (std::size_t j = 0; j < n; ++j)
    if (x[j]) y[j] = f.add(y[j], f.mul(c, x[j]));
}

std::vector<std::size_t> rref(GfMatrix& m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Fel tmp = m.at(r, j);
        m.set(r, j, m.at(sel, j));
        m.set(sel, j, tmp);
      }
    const Fel piv_inv = f.inv(m.at(r, c));
    if (piv_inv != 1)
      for (std::size_t j = c; j < m.cols(); ++j)
        m.set(r, j, f.mul(piv_inv, m.at(r, j)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Fel coef = m.at(i, c);
      if (coef == 0) continue;
      const Fel neg = f.neg(coef);
      row_axpy(f, neg, m.row(r), m.row(i), m.cols());
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(GfMatrix m) { return rref(m).size(); }

GfMatrix nullspace(const GfMatrix& m) {
  const Field& f = m.field();
  GfMatrix red = m;
  const std::vector<std::size_t> pivots = rref(red);
  std::vector<bool> is_pivot(m.cols(), false);
  for (const std::size_t c : pivots) is_pivot[c] = true;

  GfMatrix basis(f, m.cols() - pivots.size(), m.cols());
  std::size_t out = 0;
  for (std::size_t free_c = 0; free_c < m.cols(); ++free_c) {
    if (is_pivot[free_c]) continue;
    basis.set(out, free_c, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis.set(out, pivots[i], f.neg(red.at(i, free_c)));
    ++out;
  }
  return basis;
}

GfMatrix matmul(const GfMatrix& a, const GfMatrix& b) {
  if (&a.field() != &b.field())
    fail(Errc::FieldMismatch, "matrix product across different fields");
  if (a.cols() != b.rows())
    fail(Errc::LengthMismatch, "inner dimensions disagree");
  const Field& f = a.field();
  GfMatrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Fel v = a.at(i, k);
      if (v) row_axpy(f, v, b.row(k), out.row(i), b.cols());
    }
  return out;
}

GfMatrix transpose(const GfMatrix& m) {
  GfMatrix out(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(j, i, m.at(i, j));
  return out;
}

GfMatrix entrywise_frobenius(const GfMatrix& m, int r) {
  const Field& f = m.field();
  long long qr = 1;
  for (int i = 0; i < r; ++i) qr *= f.p();
  GfMatrix out(f, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.set(i, j, f.pow(m.at(i, j), qr));
  return out;
}

GfMatrix row_basis(const GfMatrix& m) {
  GfMatrix red = m;
  const std::size_t rk = rref(red).size();
  GfMatrix out(m.field(), rk, m.cols());
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, red.at(i, j));
  return out;
}

bool rowspace_contains(const GfMatrix& space, const GfMatrix& candidates) {
  if (&space.field() != &candidates.field())
    fail(Errc::FieldMismatch, "containment across different fields");
  if (space.cols() != candidates.cols())
    fail(Errc::LengthMismatch, "containment across different lengths");
  GfMatrix stacked(space.field(), space.rows() + candidates.rows(),
                   space.cols());
  for (std::size_t i = 0; i < space.rows(); ++i)
    for (std::size_t j = 0; j < space.cols(); ++j)
      stacked.set(i, j, space.at(i, j));
  for (std::size_t i = 0; i < candidates.rows(); ++i)
    for (std::size_t j = 0; j < space.cols(); ++j)
      stacked.set(space.rows() + i, j, candidates.at(i, j));
  return rank(stacked) == rank(space);
}

}  // namespace cyclotome
