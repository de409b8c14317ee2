// Dense matrices over a finite field: just enough linear algebra for code
// manipulation (row reduction, null spaces, row-space questions).
#pragma once

#include <cstddef>
#include <vector>

#include "cyclotome/field.hpp"

namespace cyclotome {

class GfMatrix {
 public:
  GfMatrix(const Field& f, std::size_t rows, std::size_t cols)
      : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  const Field& field() const { return *f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fel at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Fel v) { a_[r * cols_ + c] = v; }
  const Fel* row(std::size_t r) const { return a_.data() + r * cols_; }
  Fel* row(std::size_t r) { return a_.data() + r * cols_; }

  bool operator==(const GfMatrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  const Field* f_;
  std::size_t rows_, cols_;
  std::vector<Fel> a_;
};

// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(GfMatrix& m);

std::size_t rank(GfMatrix m);

// Basis of {v : m v^T = 0}, one row per free column, free columns ascending.
GfMatrix nullspace(const GfMatrix& m);

GfMatrix matmul(const GfMatrix& a, const GfMatrix& b);
GfMatrix transpose(const GfMatrix& m);

// Applies x -> x^(p^r) entrywise (the alphabet's conjugation when e = 2r).
GfMatrix entrywise_frobenius(const GfMatrix& m, int r);

// Independent rows spanning the same row space, in rref.
GfMatrix row_basis(const GfMatrix& m);

bool rowspace_contains(const GfMatrix& space, const GfMatrix& candidates);

// y += c * x over the matrix's field, length n.
void row_axpy(const Field& f, Fel c, const Fel* x, Fel* y, std::size_t n);

}  // namespace cyclotome
