#pragma once

// Dense exact matrices over GF(p), Q and Z. A map n -> m is an m x n matrix,
// so diagrammatic composition f ; g is the product g * f.

#include <cstddef>
#include <string>
#include <vector>

#include "corelate/exactnum.hpp"
#include "corelate/shapes.hpp"

namespace corelate {

class ExactMatrix {
 public:
  ExactMatrix(Ring ring, std::size_t rows, std::size_t cols);
  ExactMatrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static ExactMatrix identity(Ring ring, std::size_t n);
  static ExactMatrix from_ints(Ring ring, std::size_t rows, std::size_t cols, const std::vector<long>& entries);
  /// The n + m -> m + n block swap.
  static ExactMatrix symmetry(Ring ring, std::size_t n, std::size_t m);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  // As a map: cols -> rows.
  std::size_t dom() const { return cols_; }
  std::size_t cod() const { return rows_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Scalar v) { entries_[i * cols_ + j] = std::move(v); }
  const std::vector<Scalar>& entries() const { return entries_; }
  bool is_zero() const;

  ExactMatrix transpose() const;
  /// Rows [r0, r1) and columns [c0, c1).
  ExactMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
  ExactMatrix negate() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Ordinary product a * b; RingMismatch or TypeMismatch on bad input.
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);
/// f ; g = g * f.
ExactMatrix compose(const ExactMatrix& f, const ExactMatrix& g);
/// Direct sum diag(a, b).
ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix vconcat(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix add(const ExactMatrix& a, const ExactMatrix& b);

// U * A * V = D with D diagonal, U and V invertible (unimodular over Z).
// The first `rank` diagonal entries are nonzero and normalized: positive over
// Z with each dividing the next, 1 over a field.
struct Diagonalization {
  ExactMatrix U, Uinv, D, V, Vinv;
  std::size_t rank;
};

Diagonalization diagonalize(const ExactMatrix& a);

struct SmithDecomposition {
  ExactMatrix U, D, V;
};

/// Z only (RingMismatch otherwise).
SmithDecomposition snf(const ExactMatrix& a);

std::size_t rank(const ExactMatrix& a);

/// RREF over a field; row-style Hermite normal form over Z (positive pivots,
/// entries above a pivot reduced into [0, pivot)). Zero rows end up last.
ExactMatrix row_canonical(const ExactMatrix& a);
ExactMatrix col_canonical(const ExactMatrix& a);
/// row_canonical with zero rows removed.
ExactMatrix row_space_basis(const ExactMatrix& a);

/// Columns form a basis of ker a (a Z-basis over Z), in column-canonical form.
ExactMatrix kernel_basis(const ExactMatrix& a);

/// a = mono * epi (i.e. epi ; mono). Over a field mono has full column rank and
/// epi full row rank; over Z the mono is the split inclusion of the saturated
/// column span. The mono part is column-canonical.
Factorization<ExactMatrix> factorize(const ExactMatrix& a);
/// Field-only and Z-only entry points of factorize.
Factorization<ExactMatrix> field_factorize(const ExactMatrix& a);
Factorization<ExactMatrix> pid_factorize(const ExactMatrix& a);

/// Z only.
bool is_split_mono(const ExactMatrix& a);
/// Full column rank over a field, split mono over Z.
bool is_mono_class(const ExactMatrix& a);
/// Full row rank.
bool is_epi_class(const ExactMatrix& a);

/// l with l * a = I. Requires a in the mono class.
ExactMatrix left_inverse(const ExactMatrix& a);
/// r with a * r = I. Requires a split epi.
ExactMatrix right_inverse(const ExactMatrix& a);

/// Kernel of [f | -g] split into row blocks.
Span<ExactMatrix> pullback(const ExactMatrix& f, const ExactMatrix& g);
/// Cokernel of [f ; -g]; over Z the quotient by the saturated image.
Cospan<ExactMatrix> pushout(const ExactMatrix& f, const ExactMatrix& g);

/// Exact determinant of a square matrix (fraction-free elimination).
Scalar determinant(const ExactMatrix& a);

/// `mat q 2x3 : [[1,0,2],[0,1,-1]]`
std::string format(const ExactMatrix& a);

}  // namespace corelate
