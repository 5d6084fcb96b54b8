#pragma once

#include <optional>

#include "splitalg/ring.hpp"

namespace splitalg {

/// Dense row-major matrix over one ring.
struct Matrix {
  RingHandle ring;
  size_t rows = 0;
  size_t cols = 0;
  std::vector<RingElem> a;

  RingElem& at(size_t i, size_t j) { return a[i * cols + j]; }
  const RingElem& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

Matrix make_matrix(RingHandle R, size_t rows, size_t cols);  // zero filled
Matrix identity_matrix(RingHandle R, size_t n);
Matrix mat_mul(const Matrix& x, const Matrix& y);

/// Field coefficients: reduce to reduced row echelon form, return pivot columns.
std::vector<size_t> rref_in_place(Matrix& m);

/// Field coefficients: basis of the right kernel, one column per basis vector.
Matrix field_kernel(const Matrix& m);

/// Field coefficients: one solution of m x = b if the system is consistent.
std::optional<std::vector<RingElem>> field_solve(const Matrix& m,
                                                 const std::vector<RingElem>& b);

/// Integer coefficients: basis of the right kernel lattice, via unimodular
/// column reduction.  Columns of the result are the basis vectors.
Matrix integer_kernel(const Matrix& m);

/// Z/m coefficients: canonical generating set of the right kernel module
/// (Howell-normalized), one column per generator.
Matrix zmod_kernel(const Matrix& m);

/// Exact quotient a / b when it exists in the ring; NotDivisible otherwise.
/// Supports fields, the integers, and polynomial rings over either.
RingElem exact_div_elem(const RingHandle& R, const RingElem& a, const RingElem& b);

/// Exact determinant of a square matrix.  Fraction-free elimination over
/// integral domains; Z/m and non-field quotient rings are lifted to an
/// integral cover first, products are handled componentwise.
RingElem det_exact(const Matrix& m);

}  // namespace splitalg
