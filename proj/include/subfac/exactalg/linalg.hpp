#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "subfac/exactalg/matrix.hpp"

namespace subfac {

// Some x with A x = b (free variables zero, pivots leftmost), or nullopt when b
// is not in the column space of A. b may have several columns.
std::optional<Mat> solve(const Mat& a, const Mat& b);

// Basis of {x : A x = 0}. Basis vector j has a 1 in the j-th free column and
// zeros in every other free column, so the basis is the canonical reduced one.
std::vector<Mat> kernel_basis(const Mat& a);

// Indices of the free (non-pivot) columns of A, matching kernel_basis order.
std::vector<std::size_t> free_columns(const Mat& a);

bool in_span(const Mat& v, std::span<const Mat> s);

// Greedy completion of the independent set s to a basis of the ambient space
// of dimension dim, scanning e_1, e_2, ... in order.
std::vector<Mat> complement_basis(Field field, std::span<const Mat> s, std::size_t dim);

// Columns [v_1 | ... | v_k] as a matrix with the given row count.
Mat columns_to_mat(Field field, std::size_t rows, std::span<const Mat> cols);

// A subspace of F^n kept as a reduced row echelon basis, supporting
// incremental insertion and reduction of vectors (n x 1 columns).
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient);

  // Returns true when v was independent of the current basis.
  bool insert(const Mat& v);
  // v minus its projection along the pivot coordinates; zero iff v is inside.
  Mat reduce(const Mat& v) const;
  bool contains(const Mat& v) const;
  // Coordinates of v modulo the subspace, read at the non-pivot positions.
  Mat quotient_coords(const Mat& v) const;

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::size_t> nonpivots() const;
  // Basis rows as columns.
  std::vector<Mat> basis() const;

 private:
  Field field_;
  std::size_t ambient_;
  Mat rows_;  // dim x ambient, reduced row echelon
  std::vector<std::size_t> pivots_;
};

}  // namespace subfac
