#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "subfac/exactalg/field.hpp"

namespace subfac {

// Dense exact matrix over a Field. Entries are stored row-major; prime field
// entries are least nonnegative residues, rationals are kept in lowest terms.
// Column vectors are n x 1 matrices.
class Mat {
 public:
  Mat() : Mat(Field::prime(2), 0, 0) {}
  Mat(Field field, std::size_t rows, std::size_t cols);

  static Mat zero(Field field, std::size_t rows, std::size_t cols) {
    return Mat(field, rows, cols);
  }
  static Mat identity(Field field, std::size_t n);
  static Mat from_ints(Field field, std::size_t rows, std::size_t cols,
                       std::span<const long long> entries);
  static Mat from_ints(Field field, std::size_t rows, std::size_t cols,
                       std::initializer_list<long long> entries) {
    return from_ints(field, rows, cols,
                     std::span<const long long>(entries.begin(), entries.size()));
  }
  static Mat column(Field field, std::initializer_list<long long> entries) {
    return from_ints(field, entries.size(), 1, entries);
  }
  // Entries like "3", "-2", "1/2". Throws InputError on parse failure.
  static Mat from_strings(Field field, std::size_t rows, std::size_t cols,
                          std::span<const std::string> entries);
  // e_i in an n-dimensional space.
  static Mat unit(Field field, std::size_t n, std::size_t i);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return rows_ * cols_; }
  bool empty() const { return size() == 0; }

  bool is_zero() const;
  bool entry_is_zero(std::size_t r, std::size_t c) const;
  std::string entry_string(std::size_t r, std::size_t c) const;
  // Residue in [0, p); only valid over a prime field.
  std::uint32_t entry_residue(std::size_t r, std::size_t c) const;

  friend bool operator==(const Mat& a, const Mat& b);

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat operator*(const Mat& o) const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat scaled(long long c) const;

  Mat transpose() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  void add_block(std::size_t r0, std::size_t c0, const Mat& b);
  Mat col(std::size_t c) const { return block(0, c, rows_, 1); }
  Mat row(std::size_t r) const { return block(r, 0, 1, cols_); }
  Mat select_rows(std::span<const std::size_t> idx) const;
  Mat select_cols(std::span<const std::size_t> idx) const;
  // Reinterpret the row-major entries with a new shape of the same size.
  Mat reshaped(std::size_t rows, std::size_t cols) const;
  Mat kron(const Mat& o) const;

  static Mat hstack(Field field, std::size_t rows, std::span<const Mat> parts);
  static Mat vstack(Field field, std::size_t cols, std::span<const Mat> parts);
  static Mat block_diag(Field field, std::span<const Mat> parts);

  // Sum_k coeffs[k] * terms[k]; coeffs is a column with terms.size() rows.
  static Mat combine(const Mat& coeffs, std::span<const Mat> terms, std::size_t rows,
                     std::size_t cols);

  struct Echelon;
  // Reduced row echelon form; canonical (unique for the row space).
  Echelon echelon() const;
  std::size_t rank() const;
  // Throws InputError when not square and invertible.
  Mat inverse() const;

  std::string to_string() const;
  // Appends a canonical byte representation (shape and entries) to key.
  void append_key(std::string& key) const;

  // Raw row-major storage. Only the vector matching the field is populated.
  std::vector<std::uint32_t>& residues() { return fp_; }
  const std::vector<std::uint32_t>& residues() const { return fp_; }
  std::vector<mpq_class>& rationals() { return q_; }
  const std::vector<mpq_class>& rationals() const { return q_; }

 private:

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> fp_;
  std::vector<mpq_class> q_;
};

struct Mat::Echelon {
  Mat rref;
  std::vector<std::size_t> pivots;
};

inline std::size_t Mat::rank() const { return echelon().pivots.size(); }

}  // namespace subfac
