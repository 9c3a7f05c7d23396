#pragma once

// Element arithmetic shared by the dense kernels. Internal to exactalg.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "subfac/exactalg/matrix.hpp"

namespace subfac::detail {

struct FpOps {
  using E = std::uint32_t;
  std::uint32_t p;

  static std::vector<E>& data(Mat& m) { return m.residues(); }
  static const std::vector<E>& data(const Mat& m) { return m.residues(); }

  E zero() const { return 0; }
  E one() const { return 1; }
  bool is_zero(E a) const { return a == 0; }
  bool is_one(E a) const { return a == 1; }
  E add(E a, E b) const {
    E s = a + b;
    return s >= p ? s - p : s;
  }
  E sub(E a, E b) const { return a >= b ? a - b : a + (p - b); }
  E neg(E a) const { return a == 0 ? 0 : p - a; }
  E mul(E a, E b) const {
    return static_cast<E>(static_cast<std::uint64_t>(a) * b % p);
  }
  E inv(E a) const {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<E>(result);
  }
  E from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<E>(r);
  }
  // a - c * b
  void sub_mul(E& a, E c, E b) const { a = sub(a, mul(c, b)); }
  void add_mul(E& a, E c, E b) const { a = add(a, mul(c, b)); }
};

struct QOps {
  using E = mpq_class;

  static std::vector<E>& data(Mat& m) { return m.rationals(); }
  static const std::vector<E>& data(const Mat& m) { return m.rationals(); }

  E zero() const { return 0; }
  E one() const { return 1; }
  bool is_zero(const E& a) const { return sgn(a) == 0; }
  bool is_one(const E& a) const { return a == 1; }
  E add(const E& a, const E& b) const { return a + b; }
  E sub(const E& a, const E& b) const { return a - b; }
  E neg(const E& a) const { return -a; }
  E mul(const E& a, const E& b) const { return a * b; }
  E inv(const E& a) const { return 1 / a; }
  E from_int(long long v) const { return E(static_cast<long>(v)); }
  void sub_mul(E& a, const E& c, const E& b) const { a -= c * b; }
  void add_mul(E& a, const E& c, const E& b) const { a += c * b; }
};

template <class Fn>
decltype(auto) with_ops(const Field& f, Fn&& fn) {
  if (f.is_prime_field()) return fn(FpOps{f.characteristic()});
  return fn(QOps{});
}

// In-place reduced row echelon form of a rows x cols row-major array, pivoting
// only in columns below col_limit. Returns the pivot columns.
template <class Ops>
std::vector<std::size_t> rref_inplace(const Ops& ops, std::vector<typename Ops::E>& d,
                                      std::size_t rows, std::size_t cols,
                                      std::size_t col_limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < col_limit && r < rows; ++c) {
    std::size_t i = r;
    while (i < rows && ops.is_zero(d[i * cols + c])) ++i;
    if (i == rows) continue;
    if (i != r) {
      for (std::size_t k = c; k < cols; ++k) std::swap(d[i * cols + k], d[r * cols + k]);
    }
    auto* prow = &d[r * cols];
    if (!ops.is_one(prow[c])) {
      auto s = ops.inv(prow[c]);
      for (std::size_t k = c; k < cols; ++k) prow[k] = ops.mul(prow[k], s);
    }
    for (std::size_t j = 0; j < rows; ++j) {
      if (j == r) continue;
      auto* row = &d[j * cols];
      if (ops.is_zero(row[c])) continue;
      auto f = row[c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!ops.is_zero(prow[k])) ops.sub_mul(row[k], f, prow[k]);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace subfac::detail
