#include "subfac/exactalg/linalg.hpp"

#include <algorithm>

#include "ops.hpp"
#include "subfac/errors.hpp"

namespace subfac {

using detail::with_ops;

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) {
    throw InputError("solve: A has " + std::to_string(a.rows()) + " rows, b has " +
                     std::to_string(b.rows()));
  }
  const Field field = a.field();
  const std::size_t n = a.cols(), m = b.cols(), rows = a.rows();
  Mat aug(field, rows, n + m);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, b);
  std::vector<std::size_t> piv;
  with_ops(field, [&](auto ops) { piv = detail::rref_inplace(ops, ops.data(aug), rows, n + m, n); });
  for (std::size_t i = piv.size(); i < rows; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!aug.entry_is_zero(i, n + j)) return std::nullopt;
    }
  }
  Mat x(field, n, m);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    x.set_block(piv[i], 0, aug.block(i, n, 1, m));
  }
  return x;
}

std::vector<std::size_t> free_columns(const Mat& a) {
  auto e = a.echelon();
  std::vector<std::size_t> free;
  std::size_t k = 0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (k < e.pivots.size() && e.pivots[k] == c) {
      ++k;
    } else {
      free.push_back(c);
    }
  }
  return free;
}

std::vector<Mat> kernel_basis(const Mat& a) {
  const Field field = a.field();
  auto e = a.echelon();
  std::vector<Mat> basis;
  std::size_t k = 0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (k < e.pivots.size() && e.pivots[k] == c) {
      ++k;
      continue;
    }
    Mat v(field, a.cols(), 1);
    with_ops(field, [&](auto ops) {
      auto& d = ops.data(v);
      const auto& r = ops.data(e.rref);
      d[c] = ops.one();
      for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        d[e.pivots[i]] = ops.neg(r[i * a.cols() + c]);
      }
    });
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat columns_to_mat(Field field, std::size_t rows, std::span<const Mat> cols) {
  return Mat::hstack(field, rows, cols);
}

bool in_span(const Mat& v, std::span<const Mat> s) {
  if (v.cols() != 1) throw InputError("in_span: expected a column vector");
  for (const auto& c : s) {
    if (c.rows() != v.rows() || c.cols() != 1) throw InputError("in_span: height mismatch");
  }
  if (v.is_zero()) return true;
  if (s.empty()) return false;
  return solve(columns_to_mat(v.field(), v.rows(), s), v).has_value();
}

std::vector<Mat> complement_basis(Field field, std::span<const Mat> s, std::size_t dim) {
  Subspace span(field, dim);
  for (const auto& v : s) {
    if (v.rows() != dim || v.cols() != 1) throw InputError("complement_basis: height mismatch");
    if (!span.insert(v)) throw InputError("complement_basis: dependent input vectors");
  }
  std::vector<Mat> out;
  for (std::size_t i = 0; i < dim && span.dim() < dim; ++i) {
    Mat e = Mat::unit(field, dim, i);
    if (span.insert(e)) out.push_back(std::move(e));
  }
  return out;
}

Subspace::Subspace(Field field, std::size_t ambient)
    : field_(field), ambient_(ambient), rows_(field, 0, ambient) {}

Mat Subspace::reduce(const Mat& v) const {
  if (v.rows() != ambient_ || v.cols() != 1) throw InputError("Subspace::reduce: bad vector shape");
  Mat r = v;
  with_ops(field_, [&](auto ops) {
    auto& d = ops.data(r);
    const auto& b = ops.data(rows_);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const auto c = d[pivots_[i]];
      if (ops.is_zero(c)) continue;
      const auto* row = &b[i * ambient_];
      for (std::size_t k = pivots_[i]; k < ambient_; ++k) {
        if (!ops.is_zero(row[k])) ops.sub_mul(d[k], c, row[k]);
      }
    }
  });
  return r;
}

bool Subspace::contains(const Mat& v) const { return reduce(v).is_zero(); }

bool Subspace::insert(const Mat& v) {
  Mat r = reduce(v);
  std::size_t p = ambient_;
  for (std::size_t k = 0; k < ambient_; ++k) {
    if (!r.entry_is_zero(k, 0)) {
      p = k;
      break;
    }
  }
  if (p == ambient_) return false;
  const std::size_t n = ambient_;
  const std::size_t pos =
      std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  Mat next(field_, pivots_.size() + 1, n);
  with_ops(field_, [&](auto ops) {
    auto& rd = ops.data(r);
    auto s = ops.inv(rd[p]);
    for (auto& e : rd) e = ops.mul(e, s);
    const auto& old = ops.data(rows_);
    auto& out = ops.data(next);
    std::size_t dst = 0;
    for (std::size_t i = 0; i <= pivots_.size(); ++i) {
      if (i == pos) {
        for (std::size_t k = 0; k < n; ++k) out[dst * n + k] = rd[k];
        ++dst;
      }
      if (i == pivots_.size()) break;
      auto* row = &out[dst * n];
      for (std::size_t k = 0; k < n; ++k) row[k] = old[i * n + k];
      const auto c = row[p];
      if (!ops.is_zero(c)) {
        for (std::size_t k = p; k < n; ++k) {
          if (!ops.is_zero(rd[k])) ops.sub_mul(row[k], c, rd[k]);
        }
      }
      ++dst;
    }
  });
  rows_ = std::move(next);
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

Mat Subspace::quotient_coords(const Mat& v) const {
  auto np = nonpivots();
  return reduce(v).select_rows(np);
}

std::vector<std::size_t> Subspace::nonpivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<Mat> Subspace::basis() const {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < pivots_.size(); ++i) out.push_back(rows_.row(i).transpose());
  return out;
}

}  // namespace subfac
