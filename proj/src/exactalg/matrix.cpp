#include "subfac/exactalg/matrix.hpp"

#include <cstring>
#include <sstream>

#include "ops.hpp"
#include "subfac/errors.hpp"

namespace subfac {

using detail::with_ops;

namespace {

void require_same_shape(const Mat& a, const Mat& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || !(a.field() == b.field())) {
    throw InputError(std::string(what) + ": shape or field mismatch");
  }
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw InputError("cannot parse scalar '" + text + "'");
  }
  if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw InputError("field characteristic " + std::to_string(p) + " is not a supported prime");
  }
  return Field(Kind::PrimeField, p);
}

std::string Field::name() const {
  return is_prime_field() ? "F" + std::to_string(p_) : "Q";
}

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_prime_field()) {
    fp_.assign(rows * cols, 0);
  } else {
    q_.resize(rows * cols);
  }
}

Mat Mat::identity(Field field, std::size_t n) {
  Mat m(field, n, n);
  with_ops(field, [&](auto ops) {
    auto& d = ops.data(m);
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = ops.one();
  });
  return m;
}

Mat Mat::unit(Field field, std::size_t n, std::size_t i) {
  Mat m(field, n, 1);
  with_ops(field, [&](auto ops) { ops.data(m)[i] = ops.one(); });
  return m;
}

Mat Mat::from_ints(Field field, std::size_t rows, std::size_t cols,
                   std::span<const long long> entries) {
  if (entries.size() != rows * cols) throw InputError("from_ints: entry count mismatch");
  Mat m(field, rows, cols);
  with_ops(field, [&](auto ops) {
    auto& d = ops.data(m);
    for (std::size_t i = 0; i < entries.size(); ++i) d[i] = ops.from_int(entries[i]);
  });
  return m;
}

Mat Mat::from_strings(Field field, std::size_t rows, std::size_t cols,
                      std::span<const std::string> entries) {
  if (entries.size() != rows * cols) throw InputError("from_strings: entry count mismatch");
  Mat m(field, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    mpq_class q = parse_rational(entries[i]);
    if (field.is_prime_field()) {
      detail::FpOps ops{field.characteristic()};
      mpz_class p = field.characteristic();
      mpz_class num = q.get_num() % p;
      mpz_class den = q.get_den() % p;
      if (num < 0) num += p;
      if (den == 0) {
        throw InputError("scalar '" + entries[i] + "' has a denominator divisible by " +
                         std::to_string(field.characteristic()));
      }
      m.fp_[i] = ops.mul(static_cast<std::uint32_t>(num.get_ui()),
                         ops.inv(static_cast<std::uint32_t>(den.get_ui())));
    } else {
      m.q_[i] = q;
    }
  }
  return m;
}

bool Mat::is_zero() const {
  return with_ops(field_, [&](auto ops) {
    for (const auto& e : ops.data(*this)) {
      if (!ops.is_zero(e)) return false;
    }
    return true;
  });
}

bool Mat::entry_is_zero(std::size_t r, std::size_t c) const {
  return with_ops(field_, [&](auto ops) { return ops.is_zero(ops.data(*this)[r * cols_ + c]); });
}

std::string Mat::entry_string(std::size_t r, std::size_t c) const {
  if (field_.is_prime_field()) return std::to_string(fp_[r * cols_ + c]);
  return q_[r * cols_ + c].get_str();
}

std::uint32_t Mat::entry_residue(std::size_t r, std::size_t c) const {
  if (!field_.is_prime_field()) throw InputError("entry_residue over the rationals");
  return fp_[r * cols_ + c];
}

bool operator==(const Mat& a, const Mat& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.fp_ == b.fp_ &&
         a.q_ == b.q_;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r = *this;
  r += o;
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r = *this;
  r -= o;
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  with_ops(field_, [&](auto ops) {
    for (auto& e : ops.data(r)) e = ops.neg(e);
  });
  return r;
}

Mat& Mat::operator+=(const Mat& o) {
  require_same_shape(*this, o, "matrix addition");
  with_ops(field_, [&](auto ops) {
    auto& d = ops.data(*this);
    const auto& e = ops.data(o);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = ops.add(d[i], e[i]);
  });
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require_same_shape(*this, o, "matrix subtraction");
  with_ops(field_, [&](auto ops) {
    auto& d = ops.data(*this);
    const auto& e = ops.data(o);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = ops.sub(d[i], e[i]);
  });
  return *this;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_ || !(field_ == o.field_)) {
    throw InputError("matrix product: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                     " times " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  }
  Mat r(field_, rows_, o.cols_);
  with_ops(field_, [&](auto ops) {
    const auto& a = ops.data(*this);
    const auto& b = ops.data(o);
    auto& c = ops.data(r);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& aik = a[i * cols_ + k];
        if (ops.is_zero(aik)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const auto& bkj = b[k * o.cols_ + j];
          if (!ops.is_zero(bkj)) ops.add_mul(c[i * o.cols_ + j], aik, bkj);
        }
      }
    }
  });
  return r;
}

Mat Mat::scaled(long long s) const {
  Mat r = *this;
  with_ops(field_, [&](auto ops) {
    auto f = ops.from_int(s);
    for (auto& e : ops.data(r)) e = ops.mul(e, f);
  });
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  with_ops(field_, [&](auto ops) {
    const auto& a = ops.data(*this);
    auto& t = ops.data(r);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t[j * rows_ + i] = a[i * cols_ + j];
  });
  return r;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InputError("block out of range");
  Mat r(field_, nr, nc);
  with_ops(field_, [&](auto ops) {
    const auto& a = ops.data(*this);
    auto& b = ops.data(r);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b[i * nc + j] = a[(r0 + i) * cols_ + c0 + j];
  });
  return r;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_ || !(field_ == b.field_)) {
    throw InputError("set_block out of range");
  }
  with_ops(field_, [&](auto ops) {
    auto& a = ops.data(*this);
    const auto& s = ops.data(b);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) a[(r0 + i) * cols_ + c0 + j] = s[i * b.cols_ + j];
  });
}

void Mat::add_block(std::size_t r0, std::size_t c0, const Mat& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_ || !(field_ == b.field_)) {
    throw InputError("add_block out of range");
  }
  with_ops(field_, [&](auto ops) {
    auto& a = ops.data(*this);
    const auto& s = ops.data(b);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        auto& t = a[(r0 + i) * cols_ + c0 + j];
        t = ops.add(t, s[i * b.cols_ + j]);
      }
  });
}

Mat Mat::select_rows(std::span<const std::size_t> idx) const {
  Mat r(field_, idx.size(), cols_);
  with_ops(field_, [&](auto ops) {
    const auto& a = ops.data(*this);
    auto& b = ops.data(r);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) b[i * cols_ + j] = a[idx[i] * cols_ + j];
  });
  return r;
}

Mat Mat::select_cols(std::span<const std::size_t> idx) const {
  Mat r(field_, rows_, idx.size());
  with_ops(field_, [&](auto ops) {
    const auto& a = ops.data(*this);
    auto& b = ops.data(r);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) b[i * idx.size() + j] = a[i * cols_ + idx[j]];
  });
  return r;
}

Mat Mat::reshaped(std::size_t rows, std::size_t cols) const {
  if (rows * cols != size()) throw InputError("reshape: size mismatch");
  Mat r = *this;
  r.rows_ = rows;
  r.cols_ = cols;
  return r;
}

Mat Mat::kron(const Mat& o) const {
  Mat r(field_, rows_ * o.rows_, cols_ * o.cols_);
  with_ops(field_, [&](auto ops) {
    const auto& a = ops.data(*this);
    const auto& b = ops.data(o);
    auto& c = ops.data(r);
    const std::size_t rc = cols_ * o.cols_;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const auto& aij = a[i * cols_ + j];
        if (ops.is_zero(aij)) continue;
        for (std::size_t k = 0; k < o.rows_; ++k)
          for (std::size_t l = 0; l < o.cols_; ++l)
            c[(i * o.rows_ + k) * rc + j * o.cols_ + l] = ops.mul(aij, b[k * o.cols_ + l]);
      }
  });
  return r;
}

Mat Mat::hstack(Field field, std::size_t rows, std::span<const Mat> parts) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows_ != rows) throw InputError("hstack: row mismatch");
    cols += p.cols_;
  }
  Mat r(field, rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    r.set_block(0, c, p);
    c += p.cols_;
  }
  return r;
}

Mat Mat::vstack(Field field, std::size_t cols, std::span<const Mat> parts) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols_ != cols) throw InputError("vstack: column mismatch");
    rows += p.rows_;
  }
  Mat r(field, rows, cols);
  std::size_t k = 0;
  for (const auto& p : parts) {
    r.set_block(k, 0, p);
    k += p.rows_;
  }
  return r;
}

Mat Mat::block_diag(Field field, std::span<const Mat> parts) {
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.rows_;
    cols += p.cols_;
  }
  Mat r(field, rows, cols);
  std::size_t i = 0, j = 0;
  for (const auto& p : parts) {
    r.set_block(i, j, p);
    i += p.rows_;
    j += p.cols_;
  }
  return r;
}

Mat Mat::combine(const Mat& coeffs, std::span<const Mat> terms, std::size_t rows,
                 std::size_t cols) {
  const Field field = coeffs.field_;
  if (coeffs.rows_ != terms.size() || coeffs.cols_ != 1) {
    throw InputError("combine: coefficient count mismatch");
  }
  Mat r(field, rows, cols);
  with_ops(field, [&](auto ops) {
    const auto& c = ops.data(coeffs);
    auto& out = ops.data(r);
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (ops.is_zero(c[k])) continue;
      if (terms[k].rows_ != rows || terms[k].cols_ != cols) {
        throw InputError("combine: term shape mismatch");
      }
      const auto& t = ops.data(terms[k]);
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (!ops.is_zero(t[i])) ops.add_mul(out[i], c[k], t[i]);
      }
    }
  });
  return r;
}

Mat::Echelon Mat::echelon() const {
  Echelon e{*this, {}};
  with_ops(field_, [&](auto ops) {
    e.pivots = detail::rref_inplace(ops, ops.data(e.rref), rows_, cols_, cols_);
  });
  return e;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw InputError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Mat aug(field_, n, 2 * n);
  aug.set_block(0, 0, *this);
  aug.set_block(0, n, identity(field_, n));
  std::vector<std::size_t> piv;
  with_ops(field_, [&](auto ops) { piv = detail::rref_inplace(ops, ops.data(aug), n, 2 * n, n); });
  if (piv.size() != n) throw InputError("matrix is singular");
  return aug.block(0, n, n, n);
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << entry_string(i, j);
    }
  }
  os << "]";
  return os.str();
}

void Mat::append_key(std::string& key) const {
  auto put = [&](std::uint64_t v) {
    char buf[sizeof v];
    std::memcpy(buf, &v, sizeof v);
    key.append(buf, sizeof v);
  };
  put(rows_);
  put(cols_);
  if (field_.is_prime_field()) {
    key.append(reinterpret_cast<const char*>(fp_.data()), fp_.size() * sizeof(std::uint32_t));
  } else {
    for (const auto& q : q_) {
      key += q.get_str();
      key += ',';
    }
  }
}

}  // namespace subfac
