#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "subfac/algrep/algebra.hpp"
#include "subfac/exactalg/matrix.hpp"

namespace subfac {

class Rep;
// Modules are shared immutable values.
using Obj = std::shared_ptr<const Rep>;

// A finite dimensional representation: a vector space at each vertex and a
// dim(tgt) x dim(src) matrix for each arrow.
class Rep {
 public:
  // Validates shapes and that every relation acts as zero.
  static Obj make(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Mat> arrows,
                  std::string name = {});
  static Obj zero(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  const Field& field() const { return alg_->field(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_.at(v); }
  std::size_t total_dim() const { return total_; }
  bool is_zero() const { return total_ == 0; }
  const Mat& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<Mat>& arrows() const { return arrows_; }
  // Matrix of the path action, dim(end) x dim(start).
  Mat path_matrix(const Path& p) const;
  // Canonical byte string determined by dims and arrow matrices.
  const std::string& key() const { return key_; }
  // Display name; defaults to the dimension vector.
  const std::string& name() const { return name_; }

 private:
  Rep() = default;

  AlgebraPtr alg_;
  std::vector<std::size_t> dims_;
  std::vector<Mat> arrows_;
  std::size_t total_ = 0;
  std::string key_;
  std::string name_;
};

// A module homomorphism, one dim(N_v) x dim(M_v) matrix per vertex.
class RepMap {
 public:
  RepMap() = default;
  // Checks shapes and the intertwining relations; throws InputError.
  RepMap(Obj src, Obj tgt, std::vector<Mat> comps);

  static RepMap zero(const Obj& src, const Obj& tgt);
  static RepMap identity(const Obj& m);
  // Builds from the concatenated row-major entries of all components.
  static RepMap from_vec(const Obj& src, const Obj& tgt, const Mat& vec);
  // Skips the intertwining check; for maps correct by construction.
  static RepMap trusted(Obj src, Obj tgt, std::vector<Mat> comps);

  const Obj& src() const { return src_; }
  const Obj& tgt() const { return tgt_; }
  const Mat& comp(std::size_t v) const { return comps_.at(v); }
  const std::vector<Mat>& comps() const { return comps_; }
  Field field() const { return src_->field(); }

  bool is_zero() const;
  // Column of all entries, vertex by vertex, each row-major.
  Mat vec() const;

  RepMap operator+(const RepMap& o) const;
  RepMap operator-(const RepMap& o) const;
  RepMap operator-() const;
  RepMap scaled(long long c) const;
  // Exact equality of components (not stable equality).
  friend bool operator==(const RepMap& a, const RepMap& b);

  bool is_intertwining() const;

 private:
  Obj src_, tgt_;
  std::vector<Mat> comps_;
};

// g o f. Throws InputError if tgt(f) and src(g) differ.
RepMap compose(const RepMap& g, const RepMap& f);
inline RepMap operator*(const RepMap& g, const RepMap& f) { return compose(g, f); }

// Linear combination sum c_i maps_i of parallel maps; coeffs is a column.
RepMap combine(const Mat& coeffs, std::span<const RepMap> maps, const Obj& src,
               const Obj& tgt);

bool same_object(const Obj& a, const Obj& b);

// Direct sum with its structure maps.
struct DirectSum {
  Obj obj;
  std::vector<RepMap> inj;   // parts[i] -> sum
  std::vector<RepMap> proj;  // sum -> parts[i]
};
DirectSum direct_sum(const AlgebraPtr& alg, std::span<const Obj> parts);
Obj power(const Obj& m, std::size_t n);

// Map into a sum assembled from components, i.e. the column (f_1; ...; f_k).
RepMap column_map(const Obj& src, const DirectSum& sum, std::span<const RepMap> parts);
// Map out of a sum, the row (f_1, ..., f_k).
RepMap row_map(const DirectSum& sum, const Obj& tgt, std::span<const RepMap> parts);
// Block diagonal map between sums.
RepMap diagonal_map(const DirectSum& src, const DirectSum& tgt, std::span<const RepMap> parts);

std::string describe(const RepMap& f);

}  // namespace subfac
