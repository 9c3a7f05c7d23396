#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "subfac/exactalg/field.hpp"

namespace subfac {

struct Arrow {
  std::size_t src;
  std::size_t tgt;
  std::string label;
};

class Quiver {
 public:
  Quiver() = default;
  // Throws InputError on duplicate labels or dangling endpoints.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& vertex_label(std::size_t v) const { return vertices_.at(v); }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::optional<std::size_t> find_vertex(const std::string& label) const;
  std::optional<std::size_t> find_arrow(const std::string& label) const;
  const std::vector<std::size_t>& out_arrows(std::size_t v) const { return out_.at(v); }
  const std::vector<std::size_t>& in_arrows(std::size_t v) const { return in_.at(v); }

  Quiver opposite() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::size_t>> out_, in_;
};

// A path is a start vertex and a sequence of arrow indices, traversed left to
// right. The trivial path at v has no arrows.
struct Path {
  std::size_t start = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

class MonomialAlgebra;
using AlgebraPtr = std::shared_ptr<const MonomialAlgebra>;

// kQ/I with I generated by paths. The path basis is every path avoiding all
// relations as contiguous subpaths.
class MonomialAlgebra {
 public:
  static constexpr std::size_t kDefaultBasisBound = 20000;

  // Throws InputError for malformed relations and UnsupportedError when the
  // algebra is infinite dimensional (basis exceeds the bound).
  static AlgebraPtr build(Quiver quiver, std::vector<std::vector<std::size_t>> relations,
                          Field field, std::size_t basis_bound = kDefaultBasisBound);
  // Relations given by arrow labels.
  static AlgebraPtr build_labeled(Quiver quiver,
                                  const std::vector<std::vector<std::string>>& relations,
                                  Field field,
                                  std::size_t basis_bound = kDefaultBasisBound);

  // Cyclic quiver on n vertices with arrows a_i: i -> i+1 and every path of
  // length L set to zero. n = 1 gives k[x]/x^L.
  static AlgebraPtr nakayama(std::size_t n, std::size_t length, Field field);

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  const std::vector<std::vector<std::size_t>>& relations() const { return relations_; }
  const std::vector<Path>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t vertex_count() const { return quiver_.vertex_count(); }

  std::size_t end_vertex(const Path& p) const;
  // True iff the path contains a relation.
  bool is_zero_path(const Path& p) const;
  // Basis paths starting (resp. ending) at v, in basis order.
  std::vector<std::size_t> paths_from(std::size_t v) const;
  std::vector<std::size_t> paths_to(std::size_t v) const;
  std::optional<std::size_t> basis_index(const Path& p) const;

  // Each vertex has at most one outgoing and at most one incoming arrow.
  bool is_serial() const;
  std::string path_string(const Path& p) const;

  // Same quiver with arrows reversed and relations read backwards.
  AlgebraPtr opposite() const;

  // Human readable description, e.g. "nak(3,2) over F_2".
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // Evaluates compute once per algebra and remembers the answer.
  bool memo_self_injective(const std::function<bool()>& compute) const {
    std::call_once(si_once_, [&] { si_ = compute(); });
    return si_;
  }

 private:
  MonomialAlgebra() = default;

  Quiver quiver_;
  Field field_ = Field::prime(2);
  std::vector<std::vector<std::size_t>> relations_;
  std::vector<Path> basis_;
  std::string name_;
  mutable std::once_flag si_once_;
  mutable bool si_ = false;
};

}  // namespace subfac
