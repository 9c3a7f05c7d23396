#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "subfac/algrep/modules.hpp"
#include "subfac/exactalg/linalg.hpp"

namespace subfac {

// Hom(M, N) modulo a subspace closed under the relevant ideal. Coset
// representatives are hom-basis elements picked by complement_basis, and
// coordinates are taken with respect to them.
class HomQuotient {
 public:
  HomQuotient(std::shared_ptr<const HomSpace> hom, Subspace ideal);

  const HomSpace& hom() const { return *hom_; }
  const Obj& src() const { return hom_->src; }
  const Obj& tgt() const { return hom_->tgt; }
  const Subspace& ideal() const { return ideal_; }
  std::size_t dim() const { return reps_.size(); }
  const std::vector<RepMap>& reps() const { return reps_; }
  // The ideal as a list of maps.
  std::vector<RepMap> ideal_maps() const;

  // Coordinates of the class of f with respect to reps().
  Mat coords(const RepMap& f) const;
  bool is_zero(const RepMap& f) const;
  RepMap element(const Mat& coeffs) const;

 private:
  std::shared_ptr<const HomSpace> hom_;
  Subspace ideal_;
  std::vector<RepMap> reps_;
  Mat to_reps_;
};
using QuotPtr = std::shared_ptr<const HomQuotient>;

// One block of a linear system in an unknown morphism x: op(x) must equal
// rhs in the quotient `target`. op must be linear.
struct Equation {
  QuotPtr target;
  std::function<RepMap(const RepMap&)> op;
  RepMap rhs;
};

// Solutions as coefficient columns over the unknown basis.
struct SolutionSpace {
  std::optional<Mat> particular;
  std::vector<Mat> kernel;
  bool feasible() const { return particular.has_value(); }
};
SolutionSpace solve_equations(Field field, std::span<const RepMap> unknowns,
                              std::span<const Equation> eqs);

// A candidate triangle A -f-> B -g-> C -h-> A[1] (ambient) or C -h-> Sigma A
// (quotient). `shifted` is the object h lands in.
struct Sextuple {
  enum class Level { Ambient, Quotient };

  Obj a, b, c, shifted;
  RepMap f, g, h;
  Level level = Level::Ambient;
  std::string provenance;
};

// Data of the canonical injective envelope M -> I(M) -> M[1].
struct Cosyzygy {
  RepMap iota;  // M -> I(M)
  KernelCokernel kc;
  Obj shifted;  // M[1] = coker(iota)
  RepMap pi;    // I(M) -> M[1]
};

// Data of the canonical projective cover Omega M -> P(M) -> M.
struct Syzygy {
  RepMap cover;  // P(M) -> M
  KernelCokernel kc;
  Obj shifted;  // M[-1] = ker(cover)
  RepMap incl;  // M[-1] -> P(M)
};

struct AmbientOctahedron {
  Sextuple tf, ta, taf;  // std triangles on f, a and a f
  RepMap s;              // C_f -> C_af
  RepMap t;              // C_af -> C_a
  Sextuple third;        // C_f -> C_af -> C_a -> C_f[1]
};

// The stable module category of a self-injective monomial algebra. Hom
// spaces, stable quotients and shift data are cached by object key; caches
// are transparent (the cached values are the canonical ones).
class StableCategory {
 public:
  // Throws UnsupportedError unless the algebra is self-injective.
  explicit StableCategory(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  Field field() const { return alg_->field(); }

  std::shared_ptr<const HomSpace> hom(const Obj& m, const Obj& n) const;
  // Hom(M, N) with no ideal; used for exact equations.
  QuotPtr exact_hom(const Obj& m, const Obj& n) const;
  // Hom(M, N) modulo maps factoring through a projective.
  QuotPtr st_hom(const Obj& m, const Obj& n) const;
  std::vector<RepMap> proj_ideal_basis(const Obj& m, const Obj& n) const;
  std::vector<RepMap> st_hom_basis(const Obj& m, const Obj& n) const;

  bool is_zero(const RepMap& f) const;
  bool equal(const RepMap& f, const RepMap& g) const;
  // M is zero in the stable category (projective).
  bool is_zero_object(const Obj& m) const;

  const Cosyzygy& cosyzygy(const Obj& m) const;
  const Syzygy& syzygy(const Obj& m) const;
  // dir = +1: M[1] = coker(M -> I(M)); dir = -1: M[-1] = ker(P(M) -> M).
  Obj shift(const Obj& m, int dir) const;
  RepMap shift_map(const RepMap& f, int dir) const;

  Sextuple std_triangle(const RepMap& f) const;
  // (B, C, A[1], g, h, -f[1]).
  Sextuple rotate(const Sextuple& t) const;
  // c with c g1 = g2 b and h2 c = a[1] h1 stably. Throws ConsistencyError
  // when b f1 != f2 a or no solution exists.
  RepMap fill_in(const Sextuple& t1, const Sextuple& t2, const RepMap& a, const RepMap& b) const;
  // Stable inverse of f if f is a stable isomorphism.
  std::optional<RepMap> st_inverse(const RepMap& f) const;
  bool is_st_iso(const RepMap& f) const { return st_inverse(f).has_value(); }
  // Some stable isomorphism M -> N, searching Hom over F_p exhaustively when
  // its stable dimension is at most max_dim (and trying basis elements and
  // small combinations otherwise).
  std::optional<RepMap> find_st_iso(const Obj& m, const Obj& n, std::size_t max_dim = 6) const;
  // g f = 0, h g = 0 and f[1] h = 0 stably.
  bool composites_vanish(const Sextuple& t) const;
  // Isomorphic to a standard triangle. Decided exactly: a comparison map
  // (1, 1, gamma) from std_triangle(f) exists and gamma is invertible.
  bool is_distinguished(const Sextuple& t) const;
  AmbientOctahedron octahedron(const RepMap& f, const RepMap& a) const;

  std::size_t cached_hom_count() const;

 private:
  template <class V>
  using Cache = std::unordered_map<std::string, std::shared_ptr<const V>>;

  template <class V, class Make>
  std::shared_ptr<const V> cached(Cache<V>& cache, const std::string& key, Make make) const;

  AlgebraPtr alg_;
  mutable std::shared_mutex mu_;
  mutable Cache<HomSpace> homs_;
  mutable Cache<HomQuotient> exact_;
  mutable Cache<HomQuotient> stable_;
  mutable Cache<Cosyzygy> cosyz_;
  mutable Cache<Syzygy> syz_;
};

std::string pair_key(const Obj& m, const Obj& n);

// Same module under a different display name.
Obj renamed(const Obj& m, std::string name);

}  // namespace subfac
