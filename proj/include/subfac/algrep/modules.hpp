#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "subfac/algrep/rep.hpp"

namespace subfac {

// Standard modules. interval(v, l) needs a serial algebra.
Obj simple(const AlgebraPtr& alg, std::size_t v);
Obj projective(const AlgebraPtr& alg, std::size_t v);
Obj injective(const AlgebraPtr& alg, std::size_t v);
Obj interval(const AlgebraPtr& alg, std::size_t v, std::size_t length);
// Composition length of projective(v).
std::size_t projective_length(const AlgebraPtr& alg, std::size_t v);

// Hom(M, N) as the kernel of the stacked intertwining system. Coordinates of
// a map in the canonical basis are its entries at the free positions.
struct HomSpace {
  Obj src, tgt;
  std::vector<RepMap> basis;
  std::vector<std::size_t> free_positions;

  std::size_t dim() const { return basis.size(); }
  Mat coords(const RepMap& f) const;
  RepMap element(const Mat& coeffs) const;
};

HomSpace hom_space(const Obj& m, const Obj& n);
std::vector<RepMap> hom_basis(const Obj& m, const Obj& n);

// Vertexwise kernel and cokernel. The sections are linear (not module) right
// inverses of coker_proj, and the retractions linear left inverses of
// ker_incl; both are used to induce maps.
struct KernelCokernel {
  Obj ker;
  RepMap ker_incl;
  std::vector<Mat> ker_retraction;
  Obj coker;
  RepMap coker_proj;
  std::vector<Mat> coker_section;
};
KernelCokernel kernel_cokernel(const RepMap& f);

// Map out of coker(f) induced by u with u f = 0.
RepMap induced_from_cokernel(const KernelCokernel& kc, const RepMap& u);
// Map into ker(f) induced by u with f u = 0.
RepMap induced_to_kernel(const KernelCokernel& kc, const RepMap& u);

// Projective cover P(M) -> M built on a canonical top basis.
RepMap projective_cover(const Obj& m);
// Injective envelope M -> I(M) built on a canonical socle basis.
RepMap injective_envelope(const Obj& m);

bool is_self_injective(const AlgebraPtr& alg);

struct CoverEnvelope {
  RepMap cover;     // P(M) -> M
  RepMap envelope;  // M -> I(M)
};
// Both at once; throws UnsupportedError unless the algebra is self-injective.
CoverEnvelope cover_envelope(const Obj& m);

// Vector space duality D = Hom_k(-, k), landing over the opposite algebra.
// D(D(M)) == M on the nose (matrices are transposed twice).
Obj dual(const Obj& m, const AlgebraPtr& opposite);
RepMap dual(const RepMap& f, const AlgebraPtr& opposite);

}  // namespace subfac
