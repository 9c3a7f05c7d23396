#pragma once

// Brute-force reference computations used only by the tests. They enumerate
// every candidate over F_2 instead of solving linear systems.

#include <cstdint>
#include <vector>

#include "subfac/algrep/modules.hpp"

namespace oracle {

using subfac::Mat;
using subfac::Obj;
using subfac::RepMap;

// Every tuple of per-vertex matrices over F_2, as RepMaps without checks.
inline std::vector<RepMap> all_linear_maps(const Obj& m, const Obj& n) {
  const auto f = m->field();
  std::size_t bits = 0;
  for (std::size_t v = 0; v < m->dims().size(); ++v) bits += m->dim(v) * n->dim(v);
  std::vector<RepMap> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    std::vector<long long> e(bits);
    for (std::size_t b = 0; b < bits; ++b) e[b] = (mask >> b) & 1;
    out.push_back(RepMap::from_vec(m, n, Mat::from_ints(f, bits, 1, e)));
  }
  return out;
}

// All module maps M -> N over F_2, found by testing every linear map.
inline std::vector<RepMap> all_intertwiners(const Obj& m, const Obj& n) {
  std::vector<RepMap> out;
  for (auto& g : all_linear_maps(m, n)) {
    if (g.is_intertwining()) out.push_back(g);
  }
  return out;
}

inline std::size_t log2_count(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

// Dimension of the span of a set of maps, via their vectorisations.
inline std::size_t span_dim(const std::vector<RepMap>& maps, const Obj& m, const Obj& n) {
  if (maps.empty()) return 0;
  std::vector<Mat> cols;
  for (const auto& g : maps) cols.push_back(g.vec());
  std::size_t rows = 0;
  for (std::size_t v = 0; v < m->dims().size(); ++v) rows += m->dim(v) * n->dim(v);
  return Mat::hstack(m->field(), rows, cols).rank();
}

// Maps M -> N factoring through some object of the list `through`, spanned
// by all composites of intertwiners (enumerated, not solved).
inline std::size_t factoring_span_dim(const Obj& m, const Obj& n, const std::vector<Obj>& through) {
  std::vector<RepMap> comps;
  for (const auto& p : through) {
    auto in = all_intertwiners(m, p);
    auto out = all_intertwiners(p, n);
    for (const auto& a : in) {
      for (const auto& b : out) comps.push_back(b * a);
    }
  }
  return span_dim(comps, m, n);
}

}  // namespace oracle
