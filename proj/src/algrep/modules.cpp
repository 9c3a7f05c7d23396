#include "subfac/algrep/modules.hpp"

#include <map>

#include "subfac/errors.hpp"
#include "subfac/exactalg/linalg.hpp"

namespace subfac {

namespace {

std::string vertex_name(const AlgebraPtr& alg, std::size_t v) {
  return alg->quiver().vertex_label(v);
}

void require_vertex(const AlgebraPtr& alg, std::size_t v) {
  if (v >= alg->vertex_count()) {
    throw InputError("vertex index " + std::to_string(v) + " out of range");
  }
}

// A module with a basis indexed by algebra paths. at[w] lists the basis
// paths placed at vertex w, and act(p, b) gives the image of path p under
// arrow b as a basis path index, if nonzero.
template <class Act>
Obj path_module(const AlgebraPtr& alg, const std::vector<std::vector<std::size_t>>& at, Act act,
                std::string name) {
  const auto& q = alg->quiver();
  const Field f = alg->field();
  std::map<std::size_t, std::size_t> pos;
  std::vector<std::size_t> dims;
  for (const auto& list : at) {
    for (std::size_t i = 0; i < list.size(); ++i) pos[list[i]] = i;
    dims.push_back(list.size());
  }
  std::vector<Mat> arrows;
  for (std::size_t b = 0; b < q.arrow_count(); ++b) {
    const auto& ar = q.arrow(b);
    Mat m(f, dims[ar.tgt], dims[ar.src]);
    for (std::size_t i = 0; i < at[ar.src].size(); ++i) {
      auto img = act(at[ar.src][i], b);
      if (!img) continue;
      auto it = pos.find(*img);
      if (it != pos.end()) m.set_block(it->second, i, Mat::identity(f, 1));
    }
    arrows.push_back(std::move(m));
  }
  return Rep::make(alg, dims, arrows, std::move(name));
}

// Index of path p extended by arrow b, if it is a nonzero basis path.
std::optional<std::size_t> extend(const AlgebraPtr& alg, std::size_t p, std::size_t b) {
  Path q = alg->basis()[p];
  if (alg->end_vertex(q) != alg->quiver().arrow(b).src) return std::nullopt;
  q.arrows.push_back(b);
  if (alg->is_zero_path(q)) return std::nullopt;
  return alg->basis_index(q);
}

Mat hstack_cols(Field f, std::size_t rows, const std::vector<Mat>& cols) {
  return Mat::hstack(f, rows, cols);
}

}  // namespace

Obj simple(const AlgebraPtr& alg, std::size_t v) {
  require_vertex(alg, v);
  std::vector<std::size_t> dims(alg->vertex_count(), 0);
  dims[v] = 1;
  std::vector<Mat> arrows;
  for (const auto& a : alg->quiver().arrows()) {
    arrows.emplace_back(alg->field(), dims[a.tgt], dims[a.src]);
  }
  return Rep::make(alg, dims, arrows, "S" + vertex_name(alg, v));
}

Obj projective(const AlgebraPtr& alg, std::size_t v) {
  require_vertex(alg, v);
  std::vector<std::vector<std::size_t>> at(alg->vertex_count());
  for (auto p : alg->paths_from(v)) at[alg->end_vertex(alg->basis()[p])].push_back(p);
  return path_module(alg, at, [&](std::size_t p, std::size_t b) { return extend(alg, p, b); },
                     "P" + vertex_name(alg, v));
}

Obj injective(const AlgebraPtr& alg, std::size_t v) {
  require_vertex(alg, v);
  std::vector<std::vector<std::size_t>> at(alg->vertex_count());
  for (auto p : alg->paths_to(v)) at[alg->basis()[p].start].push_back(p);
  auto act = [&](std::size_t p, std::size_t b) -> std::optional<std::size_t> {
    const Path& q = alg->basis()[p];
    if (q.arrows.empty() || q.arrows.front() != b) return std::nullopt;
    Path rest{alg->quiver().arrow(b).tgt, {q.arrows.begin() + 1, q.arrows.end()}};
    return alg->basis_index(rest);
  };
  return path_module(alg, at, act, "I" + vertex_name(alg, v));
}

std::size_t projective_length(const AlgebraPtr& alg, std::size_t v) {
  require_vertex(alg, v);
  std::size_t longest = 0;
  for (auto p : alg->paths_from(v)) longest = std::max(longest, alg->basis()[p].length());
  return longest + 1;
}

Obj interval(const AlgebraPtr& alg, std::size_t v, std::size_t length) {
  require_vertex(alg, v);
  if (!alg->is_serial()) throw UnsupportedError("interval modules need a serial algebra");
  if (length == 0) throw InputError("interval length must be positive");
  if (length > projective_length(alg, v)) {
    throw InputError("interval(" + vertex_name(alg, v) + "," + std::to_string(length) +
                     ") exceeds the length of the projective at that vertex");
  }
  std::vector<std::vector<std::size_t>> at(alg->vertex_count());
  for (auto p : alg->paths_from(v)) {
    if (alg->basis()[p].length() < length) at[alg->end_vertex(alg->basis()[p])].push_back(p);
  }
  auto act = [&](std::size_t p, std::size_t b) -> std::optional<std::size_t> {
    if (alg->basis()[p].length() + 1 >= length) return std::nullopt;
    return extend(alg, p, b);
  };
  std::string name = alg->vertex_count() == 1
                         ? "M" + std::to_string(length)
                         : "M(" + vertex_name(alg, v) + "," + std::to_string(length) + ")";
  return path_module(alg, at, act, name);
}

Mat HomSpace::coords(const RepMap& f) const { return f.vec().select_rows(free_positions); }

RepMap HomSpace::element(const Mat& coeffs) const { return combine(coeffs, basis, src, tgt); }

HomSpace hom_space(const Obj& m, const Obj& n) {
  if (m->algebra() != n->algebra()) throw InputError("hom_space: modules over different algebras");
  const auto& alg = m->algebra();
  const auto& q = alg->quiver();
  const Field f = alg->field();
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> off(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + n->dim(v) * m->dim(v);
  std::size_t eqs = 0;
  for (const auto& a : q.arrows()) eqs += n->dim(a.tgt) * m->dim(a.src);
  Mat sys(f, eqs, off[nv]);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    const std::size_t h = n->dim(ar.tgt) * m->dim(ar.src);
    if (h == 0) continue;
    // N_a F_u - F_v M_a, vectorised row-major.
    sys.add_block(row, off[ar.src], n->arrow(a).kron(Mat::identity(f, m->dim(ar.src))));
    sys.add_block(row, off[ar.tgt],
                  -Mat::identity(f, n->dim(ar.tgt)).kron(m->arrow(a).transpose()));
    row += h;
  }
  HomSpace hs;
  hs.src = m;
  hs.tgt = n;
  for (const auto& v : kernel_basis(sys)) hs.basis.push_back(RepMap::from_vec(m, n, v));
  hs.free_positions = free_columns(sys);
  return hs;
}

std::vector<RepMap> hom_basis(const Obj& m, const Obj& n) { return hom_space(m, n).basis; }

KernelCokernel kernel_cokernel(const RepMap& fm) {
  const auto& m = fm.src();
  const auto& n = fm.tgt();
  const auto& alg = m->algebra();
  const auto& q = alg->quiver();
  const Field f = alg->field();
  const std::size_t nv = q.vertex_count();

  std::vector<Mat> kincl, kret, cproj, csec;
  std::vector<std::size_t> kdims, cdims;
  for (std::size_t v = 0; v < nv; ++v) {
    const Mat& a = fm.comp(v);
    auto kb = kernel_basis(a);
    auto kc = complement_basis(f, kb, m->dim(v));
    Mat k = hstack_cols(f, m->dim(v), kb);
    std::vector<Mat> all = kb;
    all.insert(all.end(), kc.begin(), kc.end());
    Mat binv = hstack_cols(f, m->dim(v), all).inverse();
    kret.push_back(binv.block(0, 0, kb.size(), m->dim(v)));
    kincl.push_back(std::move(k));
    kdims.push_back(kb.size());

    auto e = a.echelon();
    std::vector<Mat> im;
    for (auto p : e.pivots) im.push_back(a.col(p));
    auto ic = complement_basis(f, im, n->dim(v));
    std::vector<Mat> both = im;
    both.insert(both.end(), ic.begin(), ic.end());
    Mat cinv = hstack_cols(f, n->dim(v), both).inverse();
    cproj.push_back(cinv.block(im.size(), 0, ic.size(), n->dim(v)));
    csec.push_back(hstack_cols(f, n->dim(v), ic));
    cdims.push_back(ic.size());
  }
  std::vector<Mat> karrows, carrows;
  for (std::size_t b = 0; b < q.arrow_count(); ++b) {
    const auto& ar = q.arrow(b);
    karrows.push_back(kret[ar.tgt] * m->arrow(b) * kincl[ar.src]);
    carrows.push_back(cproj[ar.tgt] * n->arrow(b) * csec[ar.src]);
  }
  KernelCokernel out;
  out.ker = Rep::make(alg, kdims, karrows, "ker");
  out.ker_incl = RepMap::trusted(out.ker, m, std::move(kincl));
  out.ker_retraction = std::move(kret);
  out.coker = Rep::make(alg, cdims, carrows, "coker");
  out.coker_proj = RepMap::trusted(n, out.coker, std::move(cproj));
  out.coker_section = std::move(csec);
  return out;
}

RepMap induced_from_cokernel(const KernelCokernel& kc, const RepMap& u) {
  if (!same_object(u.src(), kc.coker_proj.src())) {
    throw InputError("induced_from_cokernel: map has the wrong source");
  }
  std::vector<Mat> c;
  for (std::size_t v = 0; v < u.comps().size(); ++v) c.push_back(u.comp(v) * kc.coker_section[v]);
  return RepMap::trusted(kc.coker, u.tgt(), std::move(c));
}

RepMap induced_to_kernel(const KernelCokernel& kc, const RepMap& u) {
  if (!same_object(u.tgt(), kc.ker_incl.tgt())) {
    throw InputError("induced_to_kernel: map has the wrong target");
  }
  std::vector<Mat> c;
  for (std::size_t v = 0; v < u.comps().size(); ++v) c.push_back(kc.ker_retraction[v] * u.comp(v));
  return RepMap::trusted(u.src(), kc.ker, std::move(c));
}

RepMap projective_cover(const Obj& m) {
  const auto& alg = m->algebra();
  const auto& q = alg->quiver();
  const Field f = alg->field();
  std::vector<Obj> parts;
  std::vector<RepMap> maps;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    std::vector<Mat> rad;
    for (auto a : q.in_arrows(v)) {
      const Mat& ma = m->arrow(a);
      for (std::size_t c = 0; c < ma.cols(); ++c) rad.push_back(ma.col(c));
    }
    std::vector<Mat> radb;
    if (!rad.empty()) {
      Mat r = hstack_cols(f, m->dim(v), rad);
      for (auto p : r.echelon().pivots) radb.push_back(r.col(p));
    }
    auto top = complement_basis(f, radb, m->dim(v));
    if (top.empty()) continue;
    Obj pv = projective(alg, v);
    std::vector<std::size_t> from = alg->paths_from(v);
    for (const auto& gen : top) {
      std::vector<Mat> comps;
      for (std::size_t w = 0; w < q.vertex_count(); ++w) {
        std::vector<Mat> cols;
        for (auto p : from) {
          const Path& path = alg->basis()[p];
          if (alg->end_vertex(path) == w) cols.push_back(m->path_matrix(path) * gen);
        }
        comps.push_back(hstack_cols(f, m->dim(w), cols));
      }
      parts.push_back(pv);
      maps.push_back(RepMap::trusted(pv, m, std::move(comps)));
    }
  }
  auto sum = direct_sum(alg, parts);
  return row_map(sum, m, maps);
}

RepMap injective_envelope(const Obj& m) {
  const auto& alg = m->algebra();
  const auto& q = alg->quiver();
  const Field f = alg->field();
  std::vector<Obj> parts;
  std::vector<RepMap> maps;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    std::vector<Mat> outs;
    for (auto a : q.out_arrows(v)) outs.push_back(m->arrow(a));
    std::vector<Mat> soc;
    if (outs.empty()) {
      for (std::size_t i = 0; i < m->dim(v); ++i) soc.push_back(Mat::unit(f, m->dim(v), i));
    } else {
      soc = kernel_basis(Mat::vstack(f, m->dim(v), outs));
    }
    if (soc.empty()) continue;
    auto comp = complement_basis(f, soc, m->dim(v));
    std::vector<Mat> all = soc;
    all.insert(all.end(), comp.begin(), comp.end());
    Mat binv = hstack_cols(f, m->dim(v), all).inverse();
    Obj iv = injective(alg, v);
    std::vector<std::size_t> to = alg->paths_to(v);
    for (std::size_t j = 0; j < soc.size(); ++j) {
      Mat phi = binv.row(j);
      std::vector<Mat> comps;
      for (std::size_t w = 0; w < q.vertex_count(); ++w) {
        std::vector<Mat> rows;
        for (auto p : to) {
          const Path& path = alg->basis()[p];
          if (path.start == w) rows.push_back(phi * m->path_matrix(path));
        }
        comps.push_back(Mat::vstack(f, m->dim(w), rows));
      }
      parts.push_back(iv);
      maps.push_back(RepMap::trusted(m, iv, std::move(comps)));
    }
  }
  auto sum = direct_sum(alg, parts);
  return column_map(m, sum, maps);
}

bool is_self_injective(const AlgebraPtr& alg) {
  return alg->memo_self_injective([&] {
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
      auto env = injective_envelope(projective(alg, v));
      if (env.tgt()->total_dim() != env.src()->total_dim()) return false;
      for (const auto& c : env.comps()) {
        if (c.rows() != c.cols() || c.rank() != c.rows()) return false;
      }
    }
    return true;
  });
}

CoverEnvelope cover_envelope(const Obj& m) {
  if (!is_self_injective(m->algebra())) {
    throw UnsupportedError("covers and envelopes of the stable category need a self-injective algebra");
  }
  return {projective_cover(m), injective_envelope(m)};
}

Obj dual(const Obj& m, const AlgebraPtr& opposite) {
  const auto& q = opposite->quiver();
  if (q.vertex_count() != m->dims().size() || q.arrow_count() != m->arrows().size()) {
    throw InputError("dual: target algebra is not the opposite algebra");
  }
  std::vector<Mat> arrows;
  for (const auto& a : m->arrows()) arrows.push_back(a.transpose());
  std::string name = m->name();
  if (name.rfind("D", 0) == 0 && name.size() > 1 && name[1] == '(') {
    name = name.substr(2, name.size() - 3);
  } else {
    name = "D(" + name + ")";
  }
  return Rep::make(opposite, m->dims(), arrows, name);
}

RepMap dual(const RepMap& f, const AlgebraPtr& opposite) {
  std::vector<Mat> comps;
  for (const auto& c : f.comps()) comps.push_back(c.transpose());
  return RepMap::trusted(dual(f.tgt(), opposite), dual(f.src(), opposite), std::move(comps));
}

}  // namespace subfac
