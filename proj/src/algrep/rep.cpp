#include "subfac/algrep/rep.hpp"

#include "subfac/errors.hpp"

namespace subfac {

namespace {

std::string dim_vector(const std::vector<std::size_t>& dims) {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + ")";
}

}  // namespace

Obj Rep::make(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Mat> arrows,
              std::string name) {
  const auto& q = alg->quiver();
  if (dims.size() != q.vertex_count()) throw InputError("representation: wrong number of vertices");
  if (arrows.size() != q.arrow_count()) throw InputError("representation: wrong number of arrows");
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const auto& ar = q.arrow(a);
    if (arrows[a].rows() != dims[ar.tgt] || arrows[a].cols() != dims[ar.src]) {
      throw InputError("representation: arrow '" + ar.label + "' should be " +
                       std::to_string(dims[ar.tgt]) + "x" + std::to_string(dims[ar.src]));
    }
    if (arrows[a].field() != alg->field()) throw InputError("representation: field mismatch");
  }
  std::shared_ptr<Rep> r(new Rep());
  r->alg_ = alg;
  r->dims_ = std::move(dims);
  r->arrows_ = std::move(arrows);
  for (auto d : r->dims_) r->total_ += d;
  for (const auto& rel : alg->relations()) {
    Path p{q.arrow(rel.front()).src, rel};
    if (!r->path_matrix(p).is_zero()) {
      throw InputError("representation does not satisfy relation " + alg->path_string(p));
    }
  }
  for (auto d : r->dims_) {
    r->key_ += std::to_string(d);
    r->key_ += ',';
  }
  for (const auto& m : r->arrows_) m.append_key(r->key_);
  r->name_ = name.empty() ? dim_vector(r->dims_) : std::move(name);
  return r;
}

Obj Rep::zero(AlgebraPtr alg) {
  std::vector<std::size_t> dims(alg->vertex_count(), 0);
  std::vector<Mat> arrows;
  for (std::size_t a = 0; a < alg->quiver().arrow_count(); ++a) {
    arrows.emplace_back(alg->field(), 0, 0);
  }
  return make(alg, dims, arrows, "0");
}

Mat Rep::path_matrix(const Path& p) const {
  Mat m = Mat::identity(field(), dims_.at(p.start));
  for (std::size_t a : p.arrows) m = arrows_.at(a) * m;
  return m;
}

bool same_object(const Obj& a, const Obj& b) {
  return a == b || (a->algebra() == b->algebra() && a->key() == b->key());
}

RepMap::RepMap(Obj src, Obj tgt, std::vector<Mat> comps)
    : src_(std::move(src)), tgt_(std::move(tgt)), comps_(std::move(comps)) {
  if (src_->algebra() != tgt_->algebra()) throw InputError("map between different algebras");
  const std::size_t n = src_->dims().size();
  if (comps_.size() != n) throw InputError("map: wrong number of components");
  for (std::size_t v = 0; v < n; ++v) {
    if (comps_[v].rows() != tgt_->dim(v) || comps_[v].cols() != src_->dim(v)) {
      throw InputError("map: component at vertex " + std::to_string(v) + " has wrong shape");
    }
  }
  if (!is_intertwining()) throw InputError("map does not commute with the arrows");
}

RepMap RepMap::trusted(Obj src, Obj tgt, std::vector<Mat> comps) {
  RepMap f;
  f.src_ = std::move(src);
  f.tgt_ = std::move(tgt);
  f.comps_ = std::move(comps);
  return f;
}

RepMap RepMap::zero(const Obj& src, const Obj& tgt) {
  std::vector<Mat> c;
  for (std::size_t v = 0; v < src->dims().size(); ++v) {
    c.emplace_back(src->field(), tgt->dim(v), src->dim(v));
  }
  return trusted(src, tgt, std::move(c));
}

RepMap RepMap::identity(const Obj& m) {
  std::vector<Mat> c;
  for (auto d : m->dims()) c.push_back(Mat::identity(m->field(), d));
  return trusted(m, m, std::move(c));
}

RepMap RepMap::from_vec(const Obj& src, const Obj& tgt, const Mat& vec) {
  std::vector<Mat> c;
  std::size_t off = 0;
  for (std::size_t v = 0; v < src->dims().size(); ++v) {
    const std::size_t r = tgt->dim(v), k = src->dim(v);
    c.push_back(vec.block(off, 0, r * k, 1).reshaped(r, k));
    off += r * k;
  }
  if (off != vec.rows()) throw InputError("from_vec: vector length does not match Hom shape");
  return trusted(src, tgt, std::move(c));
}

bool RepMap::is_intertwining() const {
  const auto& q = src_->algebra()->quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    if (!(tgt_->arrow(a) * comps_[ar.src] == comps_[ar.tgt] * src_->arrow(a))) return false;
  }
  return true;
}

bool RepMap::is_zero() const {
  for (const auto& c : comps_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Mat RepMap::vec() const {
  std::vector<Mat> parts;
  for (const auto& c : comps_) parts.push_back(c.reshaped(c.size(), 1));
  return Mat::vstack(field(), 1, parts);
}

namespace {

void require_parallel(const RepMap& a, const RepMap& b) {
  if (!same_object(a.src(), b.src()) || !same_object(a.tgt(), b.tgt())) {
    throw InputError("maps are not parallel");
  }
}

}  // namespace

RepMap RepMap::operator+(const RepMap& o) const {
  require_parallel(*this, o);
  std::vector<Mat> c;
  for (std::size_t v = 0; v < comps_.size(); ++v) c.push_back(comps_[v] + o.comps_[v]);
  return trusted(src_, tgt_, std::move(c));
}

RepMap RepMap::operator-(const RepMap& o) const {
  require_parallel(*this, o);
  std::vector<Mat> c;
  for (std::size_t v = 0; v < comps_.size(); ++v) c.push_back(comps_[v] - o.comps_[v]);
  return trusted(src_, tgt_, std::move(c));
}

RepMap RepMap::operator-() const {
  std::vector<Mat> c;
  for (const auto& m : comps_) c.push_back(-m);
  return trusted(src_, tgt_, std::move(c));
}

RepMap RepMap::scaled(long long s) const {
  std::vector<Mat> c;
  for (const auto& m : comps_) c.push_back(m.scaled(s));
  return trusted(src_, tgt_, std::move(c));
}

bool operator==(const RepMap& a, const RepMap& b) {
  return same_object(a.src_, b.src_) && same_object(a.tgt_, b.tgt_) && a.comps_ == b.comps_;
}

RepMap compose(const RepMap& g, const RepMap& f) {
  if (!same_object(f.tgt(), g.src())) {
    throw InputError("compose: target " + f.tgt()->name() + " does not match source " +
                     g.src()->name());
  }
  std::vector<Mat> c;
  for (std::size_t v = 0; v < f.comps().size(); ++v) c.push_back(g.comp(v) * f.comp(v));
  return RepMap::trusted(f.src(), g.tgt(), std::move(c));
}

RepMap combine(const Mat& coeffs, std::span<const RepMap> maps, const Obj& src,
               const Obj& tgt) {
  if (coeffs.rows() != maps.size()) throw InputError("combine: coefficient count mismatch");
  std::vector<Mat> comps;
  for (std::size_t v = 0; v < src->dims().size(); ++v) {
    std::vector<Mat> terms;
    for (const auto& m : maps) terms.push_back(m.comp(v));
    comps.push_back(Mat::combine(coeffs, terms, tgt->dim(v), src->dim(v)));
  }
  return RepMap::trusted(src, tgt, std::move(comps));
}

DirectSum direct_sum(const AlgebraPtr& alg, std::span<const Obj> parts) {
  const auto& q = alg->quiver();
  const Field f = alg->field();
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> dims(n, 0);
  for (const auto& p : parts) {
    if (p->algebra() != alg) throw InputError("direct_sum: algebra mismatch");
    for (std::size_t v = 0; v < n; ++v) dims[v] += p->dim(v);
  }
  std::vector<Mat> arrows;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    std::vector<Mat> blocks;
    for (const auto& p : parts) blocks.push_back(p->arrow(a));
    arrows.push_back(Mat::block_diag(f, blocks));
  }
  std::string name;
  for (const auto& p : parts) {
    if (!name.empty()) name += "+";
    name += p->name();
  }
  if (parts.empty()) name = "0";
  DirectSum ds;
  ds.obj = Rep::make(alg, dims, arrows, name);
  std::vector<std::size_t> off(n, 0);
  for (const auto& p : parts) {
    std::vector<Mat> in, out;
    for (std::size_t v = 0; v < n; ++v) {
      Mat i(f, dims[v], p->dim(v));
      i.set_block(off[v], 0, Mat::identity(f, p->dim(v)));
      out.push_back(i.transpose());
      in.push_back(std::move(i));
      off[v] += p->dim(v);
    }
    ds.inj.push_back(RepMap::trusted(p, ds.obj, std::move(in)));
    ds.proj.push_back(RepMap::trusted(ds.obj, p, std::move(out)));
  }
  return ds;
}

Obj power(const Obj& m, std::size_t n) {
  std::vector<Obj> parts(n, m);
  return direct_sum(m->algebra(), parts).obj;
}

RepMap column_map(const Obj& src, const DirectSum& sum, std::span<const RepMap> parts) {
  RepMap out = RepMap::zero(src, sum.obj);
  for (std::size_t i = 0; i < parts.size(); ++i) out = out + compose(sum.inj.at(i), parts[i]);
  return out;
}

RepMap row_map(const DirectSum& sum, const Obj& tgt, std::span<const RepMap> parts) {
  RepMap out = RepMap::zero(sum.obj, tgt);
  for (std::size_t i = 0; i < parts.size(); ++i) out = out + compose(parts[i], sum.proj.at(i));
  return out;
}

RepMap diagonal_map(const DirectSum& src, const DirectSum& tgt, std::span<const RepMap> parts) {
  RepMap out = RepMap::zero(src.obj, tgt.obj);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out = out + compose(tgt.inj.at(i), compose(parts[i], src.proj.at(i)));
  }
  return out;
}

std::string describe(const RepMap& f) {
  std::string s = f.src()->name() + " -> " + f.tgt()->name() + ":";
  for (std::size_t v = 0; v < f.comps().size(); ++v) {
    s += " [" + f.src()->algebra()->quiver().vertex_label(v) + "] " + f.comp(v).to_string();
  }
  return s;
}

}  // namespace subfac
