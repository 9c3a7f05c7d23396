#include "subfac/stabcat/stable.hpp"

#include <mutex>

#include "subfac/errors.hpp"

namespace subfac {

HomQuotient::HomQuotient(std::shared_ptr<const HomSpace> hom, Subspace ideal)
    : hom_(std::move(hom)), ideal_(std::move(ideal)) {
  const Field f = ideal_.field();
  const std::size_t n = hom_->dim();
  auto ib = ideal_.basis();
  auto comp = complement_basis(f, ib, n);
  std::vector<Mat> qcols;
  for (const auto& e : comp) {
    std::size_t i = 0;
    while (e.entry_is_zero(i, 0)) ++i;
    reps_.push_back(hom_->basis[i]);
    qcols.push_back(ideal_.quotient_coords(e));
  }
  to_reps_ = Mat::hstack(f, comp.size(), qcols).inverse();
}

std::vector<RepMap> HomQuotient::ideal_maps() const {
  std::vector<RepMap> out;
  for (const auto& v : ideal_.basis()) out.push_back(hom_->element(v));
  return out;
}

Mat HomQuotient::coords(const RepMap& f) const {
  if (!same_object(f.src(), src()) || !same_object(f.tgt(), tgt())) {
    throw InputError("coords: map " + f.src()->name() + " -> " + f.tgt()->name() +
                     " is not in Hom(" + src()->name() + ", " + tgt()->name() + ")");
  }
  return to_reps_ * ideal_.quotient_coords(hom_->coords(f));
}

bool HomQuotient::is_zero(const RepMap& f) const { return coords(f).is_zero(); }

RepMap HomQuotient::element(const Mat& coeffs) const {
  return combine(coeffs, reps_, src(), tgt());
}

SolutionSpace solve_equations(Field field, std::span<const RepMap> unknowns,
                              std::span<const Equation> eqs) {
  std::size_t rows = 0;
  for (const auto& e : eqs) rows += e.target->dim();
  Mat sys(field, rows, unknowns.size());
  Mat rhs(field, rows, 1);
  std::size_t r = 0;
  for (const auto& e : eqs) {
    if (e.target->dim() == 0) continue;
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
      sys.set_block(r, j, e.target->coords(e.op(unknowns[j])));
    }
    rhs.set_block(r, 0, e.target->coords(e.rhs));
    r += e.target->dim();
  }
  SolutionSpace out;
  out.particular = solve(sys, rhs);
  out.kernel = kernel_basis(sys);
  return out;
}

std::string pair_key(const Obj& m, const Obj& n) {
  std::string k = m->key();
  k += '|';
  k += n->key();
  return k;
}

Obj renamed(const Obj& m, std::string name) {
  return Rep::make(m->algebra(), m->dims(), m->arrows(), std::move(name));
}

StableCategory::StableCategory(AlgebraPtr alg) : alg_(std::move(alg)) {
  if (!is_self_injective(alg_)) {
    throw UnsupportedError("the stable category needs a self-injective algebra");
  }
}

template <class V, class Make>
std::shared_ptr<const V> StableCategory::cached(Cache<V>& cache, const std::string& key,
                                                Make make) const {
  {
    std::shared_lock lock(mu_);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // Computed outside the lock; concurrent builders produce equal values and
  // the first insertion wins.
  std::shared_ptr<const V> value = make();
  std::unique_lock lock(mu_);
  return cache.try_emplace(key, std::move(value)).first->second;
}

std::shared_ptr<const HomSpace> StableCategory::hom(const Obj& m, const Obj& n) const {
  return cached(homs_, pair_key(m, n),
                [&] { return std::make_shared<const HomSpace>(hom_space(m, n)); });
}

QuotPtr StableCategory::exact_hom(const Obj& m, const Obj& n) const {
  return cached(exact_, pair_key(m, n), [&] {
    auto h = hom(m, n);
    return std::make_shared<const HomQuotient>(h, Subspace(field(), h->dim()));
  });
}

QuotPtr StableCategory::st_hom(const Obj& m, const Obj& n) const {
  return cached(stable_, pair_key(m, n), [&] {
    auto h = hom(m, n);
    Subspace ideal(field(), h->dim());
    // Projectives are injective, so a map factors through a projective iff
    // it extends along the injective envelope.
    const auto& cs = cosyzygy(m);
    for (const auto& g : hom(cs.iota.tgt(), n)->basis) ideal.insert(h->coords(g * cs.iota));
    return std::make_shared<const HomQuotient>(h, std::move(ideal));
  });
}

std::vector<RepMap> StableCategory::proj_ideal_basis(const Obj& m, const Obj& n) const {
  return st_hom(m, n)->ideal_maps();
}

std::vector<RepMap> StableCategory::st_hom_basis(const Obj& m, const Obj& n) const {
  return st_hom(m, n)->reps();
}

bool StableCategory::is_zero(const RepMap& f) const { return st_hom(f.src(), f.tgt())->is_zero(f); }

bool StableCategory::equal(const RepMap& f, const RepMap& g) const { return is_zero(f - g); }

bool StableCategory::is_zero_object(const Obj& m) const { return st_hom(m, m)->dim() == 0; }

const Cosyzygy& StableCategory::cosyzygy(const Obj& m) const {
  return *cached(cosyz_, m->key(), [&] {
    auto c = std::make_shared<Cosyzygy>();
    c->iota = cover_envelope(m).envelope;
    c->kc = kernel_cokernel(c->iota);
    c->shifted = renamed(c->kc.coker, m->name() + "[1]");
    c->pi = RepMap::trusted(c->iota.tgt(), c->shifted, c->kc.coker_proj.comps());
    return std::shared_ptr<const Cosyzygy>(std::move(c));
  });
}

const Syzygy& StableCategory::syzygy(const Obj& m) const {
  return *cached(syz_, m->key(), [&] {
    auto s = std::make_shared<Syzygy>();
    s->cover = cover_envelope(m).cover;
    s->kc = kernel_cokernel(s->cover);
    s->shifted = renamed(s->kc.ker, m->name() + "[-1]");
    s->incl = RepMap::trusted(s->shifted, s->cover.src(), s->kc.ker_incl.comps());
    return std::shared_ptr<const Syzygy>(std::move(s));
  });
}

Obj StableCategory::shift(const Obj& m, int dir) const {
  if (dir == 1) return cosyzygy(m).shifted;
  if (dir == -1) return syzygy(m).shifted;
  throw InputError("shift direction must be +1 or -1");
}

RepMap StableCategory::shift_map(const RepMap& f, int dir) const {
  const Field fld = field();
  if (dir == 1) {
    const auto& cm = cosyzygy(f.src());
    const auto& cn = cosyzygy(f.tgt());
    auto unknowns = hom(cm.iota.tgt(), cn.iota.tgt())->basis;
    Equation e{exact_hom(f.src(), cn.iota.tgt()),
               [&](const RepMap& x) { return x * cm.iota; }, cn.iota * f};
    auto sol = solve_equations(fld, unknowns, std::span(&e, 1));
    if (!sol.feasible()) throw ConsistencyError("shift_map: no lift between injective envelopes");
    RepMap lift = combine(*sol.particular, unknowns, cm.iota.tgt(), cn.iota.tgt());
    RepMap out = induced_from_cokernel(cm.kc, cn.pi * lift);
    return RepMap::trusted(cm.shifted, cn.shifted, out.comps());
  }
  if (dir == -1) {
    const auto& sm = syzygy(f.src());
    const auto& sn = syzygy(f.tgt());
    auto unknowns = hom(sm.cover.src(), sn.cover.src())->basis;
    Equation e{exact_hom(sm.cover.src(), f.tgt()),
               [&](const RepMap& x) { return sn.cover * x; }, f * sm.cover};
    auto sol = solve_equations(fld, unknowns, std::span(&e, 1));
    if (!sol.feasible()) throw ConsistencyError("shift_map: no lift between projective covers");
    RepMap lift = combine(*sol.particular, unknowns, sm.cover.src(), sn.cover.src());
    RepMap into = RepMap::trusted(sm.shifted, sn.cover.src(), (lift * sm.incl).comps());
    RepMap out = induced_to_kernel(sn.kc, into);
    return RepMap::trusted(sm.shifted, sn.shifted, out.comps());
  }
  throw InputError("shift direction must be +1 or -1");
}

Sextuple StableCategory::std_triangle(const RepMap& f) const {
  const auto& cs = cosyzygy(f.src());
  std::vector<Obj> parts{cs.iota.tgt(), f.tgt()};
  auto sum = direct_sum(alg_, parts);
  std::vector<RepMap> legs{cs.iota, -f};
  RepMap phi = column_map(f.src(), sum, legs);
  auto kc = kernel_cokernel(phi);
  Sextuple t;
  t.a = f.src();
  t.b = f.tgt();
  t.c = renamed(kc.coker, "C(" + f.src()->name() + "->" + f.tgt()->name() + ")");
  t.shifted = cs.shifted;
  t.f = f;
  t.g = RepMap::trusted(f.tgt(), t.c, (kc.coker_proj * sum.inj[1]).comps());
  RepMap h = induced_from_cokernel(kc, cs.pi * sum.proj[0]);
  t.h = RepMap::trusted(t.c, cs.shifted, h.comps());
  t.level = Sextuple::Level::Ambient;
  t.provenance = "standard triangle";
  return t;
}

Sextuple StableCategory::rotate(const Sextuple& t) const {
  if (!composites_vanish(t)) throw InputError("rotate: not a valid triangle");
  Sextuple r;
  r.a = t.b;
  r.b = t.c;
  r.c = t.shifted;
  r.shifted = shift(t.b, 1);
  r.f = t.g;
  r.g = t.h;
  r.h = -shift_map(t.f, 1);
  r.level = Sextuple::Level::Ambient;
  r.provenance = "rotation of " + t.provenance;
  return r;
}

RepMap StableCategory::fill_in(const Sextuple& t1, const Sextuple& t2, const RepMap& a,
                               const RepMap& b) const {
  if (!equal(b * t1.f, t2.f * a)) {
    throw ConsistencyError("fill_in: the left square does not commute stably");
  }
  auto sq = st_hom(t1.c, t2.c);
  RepMap ah = shift_map(a, 1) * t1.h;
  std::vector<Equation> eqs{
      {st_hom(t1.b, t2.c), [&](const RepMap& x) { return x * t1.g; }, t2.g * b},
      {st_hom(t1.c, t2.shifted), [&](const RepMap& x) { return t2.h * x; }, ah}};
  auto sol = solve_equations(field(), sq->reps(), eqs);
  if (!sol.feasible()) throw ConsistencyError("fill_in: no third map exists");
  return sq->element(*sol.particular);
}

std::optional<RepMap> StableCategory::st_inverse(const RepMap& f) const {
  const Obj& m = f.src();
  const Obj& n = f.tgt();
  auto back = st_hom(n, m);
  Equation left{st_hom(m, m), [&](const RepMap& x) { return x * f; }, RepMap::identity(m)};
  auto l = solve_equations(field(), back->reps(), std::span(&left, 1));
  if (!l.feasible()) return std::nullopt;
  Equation right{st_hom(n, n), [&](const RepMap& x) { return f * x; }, RepMap::identity(n)};
  auto r = solve_equations(field(), back->reps(), std::span(&right, 1));
  if (!r.feasible()) return std::nullopt;
  return back->element(*l.particular);
}

std::optional<RepMap> StableCategory::find_st_iso(const Obj& m, const Obj& n,
                                                  std::size_t max_dim) const {
  auto q = st_hom(m, n);
  const std::size_t d = q->dim();
  if (d == 0) {
    if (is_zero_object(m) && is_zero_object(n)) return RepMap::zero(m, n);
    return std::nullopt;
  }
  for (const auto& r : q->reps()) {
    if (is_st_iso(r)) return r;
  }
  const Field f = field();
  if (f.is_prime_field() && d <= max_dim) {
    const std::uint64_t p = f.characteristic();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= p;
    std::vector<long long> c(d, 0);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      std::uint64_t x = idx;
      for (std::size_t i = 0; i < d; ++i) {
        c[i] = static_cast<long long>(x % p);
        x /= p;
      }
      RepMap cand = q->element(Mat::from_ints(f, d, 1, c));
      if (is_st_iso(cand)) return cand;
    }
    return std::nullopt;
  }
  // Rationals or large spaces: deterministic small-coefficient trials.
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<long long> c(d);
    for (auto& x : c) {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      x = static_cast<long long>(state % 7) - 3;
    }
    RepMap cand = q->element(Mat::from_ints(f, d, 1, c));
    if (is_st_iso(cand)) return cand;
  }
  return std::nullopt;
}

bool StableCategory::composites_vanish(const Sextuple& t) const {
  return is_zero(t.g * t.f) && is_zero(t.h * t.g) && is_zero(shift_map(t.f, 1) * t.h);
}

bool StableCategory::is_distinguished(const Sextuple& t) const {
  if (!same_object(t.shifted, shift(t.a, 1))) return false;
  Sextuple s = std_triangle(t.f);
  auto q = st_hom(s.c, t.c);
  std::vector<Equation> eqs{
      {st_hom(t.b, t.c), [&](const RepMap& x) { return x * s.g; }, t.g},
      {st_hom(s.c, t.shifted), [&](const RepMap& x) { return t.h * x; }, s.h}};
  auto sol = solve_equations(field(), q->reps(), eqs);
  if (!sol.feasible()) return false;
  return is_st_iso(q->element(*sol.particular));
}

AmbientOctahedron StableCategory::octahedron(const RepMap& f, const RepMap& a) const {
  AmbientOctahedron o;
  RepMap af = a * f;
  o.tf = std_triangle(f);
  o.ta = std_triangle(a);
  o.taf = std_triangle(af);
  // The cones are cokernels of A -> I(A) + B, A -> I(A) + X and
  // B -> I(B) + X; s and t are induced by id + a and F + id where F is the
  // lift of f used for f[1].
  const auto& ca = cosyzygy(f.src());
  const auto& cb = cosyzygy(f.tgt());
  std::vector<Obj> pf{ca.iota.tgt(), f.tgt()}, paf{ca.iota.tgt(), a.tgt()},
      pa{cb.iota.tgt(), a.tgt()};
  auto sf = direct_sum(alg_, pf), saf = direct_sum(alg_, paf), sa = direct_sum(alg_, pa);
  std::vector<RepMap> lf{ca.iota, -f}, laf{ca.iota, -af}, la{cb.iota, -a};
  auto kf = kernel_cokernel(column_map(f.src(), sf, lf));
  auto kaf = kernel_cokernel(column_map(f.src(), saf, laf));

  std::vector<RepMap> d1{RepMap::identity(ca.iota.tgt()), a};
  RepMap s = induced_from_cokernel(kf, kaf.coker_proj * diagonal_map(sf, saf, d1));
  o.s = RepMap::trusted(o.tf.c, o.taf.c, s.comps());

  auto unknowns = hom(ca.iota.tgt(), cb.iota.tgt())->basis;
  Equation e{exact_hom(f.src(), cb.iota.tgt()), [&](const RepMap& x) { return x * ca.iota; },
             cb.iota * f};
  auto sol = solve_equations(field(), unknowns, std::span(&e, 1));
  if (!sol.feasible()) throw ConsistencyError("octahedron: no lift between injective envelopes");
  RepMap lift = combine(*sol.particular, unknowns, ca.iota.tgt(), cb.iota.tgt());
  auto ka = kernel_cokernel(column_map(f.tgt(), sa, la));
  std::vector<RepMap> d2{lift, RepMap::identity(a.tgt())};
  RepMap t = induced_from_cokernel(kaf, ka.coker_proj * diagonal_map(saf, sa, d2));
  o.t = RepMap::trusted(o.taf.c, o.ta.c, t.comps());

  o.third.a = o.tf.c;
  o.third.b = o.taf.c;
  o.third.c = o.ta.c;
  o.third.shifted = shift(o.tf.c, 1);
  o.third.f = o.s;
  o.third.g = o.t;
  o.third.h = shift_map(o.tf.g, 1) * o.ta.h;
  o.third.level = Sextuple::Level::Ambient;
  o.third.provenance = "octahedron third column";
  return o;
}

std::size_t StableCategory::cached_hom_count() const {
  std::shared_lock lock(mu_);
  return homs_.size();
}

}  // namespace subfac
