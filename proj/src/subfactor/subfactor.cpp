#include "subfac/subfactor/subfactor.hpp"

#include <random>

#include "subfac/errors.hpp"

namespace subfac {

namespace {

// Every coefficient column over F_p of the given length, or nullopt when
// there are more than `limit` of them.
std::optional<std::vector<Mat>> all_vectors(Field field, std::size_t n, std::size_t limit) {
  if (!field.is_prime_field()) return std::nullopt;
  const std::size_t p = field.characteristic();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= p;
    if (total > limit) return std::nullopt;
  }
  std::vector<Mat> out;
  out.reserve(total);
  std::vector<long long> digits(n, 0);
  for (std::size_t k = 0; k < total; ++k) {
    out.push_back(Mat::from_ints(field, n, 1, digits));
    for (std::size_t i = 0; i < n; ++i) {
      if (++digits[i] < static_cast<long long>(p)) break;
      digits[i] = 0;
    }
  }
  return out;
}

template <class V, class Make>
std::shared_ptr<const V> cached_in(std::shared_mutex& mu,
                                   std::unordered_map<std::string, std::shared_ptr<const V>>& cache,
                                   const std::string& key, Make make) {
  {
    std::shared_lock lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::shared_ptr<const V> value = make();
  std::unique_lock lock(mu);
  return cache.try_emplace(key, std::move(value)).first->second;
}

}  // namespace

Obj sum_of(const AlgebraPtr& alg, const std::vector<Obj>& parts) {
  if (parts.size() == 1) return parts[0];
  return direct_sum(alg, parts).obj;
}

SubcatIdeal::SubcatIdeal(std::shared_ptr<const StableCategory> st, SubcatSpec x)
    : st_(std::move(st)), x_(std::move(x)) {
  for (const auto& g : x_.generators) {
    if (g->algebra() != st_->algebra()) throw InputError("subcategory generator over another algebra");
  }
}

QuotPtr SubcatIdeal::quot_hom(const Obj& m, const Obj& n) const {
  return cached_in(mu_, quot_, pair_key(m, n), [&] {
    auto stq = st_->st_hom(m, n);
    Subspace ideal = stq->ideal();
    for (const auto& x : x_.generators) {
      auto in = st_->st_hom_basis(m, x);
      if (in.empty()) continue;
      for (const auto& g : st_->st_hom_basis(x, n)) {
        for (const auto& f : in) ideal.insert(stq->hom().coords(g * f));
      }
    }
    return std::make_shared<const HomQuotient>(st_->hom(m, n), std::move(ideal));
  });
}

std::vector<RepMap> SubcatIdeal::ideal_basis(const Obj& m, const Obj& n) const {
  auto stq = st_->st_hom(m, n);
  Subspace span = stq->ideal();
  std::vector<RepMap> out;
  for (const auto& x : x_.generators) {
    auto in = st_->st_hom_basis(m, x);
    for (const auto& g : st_->st_hom_basis(x, n)) {
      for (const auto& f : in) {
        RepMap c = g * f;
        if (span.insert(stq->hom().coords(c))) out.push_back(std::move(c));
      }
    }
  }
  return out;
}

bool SubcatIdeal::is_zero(const RepMap& f) const { return quot_hom(f.src(), f.tgt())->is_zero(f); }

bool SubcatIdeal::equal(const RepMap& f, const RepMap& g) const { return is_zero(f - g); }

bool SubcatIdeal::in_add(const Obj& m) const { return quot_hom(m, m)->dim() == 0; }

bool SubcatIdeal::is_monic(const RepMap& f) const {
  for (const auto& x : x_.generators) {
    auto into = st_->st_hom(f.src(), x);
    if (into->dim() == 0) continue;
    std::vector<Mat> cols;
    for (const auto& u : st_->st_hom_basis(f.tgt(), x)) cols.push_back(into->coords(u * f));
    if (cols.empty() || Mat::hstack(field(), into->dim(), cols).rank() < into->dim()) return false;
  }
  return true;
}

bool SubcatIdeal::is_epic(const RepMap& f) const {
  for (const auto& x : x_.generators) {
    auto into = st_->st_hom(x, f.tgt());
    if (into->dim() == 0) continue;
    std::vector<Mat> cols;
    for (const auto& u : st_->st_hom_basis(x, f.src())) cols.push_back(into->coords(f * u));
    if (cols.empty() || Mat::hstack(field(), into->dim(), cols).rank() < into->dim()) return false;
  }
  return true;
}

Approximation SubcatIdeal::left_approximation(const Obj& a) const {
  std::vector<Obj> parts;
  std::vector<RepMap> maps;
  for (const auto& x : x_.generators) {
    for (const auto& u : st_->st_hom_basis(a, x)) {
      parts.push_back(x);
      maps.push_back(u);
    }
  }
  auto ds = direct_sum(st_->algebra(), parts);
  return {ds.obj, column_map(a, ds, maps)};
}

Approximation SubcatIdeal::right_approximation(const Obj& b) const {
  std::vector<Obj> parts;
  std::vector<RepMap> maps;
  for (const auto& x : x_.generators) {
    for (const auto& u : st_->st_hom_basis(x, b)) {
      parts.push_back(x);
      maps.push_back(u);
    }
  }
  auto ds = direct_sum(st_->algebra(), parts);
  return {ds.obj, row_map(ds, b, maps)};
}

std::optional<RepMap> SubcatIdeal::quot_inverse(const RepMap& f) const {
  const Obj& m = f.src();
  const Obj& n = f.tgt();
  auto q = quot_hom(n, m);
  std::vector<Equation> eqs{
      {quot_hom(m, m), [&](const RepMap& x) { return x * f; }, RepMap::identity(m)},
      {quot_hom(n, n), [&](const RepMap& x) { return f * x; }, RepMap::identity(n)}};
  auto sol = solve_equations(field(), q->reps(), eqs);
  if (!sol.feasible()) return std::nullopt;
  return q->element(*sol.particular);
}

SubcatIdeal::IsoSearch SubcatIdeal::find_quot_iso(const Obj& m, const Obj& n,
                                                  std::size_t limit) const {
  IsoSearch out;
  if (quot_hom(m, m)->dim() != quot_hom(n, n)->dim()) {
    out.exhaustive = true;
    return out;
  }
  auto q = quot_hom(m, n);
  if (auto all = all_vectors(field(), q->dim(), limit)) {
    out.exhaustive = true;
    for (const auto& v : *all) {
      RepMap f = q->element(v);
      if (is_quot_iso(f)) {
        out.iso = f;
        return out;
      }
    }
    return out;
  }
  for (const auto& r : q->reps()) {
    if (is_quot_iso(r)) {
      out.iso = r;
      return out;
    }
  }
  std::mt19937_64 rng(0x5eedULL + q->dim());
  const long long span = field().is_prime_field()
                             ? static_cast<long long>(field().characteristic())
                             : 7;
  std::uniform_int_distribution<long long> pick(0, span - 1);
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<long long> e(q->dim());
    for (auto& x : e) x = pick(rng) - (span == 7 ? 3 : 0);
    RepMap f = q->element(Mat::from_ints(field(), e.size(), 1, e));
    if (is_quot_iso(f)) {
      out.iso = f;
      return out;
    }
  }
  return out;
}

Subfactor::Subfactor(std::shared_ptr<const StableCategory> st, SubcatSpec x)
    : ideal_(std::move(st), std::move(x)) {}

const ApproxTriangle& Subfactor::suspend_object(const Obj& a) const {
  return *cached_in(mu_, sigma_, a->key(), [&] {
    auto ap = ideal_.left_approximation(a);
    Sextuple t = stable().std_triangle(ap.map);
    auto r = std::make_shared<ApproxTriangle>();
    r->a = a;
    r->xa = ap.obj;
    r->sigma = renamed(t.c, "Sigma(" + a->name() + ")");
    r->alpha = ap.map;
    r->beta = RepMap::trusted(ap.obj, r->sigma, t.g.comps());
    r->gamma = RepMap::trusted(r->sigma, t.shifted, t.h.comps());
    r->ambient = t;
    r->ambient.c = r->sigma;
    r->ambient.g = r->beta;
    r->ambient.h = r->gamma;
    r->ambient.provenance = "approximation triangle";
    return std::shared_ptr<const ApproxTriangle>(std::move(r));
  });
}

RepMap Subfactor::suspend_morphism(const RepMap& f) const {
  const auto& s1 = suspend_object(f.src());
  const auto& s2 = suspend_object(f.tgt());
  const auto& st = stable();
  auto q = st.st_hom(s1.xa, s2.xa);
  Equation e{st.st_hom(s1.a, s2.xa), [&](const RepMap& x) { return x * s1.alpha; },
             s2.alpha * f};
  auto sol = solve_equations(field(), q->reps(), std::span(&e, 1));
  if (!sol.feasible()) {
    throw ConsistencyError("suspend_morphism: no map between the approximations");
  }
  return st.fill_in(s1.ambient, s2.ambient, f, q->element(*sol.particular));
}

QuotTriangle Subfactor::dist_triangle(const RepMap& f) const {
  const auto& st = stable();
  const auto& ap = suspend_object(f.src());
  std::vector<Obj> parts{f.tgt(), ap.xa};
  auto ds = direct_sum(st.algebra(), parts);
  std::vector<RepMap> legs{f, ap.alpha};
  Sextuple t0 = st.std_triangle(column_map(f.src(), ds, legs));
  // The second map of t0 is (-g, k).
  RepMap g = -(t0.g * ds.inj[0]);
  RepMap h = st.fill_in(t0, ap.ambient, RepMap::identity(f.src()), ds.proj[1]);

  QuotTriangle r;
  r.quot.a = f.src();
  r.quot.b = f.tgt();
  r.quot.c = t0.c;
  r.quot.shifted = ap.sigma;
  r.quot.f = f;
  r.quot.g = g;
  r.quot.h = h;
  r.quot.level = Sextuple::Level::Quotient;
  r.quot.provenance = "distinguished triangle";
  r.ambient = t0;
  r.kind = QuotTriangle::Kind::Distinguished;
  r.into = ds.inj[0];
  r.from = ds.proj[0];
  r.sign = -1;
  return r;
}

QuotTriangle Subfactor::induced_triangle(const Sextuple& t) const {
  if (!ideal_.is_monic(t.f)) throw InputError("induced_triangle: first map is not X-monic");
  const auto& st = stable();
  const auto& ap = suspend_object(t.a);
  if (!same_object(t.shifted, ap.ambient.shifted)) {
    throw InputError("induced_triangle: third map does not land in A[1]");
  }
  auto q = st.st_hom(t.c, ap.sigma);
  Equation e{st.st_hom(t.c, ap.ambient.shifted), [&](const RepMap& x) { return ap.gamma * x; },
             t.h};
  auto sol = solve_equations(field(), q->reps(), std::span(&e, 1));
  if (!sol.feasible()) throw ConsistencyError("induced_triangle: no map to the approximation");

  QuotTriangle r;
  r.quot = t;
  r.quot.shifted = ap.sigma;
  r.quot.h = -q->element(*sol.particular);
  r.quot.level = Sextuple::Level::Quotient;
  r.quot.provenance = "induced triangle";
  r.ambient = t;
  r.kind = QuotTriangle::Kind::Induced;
  r.into = RepMap::identity(t.b);
  r.from = r.into;
  r.sign = 1;
  for (const auto& k : sol.kernel) {
    if (!ideal_.is_zero(q->element(k))) r.unique_mod_x = false;
  }
  return r;
}

bool Subfactor::is_triangle_morphism(const Sextuple& t1, const Sextuple& t2,
                                     const TriangleMorphism& m) const {
  return ideal_.equal(m.b * t1.f, t2.f * m.a) && ideal_.equal(m.c * t1.g, t2.g * m.b) &&
         ideal_.equal(suspend_morphism(m.a) * t1.h, t2.h * m.c);
}

bool Subfactor::is_triangle_iso(const Sextuple& t1, const Sextuple& t2,
                                const TriangleMorphism& m) const {
  return is_triangle_morphism(t1, t2, m) && ideal_.is_quot_iso(m.a) &&
         ideal_.is_quot_iso(m.b) && ideal_.is_quot_iso(m.c);
}

std::optional<RepMap> Subfactor::complete_iso(const Sextuple& t1, const Sextuple& t2,
                                              const RepMap& u, const RepMap& v) const {
  if (!ideal_.equal(v * t1.f, t2.f * u)) return std::nullopt;
  if (!ideal_.is_quot_iso(u) || !ideal_.is_quot_iso(v)) return std::nullopt;
  RepMap su = suspend_morphism(u);
  auto q = ideal_.quot_hom(t1.c, t2.c);
  std::vector<Equation> eqs{
      {ideal_.quot_hom(t1.b, t2.c), [&](const RepMap& x) { return x * t1.g; }, t2.g * v},
      {ideal_.quot_hom(t1.c, t2.shifted), [&](const RepMap& x) { return t2.h * x; },
       su * t1.h}};
  auto sol = solve_equations(field(), q->reps(), eqs);
  if (!sol.feasible()) return std::nullopt;
  std::vector<Mat> candidates{*sol.particular};
  if (auto all = all_vectors(field(), sol.kernel.size(), 256)) {
    for (const auto& coeffs : *all) {
      Mat w = *sol.particular;
      for (std::size_t i = 0; i < sol.kernel.size(); ++i) {
        w = w + sol.kernel[i] * coeffs.block(i, 0, 1, 1);
      }
      candidates.push_back(std::move(w));
    }
  } else {
    for (const auto& k : sol.kernel) candidates.push_back(*sol.particular + k);
  }
  for (const auto& c : candidates) {
    RepMap w = q->element(c);
    if (ideal_.is_quot_iso(w)) return w;
  }
  return std::nullopt;
}

Subfactor::Conversion Subfactor::convert_triangle(const QuotTriangle& t) const {
  Conversion out;
  if (t.kind == QuotTriangle::Kind::Distinguished) {
    out.result = induced_triangle(t.ambient);
    TriangleMorphism w{RepMap::identity(t.quot.a), t.into,
                       RepMap::identity(t.quot.c).scaled(t.sign)};
    if (is_triangle_iso(t.quot, out.result.quot, w)) out.witness = w;
    return out;
  }
  out.result = dist_triangle(-t.quot.f);
  const RepMap ia = RepMap::identity(t.quot.a);
  const RepMap ib = RepMap::identity(t.quot.b);
  const std::pair<int, int> signs[] = {{-1, 1}, {1, -1}, {1, 1}, {-1, -1}};
  for (auto [su, sv] : signs) {
    RepMap u = ia.scaled(su), v = ib.scaled(sv);
    if (auto w = complete_iso(t.quot, out.result.quot, u, v)) {
      out.witness = TriangleMorphism{u, v, *w};
      return out;
    }
  }
  return out;
}

RepMap Subfactor::quot_fill_in(const QuotTriangle& t1, const QuotTriangle& t2, const RepMap& a,
                               const RepMap& b, bool skip_correction) const {
  const auto& st = stable();
  const Sextuple& s1 = t1.ambient;
  const Sextuple& s2 = t2.ambient;
  RepMap bi = t2.into * b * t1.from;
  if (!skip_correction) {
    // b f1 - f2 a lies in [X], so it factors through the approximation of A1
    // as t' alpha; X-monicity of f1 gives s with s f1 = alpha.
    RepMap delta = bi * s1.f - s2.f * a;
    const auto& ap = suspend_object(s1.a);
    auto qt = st.st_hom(ap.xa, s2.b);
    Equation et{st.st_hom(s1.a, s2.b), [&](const RepMap& x) { return x * ap.alpha; }, delta};
    auto tp = solve_equations(field(), qt->reps(), std::span(&et, 1));
    if (!tp.feasible()) throw ConsistencyError("quot_fill_in: squares do not commute modulo X");
    auto qs = st.st_hom(s1.b, ap.xa);
    Equation es{st.st_hom(s1.a, ap.xa), [&](const RepMap& x) { return x * s1.f; }, ap.alpha};
    auto s = solve_equations(field(), qs->reps(), std::span(&es, 1));
    if (!s.feasible()) throw ConsistencyError("quot_fill_in: first map is not X-monic");
    bi = bi - qt->element(*tp.particular) * qs->element(*s.particular);
  }
  RepMap c = st.fill_in(s1, s2, a, bi);
  return c.scaled(t1.sign * t2.sign);
}

TriangleMorphism Subfactor::descend_diagram(const Sextuple& t1, const Sextuple& t2,
                                            const TriangleMorphism& m) const {
  auto i1 = induced_triangle(t1);
  auto i2 = induced_triangle(t2);
  if (!is_triangle_morphism(i1.quot, i2.quot, m)) {
    throw ConsistencyError("descend_diagram: Sigma(a) h1 and h2 c differ modulo X");
  }
  return m;
}

QuotOctahedron Subfactor::quot_octahedron(const RepMap& f, const RepMap& a) const {
  RepMap af = a * f;
  if (!ideal_.is_monic(f) || !ideal_.is_monic(a) || !ideal_.is_monic(af)) {
    throw InputError("quot_octahedron: f, a and a f must be X-monic");
  }
  auto o = stable().octahedron(f, a);
  QuotOctahedron r;
  r.tf = induced_triangle(o.tf);
  r.ta = induced_triangle(o.ta);
  r.taf = induced_triangle(o.taf);
  r.s = o.s;
  r.t = o.t;
  const RepMap& g = r.tf.quot.g;
  const RepMap& h = r.tf.quot.h;
  const RepMap& b = r.ta.quot.g;
  const RepMap& c = r.ta.quot.h;
  const RepMap& d = r.taf.quot.g;
  const RepMap& e = r.taf.quot.h;
  auto check = [&](bool ok, const char* name) {
    if (!ok) r.failures.emplace_back(name);
  };
  check(ideal_.equal(o.s * g, d * a), "s g = d a");
  check(ideal_.equal(e * o.s, h), "e s = h");
  check(ideal_.equal(o.t * d, b), "t d = b");
  check(ideal_.equal(c * o.t, suspend_morphism(f) * e), "c t = Sigma(f) e");

  RepMap sg = suspend_morphism(g);
  r.third = o.third;
  r.third.shifted = sigma(r.tf.quot.c);
  r.third.h = sg * c;
  r.third.level = Sextuple::Level::Quotient;
  r.third.provenance = "octahedron third column";
  r.s_monic = ideal_.is_monic(o.s);
  check(r.s_monic, "s is X-monic");
  if (r.s_monic) {
    r.third_induced = induced_triangle(o.third);
    check(ideal_.equal(r.third_induced.quot.h, r.third.h), "third column is induced");
    check(r.third_induced.unique_mod_x, "third map unique modulo X");
  }
  return r;
}

const Subfactor& Subfactor::dual() const {
  std::call_once(dual_once_, [&] {
    auto op = stable().algebra()->opposite();
    auto st = std::make_shared<const StableCategory>(op);
    SubcatSpec dx;
    dx.name = "D" + ideal_.spec().name;
    for (const auto& g : ideal_.spec().generators) dx.generators.push_back(subfac::dual(g, op));
    dual_ = std::make_unique<Subfactor>(st, std::move(dx));
  });
  return *dual_;
}

const Subfactor::LoopTriangle& Subfactor::loop_object(const Obj& c) const {
  return *cached_in(mu_, loop_, c->key(), [&] {
    const auto& d = dual();
    const auto& alg = stable().algebra();
    const auto& ap = d.suspend_object(subfac::dual(c, d.stable().algebra()));
    auto l = std::make_shared<LoopTriangle>();
    l->omega = renamed(subfac::dual(ap.sigma, alg), "Omega(" + c->name() + ")");
    l->xc = subfac::dual(ap.xa, alg);
    l->c = c;
    l->incl = RepMap::trusted(l->omega, l->xc, subfac::dual(ap.beta, alg).comps());
    l->beta = RepMap::trusted(l->xc, c, subfac::dual(ap.alpha, alg).comps());
    return std::shared_ptr<const LoopTriangle>(std::move(l));
  });
}

Sextuple Subfactor::left_triangle(const RepMap& g) const {
  const auto& d = dual();
  const auto& alg = stable().algebra();
  auto t = d.dist_triangle(subfac::dual(g, d.stable().algebra())).quot;
  Sextuple out;
  out.a = subfac::dual(t.c, alg);
  out.b = g.src();
  out.c = g.tgt();
  out.shifted = loop_object(g.tgt()).omega;
  out.f = RepMap::trusted(out.a, out.b, subfac::dual(t.g, alg).comps());
  out.g = g;
  out.h = RepMap::trusted(out.shifted, out.a, subfac::dual(t.h, alg).comps());
  out.level = Sextuple::Level::Quotient;
  out.provenance = "left triangle";
  return out;
}

}  // namespace subfac
