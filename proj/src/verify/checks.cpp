#include <algorithm>
#include <random>

#include "subfac/errors.hpp"
#include "subfac/verify/serialize.hpp"
#include "subfac/verify/verify.hpp"

namespace subfac {

using nlohmann::json;

namespace {

const SubcatIdeal& a_ideal(const Workbench& wb, const Setting& s) {
  return wb.subfactor(s.a).ideal();
}

// "lTR3" runs as "rTR3" on the dual workbench.
std::string base_name(const std::string& check) {
  if (check.size() == 4 && check.compare(0, 3, "lTR") == 0) return "rTR" + check.substr(3);
  return check;
}

std::uint64_t salt_of(std::size_t i, std::size_t j, std::uint64_t k) {
  return (static_cast<std::uint64_t>(i) * 1000003ULL + j) * 7919ULL + k;
}

Outcome expect(bool ok, const char* what) { return ok ? Outcome::pass() : Outcome::fail(what); }

Outcome check_rtr0(const Workbench& wb, const Setting& s, const Obj& a) {
  const auto& sub = wb.subfactor(s.x);
  Obj zero = renamed(Rep::zero(wb.algebra()), "0");
  const auto& d = wb.dist_triangle(s.x, RepMap::zero(zero, a));
  Sextuple z;
  z.a = zero;
  z.b = a;
  z.c = a;
  z.shifted = d.quot.shifted;
  z.f = RepMap::zero(zero, a);
  z.g = RepMap::identity(a);
  z.h = RepMap::zero(a, z.shifted);
  z.level = Sextuple::Level::Quotient;
  auto w = sub.complete_iso(z, d.quot, RepMap::identity(zero), RepMap::identity(a));
  return expect(w.has_value(), "(0, A, A, 0, 1, 0) is not isomorphic to a distinguished triangle");
}

Outcome check_rtr1(const Workbench& wb, const Setting& s, const RepMap& f) {
  const auto& sub = wb.subfactor(s.x);
  const auto& id = sub.ideal();
  const Sextuple& t = wb.dist_triangle(s.x, f).quot;
  if (!a_ideal(wb, s).in_add(t.c)) return Outcome::fail("third object not in add(A)");
  if (!id.is_zero(t.g * t.f)) return Outcome::fail("g f is not zero modulo X");
  if (!id.is_zero(t.h * t.g)) return Outcome::fail("h g is not zero modulo X");
  if (!id.is_zero(sub.suspend_morphism(f) * t.h)) {
    return Outcome::fail("Sigma(f) h is not zero modulo X");
  }
  return Outcome::pass();
}

Outcome check_rtr2(const Workbench& wb, const Setting& s, const VerifyConfig& cfg,
                   const RepMap& f) {
  const auto& sub = wb.subfactor(s.x);
  const auto& st = wb.stable();
  const auto& id = sub.ideal();
  const QuotTriangle& d = wb.dist_triangle(s.x, f);
  const Sextuple& t = d.quot;
  Sextuple r;
  r.a = t.b;
  r.b = t.c;
  r.c = t.shifted;
  r.shifted = sub.sigma(t.b);
  r.f = t.g;
  r.g = t.h;
  r.h = sub.suspend_morphism(f);
  if (!cfg.mutate_rotation_sign) r.h = -r.h;
  r.level = Sextuple::Level::Quotient;
  r.provenance = "rotation";

  // Ambient triangle B -> C -> Sigma A -> B[1] with third map f[1] gamma_A.
  Sextuple amb;
  amb.a = t.b;
  amb.b = t.c;
  amb.c = t.shifted;
  amb.shifted = st.shift(t.b, 1);
  amb.f = t.g;
  amb.g = t.h;
  amb.h = st.shift_map(f, 1) * sub.suspend_object(f.src()).gamma;
  if (!st.is_distinguished(amb)) return Outcome::fail("ambient rotation is not distinguished");
  if (!id.is_monic(t.g)) return Outcome::fail("g is not X-monic");
  QuotTriangle ind = sub.induced_triangle(amb);
  if (!id.equal(ind.quot.h, r.h)) {
    return Outcome::fail("rotated third map differs from the induced one");
  }
  if (!sub.convert_triangle(ind).witness) {
    return Outcome::fail("induced rotation has no witnessed distinguished form");
  }
  const QuotTriangle& dg = wb.dist_triangle(s.x, t.g);
  auto w = sub.complete_iso(r, dg.quot, RepMap::identity(r.a), RepMap::identity(r.b));
  return expect(w.has_value(), "rotated triangle is not isomorphic to dist(g)");
}

Outcome check_rtr3(const Workbench& wb, const Setting& s, const VerifyConfig& cfg,
                   const std::vector<RepMap>& m) {
  const auto& sub = wb.subfactor(s.x);
  const RepMap &f1 = m[0], &f2 = m[1], &a = m[2], &b = m[3];
  if (!sub.ideal().equal(b * f1, f2 * a)) return Outcome::skip();
  const QuotTriangle& t1 = wb.dist_triangle(s.x, f1);
  const QuotTriangle& t2 = wb.dist_triangle(s.x, f2);
  RepMap c = sub.quot_fill_in(t1, t2, a, b, cfg.mutate_drop_correction);
  return expect(sub.is_triangle_morphism(t1.quot, t2.quot, {a, b, c}),
                "filled-in triple is not a morphism of triangles");
}

Outcome check_rtr4(const Workbench& wb, const Setting& s, const RepMap& f, const RepMap& a) {
  const auto& sub = wb.subfactor(s.x);
  const auto& id = sub.ideal();
  if (!id.is_monic(f) || !id.is_monic(a) || !id.is_monic(a * f)) return Outcome::skip();
  QuotOctahedron o = sub.quot_octahedron(f, a);
  if (!o.failures.empty()) {
    std::string note;
    for (const auto& x : o.failures) note += (note.empty() ? "" : "; ") + x;
    return Outcome::fail(note);
  }
  return expect(sub.convert_triangle(o.third_induced).witness.has_value(),
                "third column has no witnessed distinguished form");
}

Outcome check_delta_nabla(const Workbench& wb, const Setting& s, const RepMap& f) {
  const auto& sub = wb.subfactor(s.x);
  const auto& id = sub.ideal();
  const Sextuple& t = wb.dist_triangle(s.x, f).quot;
  Sextuple l = sub.left_triangle(t.g);
  auto q = id.quot_hom(t.a, l.a);
  Equation e{id.quot_hom(t.a, t.b), [&](const RepMap& x) { return l.f * x; }, f};
  auto sol = solve_equations(wb.field(), q->reps(), std::span(&e, 1));
  if (!sol.feasible()) return Outcome::fail("f does not factor through the left triangle");
  const Field field = wb.field();
  std::vector<Mat> cands{*sol.particular};
  bool exhaustive = sol.kernel.empty();
  if (field.is_prime_field() && !sol.kernel.empty()) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < sol.kernel.size() && total <= 4096; ++i) {
      total *= field.characteristic();
    }
    if (total <= 4096) {
      exhaustive = true;
      std::vector<long long> digits(sol.kernel.size(), 0);
      const long long p = field.characteristic();
      while (true) {
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
        if (i == digits.size()) break;
        Mat c = *sol.particular;
        for (std::size_t k = 0; k < digits.size(); ++k) c = c + sol.kernel[k].scaled(digits[k]);
        cands.push_back(std::move(c));
      }
    }
  }
  if (!exhaustive) {
    for (const auto& k : sol.kernel) cands.push_back(*sol.particular + k);
  }
  for (const auto& c : cands) {
    if (id.is_quot_iso(q->element(c))) return Outcome::pass();
  }
  if (exhaustive) return Outcome::fail("no isomorphism between the right and left first objects");
  return Outcome::inconclusive("no isomorphism found among sampled solutions");
}

Outcome check_mutation(const Workbench& wb, const Setting& s, const Obj& c) {
  const auto& sub = wb.subfactor(s.x);
  const auto& id = sub.ideal();
  const auto& ai = a_ideal(wb, s);
  const auto& ap = sub.suspend_object(c);
  const auto& lp = sub.loop_object(c);
  std::string note;
  auto require = [&](bool ok, const char* what) {
    if (!ok) note += (note.empty() ? "" : "; ") + std::string(what);
  };
  require(ai.in_add(ap.sigma), "Sigma(C) not in add(A)");
  require(id.is_epic(ap.beta), "X_C -> Sigma(C) is not X-epic");
  require(ai.in_add(lp.omega), "Omega(C) not in add(A)");
  require(id.is_monic(lp.incl), "Omega(C) -> X^C is not X-monic");
  return note.empty() ? Outcome::pass() : Outcome::fail(c->name() + ": " + note);
}

Outcome check_sigma_faithful(const Workbench& wb, const Setting& s, const Obj& m, const Obj& n) {
  const auto& sub = wb.subfactor(s.x);
  const auto& id = sub.ideal();
  auto q1 = id.quot_hom(m, n);
  auto q2 = id.quot_hom(sub.sigma(m), sub.sigma(n));
  if (q1->dim() != q2->dim()) return Outcome::fail("Sigma changes the quotient hom dimension");
  if (q1->dim() == 0) return Outcome::pass();
  std::vector<Mat> cols;
  for (const auto& r : q1->reps()) cols.push_back(q2->coords(sub.suspend_morphism(r)));
  Mat mat = Mat::hstack(wb.field(), q2->dim(), cols);
  return expect(mat.rank() == q1->dim(), "Sigma is not injective on quotient homs");
}

Outcome check_sigma_dense(const Workbench& wb, const Setting& s, const Obj& c) {
  const auto& sub = wb.subfactor(s.x);
  const auto& id = sub.ideal();
  bool inconclusive = false;
  auto test = [&](const Obj& m, const char* what) -> std::optional<Outcome> {
    auto r = id.find_quot_iso(m, c);
    if (r.iso) return std::nullopt;
    if (r.exhaustive) return Outcome::fail(what);
    inconclusive = true;
    return std::nullopt;
  };
  if (auto o = test(sub.loop_object(sub.sigma(c)).omega, "Omega Sigma C is not isomorphic to C")) {
    return *o;
  }
  if (auto o = test(sub.sigma(sub.loop_object(c).omega), "Sigma Omega C is not isomorphic to C")) {
    return *o;
  }
  if (inconclusive) return Outcome::inconclusive("no quotient isomorphism found by sampling");
  return Outcome::pass();
}

// Runs the instances and folds them into a verdict; evidence carries the
// setting so it replays on its own.
Verdict run_check(const Workbench& wb, const Setting& s, const VerifyConfig& cfg,
                  const std::string& name, const std::vector<Instance>& insts,
                  std::size_t skipped, bool sampled) {
  auto outs = run_instances(
      insts.size(), [&](std::size_t i) { return check_instance(wb, s, cfg, insts[i]); },
      cfg.executor);
  Verdict v;
  v.check = name;
  v.sampled = sampled;
  v.skipped = skipped;
  bool inconclusive = false;
  for (std::size_t i = 0; i < outs.size(); ++i) {
    const auto& o = outs[i];
    switch (o.kind) {
      case Outcome::Kind::Skip: ++v.skipped; continue;
      case Outcome::Kind::Inconclusive: inconclusive = true; break;
      case Outcome::Kind::Fail: {
        ++v.failures;
        if (v.evidence.size() < 3) {
          auto gens = [](const SubcatSpec& sp) {
            json g = json::array();
            for (const auto& x : sp.generators) g.push_back(to_json(x));
            return json{{"name", sp.name}, {"generators", g}};
          };
          json maps = json::array();
          for (const auto& m : insts[i].maps) maps.push_back(to_json(m));
          json ev{{"check", insts[i].check}, {"index", i}, {"note", o.note},
                  {"a", gens(s.a)}, {"x", gens(s.x)}, {"maps", maps}};
          if (cfg.mutate_rotation_sign) ev["mutate_rotation_sign"] = true;
          if (cfg.mutate_drop_correction) ev["mutate_drop_correction"] = true;
          v.evidence.push_back(std::move(ev));
        }
        break;
      }
      case Outcome::Kind::Pass: break;
    }
    ++v.instances;
  }
  if (v.failures > 0) {
    v.status = Status::Fail;
  } else if (sampled || inconclusive) {
    v.status = Status::Inconclusive;
  }
  return v;
}

// Quotient (or stable) classes between every ordered pair of objects.
struct PairClasses {
  std::vector<std::vector<ClassList>> lists;
  std::vector<std::vector<std::size_t>> dims;
};

template <class HomOf>
PairClasses pair_classes(const std::vector<Obj>& objs, const VerifyConfig& cfg,
                         std::uint64_t salt, HomOf hom_of) {
  PairClasses pc;
  const std::size_t n = objs.size();
  pc.lists.assign(n, std::vector<ClassList>(n));
  pc.dims.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      QuotPtr q = hom_of(objs[i], objs[j]);
      pc.dims[i][j] = q->dim();
      pc.lists[i][j] = enumerate_classes(*q, cfg, salt_of(i, j, salt));
    }
  }
  return pc;
}

// Single-map instances over all pairs.
Verdict single_map_check(const Workbench& wb, const Setting& s, const VerifyConfig& cfg,
                         const std::string& name, const std::vector<Obj>& objs,
                         const PairClasses& pc) {
  std::vector<Instance> insts;
  std::size_t skipped = 0;
  bool sampled = false;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (std::size_t j = 0; j < objs.size(); ++j) {
      const auto& cl = pc.lists[i][j];
      if (cl.skipped) ++skipped;
      sampled = sampled || cl.sampled;
      for (const auto& f : cl.maps) insts.push_back({name, {f}});
    }
  }
  return run_check(wb, s, cfg, name, insts, skipped, sampled);
}

void require_x_in_a(const Workbench& wb, const Setting& s) {
  const auto& ai = a_ideal(wb, s);
  for (const auto& g : s.x.generators) {
    if (!ai.in_add(g)) throw InputError("X generator " + g->name() + " is not in add(A)");
  }
}

}  // namespace

Outcome check_instance(const Workbench& wb, const Setting& s, const VerifyConfig& cfg,
                       const Instance& inst) {
  const std::string name = base_name(inst.check);
  const auto& m = inst.maps;
  auto need = [&](std::size_t k) {
    if (m.size() != k) throw InputError(inst.check + ": expected " + std::to_string(k) + " maps");
  };
  const auto& id = wb.subfactor(s.x).ideal();
  if (name == "A2" || name == "A2-dual") {
    need(1);
    const bool dual = name == "A2-dual";
    if (dual ? !id.is_epic(m[0]) : !id.is_monic(m[0])) return Outcome::skip();
    Obj c = dual ? wb.cocone(m[0]) : wb.cone(m[0]);
    return expect(a_ideal(wb, s).in_add(c), dual ? "cocone not in add(A)" : "cone not in add(A)");
  }
  if (name == "rTR0") return need(1), check_rtr0(wb, s, m[0].src());
  if (name == "rTR1") return need(1), check_rtr1(wb, s, m[0]);
  if (name == "rTR2") return need(1), check_rtr2(wb, s, cfg, m[0]);
  if (name == "rTR3") return need(4), check_rtr3(wb, s, cfg, m);
  if (name == "rTR4") return need(2), check_rtr4(wb, s, m[0], m[1]);
  if (name == "rigid" || name == "mutation-invariant") {
    need(2);
    const auto& st = wb.stable();
    return expect(st.st_hom(m[0].src(), st.shift(m[1].src(), 1))->dim() == 0,
                  "st_hom(X_i, Y[1]) is not zero");
  }
  if (name == "extension-closed") {
    need(1);
    return expect(a_ideal(wb, s).in_add(wb.cocone(m[0])), "extension not in add(A)");
  }
  if (name == "sigma-faithful") return need(2), check_sigma_faithful(wb, s, m[0].src(), m[1].src());
  if (name == "sigma-dense") return need(1), check_sigma_dense(wb, s, m[0].src());
  if (name == "delta-nabla") return need(1), check_delta_nabla(wb, s, m[0]);
  if (name == "mutation") return need(1), check_mutation(wb, s, m[0].src());
  throw InputError("unknown check '" + inst.check + "'");
}

Outcome replay_instance(const Workbench& wb, const Setting& s, const VerifyConfig& cfg,
                        const json& ev) {
  const std::string check = ev.at("check").get<std::string>();
  const bool left = check.size() == 4 && check.compare(0, 3, "lTR") == 0;
  const Workbench& w = left ? wb.dual() : wb;
  auto spec = [&](const char* key, const SubcatSpec& fallback) {
    if (!ev.contains(key)) return left ? wb.dual_spec(fallback) : fallback;
    SubcatSpec sp;
    sp.name = ev[key].value("name", std::string());
    for (const auto& g : ev[key].at("generators")) sp.generators.push_back(obj_from_json(w.algebra(), g));
    return sp;
  };
  Setting st{spec("a", s.a), spec("x", s.x)};
  VerifyConfig c = cfg;
  c.mutate_rotation_sign = c.mutate_rotation_sign || ev.value("mutate_rotation_sign", false);
  c.mutate_drop_correction = c.mutate_drop_correction || ev.value("mutate_drop_correction", false);
  Instance inst{check, {}};
  for (const auto& m : ev.at("maps")) inst.maps.push_back(map_from_json(w.algebra(), m));
  try {
    return check_instance(w, st, c, inst);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    return Outcome::fail(e.what());
  }
}

std::vector<Verdict> check_hypotheses(const Workbench& wb, const Setting& s,
                                      const VerifyConfig& cfg) {
  require_x_in_a(wb, s);
  auto objs = wb.bounded_sums(s.a, cfg.multiplicity_bound);
  const auto& st = wb.stable();
  auto pc = pair_classes(objs, cfg, 0xa2,
                         [&](const Obj& m, const Obj& n) { return st.st_hom(m, n); });
  return {single_map_check(wb, s, cfg, "A2", objs, pc),
          single_map_check(wb, s, cfg, "A2-dual", objs, pc)};
}

std::vector<Verdict> verify_axioms(const Workbench& wb, const Setting& s, const VerifyConfig& cfg,
                                   bool left) {
  if (left) {
    const Workbench& d = wb.dual();
    auto out = verify_axioms(d, {wb.dual_spec(s.a), wb.dual_spec(s.x)}, cfg, false);
    for (auto& v : out) {
      v.check[0] = 'l';
      for (auto& e : v.evidence) e["check"] = v.check;
    }
    return out;
  }
  require_x_in_a(wb, s);
  const auto& sub = wb.subfactor(s.x);
  const auto& st = wb.stable();
  auto objs = wb.bounded_sums(s.a, cfg.multiplicity_bound);
  const std::size_t n = objs.size();
  auto quot = pair_classes(objs, cfg, 0x71,
                           [&](const Obj& m, const Obj& k) { return sub.ideal().quot_hom(m, k); });
  std::vector<Verdict> out;

  std::vector<Instance> r0;
  for (const auto& a : objs) r0.push_back({"rTR0", {RepMap::identity(a)}});
  out.push_back(run_check(wb, s, cfg, "rTR0", r0, 0, cfg.mode == Mode::Sampled));
  out.push_back(single_map_check(wb, s, cfg, "rTR1", objs, quot));
  out.push_back(single_map_check(wb, s, cfg, "rTR2", objs, quot));

  // rTR3: (f1: A1 -> B1, f2: A2 -> B2, a: A1 -> A2, b: B1 -> B2).
  {
    std::vector<Instance> insts;
    std::size_t skipped = 0;
    bool sampled = false;
    std::mt19937_64 rng(cfg.seed * 0x2545f4914f6cdd1dULL + 3);
    for (std::size_t a1 = 0; a1 < n; ++a1)
      for (std::size_t b1 = 0; b1 < n; ++b1)
        for (std::size_t a2 = 0; a2 < n; ++a2)
          for (std::size_t b2 = 0; b2 < n; ++b2) {
            const ClassList* ls[4] = {&quot.lists[a1][b1], &quot.lists[a2][b2], &quot.lists[a1][a2],
                                      &quot.lists[b1][b2]};
            const std::size_t joint = quot.dims[a1][b1] + quot.dims[a2][b2] +
                                      quot.dims[a1][a2] + quot.dims[b1][b2];
            if (cfg.mode == Mode::Exhaustive) {
              if (joint > cfg.hom_dim_bound) {
                ++skipped;
                continue;
              }
              for (const auto& f1 : ls[0]->maps)
                for (const auto& f2 : ls[1]->maps)
                  for (const auto& a : ls[2]->maps)
                    for (const auto& b : ls[3]->maps) insts.push_back({"rTR3", {f1, f2, a, b}});
            } else {
              sampled = true;
              for (std::size_t k = 0; k < cfg.samples; ++k) {
                std::vector<RepMap> maps;
                for (auto* l : ls) maps.push_back(l->maps[rng() % l->maps.size()]);
                insts.push_back({"rTR3", std::move(maps)});
              }
            }
          }
    out.push_back(run_check(wb, s, cfg, "rTR3", insts, skipped, sampled));
  }

  // rTR4: stable representatives f: A -> B, a: B -> C with f, a, a f X-monic.
  {
    auto stab = pair_classes(objs, cfg, 0x74,
                             [&](const Obj& m, const Obj& k) { return st.st_hom(m, k); });
    std::vector<Instance> insts;
    std::size_t skipped = 0;
    bool sampled = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const auto& lf = stab.lists[i][j];
          const auto& la = stab.lists[j][k];
          if (cfg.mode == Mode::Exhaustive &&
              stab.dims[i][j] + stab.dims[j][k] > cfg.hom_dim_bound) {
            ++skipped;
            continue;
          }
          sampled = sampled || lf.sampled || la.sampled;
          for (const auto& f : lf.maps)
            for (const auto& a : la.maps) insts.push_back({"rTR4", {f, a}});
        }
    out.push_back(run_check(wb, s, cfg, "rTR4", insts, skipped, sampled));
  }
  return out;
}

Verdict check_rigid(const Workbench& wb, const SubcatSpec& x) {
  std::vector<Instance> insts;
  for (const auto& a : x.generators)
    for (const auto& b : x.generators)
      insts.push_back({"rigid", {RepMap::identity(a), RepMap::identity(b)}});
  VerifyConfig cfg;
  cfg.executor = Executor::Serial;
  return run_check(wb, {x, x}, cfg, "rigid", insts, 0, false);
}

Verdict check_extension_closed(const Workbench& wb, const SubcatSpec& a, const VerifyConfig& cfg) {
  const auto& st = wb.stable();
  auto objs = wb.bounded_sums(a, cfg.multiplicity_bound);
  std::vector<Instance> insts;
  std::size_t skipped = 0;
  bool sampled = false;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (std::size_t j = 0; j < objs.size(); ++j) {
      auto q = st.st_hom(objs[i], st.shift(objs[j], 1));
      auto cl = enumerate_classes(*q, cfg, salt_of(i, j, 0xec));
      if (cl.skipped) ++skipped;
      sampled = sampled || cl.sampled;
      for (const auto& h : cl.maps) insts.push_back({"extension-closed", {h}});
    }
  }
  return run_check(wb, {a, SubcatSpec::zero()}, cfg, "extension-closed", insts, skipped, sampled);
}

Verdict check_sigma_equivalence(const Workbench& wb, const Setting& s, const VerifyConfig& cfg) {
  const auto& id = wb.subfactor(s.x).ideal();
  std::vector<Obj> cat;
  for (const auto& g : s.a.generators) {
    if (!id.in_add(g)) cat.push_back(g);
  }
  std::vector<Instance> insts;
  for (const auto& m : cat)
    for (const auto& n : cat)
      insts.push_back({"sigma-faithful", {RepMap::identity(m), RepMap::identity(n)}});
  for (const auto& c : cat) insts.push_back({"sigma-dense", {RepMap::identity(c)}});
  std::size_t skipped = 0;
  bool sampled = false;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (std::size_t j = 0; j < cat.size(); ++j) {
      auto cl = enumerate_classes(*id.quot_hom(cat[i], cat[j]), cfg, salt_of(i, j, 0xde));
      if (cl.skipped) ++skipped;
      sampled = sampled || cl.sampled;
      for (const auto& f : cl.maps) insts.push_back({"delta-nabla", {f}});
    }
  }
  return run_check(wb, s, cfg, "sigma-equivalence", insts, skipped, sampled);
}

namespace {

Verdict mutation_core(const Workbench& wb, const Setting& s, const VerifyConfig& cfg) {
  std::vector<Instance> insts;
  for (const auto& c : s.a.generators) insts.push_back({"mutation", {RepMap::identity(c)}});
  return run_check(wb, s, cfg, "mutation-pair", insts, 0, false);
}

Verdict mutation_invariant(const Workbench& wb, const Setting& s, const VerifyConfig& cfg) {
  std::vector<Instance> insts;
  for (const auto& x : s.x.generators)
    for (const auto& a : s.a.generators)
      insts.push_back({"mutation-invariant", {RepMap::identity(x), RepMap::identity(a)}});
  return run_check(wb, s, cfg, "mutation-invariant", insts, 0, false);
}

}  // namespace

Verdict check_mutation_pair(const Workbench& wb, const Setting& s, const VerifyConfig& cfg) {
  Verdict v = mutation_core(wb, s, cfg);
  if (v.status != Status::Pass) return v;
  if (check_rigid(wb, s.x).status != Status::Pass) return v;
  if (check_extension_closed(wb, s.a, cfg).status != Status::Pass) return v;
  Verdict inv = mutation_invariant(wb, s, cfg);
  if (inv.status == Status::Fail) {
    v.status = Status::Fail;
    v.failures += inv.failures;
    v.note = "mutation pair and extension closed, but st_hom(X, A[1]) is not zero";
    for (auto& e : inv.evidence) v.evidence.push_back(std::move(e));
  }
  return v;
}

json ClassifyRow::to_json() const {
  json vs = json::array();
  for (const auto& v : verdicts) vs.push_back(v.to_json());
  return {{"a", a_name},
          {"x", x_name},
          {"a_indices", a},
          {"x_indices", x},
          {"hypotheses", hypotheses},
          {"dual_hypotheses", dual_hypotheses},
          {"rigid", rigid},
          {"right_triangulated", right_triangulated},
          {"pretriangulated", pretriangulated},
          {"extension_closed", extension_closed},
          {"mutation_pair", mutation_pair},
          {"triangulated", triangulated},
          {"biconditional_checked", biconditional_checked},
          {"violation", violation},
          {"invariant_violation", invariant_violation},
          {"verdicts", vs}};
}

json ClassifyTable::to_json() const {
  json rs = json::array();
  for (const auto& r : rows) rs.push_back(r.to_json());
  return {{"rows", rs}, {"violations", violations}};
}

ClassifyTable classify_all(const Workbench& wb, const VerifyConfig& cfg) {
  const auto& cat = wb.catalog();
  if (cat.empty()) throw UnsupportedError("classify needs a catalog (serial algebra or supplied)");
  if (cat.size() > 12) throw UnsupportedError("catalog too large to classify exhaustively");
  auto spec_of = [&](const std::vector<std::size_t>& idx, bool full) {
    SubcatSpec sp;
    for (auto i : idx) sp.generators.push_back(cat[i]);
    if (idx.empty()) {
      sp.name = "0";
    } else if (full) {
      sp.name = "T";
    } else {
      sp.name = "add(";
      for (std::size_t k = 0; k < idx.size(); ++k) sp.name += (k ? "," : "") + cat[idx[k]]->name();
      sp.name += ")";
    }
    return sp;
  };
  auto pass = [](const Verdict& v) { return v.status == Status::Pass; };
  ClassifyTable table;
  const std::size_t n = cat.size();
  const std::size_t full = (std::size_t{1} << n) - 1;
  for (std::size_t am = 1; am <= full; ++am) {
    // X ranges over the submasks of A, smallest first.
    std::vector<std::size_t> subs;
    for (std::size_t xm = am;; xm = (xm - 1) & am) {
      subs.push_back(xm);
      if (xm == 0) break;
    }
    std::reverse(subs.begin(), subs.end());
    for (std::size_t xm : subs) {
      ClassifyRow row;
      for (std::size_t i = 0; i < n; ++i) {
        if (am >> i & 1) row.a.push_back(i);
        if (xm >> i & 1) row.x.push_back(i);
      }
      Setting s{spec_of(row.a, am == full), spec_of(row.x, false)};
      row.a_name = s.a.name;
      row.x_name = s.x.name;
      auto hyp = check_hypotheses(wb, s, cfg);
      row.hypotheses = pass(hyp[0]);
      row.dual_hypotheses = pass(hyp[1]);
      Verdict rigid = check_rigid(wb, s.x);
      row.rigid = pass(rigid);
      row.right_triangulated = row.hypotheses;
      row.pretriangulated = row.hypotheses && row.dual_hypotheses;
      Verdict ext = check_extension_closed(wb, s.a, cfg);
      row.extension_closed = pass(ext);
      Verdict mut = mutation_core(wb, s, cfg);
      row.mutation_pair = pass(mut);
      Verdict sig = check_sigma_equivalence(wb, s, cfg);
      row.triangulated = row.pretriangulated && pass(sig);
      row.verdicts = {hyp[0], hyp[1], rigid, ext, mut, sig};
      if (row.rigid && row.hypotheses && row.dual_hypotheses) {
        row.biconditional_checked = true;
        row.violation = (row.mutation_pair && row.extension_closed) != row.triangulated;
      }
      if (row.rigid && row.mutation_pair && row.extension_closed) {
        Verdict inv = mutation_invariant(wb, s, cfg);
        row.invariant_violation = !pass(inv);
        row.verdicts.push_back(inv);
      }
      if (row.violation || row.invariant_violation) ++table.violations;
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

}  // namespace subfac
