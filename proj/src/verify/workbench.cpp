#include <algorithm>
#include <random>

#include "subfac/errors.hpp"
#include "subfac/verify/verify.hpp"

namespace subfac {

using nlohmann::json;

void VerifyConfig::validate(Field field) const {
  if (hom_dim_bound == 0) throw InputError("hom-dim bound must be at least 1");
  if (multiplicity_bound == 0) throw InputError("multiplicity bound must be at least 1");
  if (mode == Mode::Exhaustive && !field.is_prime_field()) {
    throw InputError("exhaustive mode needs a prime field; use sampled mode over Q");
  }
  if (mode == Mode::Sampled && samples == 0) throw InputError("sampled mode needs samples >= 1");
}

json VerifyConfig::to_json() const {
  json j{{"hom_dim_bound", hom_dim_bound},
         {"multiplicity_bound", multiplicity_bound},
         {"mode", mode == Mode::Exhaustive ? "exhaustive" : "sampled"},
         {"seed", seed}};
  if (mode == Mode::Sampled) j["samples"] = samples;
  if (mutate_rotation_sign) j["mutate_rotation_sign"] = true;
  if (mutate_drop_correction) j["mutate_drop_correction"] = true;
  return j;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

json Verdict::to_json() const {
  json j{{"check", check},
         {"status", to_string(status)},
         {"statistics",
          {{"instances", instances}, {"failures", failures}, {"skipped", skipped},
           {"sampled", sampled}}},
         {"evidence", evidence}};
  if (!note.empty()) j["note"] = note;
  return j;
}

std::string spec_key(const SubcatSpec& s) {
  std::string k = "[";
  for (const auto& g : s.generators) {
    k += g->key();
    k += ';';
  }
  return k + "]";
}

std::string map_key(const RepMap& f) {
  std::string k = f.src()->key() + "|" + f.tgt()->key() + "|";
  for (const auto& c : f.comps()) c.append_key(k);
  return k;
}

std::vector<Obj> interval_catalog(const AlgebraPtr& alg) {
  if (!alg->is_serial()) throw UnsupportedError("interval catalog needs a serial algebra");
  const std::size_t n = alg->vertex_count();
  std::size_t longest = 0;
  for (std::size_t v = 0; v < n; ++v) longest = std::max(longest, projective_length(alg, v));
  std::vector<Obj> out;
  for (std::size_t l = 1; l < longest; ++l) {
    for (std::size_t v = 0; v < n; ++v) {
      if (l >= projective_length(alg, v)) continue;
      Obj m = interval(alg, v, l);
      if (n > 1 && l == 1) m = renamed(m, "S" + alg->quiver().vertex_label(v));
      out.push_back(m);
    }
  }
  return out;
}

Workbench::Workbench(AlgebraPtr alg, std::vector<Obj> catalog)
    : alg_(std::move(alg)), st_(std::make_shared<const StableCategory>(alg_)) {
  if (!catalog.empty()) {
    supplied_ = true;
    catalog_ = std::move(catalog);
    for (const auto& c : catalog_) {
      if (c->algebra() != alg_) throw InputError("catalog object over another algebra");
    }
  } else if (alg_->is_serial()) {
    catalog_ = interval_catalog(alg_);
  }
}

const Subfactor& Workbench::subfactor(const SubcatSpec& x) const {
  const std::string key = spec_key(x);
  {
    std::shared_lock lock(mu_);
    auto it = subs_.find(key);
    if (it != subs_.end()) return *it->second;
  }
  std::unique_lock lock(mu_);
  auto& slot = subs_[key];
  if (!slot) slot = std::make_unique<Subfactor>(st_, x);
  return *slot;
}

Obj Workbench::cone(const RepMap& f) const {
  const std::string key = map_key(f);
  {
    std::shared_lock lock(mu_);
    auto it = cones_.find(key);
    if (it != cones_.end()) return it->second;
  }
  Obj c = st_->std_triangle(f).c;
  std::unique_lock lock(mu_);
  return cones_.try_emplace(key, c).first->second;
}

Obj Workbench::cocone(const RepMap& f) const {
  const std::string key = map_key(f);
  {
    std::shared_lock lock(mu_);
    auto it = cocones_.find(key);
    if (it != cocones_.end()) return it->second;
  }
  Obj c = st_->shift(cone(f), -1);
  std::unique_lock lock(mu_);
  return cocones_.try_emplace(key, c).first->second;
}

const QuotTriangle& Workbench::dist_triangle(const SubcatSpec& x, const RepMap& f) const {
  const std::string key = spec_key(x) + "#" + map_key(f);
  {
    std::shared_lock lock(mu_);
    auto it = dists_.find(key);
    if (it != dists_.end()) return *it->second;
  }
  auto t = std::make_shared<const QuotTriangle>(subfactor(x).dist_triangle(f));
  std::unique_lock lock(mu_);
  return *dists_.try_emplace(key, std::move(t)).first->second;
}

std::vector<Obj> Workbench::bounded_sums(const SubcatSpec& a, std::size_t mult) const {
  std::vector<Obj> out{renamed(Rep::zero(alg_), "0")};
  const auto& gens = a.generators;
  // Multisets as non-decreasing index sequences, by size.
  for (std::size_t size = 1; size <= mult && !gens.empty(); ++size) {
    std::vector<std::size_t> idx(size, 0);
    while (true) {
      std::vector<Obj> parts;
      std::string name;
      for (std::size_t i = 0; i < size;) {
        std::size_t j = i;
        while (j < size && idx[j] == idx[i]) ++j;
        if (!name.empty()) name += "+";
        if (j - i > 1) name += std::to_string(j - i);
        name += gens[idx[i]]->name();
        i = j;
      }
      for (auto i : idx) parts.push_back(gens[i]);
      out.push_back(renamed(sum_of(alg_, parts), name));
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == gens.size() - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t i = k; i < size; ++i) idx[i] = idx[k - 1];
    }
  }
  return out;
}

const Workbench& Workbench::dual() const {
  std::call_once(dual_once_, [&] {
    auto op = alg_->opposite();
    std::vector<Obj> cat;
    for (const auto& c : catalog_) cat.push_back(renamed(subfac::dual(c, op), "D" + c->name()));
    dual_ = std::make_unique<Workbench>(op, std::move(cat));
  });
  return *dual_;
}

SubcatSpec Workbench::dual_spec(const SubcatSpec& s) const {
  const auto& op = dual().algebra();
  SubcatSpec d;
  d.name = "D" + s.name;
  for (const auto& g : s.generators) d.generators.push_back(renamed(subfac::dual(g, op), "D" + g->name()));
  return d;
}

std::vector<Outcome> run_instances(std::size_t n, const std::function<Outcome(std::size_t)>& fn,
                                   Executor ex) {
  std::vector<Outcome> out(n);
  auto one = [&](std::size_t i) {
    try {
      out[i] = fn(i);
    } catch (const std::exception& e) {
      out[i] = Outcome::fail(e.what());
    }
  };
  if (ex == Executor::Parallel) {
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) one(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) one(i);
  }
  return out;
}

ClassList enumerate_classes(const HomQuotient& q, const VerifyConfig& cfg, std::uint64_t salt) {
  ClassList out;
  const Field field = q.src()->field();
  const std::size_t d = q.dim();
  if (d == 0) {
    out.maps.push_back(RepMap::zero(q.src(), q.tgt()));
    return out;
  }
  if (cfg.mode == Mode::Exhaustive) {
    if (d > cfg.hom_dim_bound || !field.is_prime_field()) {
      out.skipped = true;
      return out;
    }
    const long long p = field.characteristic();
    std::vector<long long> digits(d, 0);
    while (true) {
      out.maps.push_back(q.element(Mat::from_ints(field, d, 1, digits)));
      std::size_t i = 0;
      while (i < d && ++digits[i] == p) digits[i++] = 0;
      if (i == d) break;
    }
    return out;
  }
  out.sampled = true;
  out.maps.push_back(RepMap::zero(q.src(), q.tgt()));
  for (const auto& r : q.reps()) out.maps.push_back(r);
  std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ULL ^ salt);
  const long long span = field.is_prime_field() ? field.characteristic() : 7;
  const long long shift = field.is_prime_field() ? 0 : 3;
  std::uniform_int_distribution<long long> pick(0, span - 1);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    std::vector<long long> e(d);
    for (auto& x : e) x = pick(rng) - shift;
    out.maps.push_back(q.element(Mat::from_ints(field, d, 1, e)));
  }
  return out;
}

}  // namespace subfac
