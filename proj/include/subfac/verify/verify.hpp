#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "subfac/subfactor/subfactor.hpp"

namespace subfac {

enum class Mode { Exhaustive, Sampled };
enum class Executor { Serial, Parallel };

struct VerifyConfig {
  std::size_t hom_dim_bound = 4;
  std::size_t multiplicity_bound = 2;
  Mode mode = Mode::Exhaustive;
  std::size_t samples = 16;  // random classes per hom space in sampled mode
  std::uint64_t seed = 1;
  Executor executor = Executor::Parallel;
  // Verifier self-tests: flip the sign of the rotated third map, or skip the
  // b' = b - t's correction in quotient fill-ins.
  bool mutate_rotation_sign = false;
  bool mutate_drop_correction = false;

  // Throws InputError for zero bounds or exhaustive mode over the rationals.
  void validate(Field field) const;
  nlohmann::json to_json() const;
};

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status s);

struct Verdict {
  std::string check;
  Status status = Status::Pass;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;  // hom spaces beyond the bound, or inapplicable cases
  bool sampled = false;
  // Failing instances (at most three, lowest enumeration index first), each
  // replayable with replay_instance.
  std::vector<nlohmann::json> evidence;
  std::string note;

  nlohmann::json to_json() const;
};

// Per-algebra state shared by all checks: the stable category, a catalog of
// indecomposable non-projective objects, and caches for subfactor contexts,
// cones and cocones. Safe for concurrent use.
class Workbench {
 public:
  // The catalog defaults to the non-projective interval modules of a serial
  // algebra; for other algebras it must be supplied.
  explicit Workbench(AlgebraPtr alg, std::vector<Obj> catalog = {});

  const AlgebraPtr& algebra() const { return alg_; }
  const std::shared_ptr<const StableCategory>& stable_ptr() const { return st_; }
  const StableCategory& stable() const { return *st_; }
  Field field() const { return alg_->field(); }
  const std::vector<Obj>& catalog() const { return catalog_; }
  bool catalog_supplied() const { return supplied_; }

  const Subfactor& subfactor(const SubcatSpec& x) const;
  Obj cone(const RepMap& f) const;
  Obj cocone(const RepMap& f) const;
  const QuotTriangle& dist_triangle(const SubcatSpec& x, const RepMap& f) const;
  // Sums of generators with total multiplicity at most `mult`, zero included.
  std::vector<Obj> bounded_sums(const SubcatSpec& a, std::size_t mult) const;

  // Opposite algebra with the dual catalog; D(D(M)) = M on the nose.
  const Workbench& dual() const;
  SubcatSpec dual_spec(const SubcatSpec& s) const;

 private:
  AlgebraPtr alg_;
  std::shared_ptr<const StableCategory> st_;
  std::vector<Obj> catalog_;
  bool supplied_ = false;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<std::string, std::unique_ptr<Subfactor>> subs_;
  mutable std::unordered_map<std::string, Obj> cones_, cocones_;
  mutable std::unordered_map<std::string, std::shared_ptr<const QuotTriangle>> dists_;
  mutable std::once_flag dual_once_;
  mutable std::unique_ptr<Workbench> dual_;
};

// Non-projective interval modules, named M{l} over one vertex, S{v} for
// simples and M(v,l) otherwise. Throws UnsupportedError for non-serial
// algebras.
std::vector<Obj> interval_catalog(const AlgebraPtr& alg);

std::string spec_key(const SubcatSpec& s);
std::string map_key(const RepMap& f);

// Outcome of a single instance.
struct Outcome {
  // Inconclusive: a witness search over an infinite field found nothing.
  enum class Kind { Pass, Fail, Skip, Inconclusive };
  Kind kind = Kind::Pass;
  std::string note;

  static Outcome pass() { return {}; }
  static Outcome fail(std::string note) { return {Kind::Fail, std::move(note)}; }
  static Outcome skip() { return {Kind::Skip, {}}; }
  static Outcome inconclusive(std::string note) { return {Kind::Inconclusive, std::move(note)}; }
};

// Evaluates fn(0..n-1) serially or with OpenMP; results are in index order
// either way. Exceptions become failures carrying the message.
std::vector<Outcome> run_instances(std::size_t n, const std::function<Outcome(std::size_t)>& fn,
                                   Executor ex);

// A check instance: which check, which sub-check and the maps it concerns.
struct Instance {
  std::string check;
  std::vector<RepMap> maps;
};

// A and X for one run.
struct Setting {
  SubcatSpec a;
  SubcatSpec x;
};

// Runs one instance of a named check. Used by the enumerating checks and by
// replay.
Outcome check_instance(const Workbench& wb, const Setting& s, const VerifyConfig& cfg,
                       const Instance& inst);
// Rebuilds the instance from evidence JSON and checks it again.
Outcome replay_instance(const Workbench& wb, const Setting& s, const VerifyConfig& cfg,
                        const nlohmann::json& evidence);

// Hypotheses: (A2) cones of X-monic maps between bounded sums stay in add(A),
// and the dual for cocones of X-epic maps. Throws InputError unless every
// generator of X lies in add(A).
std::vector<Verdict> check_hypotheses(const Workbench& wb, const Setting& s,
                                      const VerifyConfig& cfg);
// rTR0..rTR4 (names "rTR0".."rTR4"). With left = true the axioms are checked
// for the left structure, i.e. over the opposite algebra with D(A), D(X)
// (names "lTR0".."lTR4").
std::vector<Verdict> verify_axioms(const Workbench& wb, const Setting& s, const VerifyConfig& cfg,
                                   bool left = false);
Verdict check_rigid(const Workbench& wb, const SubcatSpec& x);
Verdict check_extension_closed(const Workbench& wb, const SubcatSpec& a, const VerifyConfig& cfg);
// Fully faithful Sigma on catalog pairs, Omega Sigma C = C = Sigma Omega C
// with witnessed quotient isomorphisms, and the left/right triangle spot check.
Verdict check_sigma_equivalence(const Workbench& wb, const Setting& s, const VerifyConfig& cfg);
Verdict check_mutation_pair(const Workbench& wb, const Setting& s, const VerifyConfig& cfg);

struct ClassifyRow {
  std::vector<std::size_t> a, x;  // catalog indices
  std::string a_name, x_name;
  bool hypotheses = false, dual_hypotheses = false, rigid = false, right_triangulated = false,
       pretriangulated = false, extension_closed = false, mutation_pair = false,
       triangulated = false;
  bool biconditional_checked = false;
  bool violation = false;
  // Set when a derived invariant (rigid, mutation pair and extension closed
  // imply st_hom(X_i, A[1]) = 0) fails.
  bool invariant_violation = false;
  std::vector<Verdict> verdicts;

  nlohmann::json to_json() const;
};

struct ClassifyTable {
  std::vector<ClassifyRow> rows;
  std::size_t violations = 0;
  nlohmann::json to_json() const;
};

// Every pair X subset of A subset of the catalog. Throws UnsupportedError when
// no catalog is available.
ClassifyTable classify_all(const Workbench& wb, const VerifyConfig& cfg);

// The hom-space classes enumerated for (m, n): every class over F_p when the
// dimension is within the bound (exhaustive mode), basis plus seeded random
// classes in sampled mode, nothing when the bound is exceeded.
struct ClassList {
  std::vector<RepMap> maps;
  bool sampled = false;
  bool skipped = false;
};
ClassList enumerate_classes(const HomQuotient& q, const VerifyConfig& cfg, std::uint64_t salt);

}  // namespace subfac
