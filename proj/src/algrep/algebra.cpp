#include "subfac/algrep/algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "subfac/errors.hpp"

namespace subfac {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v).second) throw InputError("duplicate vertex label '" + v + "'");
  }
  std::set<std::string> labels;
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const auto& ar = arrows_[a];
    if (!labels.insert(ar.label).second) {
      throw InputError("duplicate arrow label '" + ar.label + "'");
    }
    if (ar.src >= vertices_.size() || ar.tgt >= vertices_.size()) {
      throw InputError("arrow '" + ar.label + "' has an endpoint outside the quiver");
    }
    out_[ar.src].push_back(a);
    in_[ar.tgt].push_back(a);
  }
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& label) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    if (arrows_[a].label == label) return a;
  }
  return std::nullopt;
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  for (const auto& a : arrows_) rev.push_back({a.tgt, a.src, a.label});
  return Quiver(vertices_, rev);
}

namespace {

bool contains_run(const std::vector<std::size_t>& path, const std::vector<std::size_t>& rel) {
  if (rel.size() > path.size()) return false;
  return std::search(path.begin(), path.end(), rel.begin(), rel.end()) != path.end();
}

}  // namespace

AlgebraPtr MonomialAlgebra::build(Quiver quiver, std::vector<std::vector<std::size_t>> relations,
                                  Field field, std::size_t basis_bound) {
  for (const auto& r : relations) {
    if (r.size() < 2) throw InputError("relations must be paths of length at least 2");
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] >= quiver.arrow_count()) throw InputError("relation uses an unknown arrow");
      if (i > 0 && quiver.arrow(r[i - 1]).tgt != quiver.arrow(r[i]).src) {
        throw InputError("relation is not a path: arrows '" + quiver.arrow(r[i - 1]).label +
                         "' and '" + quiver.arrow(r[i]).label + "' do not compose");
      }
    }
  }
  std::shared_ptr<MonomialAlgebra> alg(new MonomialAlgebra());
  alg->quiver_ = std::move(quiver);
  alg->field_ = field;
  alg->relations_ = std::move(relations);

  // Breadth first over paths; extending a path that avoids all relations can
  // only create a relation as a suffix, so checking suffixes suffices.
  std::deque<Path> queue;
  for (std::size_t v = 0; v < alg->quiver_.vertex_count(); ++v) queue.push_back(Path{v, {}});
  while (!queue.empty()) {
    Path p = std::move(queue.front());
    queue.pop_front();
    alg->basis_.push_back(p);
    if (alg->basis_.size() > basis_bound) {
      throw UnsupportedError("path algebra exceeds " + std::to_string(basis_bound) +
                             " basis paths; relations do not bound it");
    }
    const std::size_t end = alg->end_vertex(p);
    for (std::size_t a : alg->quiver_.out_arrows(end)) {
      Path q = p;
      q.arrows.push_back(a);
      bool dead = false;
      for (const auto& r : alg->relations_) {
        if (r.size() <= q.arrows.size() &&
            std::equal(r.rbegin(), r.rend(), q.arrows.rbegin())) {
          dead = true;
          break;
        }
      }
      if (!dead) queue.push_back(std::move(q));
    }
  }
  return alg;
}

AlgebraPtr MonomialAlgebra::build_labeled(Quiver quiver,
                                          const std::vector<std::vector<std::string>>& relations,
                                          Field field, std::size_t basis_bound) {
  std::vector<std::vector<std::size_t>> rels;
  for (const auto& r : relations) {
    std::vector<std::size_t> idx;
    for (const auto& label : r) {
      auto a = quiver.find_arrow(label);
      if (!a) throw InputError("relation refers to unknown arrow '" + label + "'");
      idx.push_back(*a);
    }
    rels.push_back(std::move(idx));
  }
  return build(std::move(quiver), std::move(rels), field, basis_bound);
}

AlgebraPtr MonomialAlgebra::nakayama(std::size_t n, std::size_t length, Field field) {
  if (n == 0) throw InputError("nakayama: need at least one vertex");
  if (length < 2) throw InputError("nakayama: Loewy length must be at least 2");
  std::vector<std::string> vs;
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) {
    arrows.push_back({i, (i + 1) % n, n == 1 ? std::string("x") : "a" + std::to_string(i + 1)});
  }
  std::vector<std::vector<std::size_t>> rels;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> r;
    for (std::size_t k = 0; k < length; ++k) r.push_back((i + k) % n);
    rels.push_back(std::move(r));
    if (n == 1) break;
  }
  auto alg = build(Quiver(vs, arrows), rels, field);
  auto named = std::const_pointer_cast<MonomialAlgebra>(alg);
  named->name_ = "nak(" + std::to_string(n) + "," + std::to_string(length) + ") over " +
                 field.name();
  return alg;
}

std::size_t MonomialAlgebra::end_vertex(const Path& p) const {
  return p.arrows.empty() ? p.start : quiver_.arrow(p.arrows.back()).tgt;
}

bool MonomialAlgebra::is_zero_path(const Path& p) const {
  for (const auto& r : relations_) {
    if (contains_run(p.arrows, r)) return true;
  }
  return false;
}

std::vector<std::size_t> MonomialAlgebra::paths_from(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].start == v) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> MonomialAlgebra::paths_to(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (end_vertex(basis_[i]) == v) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> MonomialAlgebra::basis_index(const Path& p) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i] == p) return i;
  }
  return std::nullopt;
}

bool MonomialAlgebra::is_serial() const {
  for (std::size_t v = 0; v < quiver_.vertex_count(); ++v) {
    if (quiver_.out_arrows(v).size() > 1 || quiver_.in_arrows(v).size() > 1) return false;
  }
  return true;
}

std::string MonomialAlgebra::path_string(const Path& p) const {
  if (p.arrows.empty()) return "e" + quiver_.vertex_label(p.start);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += quiver_.arrow(p.arrows[i]).label;
  }
  return s;
}

AlgebraPtr MonomialAlgebra::opposite() const {
  std::vector<std::vector<std::size_t>> rels;
  for (const auto& r : relations_) rels.emplace_back(r.rbegin(), r.rend());
  auto op = build(quiver_.opposite(), rels, field_);
  std::const_pointer_cast<MonomialAlgebra>(op)->name_ = "opposite of " + name_;
  return op;
}

}  // namespace subfac
