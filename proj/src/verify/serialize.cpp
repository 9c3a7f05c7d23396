#include "subfac/verify/serialize.hpp"

#include "subfac/errors.hpp"

namespace subfac {

using nlohmann::json;

json to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.entry_string(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(Field field, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    throw InputError("matrix: expected " + std::to_string(rows) + " rows");
  }
  std::vector<std::string> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) {
      throw InputError("matrix: expected " + std::to_string(cols) + " columns");
    }
    for (const auto& e : row) {
      if (e.is_string()) {
        entries.push_back(e.get<std::string>());
      } else if (e.is_number_integer()) {
        entries.push_back(std::to_string(e.get<long long>()));
      } else {
        throw InputError("matrix entries must be integers or strings");
      }
    }
  }
  return Mat::from_strings(field, rows, cols, entries);
}

json to_json(const Obj& m) {
  json arrows = json::array();
  for (const auto& a : m->arrows()) arrows.push_back(to_json(a));
  return {{"name", m->name()}, {"dims", m->dims()}, {"arrows", arrows}};
}

Obj obj_from_json(const AlgebraPtr& alg, const json& j) {
  if (!j.is_object() || !j.contains("dims")) throw InputError("object: missing dims");
  auto dims = j.at("dims").get<std::vector<std::size_t>>();
  const auto& q = alg->quiver();
  if (dims.size() != q.vertex_count()) throw InputError("object: wrong number of dims");
  const json arrows = j.value("arrows", json::array());
  if (arrows.size() != q.arrow_count()) throw InputError("object: wrong number of arrows");
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    mats.push_back(mat_from_json(alg->field(), arrows[a], dims[arr.tgt], dims[arr.src]));
  }
  return Rep::make(alg, dims, mats, j.value("name", std::string()));
}

json to_json(const RepMap& f) {
  json comps = json::array();
  for (const auto& c : f.comps()) comps.push_back(to_json(c));
  return {{"src", to_json(f.src())}, {"tgt", to_json(f.tgt())}, {"comps", comps}};
}

RepMap map_from_json(const AlgebraPtr& alg, const json& j) {
  Obj src = obj_from_json(alg, j.at("src"));
  Obj tgt = obj_from_json(alg, j.at("tgt"));
  const auto& comps = j.at("comps");
  if (comps.size() != alg->vertex_count()) throw InputError("map: wrong number of components");
  std::vector<Mat> mats;
  for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
    mats.push_back(mat_from_json(alg->field(), comps[v], tgt->dim(v), src->dim(v)));
  }
  return RepMap(src, tgt, std::move(mats));
}

}  // namespace subfac
