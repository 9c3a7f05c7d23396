#pragma once

#include "json.hpp"
#include "subfac/algrep/modules.hpp"

namespace subfac {

// Matrices as arrays of rows of entry strings ("1", "-2/3").
nlohmann::json to_json(const Mat& m);
Mat mat_from_json(Field field, const nlohmann::json& j, std::size_t rows, std::size_t cols);

// {"name", "dims", "arrows"}; arrows in quiver order.
nlohmann::json to_json(const Obj& m);
Obj obj_from_json(const AlgebraPtr& alg, const nlohmann::json& j);

// {"src", "tgt", "comps"}; one matrix per vertex.
nlohmann::json to_json(const RepMap& f);
RepMap map_from_json(const AlgebraPtr& alg, const nlohmann::json& j);

}  // namespace subfac
