#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "subfac/verify/verify.hpp"

namespace subfac::cli {

inline constexpr const char* kToolVersion = "0.3.0";

enum ExitCode : int {
  kAllPass = 0,
  kCounterexample = 1,
  kInvalidInput = 2,
  kInconclusive = 3,
  kInternalError = 4,
};

// AlgebraSpec document: {"field": {"kind": "prime", "p": 2} | {"kind":
// "rationals"}, "presets": {"serial": {"n", "L"}}} or an explicit "quiver"
// {vertices, arrows: [{from, to, label}]} with "relations" as label lists.
// An optional "catalog" lists object expressions. Errors name the offending
// JSON pointer.
struct LoadedAlgebra {
  AlgebraPtr algebra;
  std::string name;  // "name" from the document, else the preset name
  std::vector<nlohmann::json> catalog;  // raw expressions, resolved later
};
LoadedAlgebra load_algebra(const nlohmann::json& doc);

// Object expressions: interval(v,l), simple(v), projective(v), zero, catalog
// names, sums joined by '+', or an explicit block {"dims", "arrows"}.
Obj parse_object(const Workbench& wb, const std::string& expr);
Obj parse_object_json(const Workbench& wb, const nlohmann::json& expr);
// "full" (T), "zero", a comma separated list of object expressions, or a
// JSON array of them.
SubcatSpec parse_subcat(const Workbench& wb, const std::string& expr);

// Exit code: fail beats inconclusive beats pass.
int exit_code(const std::vector<Verdict>& verdicts);

// The whole command line; output and diagnostics go to the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subfac::cli
