#include "subfac/cli/cli.hpp"

#include <cctype>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "subfac/errors.hpp"
#include "subfac/verify/serialize.hpp"

namespace subfac::cli {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& pointer, const std::string& what) {
  throw InputError(pointer + ": " + what);
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

// Splits at `sep` outside parentheses, brackets and braces.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Field parse_field(const json& f) {
  if (!f.is_object()) bad("/field", "expected an object");
  const std::string kind = f.value("kind", "");
  if (kind == "rationals" || kind == "Q") return Field::rationals();
  if (kind == "prime" || kind == "F_p") {
    if (!f.contains("p") || !f["p"].is_number_unsigned()) bad("/field/p", "expected a prime");
    try {
      return Field::prime(f["p"].get<std::uint32_t>());
    } catch (const InputError& e) {
      bad("/field/p", e.what());
    }
  }
  bad("/field/kind", "expected \"prime\" or \"rationals\"");
}

std::size_t vertex_of(const AlgebraPtr& alg, const std::string& label) {
  if (auto v = alg->quiver().find_vertex(label)) return *v;
  throw InputError("unknown vertex '" + label + "'");
}

std::size_t to_size(const std::string& s) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty()) throw InputError("expected a number, got '" + s + "'");
  return v;
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

json obj_summary(const Obj& m) { return {{"name", m->name()}, {"dims", m->dims()}}; }

json spec_summary(const SubcatSpec& s) {
  json g = json::array();
  for (const auto& x : s.generators) g.push_back(x->name());
  return {{"name", s.name}, {"generators", g}};
}

json sextuple_json(const Sextuple& t) {
  return {{"a", obj_summary(t.a)},        {"b", obj_summary(t.b)},
          {"c", obj_summary(t.c)},        {"shifted", obj_summary(t.shifted)},
          {"f", to_json(t.f)["comps"]},   {"g", to_json(t.g)["comps"]},
          {"h", to_json(t.h)["comps"]},   {"provenance", t.provenance}};
}

std::string dims_string(const Obj& m) {
  std::string s = "(";
  for (std::size_t v = 0; v < m->dims().size(); ++v) s += (v ? "," : "") + std::to_string(m->dim(v));
  return s + ")";
}

// Catalog name of an object stably isomorphic to m, or its dimension vector.
std::string identify(const Workbench& wb, const Obj& m) {
  if (wb.stable().is_zero_object(m)) return "0";
  for (const auto& c : wb.catalog()) {
    if (wb.stable().find_st_iso(m, c)) return c->name();
  }
  return dims_string(m);
}

std::string identify_quot(const Workbench& wb, const SubcatSpec& x, const Obj& m) {
  const auto& id = wb.subfactor(x).ideal();
  if (id.in_add(m)) return "0";
  for (const auto& c : wb.catalog()) {
    if (id.find_quot_iso(m, c).iso) return c->name();
  }
  return dims_string(m);
}

struct Options {
  std::string algebra;
  std::string mode = "exhaustive";
  std::uint64_t seed = 1;
  std::size_t samples = 16;
  std::string bounds;
  std::string executor = "parallel";
  int threads = 0;
  bool json_out = false;
  std::string report;
  std::vector<std::string> mutate;
};

VerifyConfig make_config(const Options& o, Field field) {
  VerifyConfig cfg;
  if (o.mode == "exhaustive") {
    cfg.mode = Mode::Exhaustive;
  } else if (o.mode == "sampled") {
    cfg.mode = Mode::Sampled;
  } else {
    throw InputError("--mode: expected exhaustive or sampled");
  }
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  if (!o.bounds.empty()) {
    auto parts = split_top(o.bounds, ',');
    if (parts.size() != 2) throw InputError("--bounds: expected HOMDIM,MULTIPLICITY");
    cfg.hom_dim_bound = to_size(parts[0]);
    cfg.multiplicity_bound = to_size(parts[1]);
  }
  cfg.executor = o.executor == "serial" ? Executor::Serial : Executor::Parallel;
  for (const auto& m : o.mutate) {
    if (m == "rotation-sign") {
      cfg.mutate_rotation_sign = true;
    } else if (m == "drop-correction") {
      cfg.mutate_drop_correction = true;
    } else {
      throw InputError("--mutate: expected rotation-sign or drop-correction");
    }
  }
  cfg.validate(field);
  return cfg;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
#ifdef SUBFAC_DATA_DIR
    std::filesystem::path alt = std::filesystem::path(SUBFAC_DATA_DIR) / path;
    in.open(alt);
#endif
    if (!in) throw InputError("cannot open " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string render_verdicts(const std::vector<Verdict>& vs) {
  std::ostringstream os;
  for (const auto& v : vs) {
    os << std::left << std::setw(20) << v.check << std::setw(13) << to_string(v.status)
       << "instances=" << v.instances << " failures=" << v.failures << " skipped=" << v.skipped;
    if (v.sampled) os << " sampled";
    os << "\n";
    if (!v.note.empty()) os << "  " << v.note << "\n";
    for (const auto& e : v.evidence) {
      os << "  counterexample #" << e.value("index", 0) << ": " << e.value("note", "") << "\n";
    }
  }
  return os.str();
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string render_table(const ClassifyTable& t) {
  std::ostringstream os;
  os << std::left << std::setw(26) << "A" << std::setw(22) << "X"
     << "hyp dual rigid rtri pretri ext mut tri  check\n";
  for (const auto& r : t.rows) {
    os << std::setw(26) << r.a_name << std::setw(22) << r.x_name << std::setw(4) << yes(r.hypotheses)
       << std::setw(5) << yes(r.dual_hypotheses) << std::setw(6) << yes(r.rigid) << std::setw(5)
       << yes(r.right_triangulated) << std::setw(7) << yes(r.pretriangulated) << std::setw(4)
       << yes(r.extension_closed) << std::setw(4) << yes(r.mutation_pair) << std::setw(5)
       << yes(r.triangulated);
    if (r.violation) {
      os << "VIOLATION";
    } else if (r.invariant_violation) {
      os << "INVARIANT";
    } else {
      os << (r.biconditional_checked ? "ok" : "-");
    }
    os << "\n";
  }
  os << "violations: " << t.violations << "\n";
  return os.str();
}

std::vector<RepMap> coeff_map(const Workbench& wb, const Obj& src, const Obj& tgt,
                              const std::vector<long long>& coeffs) {
  auto q = wb.stable().st_hom(src, tgt);
  std::vector<long long> c = coeffs;
  if (c.empty() && q->dim() > 0) {
    c.assign(q->dim(), 0);
    c[0] = 1;
  }
  if (c.size() != q->dim()) {
    throw InputError("--coeffs: st_hom(" + src->name() + ", " + tgt->name() + ") has dimension " +
                     std::to_string(q->dim()));
  }
  if (q->dim() == 0) return {RepMap::zero(src, tgt)};
  return {q->element(Mat::from_ints(wb.field(), c.size(), 1, c))};
}

}  // namespace

LoadedAlgebra load_algebra(const json& doc) {
  if (!doc.is_object()) bad("", "expected an object");
  if (!doc.contains("field")) bad("/field", "missing");
  const Field field = parse_field(doc["field"]);
  const bool preset = doc.contains("presets");
  const bool explicit_quiver = doc.contains("quiver");
  if (preset == explicit_quiver) bad("", "give exactly one of \"presets\" and \"quiver\"");
  LoadedAlgebra out;
  if (preset) {
    const auto& p = doc["presets"];
    if (!p.is_object() || !p.contains("serial")) bad("/presets", "expected {\"serial\": {n, L}}");
    const auto& s = p["serial"];
    if (!s.contains("n") || !s["n"].is_number_unsigned()) bad("/presets/serial/n", "expected n >= 1");
    if (!s.contains("L") || !s["L"].is_number_unsigned()) bad("/presets/serial/L", "expected L >= 2");
    try {
      out.algebra = MonomialAlgebra::nakayama(s["n"].get<std::size_t>(), s["L"].get<std::size_t>(),
                                              field);
    } catch (const InputError& e) {
      bad("/presets/serial", e.what());
    }
  } else {
    const auto& q = doc["quiver"];
    if (!q.is_object() || !q.contains("vertices") || !q["vertices"].is_array()) {
      bad("/quiver/vertices", "expected a list of labels");
    }
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < q["vertices"].size(); ++i) {
      if (!q["vertices"][i].is_string()) bad("/quiver/vertices/" + std::to_string(i), "expected a string");
      vs.push_back(q["vertices"][i].get<std::string>());
    }
    std::vector<Arrow> arrows;
    const json as = q.value("arrows", json::array());
    for (std::size_t i = 0; i < as.size(); ++i) {
      const std::string ptr = "/quiver/arrows/" + std::to_string(i);
      const auto& a = as[i];
      auto end = [&](const char* key) {
        if (!a.contains(key) || !a[key].is_string()) bad(ptr + "/" + key, "expected a vertex label");
        auto it = std::find(vs.begin(), vs.end(), a[key].get<std::string>());
        if (it == vs.end()) bad(ptr + "/" + key, "unknown vertex");
        return static_cast<std::size_t>(it - vs.begin());
      };
      if (!a.contains("label") || !a["label"].is_string()) bad(ptr + "/label", "expected a string");
      arrows.push_back({end("from"), end("to"), a["label"].get<std::string>()});
    }
    std::vector<std::vector<std::string>> rels;
    const json rs = doc.value("relations", json::array());
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (!rs[i].is_array()) bad("/relations/" + std::to_string(i), "expected a list of arrow labels");
      std::vector<std::string> r;
      for (const auto& l : rs[i]) {
        if (!l.is_string()) bad("/relations/" + std::to_string(i), "expected arrow labels");
        r.push_back(l.get<std::string>());
      }
      rels.push_back(std::move(r));
    }
    try {
      out.algebra = MonomialAlgebra::build_labeled(Quiver(vs, arrows), rels, field);
    } catch (const InputError& e) {
      bad("/quiver", e.what());
    }
  }
  out.name = doc.value("name", out.algebra->name());
  if (out.name.empty()) out.name = "kQ/I over " + field.name();
  if (doc.contains("catalog")) {
    if (!doc["catalog"].is_array()) bad("/catalog", "expected a list of object expressions");
    for (const auto& c : doc["catalog"]) out.catalog.push_back(c);
  }
  return out;
}

Obj parse_object_json(const Workbench& wb, const json& expr) {
  if (expr.is_string()) return parse_object(wb, expr.get<std::string>());
  if (expr.is_object()) return obj_from_json(wb.algebra(), expr);
  throw InputError("object expression must be a string or a block");
}

Obj parse_object(const Workbench& wb, const std::string& raw) {
  const std::string e = trim(raw);
  const auto& alg = wb.algebra();
  if (e.empty()) throw InputError("empty object expression");
  if (e == "zero" || e == "0") return renamed(Rep::zero(alg), "0");
  if (e.front() == '{') {
    try {
      return obj_from_json(alg, json::parse(e));
    } catch (const json::parse_error& err) {
      throw InputError(std::string("explicit block: ") + err.what());
    }
  }
  auto parts = split_top(e, '+');
  if (parts.size() > 1) {
    std::vector<Obj> objs;
    std::string name;
    for (const auto& p : parts) {
      objs.push_back(parse_object(wb, p));
      name += (name.empty() ? "" : "+") + objs.back()->name();
    }
    return renamed(sum_of(alg, objs), name);
  }
  std::size_t digits = 0;
  while (digits < e.size() && std::isdigit(static_cast<unsigned char>(e[digits]))) ++digits;
  if (digits > 0 && digits < e.size()) {
    const std::size_t k = to_size(e.substr(0, digits));
    if (k == 0) return renamed(Rep::zero(alg), "0");
    return renamed(power(parse_object(wb, e.substr(digits)), k), e);
  }
  const auto open = e.find('(');
  if (open != std::string::npos && e.back() == ')') {
    const std::string fn = e.substr(0, open);
    auto args = split_top(e.substr(open + 1, e.size() - open - 2), ',');
    if (fn == "interval") {
      if (args.size() != 2) throw InputError("interval(v,l) takes two arguments");
      Obj m = interval(alg, vertex_of(alg, args[0]), to_size(args[1]));
      for (const auto& c : wb.catalog()) {
        if (c->key() == m->key()) return c;
      }
      return m;
    }
    if (fn == "shift") {
      if (args.size() != 2) throw InputError("shift(E,n) takes two arguments");
      const std::string n = trim(args[1]);
      const int dir = n == "1" || n == "+1" ? 1 : n == "-1" ? -1 : 0;
      if (dir == 0) throw InputError("shift(E,n) needs n = 1 or -1");
      Obj m = parse_object(wb, args[0]);
      return renamed(wb.stable().shift(m, dir), e);
    }
    if (fn == "simple" || fn == "projective") {
      if (args.size() != 1) throw InputError(fn + "(v) takes one argument");
      const std::size_t v = vertex_of(alg, args[0]);
      Obj m = fn == "simple" ? simple(alg, v) : projective(alg, v);
      return renamed(m, (fn == "simple" ? "S" : "P") + args[0]);
    }
  }
  for (const auto& c : wb.catalog()) {
    if (c->name() == e) return c;
  }
  throw InputError("cannot resolve object expression '" + e + "'");
}

SubcatSpec parse_subcat(const Workbench& wb, const std::string& raw) {
  std::string e = trim(raw);
  if (e.size() > 5 && e.rfind("add(", 0) == 0 && e.back() == ')') e = trim(e.substr(4, e.size() - 5));
  if (e == "full" || e == "T") {
    if (wb.catalog().empty()) throw UnsupportedError("'full' needs a catalog");
    return {wb.catalog(), "T"};
  }
  if (e.empty() || e == "zero" || e == "0") return SubcatSpec::zero();
  SubcatSpec s;
  if (e.front() == '[') {
    json arr;
    try {
      arr = json::parse(e);
    } catch (const json::parse_error& err) {
      throw InputError(std::string("subcategory list: ") + err.what());
    }
    for (const auto& x : arr) s.generators.push_back(parse_object_json(wb, x));
  } else {
    for (const auto& p : split_top(e, ',')) s.generators.push_back(parse_object(wb, p));
  }
  s.name = "add(";
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    s.name += (i ? "," : "") + s.generators[i]->name();
  }
  s.name += ")";
  return s;
}

int exit_code(const std::vector<Verdict>& verdicts) {
  bool inconclusive = false;
  for (const auto& v : verdicts) {
    if (v.status == Status::Fail) return kCounterexample;
    if (v.status == Status::Inconclusive) inconclusive = true;
  }
  return inconclusive ? kInconclusive : kAllPass;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for subfactor categories of stable module categories", "subfac"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--algebra", o.algebra, "AlgebraSpec JSON file");
  app.add_option("--mode", o.mode, "exhaustive | sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  app.add_option("--seed", o.seed, "seed for sampled classes");
  app.add_option("--samples", o.samples, "random classes per hom space in sampled mode");
  app.add_option("--bounds", o.bounds, "HOMDIM,MULTIPLICITY (default 4,2)");
  app.add_option("--executor", o.executor, "serial | parallel")->check(CLI::IsMember({"serial", "parallel"}));
  app.add_option("--threads", o.threads, "OpenMP thread count");
  app.add_flag("--json", o.json_out, "print the JSON report instead of text");
  app.add_option("--report", o.report, "also write the JSON report to this file");
  app.add_option("--mutate", o.mutate, "verifier self-test: rotation-sign, drop-correction")
      ->group("");

  std::string a_expr, b_expr, x_expr = "zero", side = "left", kind = "dist", axioms, evidence_file;
  std::vector<long long> coeffs;
  bool left = false;

  auto* c_catalog = app.add_subcommand("catalog", "stable catalog and shift table");
  auto* c_sthom = app.add_subcommand("sthom", "dimension of the stable hom space");
  c_sthom->add_option("A", a_expr)->required();
  c_sthom->add_option("B", b_expr)->required();
  auto* c_ideal = app.add_subcommand("ideal", "the ideal [X](A, B) and the quotient hom space");
  c_ideal->add_option("A", a_expr)->required();
  c_ideal->add_option("B", b_expr)->required();
  c_ideal->add_option("--x", x_expr, "subcategory X (default 0)");
  auto* c_approx = app.add_subcommand("approx", "canonical X-approximation");
  c_approx->add_option("A", a_expr)->required();
  c_approx->add_option("--x", x_expr, "subcategory X (default 0)");
  c_approx->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  auto* c_suspend = app.add_subcommand("suspend", "Sigma A in the subfactor category");
  c_suspend->add_option("A", a_expr)->required();
  c_suspend->add_option("--x", x_expr, "subcategory X (default 0)");
  auto* c_triangle = app.add_subcommand("triangle", "distinguished or induced triangle on f");
  c_triangle->add_option("--src", a_expr, "source of f")->required();
  c_triangle->add_option("--tgt", b_expr, "target of f")->required();
  c_triangle->add_option("--coeffs", coeffs, "coordinates of f in the stable hom basis")->delimiter(',');
  c_triangle->add_option("--x", x_expr, "subcategory X (default 0)");
  c_triangle->add_option("--kind", kind)->check(CLI::IsMember({"dist", "induced"}));
  auto* c_hyp = app.add_subcommand("hypotheses", "cone and cocone closure hypotheses");
  c_hyp->add_option("--a", a_expr, "subcategory A: T, 0, add(...) or a list")->required();
  c_hyp->add_option("--x", x_expr, "subcategory X (default 0)");
  auto* c_verify = app.add_subcommand("verify", "axioms rTR0..rTR4 (and the left duals)");
  c_verify->add_option("--a", a_expr, "subcategory A: T, 0, add(...) or a list")->required();
  c_verify->add_option("--x", x_expr, "subcategory X (default 0)");
  c_verify->add_option("--axioms", axioms, "subset, e.g. rtr0,rtr3");
  c_verify->add_flag("--left", left, "also verify the left structure");
  auto* c_mut = app.add_subcommand("mutation", "rigidity and the mutation pair conditions");
  c_mut->add_option("--a", a_expr, "subcategory A: T, 0, add(...) or a list")->required();
  c_mut->add_option("--x", x_expr, "subcategory X (default 0)");
  auto* c_classify = app.add_subcommand("classify", "every pair X in A in the catalog");
  auto* c_replay = app.add_subcommand("replay", "re-check counterexamples from a report or evidence file");
  c_replay->add_option("evidence", evidence_file)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAllPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (o.threads > 0) omp_set_num_threads(o.threads);
    if (o.algebra.empty()) throw InputError("--algebra is required");
    json doc = read_json_file(o.algebra);
    LoadedAlgebra la = load_algebra(doc);
    std::vector<Obj> catalog;
    {
      Workbench scratch(la.algebra);
      for (std::size_t i = 0; i < la.catalog.size(); ++i) {
        try {
          catalog.push_back(parse_object_json(scratch, la.catalog[i]));
        } catch (const InputError& e) {
          bad("/catalog/" + std::to_string(i), e.what());
        }
      }
    }
    Workbench wb(la.algebra, catalog);
    VerifyConfig cfg = make_config(o, wb.field());

    json report{{"tool_version", kToolVersion},
                {"timestamp", timestamp()},
                {"algebra", {{"name", la.name}, {"spec", doc}}},
                {"config", cfg.to_json()}};
    if (wb.catalog_supplied()) report["assumptions"] = {"catalog supplied by the user is trusted to be complete"};
    std::vector<Verdict> verdicts;
    std::ostringstream text;
    json result;
    SubcatSpec x = parse_subcat(wb, x_expr);
    const auto& st = wb.stable();

    if (*c_catalog) {
      report["command"] = "catalog";
      result = json::array();
      text << std::left << std::setw(12) << "object" << std::setw(14) << "dims" << std::setw(12)
           << "[1]" << "[-1]\n";
      for (const auto& c : wb.catalog()) {
        const std::string up = identify(wb, st.shift(c, 1));
        const std::string down = identify(wb, st.shift(c, -1));
        result.push_back({{"name", c->name()}, {"dims", c->dims()}, {"shift", up}, {"unshift", down}});
        text << std::setw(12) << c->name() << std::setw(14) << dims_string(c) << std::setw(12) << up
             << down << "\n";
      }
    } else if (*c_sthom) {
      report["command"] = "sthom";
      Obj a = parse_object(wb, a_expr), b = parse_object(wb, b_expr);
      const std::size_t d = st.st_hom(a, b)->dim();
      result = {{"a", a->name()}, {"b", b->name()}, {"dim", d}, {"hom_dim", st.hom(a, b)->dim()}};
      text << "dim st_hom(" << a->name() << ", " << b->name() << ") = " << d << "\n";
    } else if (*c_ideal) {
      report["command"] = "ideal";
      Obj a = parse_object(wb, a_expr), b = parse_object(wb, b_expr);
      const auto& id = wb.subfactor(x).ideal();
      const std::size_t sd = st.st_hom(a, b)->dim();
      const std::size_t qd = id.quot_hom(a, b)->dim();
      result = {{"a", a->name()}, {"b", b->name()}, {"x", spec_summary(x)},
                {"st_hom_dim", sd}, {"ideal_dim", sd - qd}, {"quotient_dim", qd}};
      text << "dim [X](" << a->name() << ", " << b->name() << ") = " << sd - qd
           << ", quotient dim = " << qd << "\n";
    } else if (*c_approx) {
      report["command"] = "approx";
      Obj a = parse_object(wb, a_expr);
      const auto& id = wb.subfactor(x).ideal();
      Approximation ap = side == "left" ? id.left_approximation(a) : id.right_approximation(a);
      result = {{"side", side}, {"object", obj_summary(ap.obj)}, {"map", to_json(ap.map)}};
      text << side << " approximation of " << a->name() << ": " << ap.obj->name() << " "
           << dims_string(ap.obj) << "\n";
    } else if (*c_suspend) {
      report["command"] = "suspend";
      Obj a = parse_object(wb, a_expr);
      const auto& sub = wb.subfactor(x);
      const auto& ap = sub.suspend_object(a);
      const std::string iso = identify_quot(wb, x, ap.sigma);
      result = {{"a", a->name()}, {"sigma", obj_summary(ap.sigma)}, {"x_a", obj_summary(ap.xa)},
                {"quotient_iso_to", iso}};
      text << "Sigma(" << a->name() << ") = " << dims_string(ap.sigma) << ", modulo X isomorphic to "
           << iso << "\n";
    } else if (*c_triangle) {
      report["command"] = "triangle";
      Obj a = parse_object(wb, a_expr), b = parse_object(wb, b_expr);
      RepMap f = coeff_map(wb, a, b, coeffs).front();
      const auto& sub = wb.subfactor(x);
      QuotTriangle t = kind == "dist" ? sub.dist_triangle(f)
                                      : sub.induced_triangle(st.std_triangle(f));
      auto conv = sub.convert_triangle(t);
      result = {{"kind", kind},
                {"triangle", sextuple_json(t.quot)},
                {"ambient", sextuple_json(t.ambient)},
                {"unique_mod_x", t.unique_mod_x},
                {"conversion_witness", conv.witness.has_value()}};
      text << kind << " triangle " << t.quot.a->name() << " -> " << t.quot.b->name() << " -> "
           << dims_string(t.quot.c) << " -> Sigma(" << t.quot.a->name() << ")\n"
           << "third object modulo X: " << identify_quot(wb, x, t.quot.c) << "\n"
           << "conversion witness: " << yes(conv.witness.has_value()) << "\n";
      if (kind == "induced") text << "unique modulo X: " << yes(t.unique_mod_x) << "\n";
    } else if (*c_hyp) {
      report["command"] = "hypotheses";
      verdicts = check_hypotheses(wb, {parse_subcat(wb, a_expr), x}, cfg);
    } else if (*c_verify) {
      report["command"] = "verify";
      Setting s{parse_subcat(wb, a_expr), x};
      std::vector<bool> keep(5, axioms.empty());
      for (const auto& ax : split_top(axioms, ',')) {
        if (ax.empty()) continue;
        std::string l = ax;
        std::transform(l.begin(), l.end(), l.begin(), ::tolower);
        if (l.size() != 4 || l.compare(0, 3, "rtr") != 0 || l[3] < '0' || l[3] > '4') {
          throw InputError("--axioms: unknown axiom '" + ax + "'");
        }
        keep[l[3] - '0'] = true;
      }
      auto hyp = check_hypotheses(wb, s, cfg);
      for (const auto& h : hyp) {
        if (h.status == Status::Fail) {
          verdicts = hyp;
          throw InputError("hypothesis " + h.check + " fails for this (A, X); axioms not run");
        }
      }
      auto add = [&](const std::vector<Verdict>& vs) {
        for (std::size_t i = 0; i < vs.size(); ++i) {
          if (keep[i]) verdicts.push_back(vs[i]);
        }
      };
      add(verify_axioms(wb, s, cfg));
      if (left) add(verify_axioms(wb, s, cfg, true));
    } else if (*c_mut) {
      report["command"] = "mutation";
      Setting s{parse_subcat(wb, a_expr), x};
      verdicts.push_back(check_rigid(wb, s.x));
      verdicts.push_back(check_extension_closed(wb, s.a, cfg));
      verdicts.push_back(check_mutation_pair(wb, s, cfg));
    } else if (*c_classify) {
      report["command"] = "classify";
      ClassifyTable t = classify_all(wb, cfg);
      result = t.to_json();
      Verdict v;
      v.check = "biconditional";
      v.instances = t.rows.size();
      v.failures = t.violations;
      v.status = t.violations ? Status::Fail : Status::Pass;
      verdicts.push_back(v);
      text << render_table(t);
    } else if (*c_replay) {
      report["command"] = "replay";
      json ev = read_json_file(evidence_file);
      std::vector<json> items;
      if (ev.is_object() && ev.contains("verdicts")) {
        for (const auto& v : ev["verdicts"])
          for (const auto& e : v.value("evidence", json::array())) items.push_back(e);
      } else if (ev.is_array()) {
        items.assign(ev.begin(), ev.end());
      } else {
        items.push_back(ev);
      }
      result = json::array();
      Verdict v;
      v.check = "replay";
      for (const auto& e : items) {
        Outcome oc = replay_instance(wb, {SubcatSpec::zero(), SubcatSpec::zero()}, cfg, e);
        const bool failed = oc.kind == Outcome::Kind::Fail;
        result.push_back({{"check", e.value("check", "")}, {"index", e.value("index", 0)},
                          {"reproduced", failed}, {"note", oc.note}});
        text << e.value("check", "") << " #" << e.value("index", 0) << ": "
             << (failed ? "fail reproduced" : "did not fail") << (oc.note.empty() ? "" : " (" + oc.note + ")")
             << "\n";
        ++v.instances;
        if (failed) {
          ++v.failures;
          if (v.evidence.size() < 3) v.evidence.push_back(e);
        }
      }
      v.status = v.failures ? Status::Fail : Status::Pass;
      verdicts.push_back(v);
    }

    json vs = json::array();
    for (const auto& v : verdicts) vs.push_back(v.to_json());
    report["verdicts"] = vs;
    if (!result.is_null()) report["result"] = result;
    if (!o.report.empty()) {
      std::ofstream f(o.report);
      if (!f) throw InputError("cannot write " + o.report);
      f << report.dump(2) << "\n";
    }
    if (o.json_out) {
      out << report.dump(2) << "\n";
    } else {
      out << "algebra: " << la.name << "\n" << text.str() << render_verdicts(verdicts);
    }
    return exit_code(verdicts);
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace subfac::cli
