#pragma once

// Fan file parsing, subcommand dispatch and report rendering for the
// `toricaut` command-line tool. Reports are JSON trees; the text form is
// rendered from the same tree.

#include "toric/autstructure.hpp"
#include "toric/classgroup.hpp"
#include "toric/fan.hpp"
#include "toric/fanauto.hpp"
#include "toric/roots.hpp"
#include "toric/symbolic.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace toric::cli {

using json = nlohmann::json;

/// {"name": ..., "rank": n, "rays": [[...], ...], "max_cones": [[...], ...]}
using FanFile = Fan;

inline constexpr std::array<std::string_view, 8> kSubcommands = {
    "validate", "classgroup", "roots", "classes", "aut0", "symmetries", "component-group", "report"};

enum class OutputFormat { Text, Json };

struct Flags {
  OutputFormat format = OutputFormat::Text;
  bool check = false;
  long box = 2;
};

struct RunResult {
  json report;
  int exit_code = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInternal = 2;

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline InputError parse_error(const std::string& field, const std::string& what) {
  return InputError("ParseError", "field '" + field + "': " + what);
}

inline Integer parse_integer(const json& j, const std::string& field) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                          [](char c) { return c >= '0' && c <= '9'; }))
      throw parse_error(field, "string \"" + s + "\" is not an integer");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  if (j.is_number_float()) throw parse_error(field, "expected an integer (write large values as strings)");
  throw parse_error(field, "expected an integer, got " + std::string(j.type_name()));
}

inline const json& require(const json& j, const char* key) {
  if (!j.contains(key)) throw parse_error(key, "missing");
  return j.at(key);
}

}  // namespace detail

inline FanFile parse_fan_file(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("ParseError", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("ParseError", "top level must be a JSON object");

  FanFile f;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw detail::parse_error("name", "expected a string");
    f.name = j["name"].get<std::string>();
  }
  const Integer rank = detail::parse_integer(detail::require(j, "rank"), "rank");
  if (rank < 1 || rank > 64) throw detail::parse_error("rank", "must be between 1 and 64");
  f.rank = static_cast<std::size_t>(rank);

  const json& rays = detail::require(j, "rays");
  if (!rays.is_array()) throw detail::parse_error("rays", "expected an array");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const std::string field = "rays[" + std::to_string(i) + "]";
    if (!rays[i].is_array()) throw detail::parse_error(field, "expected an array");
    if (rays[i].size() != f.rank)
      throw detail::parse_error(field, "has length " + std::to_string(rays[i].size()) + ", rank is " +
                                           std::to_string(f.rank));
    IntVector v;
    for (std::size_t k = 0; k < rays[i].size(); ++k)
      v.push_back(detail::parse_integer(rays[i][k], field + "[" + std::to_string(k) + "]"));
    f.rays.push_back(std::move(v));
  }

  const json& cones = detail::require(j, "max_cones");
  if (!cones.is_array()) throw detail::parse_error("max_cones", "expected an array");
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const std::string field = "max_cones[" + std::to_string(c) + "]";
    if (!cones[c].is_array()) throw detail::parse_error(field, "expected an array");
    Cone cone;
    for (std::size_t k = 0; k < cones[c].size(); ++k) {
      const std::string sub = field + "[" + std::to_string(k) + "]";
      const Integer idx = detail::parse_integer(cones[c][k], sub);
      if (idx < 0 || idx >= Integer(f.rays.size()))
        throw detail::parse_error(sub, "ray index " + idx.str() + " out of range");
      cone.push_back(static_cast<std::size_t>(idx));
    }
    f.max_cones.push_back(std::move(cone));
  }
  return f;
}

// ---------------------------------------------------------------------------
// JSON rendering

inline json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline json to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline json to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

inline json to_json(const ClassElement& c) { return {{"free", to_json(c.free)}, {"torsion", to_json(c.torsion)}}; }

inline json to_json(const LatticeAut& a) {
  return {{"matrix", to_json(a.matrix)}, {"det", a.det}, {"ray_permutation", a.ray_permutation}};
}

inline json validation_json(const ValidatedFan& fan) {
  return {{"valid", true},
          {"rank", fan.rank()},
          {"num_rays", fan.num_rays()},
          {"num_max_cones", fan.max_cones().size()},
          {"num_walls", fan.walls().size()},
          {"completeness",
           "proxy check: positive spanning, full-dimensional strongly convex cones, every wall in exactly two "
           "cones; support coverage is not verified"}};
}

inline json class_group_json(const ClassGroupData& cg) {
  json degrees = json::array();
  for (std::size_t i = 0; i < cg.num_rays(); ++i) degrees.push_back(to_json(ray_class(cg, i)));
  return {{"free_rank", cg.free_rank}, {"torsion", to_json(IntVector(cg.torsion))}, {"ray_degrees", degrees}};
}

inline json roots_json(const std::vector<Root>& roots) {
  json list = json::array();
  std::size_t ss = 0;
  for (const auto& r : roots) {
    ss += r.semisimple;
    list.push_back({{"alpha", to_json(r.alpha)},
                    {"ray", r.ray},
                    {"semisimple", r.semisimple},
                    {"partner", r.partner ? json(*r.partner) : json(nullptr)}});
  }
  return {{"count", roots.size()}, {"semisimple", ss}, {"nonsemisimple", roots.size() - ss}, {"list", list}};
}

inline json classes_json(const RayClasses& classes, const OrderedClasses& order) {
  json rel = json::array();
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = 0; b < classes.size(); ++b)
      if (order.precedes(a, b)) rel.push_back({a, b});
  return {{"classes", classes.classes}, {"order", rel}, {"depth", order.depth}, {"layers", order.layers}};
}

inline json aut0_json(const Aut0Report& rep) {
  json reps = json::array();
  for (const auto& d : rep.representations) {
    json summands = json::array();
    for (const auto& s : d.summands) summands.push_back({{"degree", s.degree}, {"multiplicity", s.multiplicity}});
    json j = {{"acting_class", d.acting_class},
              {"kind", to_string(d.kind)},
              {"dimension", d.dimension},
              {"summands", summands}};
    if (d.target_class) j["target_class"] = *d.target_class;
    if (d.target_ray) j["target_ray"] = *d.target_ray;
    reps.push_back(std::move(j));
  }
  json layers = json::array();
  for (const auto& l : rep.unipotent.layers)
    layers.push_back({{"depth", l.depth}, {"classes", l.classes}, {"dimension", l.dimension}});
  std::size_t sum_ll = 0;
  for (auto l : rep.reductive.gl_factors) sum_ll += l * (l - 1);
  return {
      {"total_dimension", rep.total_dimension},
      {"formula", structure_formula(rep)},
      {"reductive",
       {{"gl_factors", rep.reductive.gl_factors},
        {"torus", {{"free_rank", rep.reductive.torus_free_rank}, {"torsion", to_json(IntVector(rep.reductive.torus_torsion))}}},
        {"dimension", rep.reductive.dimension}}},
      {"unipotent",
       {{"total_dimension", rep.unipotent.total_dimension},
        {"layers", layers},
        {"chain_dimensions", rep.unipotent.chain_dimensions}}},
      {"representations", reps},
      {"radical",
       {{"semisimple_span_rank", rep.radical.semisimple_span_rank},
        {"quotient_free_rank", rep.radical.quotient_free_rank},
        {"quotient_torsion", to_json(IntVector(rep.radical.quotient_torsion))},
        {"unipotent_dimension", rep.radical.unipotent_dimension}}},
      {"accounting",
       {{"rank_plus_roots", rep.rank + rep.num_roots},
        {"reductive_plus_unipotent", rep.reductive.dimension + static_cast<long>(rep.unipotent.total_dimension)},
        {"semisimple_roots", rep.num_semisimple},
        {"sum_l_times_l_minus_1", sum_ll}}},
  };
}

inline json symmetries_json(const std::vector<LatticeAut>& group) {
  json elems = json::array();
  for (const auto& g : group) elems.push_back(to_json(g));
  return {{"order", group.size()}, {"elements", elems}};
}

inline json component_group_json(const ComponentGroupReport& cg) {
  json cosets = json::array();
  for (const auto& g : cg.cosets) cosets.push_back(to_json(g));
  return {{"order", cg.order},
          {"aut_delta_order", cg.aut_delta.size()},
          {"weyl_order", to_json(cg.weyl_order)},
          {"weyl_image_normal", true},
          {"coset_representatives", cosets}};
}

inline json check_json(const SymbolicSuiteReport& s) {
  return {{"passed", true},
          {"box_half_width", s.half_width},
          {"group_law_checks", s.group_law_checks},
          {"commutation_checks", s.commutation_checks},
          {"commutation_not_applicable", s.commutation_not_applicable},
          {"torus_conjugation_checks", s.torus_checks},
          {"tangent_checks", s.tangent_checks},
          {"identities", s.identities}};
}

// ---------------------------------------------------------------------------
// Dispatch

inline bool is_subcommand(std::string_view s) {
  return std::find(kSubcommands.begin(), kSubcommands.end(), s) != kSubcommands.end();
}

inline RunResult run(const std::string& subcommand, const FanFile& file, const Flags& flags) {
  RunResult out;
  json& rep = out.report;
  rep["command"] = subcommand;
  rep["fan"] = file.name;
  try {
    if (!is_subcommand(subcommand)) throw InputError("UnknownSubcommand", "unknown subcommand '" + subcommand + "'");
    if (flags.box < 0) throw InputError("BadFlag", "--box must be nonnegative");
    const ValidatedFan fan = validate(file);
    rep["validation"] = validation_json(fan);

    const bool everything = subcommand == "report";
    std::optional<Aut0Report> aut0;
    auto need_aut0 = [&]() -> const Aut0Report& {
      if (!aut0) aut0 = aut0_report(fan);
      return *aut0;
    };

    if (subcommand == "classgroup" || everything) rep["class_group"] = class_group_json(class_group(fan));
    if (subcommand == "roots" || subcommand == "classes" || everything) rep["roots"] = roots_json(need_aut0().roots);
    if (subcommand == "classes" || subcommand == "aut0" || everything)
      rep["classes"] = classes_json(need_aut0().classes, need_aut0().order);
    if (subcommand == "aut0" || everything) rep["aut0"] = aut0_json(need_aut0());
    if (subcommand == "symmetries") rep["symmetries"] = symmetries_json(lattice_automorphisms(fan));
    if (subcommand == "component-group" || everything)
      rep["component_group"] = component_group_json(component_group(fan, need_aut0().classes));
    if (flags.check) rep["check"] = check_json(run_symbolic_suite(fan, need_aut0().roots, flags.box));

    rep["status"] = "ok";
    out.exit_code = kExitOk;
  } catch (const InvariantViolation& e) {
    rep["status"] = "internal_error";
    rep["error"] = {{"kind", e.kind()}, {"message", e.what()}, {"indices", e.indices()}};
    out.exit_code = kExitInternal;
  } catch (const InputError& e) {
    rep["status"] = "invalid_fan";
    rep["error"] = {{"kind", e.kind()}, {"message", e.what()}, {"indices", e.indices()}};
    out.exit_code = kExitInvalid;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text rendering

namespace detail {

inline std::string join(const json& arr, const std::string& sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += sep;
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s;
}

inline std::string ray_set(const json& arr) {
  std::string s = "{";
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? "," : "") + std::string("v") + arr[i].dump();
  return s + "}";
}

inline std::string group_label(const json& torus) {
  std::string s = "Z^" + torus.at("free_rank").dump();
  for (const auto& t : torus.at("torsion")) s += " x Z/" + (t.is_string() ? t.get<std::string>() : t.dump());
  return s;
}

}  // namespace detail

inline std::string render_text(const json& rep) {
  std::ostringstream os;
  os << "fan: " << rep.value("fan", std::string()) << "\n";
  if (rep.contains("error")) {
    const auto& e = rep["error"];
    os << "error [" << e["kind"].get<std::string>() << "]: " << e["message"].get<std::string>() << "\n";
    if (rep.contains("validation")) os << "(the fan itself is valid)\n";
    return os.str();
  }
  if (rep.contains("validation")) {
    const auto& v = rep["validation"];
    os << "valid: rank " << v["rank"] << ", " << v["num_rays"] << " rays, " << v["num_max_cones"]
       << " maximal cones, " << v["num_walls"] << " walls\n";
    os << "completeness: " << v["completeness"].get<std::string>() << "\n";
  }
  if (rep.contains("class_group")) {
    const auto& cg = rep["class_group"];
    os << "\nclass group N = " << detail::group_label({{"free_rank", cg["free_rank"]}, {"torsion", cg["torsion"]}})
       << "\n";
    for (std::size_t i = 0; i < cg["ray_degrees"].size(); ++i) {
      const auto& d = cg["ray_degrees"][i];
      os << "  [H_v" << i << "] = (" << detail::join(d["free"]) << ")";
      if (!d["torsion"].empty()) os << " + torsion (" << detail::join(d["torsion"]) << ")";
      os << "\n";
    }
  }
  if (rep.contains("roots")) {
    const auto& r = rep["roots"];
    os << "\nroots: " << r["count"] << " (" << r["semisimple"] << " semisimple, " << r["nonsemisimple"]
       << " non-semisimple)\n";
    for (const auto& root : r["list"]) {
      os << "  v" << root["ray"] << ": (" << detail::join(root["alpha"]) << ")";
      if (root["semisimple"].get<bool>()) os << "  semisimple, partner v" << root["partner"];
      os << "\n";
    }
  }
  if (rep.contains("classes")) {
    const auto& c = rep["classes"];
    os << "\nray classes:\n";
    for (std::size_t k = 0; k < c["classes"].size(); ++k)
      os << "  F" << k << " = " << detail::ray_set(c["classes"][k]) << "  depth " << c["depth"][k] << "\n";
    for (const auto& rel : c["order"]) os << "  F" << rel[0] << " < F" << rel[1] << "\n";
  }
  if (rep.contains("aut0")) {
    const auto& a = rep["aut0"];
    os << "\n" << a["formula"].get<std::string>() << "\n";
    os << "  dim Aut0 = " << a["total_dimension"] << " = " << a["reductive"]["dimension"] << " (reductive) + "
       << a["unipotent"]["total_dimension"] << " (unipotent)\n";
    os << "  T_N = torus of " << detail::group_label(a["reductive"]["torus"]) << "\n";
    for (const auto& l : a["unipotent"]["layers"]) {
      os << "  layer E_" << l["depth"] << ": classes {";
      for (std::size_t i = 0; i < l["classes"].size(); ++i) os << (i ? "," : "") << "F" << l["classes"][i];
      os << "}, dimension " << l["dimension"] << "\n";
    }
    for (const auto& d : a["representations"]) {
      const std::string kind = d["kind"].get<std::string>();
      os << "  GL_F" << d["acting_class"];
      if (kind == "dual_standard") {
        os << " on V_F" << d["target_class"] << ": " << d["summands"][0]["multiplicity"] << " x E_F^*";
      } else if (kind == "trivial") {
        os << " on V_v" << d["target_ray"] << ": trivial";
      } else {
        os << " on V_v" << d["target_ray"] << ": ";
        for (std::size_t i = 0; i < d["summands"].size(); ++i) {
          const auto& s = d["summands"][i];
          os << (i ? " + " : "") << s["multiplicity"] << " x S^" << s["degree"] << " E_F";
        }
      }
      os << "  (dim " << d["dimension"] << ")\n";
    }
    const auto& rad = a["radical"];
    os << "  radical = R_u ⋊ T_{M/M'}, rank(M') = " << rad["semisimple_span_rank"] << ", M/M' = "
       << detail::group_label({{"free_rank", rad["quotient_free_rank"]}, {"torsion", rad["quotient_torsion"]}})
       << "\n";
  }
  if (rep.contains("symmetries")) {
    const auto& s = rep["symmetries"];
    os << "\nAut_Delta M: order " << s["order"] << "\n";
    for (const auto& g : s["elements"])
      os << "  " << g["matrix"].dump() << "  det " << g["det"] << "  rays -> " << g["ray_permutation"].dump() << "\n";
  }
  if (rep.contains("component_group")) {
    const auto& c = rep["component_group"];
    os << "\ncomponent group Aut/Aut0 = Aut_Delta M / (S_1 x ... x S_k): order " << c["order"] << " = "
       << c["aut_delta_order"] << " / " << c["weyl_order"] << "\n";
    for (const auto& g : c["coset_representatives"]) os << "  coset of " << g["matrix"].dump() << "\n";
  }
  if (rep.contains("check")) {
    const auto& c = rep["check"];
    os << "\nsymbolic checks on [-" << c["box_half_width"] << "," << c["box_half_width"] << "]^n: "
       << c["identities"] << " identities verified (" << c["group_law_checks"] << " group-law, "
       << c["commutation_checks"] << " commutation, " << c["torus_conjugation_checks"] << " torus, "
       << c["tangent_checks"] << " tangent)\n";
  }
  return os.str();
}

}  // namespace toric::cli
