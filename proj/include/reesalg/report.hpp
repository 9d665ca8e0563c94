#pragma once

// Job files, analysis reports, and their JSON / text renderings.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "reesalg/errors.hpp"
#include "reesalg/monomial_ideal.hpp"
#include "reesalg/polyhedra.hpp"
#include "reesalg/rees_analysis.hpp"
#include "reesalg/rees_cone.hpp"

namespace reesalg {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Malformed or inconsistent job input.
class JobError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Bounds {
  std::optional<Exponent> qg_window;  // default r + d + 2
  Exponent conductor_horizon = 8;
  std::size_t point_budget = kDefaultPointBudget;
};

struct JobSpec {
  std::vector<std::string> variables;
  MonomialIdeal ideal;
  std::optional<MonomialIdeal> reduction;
  Bounds bounds;
  std::vector<Exponent> core_u;

  std::size_t dim() const { return variables.size(); }
};

namespace detail {

inline std::vector<ExponentVector> parse_vectors(const Json& arr, std::size_t d, const std::string& field) {
  if (!arr.is_array()) throw JobError("\"" + field + "\" must be an array of exponent vectors");
  std::vector<ExponentVector> out;
  for (const auto& row : arr) {
    if (!row.is_array() || row.size() != d)
      throw JobError("\"" + field + "\": every exponent vector needs " + std::to_string(d) + " entries");
    ExponentVector v(d);
    for (std::size_t j = 0; j < d; ++j) {
      if (!row[j].is_number_integer()) throw JobError("\"" + field + "\": exponents must be integers");
      v[j] = row[j].get<Exponent>();
      if (v[j] < 0) throw JobError("\"" + field + "\": negative exponent");
    }
    out.push_back(std::move(v));
  }
  return out;
}

inline Exponent positive_int(const Json& obj, const char* key, Exponent fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& x = obj.at(key);
  if (!x.is_number_integer() || x.get<Exponent>() < 0) throw JobError(std::string("bounds.") + key + " must be a nonnegative integer");
  return x.get<Exponent>();
}

}  // namespace detail

inline JobSpec parse_job(const Json& doc) {
  if (!doc.is_object()) throw JobError("job must be a JSON object");
  JobSpec job;
  if (!doc.contains("variables") || !doc["variables"].is_array() || doc["variables"].empty())
    throw JobError("\"variables\" must be a nonempty array of names");
  for (const auto& v : doc["variables"]) {
    if (!v.is_string()) throw JobError("variable names must be strings");
    job.variables.push_back(v.get<std::string>());
  }
  const std::size_t d = job.dim();
  if (!doc.contains("ideal")) throw JobError("missing \"ideal\"");
  job.ideal = MonomialIdeal(d, detail::parse_vectors(doc["ideal"], d, "ideal"));
  if (job.ideal.is_zero()) throw JobError("\"ideal\" has no generators");
  if (doc.contains("reduction") && !doc["reduction"].is_null()) {
    auto J = MonomialIdeal(d, detail::parse_vectors(doc["reduction"], d, "reduction"));
    if (J.is_zero()) throw JobError("\"reduction\" has no generators");
    if (!is_subset(J, job.ideal)) throw JobError("\"reduction\" is not contained in \"ideal\"");
    job.reduction = std::move(J);
  }
  if (doc.contains("bounds")) {
    const auto& b = doc["bounds"];
    if (!b.is_object()) throw JobError("\"bounds\" must be an object");
    if (b.contains("qg_window") && !b["qg_window"].is_null()) job.bounds.qg_window = detail::positive_int(b, "qg_window", 0);
    job.bounds.conductor_horizon = detail::positive_int(b, "conductor_horizon", 8);
    if (job.bounds.conductor_horizon < 1) throw JobError("bounds.conductor_horizon must be >= 1");
    job.bounds.point_budget = static_cast<std::size_t>(
        detail::positive_int(b, "point_budget", static_cast<Exponent>(kDefaultPointBudget)));
  }
  if (doc.contains("core_u")) {
    if (!doc["core_u"].is_array()) throw JobError("\"core_u\" must be an array of positive integers");
    for (const auto& u : doc["core_u"]) {
      if (!u.is_number_integer() || u.get<Exponent>() < 1) throw JobError("\"core_u\" entries must be positive integers");
      job.core_u.push_back(u.get<Exponent>());
    }
  }
  return job;
}

inline JobSpec parse_job_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw JobError(std::string("malformed JSON: ") + e.what());
  }
  return parse_job(doc);
}

inline Json to_json(const ExponentVector& v) { return Json(v.coords()); }

inline Json to_json(const std::vector<ExponentVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

inline Json to_json(const MonomialIdeal& I) { return to_json(I.generators()); }

inline Json job_to_json(const JobSpec& job) {
  Json out;
  out["variables"] = job.variables;
  out["ideal"] = to_json(job.ideal);
  if (job.reduction) out["reduction"] = to_json(*job.reduction);
  Json b;
  if (job.bounds.qg_window) b["qg_window"] = *job.bounds.qg_window;
  b["conductor_horizon"] = job.bounds.conductor_horizon;
  b["point_budget"] = job.bounds.point_budget;
  out["bounds"] = b;
  if (!job.core_u.empty()) out["core_u"] = job.core_u;
  return out;
}

// ---------------------------------------------------------------------------
// Sections. Each is an object with "status": "ok" | "inapplicable" | "horizon_exceeded".

inline Json inapplicable(const std::string& reason) {
  Json out;
  out["status"] = "inapplicable";
  out["reason"] = reason;
  return out;
}

/// Runs `body`; an Inapplicable exception becomes a structured section.
inline Json guarded(const std::function<Json()>& body) {
  try {
    return body();
  } catch (const Inapplicable& e) {
    return inapplicable(e.what());
  }
}

inline Json newton_section(const MonomialIdeal& I) {
  if (I.is_unit()) return inapplicable("unit ideal has no Newton polyhedron facets");
  const auto F = newton_polyhedron(I);
  Json out;
  out["status"] = "ok";
  out["m_primary"] = F.m_primary_source;
  Json facets = Json::array();
  for (const auto& h : F.bounded) facets.push_back(Json{{"normal", to_json(h.normal)}, {"offset", h.offset}});
  out["bounded_facets"] = facets;
  out["rees_valuations"] = F.bounded.size();
  return out;
}

inline Json closure_section(const JobSpec& job) {
  if (job.ideal.is_unit()) return inapplicable("unit ideal");
  if (!is_m_primary(job.ideal)) return inapplicable("integral closure by box enumeration needs an m-primary ideal");
  Json out;
  out["status"] = "ok";
  out["generators"] = to_json(integral_closure(job.ideal, job.bounds.point_budget));
  return out;
}

/// Lifted rows in lexicographic order, then the coordinate rows e_1..e_d.
inline std::vector<ExponentVector> display_rows(const ReesCone& RC) {
  std::vector<ExponentVector> lifted(RC.rows.begin(), RC.rows.begin() + static_cast<std::ptrdiff_t>(RC.num_lifted));
  std::sort(lifted.begin(), lifted.end());
  for (std::size_t k = RC.num_lifted; k < RC.rows.size(); ++k) lifted.push_back(RC.rows[k]);
  return lifted;
}

inline Json cone_section(const MonomialIdeal& I) {
  if (I.is_unit() || !is_m_primary(I)) return inapplicable("the Rees cone needs an m-primary ideal");
  const auto RC = rees_cone(I);
  Json out;
  out["status"] = "ok";
  out["rows"] = to_json(display_rows(RC));
  out["rays"] = to_json(RC.rays);
  return out;
}

inline Json gorenstein_section(const JobSpec& job, bool fast) {
  const auto& I = job.ideal;
  if (I.is_unit() || !is_m_primary(I)) return inapplicable("Gorenstein test of the normalization needs an m-primary ideal");
  const auto RC = rees_cone(I);
  const auto V = is_gorenstein_normalization(RC, job.bounds.point_budget);
  const auto& CD = V.canonical;
  const auto d = I.dim();
  Json out;
  out["status"] = "ok";
  out["rows"] = to_json(display_rows(RC));
  out["q"] = CD.q;
  out["w"] = V.w;
  out["canonical_generators"] = to_json(CD.generators);
  out["gorenstein_normalization"] = V.gorenstein;
  out["routes"] = Json{{"shifted_cone", V.shifted_cone_route}, {"principal_canonical_ideal", V.principal_route}};
  out["a_normalization"] = a_invariant_normalization(CD, d);
  out["filtration_reduction_number"] = filtration_reduction_number(CD, d);
  out["search_certificate"] = Json{{"search_box", Json{{"lo", to_json(CD.search.search_lo)}, {"hi", to_json(CD.search.search_hi)}}},
                                   {"sweep_box_hi", to_json(CD.search.sweep_hi)},
                                   {"relint_candidates", CD.search.candidates},
                                   {"relint_points_swept", CD.search.swept}};
  if (fast) {
    const auto a = pure_power_exponents(I);
    if (!a) {
      out["fast_test"] = inapplicable("fast test needs (x_1^{a_1}, ..., x_d^{a_d})");
    } else {
      const auto t = pure_power_fast_test(*a);
      if (t.gorenstein != V.gorenstein)
        throw InvariantViolation("fast test (p = " + std::to_string(t.p) + ") disagrees with the polyhedral verdict");
      out["fast_test"] = Json{{"status", "ok"}, {"L", t.L}, {"j", t.j}, {"p", t.p}, {"gorenstein", t.gorenstein}, {"agrees", true}};
    }
  }
  return out;
}

/// The supplied reduction, or the pure-power reduction when NP(I) has one bounded facet.
struct ChosenReduction {
  std::optional<MonomialIdeal> J;
  std::string source;  // "supplied" | "pure_power_search"
  std::string reason;  // why none is available
};

inline ChosenReduction choose_reduction(const JobSpec& job) {
  ChosenReduction out;
  const auto& I = job.ideal;
  if (I.is_unit() || !is_m_primary(I)) {
    out.reason = "criteria need an m-primary ideal";
    return out;
  }
  if (job.reduction) {
    if (!is_monomial_reduction(*job.reduction, I)) {
      out.reason = "supplied J is not a reduction of I (Newton polyhedra differ)";
      return out;
    }
    out.J = job.reduction;
    out.source = "supplied";
    return out;
  }
  out.J = find_pure_power_reduction(I);
  if (out.J)
    out.source = "pure_power_search";
  else
    out.reason = "no pure-power reduction (Newton polyhedron has " + std::to_string(newton_polyhedron(I).bounded.size()) +
                 " bounded facets) and none supplied";
  return out;
}

inline Json reduction_section(const JobSpec& job, const ChosenReduction& red) {
  if (!red.J) return inapplicable(red.reason);
  const auto data = reduction_data(*red.J, job.ideal);
  Json out;
  out["status"] = "ok";
  out["source"] = red.source;
  out["J"] = to_json(*red.J);
  out["mu_J"] = data.mu_J;
  out["r"] = data.r;
  out["s"] = data.s;
  out["s_bar"] = data.s_bar;
  return out;
}

inline Json qgor_section(const JobSpec& job, const ChosenReduction& red, std::optional<QGVerdict>* keep = nullptr) {
  if (!red.J) return inapplicable(red.reason);
  if (red.J->num_generators() != job.dim())
    return inapplicable("reduction has " + std::to_string(red.J->num_generators()) + " generators, need d = " +
                        std::to_string(job.dim()));
  const auto v = quasi_gorenstein_test(*red.J, job.ideal, job.bounds.qg_window);
  if (keep) *keep = v;
  Json out;
  out["status"] = "ok";
  out["quasi_gorenstein"] = v.quasi_gorenstein;
  out["a"] = v.a ? Json(*v.a) : Json(nullptr);
  out["u"] = v.u ? Json(*v.u) : Json(nullptr);
  out["checked_range"] = Json::array({v.range_lo, v.range_hi});
  out["probe_index"] = v.probe_index;
  out["candidate_range"] = Json::array({v.candidate_lo, v.candidate_hi});
  out["r"] = v.r;
  out["s"] = v.s;
  out["note"] = "identity verified only on the checked range plus the probe index";
  return out;
}

inline Json cm_section(const JobSpec& job, const ChosenReduction& red) {
  if (!red.J) return inapplicable(red.reason);
  Json out;
  out["status"] = "ok";
  out["valabrega_valla"] = valabrega_valla_test(*red.J, job.ideal);
  out["two_standard"] = two_standard_test(*red.J, job.ideal);
  return out;
}

inline Json core_section(const JobSpec& job, const ChosenReduction& red, const std::vector<Exponent>& us,
                         const std::optional<QGVerdict>& verdict) {
  if (!red.J) return inapplicable(red.reason);
  if (!pure_power_exponents(*red.J)) return inapplicable("core computation needs a d-generated pure-power reduction");
  Json out;
  out["status"] = "ok";
  out["characteristic"] = "formula assumes residue characteristic 0 or > r(I); exponent arithmetic is characteristic-free";
  Json table = Json::array();
  const auto d = static_cast<Exponent>(job.dim());
  for (Exponent u : us) {
    const auto c = core_compute(job.ideal, *red.J, u);
    Json row{{"u", u}, {"core", to_json(c.core)}, {"start_n", c.start}, {"stabilized_n", c.stabilized}};
    if (verdict && verdict->quasi_gorenstein) {
      const Exponent e = d * u + *verdict->a;
      row["predicted_power"] = e;
      row["matches_prediction"] = c.core == power_or_unit(job.ideal, e);
    }
    table.push_back(row);
  }
  out["table"] = table;
  return out;
}

inline Json conductor_section(const JobSpec& job) {
  if (job.ideal.is_unit() || !is_m_primary(job.ideal)) return inapplicable("conductor exponent needs an m-primary ideal");
  try {
    const auto c = conductor_t_exponent(job.ideal, job.bounds.conductor_horizon);
    return Json{{"status", "ok"}, {"q", c.q}, {"verified_up_to_n", c.horizon}};
  } catch (const HorizonExceeded& e) {
    return Json{{"status", "horizon_exceeded"}, {"reason", e.what()}};
  }
}

inline Json check(const std::string& name, bool ok, const std::string& detail) {
  return Json{{"name", name}, {"passed", ok}, {"detail", detail}};
}

/// Sandwich, q - d bound, and the a-invariant identities.
inline Json consistency_section(const JobSpec& job, const ChosenReduction& red, const Json& gor,
                                const std::optional<QGVerdict>& verdict) {
  Json checks = Json::array();
  const auto d = static_cast<Exponent>(job.dim());
  if (gor.value("status", "") == "ok") {
    const Exponent a = gor["a_normalization"], q = gor["q"];
    checks.push_back(check("normalization_a_at_least_q_minus_d", a >= q - d,
                           "a(normalization) = " + std::to_string(a) + ", q - d = " + std::to_string(q - d)));
    if (gor["gorenstein_normalization"].get<bool>())
      checks.push_back(check("gorenstein_a_equals_q_minus_d", a == q - d,
                             "a(normalization) = " + std::to_string(a) + ", q - d = " + std::to_string(q - d)));
  }
  if (verdict && verdict->quasi_gorenstein && red.J && gor.value("status", "") == "ok") {
    const Exponent a = *verdict->a;
    checks.push_back(check("sandwich", verdict->s - d + 1 <= a && a <= verdict->r - d + 1,
                           std::to_string(verdict->s - d + 1) + " <= a = " + std::to_string(a) +
                               " <= " + std::to_string(verdict->r - d + 1)));
    for (const auto& c : a_invariant_consistency(job.ideal, *red.J, *verdict, gor["a_normalization"].get<Exponent>(),
                                                 job.bounds.conductor_horizon))
      checks.push_back(c.skipped ? Json{{"name", c.name}, {"skipped", true}, {"detail", c.detail}}
                                 : check(c.name, c.passed, c.detail));
  }
  return Json{{"status", "ok"}, {"checks", checks}};
}

// ---------------------------------------------------------------------------

enum class Command { np, iclosure, cone, gorenstein, qgor, cm, core, report };

struct RunOptions {
  bool fast = false;
  std::vector<Exponent> core_u;  // overrides the job's list when nonempty
};

/// True when any section (or nested section) is marked inapplicable.
inline bool has_inapplicable(const Json& j) {
  if (j.is_object()) {
    if (j.contains("status") && j["status"] == "inapplicable") return true;
    for (const auto& [k, v] : j.items())
      if (has_inapplicable(v)) return true;
  }
  return false;
}

inline const char* command_name(Command c) {
  switch (c) {
    case Command::np: return "np";
    case Command::iclosure: return "iclosure";
    case Command::cone: return "cone";
    case Command::gorenstein: return "gorenstein";
    case Command::qgor: return "qgor";
    case Command::cm: return "cm";
    case Command::core: return "core";
    case Command::report: return "report";
  }
  return "?";
}

/// Builds the JSON document for one command on one job. InvariantViolation
/// and BudgetExceeded propagate.
inline Json run_command(Command cmd, const JobSpec& job, const RunOptions& opt = {}) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = command_name(cmd);
  out["job"] = job_to_json(job);
  const auto us = !opt.core_u.empty() ? opt.core_u : (!job.core_u.empty() ? job.core_u : std::vector<Exponent>{1});
  switch (cmd) {
    case Command::np: out["newton"] = newton_section(job.ideal); break;
    case Command::iclosure: out["integral_closure"] = guarded([&] { return closure_section(job); }); break;
    case Command::cone: out["rees_cone"] = guarded([&] { return cone_section(job.ideal); }); break;
    case Command::gorenstein: out["gorenstein"] = guarded([&] { return gorenstein_section(job, opt.fast); }); break;
    case Command::qgor: {
      const auto red = choose_reduction(job);
      out["reduction"] = guarded([&] { return reduction_section(job, red); });
      out["quasi_gorenstein"] = guarded([&] { return qgor_section(job, red); });
      break;
    }
    case Command::cm: {
      const auto red = choose_reduction(job);
      out["reduction"] = guarded([&] { return reduction_section(job, red); });
      out["cohen_macaulay"] = guarded([&] { return cm_section(job, red); });
      break;
    }
    case Command::core: {
      const auto red = choose_reduction(job);
      std::optional<QGVerdict> v;
      out["quasi_gorenstein"] = guarded([&] { return qgor_section(job, red, &v); });
      out["core"] = guarded([&] { return core_section(job, red, us, v); });
      break;
    }
    case Command::report: {
      out["newton"] = newton_section(job.ideal);
      out["integral_closure"] = guarded([&] { return closure_section(job); });
      out["gorenstein"] = guarded([&] { return gorenstein_section(job, pure_power_exponents(job.ideal).has_value()); });
      const auto red = choose_reduction(job);
      std::optional<QGVerdict> v;
      out["reduction"] = guarded([&] { return reduction_section(job, red); });
      out["quasi_gorenstein"] = guarded([&] { return qgor_section(job, red, &v); });
      out["cohen_macaulay"] = guarded([&] { return cm_section(job, red); });
      out["core"] = guarded([&] { return core_section(job, red, us, v); });
      out["conductor"] = guarded([&] { return conductor_section(job); });
      out["consistency"] = consistency_section(job, red, out["gorenstein"], v);
      break;
    }
  }
  return out;
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Text rendering.

/// x^2*y, or 1 for the zero vector. Ideals print in descending lex order.
inline std::string monomial_string(const std::vector<std::string>& names, const Json& v) {
  std::string out;
  for (std::size_t j = 0; j < v.size() && j < names.size(); ++j) {
    const auto e = v[j].get<Exponent>();
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += names[j];
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

inline std::string ideal_string(const std::vector<std::string>& names, const Json& gens) {
  if (gens.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t k = gens.size(); k-- > 0;) out += (k + 1 < gens.size() ? ", " : "") + monomial_string(names, gens[k]);
  return out + ")";
}

inline std::string vec_string(const Json& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + v[k].dump();
  return out + ")";
}

inline std::string render_pretty(const Json& doc) {
  std::ostringstream os;
  const auto names = doc["job"]["variables"].get<std::vector<std::string>>();
  const auto yes = [](const Json& b) { return b.get<bool>() ? "yes" : "no"; };
  os << "I = " << ideal_string(names, doc["job"]["ideal"]) << " in " << names.size() << " variables\n";

  const auto header = [&](const char* title, const Json& sec) {
    os << "\n[" << title << "]";
    if (sec.value("status", "ok") != "ok") {
      os << " " << sec["status"].get<std::string>() << ": " << sec.value("reason", "") << "\n";
      return false;
    }
    os << "\n";
    return true;
  };

  if (doc.contains("newton") && header("newton polyhedron", doc["newton"])) {
    const auto& s = doc["newton"];
    for (const auto& f : s["bounded_facets"]) os << "  <" << vec_string(f["normal"]) << ", v> >= " << f["offset"] << "\n";
    os << "  Rees valuations: " << s["rees_valuations"] << ", m-primary: " << yes(s["m_primary"]) << "\n";
  }
  if (doc.contains("integral_closure") && header("integral closure", doc["integral_closure"]))
    os << "  " << ideal_string(names, doc["integral_closure"]["generators"]) << "\n";
  if (doc.contains("rees_cone") && header("rees cone", doc["rees_cone"])) {
    for (const auto& r : doc["rees_cone"]["rows"]) os << "  row " << vec_string(r) << "\n";
    for (const auto& r : doc["rees_cone"]["rays"]) os << "  ray " << vec_string(r) << "\n";
  }
  if (doc.contains("gorenstein") && header("normalized extended Rees algebra", doc["gorenstein"])) {
    const auto& s = doc["gorenstein"];
    for (const auto& r : s["rows"]) os << "  row " << vec_string(r) << "\n";
    os << "  q = " << s["q"] << ", w = " << vec_string(s["w"]) << "\n";
    os << "  canonical generators:";
    for (const auto& g : s["canonical_generators"]) os << " " << vec_string(g);
    os << "\n  Gorenstein: " << yes(s["gorenstein_normalization"]) << " (shifted cone: " << yes(s["routes"]["shifted_cone"])
       << ", principal: " << yes(s["routes"]["principal_canonical_ideal"]) << ")\n";
    os << "  a-invariant: " << s["a_normalization"] << ", filtration reduction number: " << s["filtration_reduction_number"]
       << "\n";
    const auto& c = s["search_certificate"];
    os << "  search box " << vec_string(c["search_box"]["lo"]) << ".." << vec_string(c["search_box"]["hi"]) << ", sweep to "
       << vec_string(c["sweep_box_hi"]) << " (" << c["relint_points_swept"] << " relint points)\n";
    if (s.contains("fast_test")) {
      const auto& f = s["fast_test"];
      if (f["status"] == "ok")
        os << "  fast test: L = " << f["L"] << ", j = " << f["j"] << ", p = " << f["p"] << ", Gorenstein: " << yes(f["gorenstein"])
           << "\n";
      else
        os << "  fast test: inapplicable: " << f["reason"].get<std::string>() << "\n";
    }
  }
  if (doc.contains("reduction") && header("reduction", doc["reduction"])) {
    const auto& s = doc["reduction"];
    os << "  J = " << ideal_string(names, s["J"]) << " (" << s["source"].get<std::string>() << ")\n";
    os << "  r = " << s["r"] << ", s = " << s["s"] << ", s_bar = " << s["s_bar"] << "\n";
  }
  if (doc.contains("quasi_gorenstein") && header("quasi-Gorenstein", doc["quasi_gorenstein"])) {
    const auto& s = doc["quasi_gorenstein"];
    os << "  quasi-Gorenstein: " << yes(s["quasi_gorenstein"]);
    if (!s["a"].is_null()) os << ", a = " << s["a"] << ", u = " << s["u"];
    os << "\n  checked i in [" << s["checked_range"][0] << ", " << s["checked_range"][1] << "] and i = " << s["probe_index"]
       << "; candidates a in [" << s["candidate_range"][0] << ", " << s["candidate_range"][1] << "]\n";
  }
  if (doc.contains("cohen_macaulay") && header("Cohen-Macaulay", doc["cohen_macaulay"])) {
    const auto& s = doc["cohen_macaulay"];
    os << "  Valabrega-Valla: " << yes(s["valabrega_valla"]) << ", 2-standard: " << yes(s["two_standard"]) << "\n";
  }
  if (doc.contains("core") && header("core", doc["core"])) {
    for (const auto& row : doc["core"]["table"]) {
      os << "  core(I^" << row["u"] << ") = " << ideal_string(names, row["core"]);
      if (row.contains("predicted_power"))
        os << "  [I^" << row["predicted_power"] << ": " << (row["matches_prediction"].get<bool>() ? "match" : "MISMATCH") << "]";
      os << "\n";
    }
    os << "  " << doc["core"]["characteristic"].get<std::string>() << "\n";
  }
  if (doc.contains("conductor") && header("conductor", doc["conductor"]))
    os << "  q = " << doc["conductor"]["q"] << " (verified for n <= " << doc["conductor"]["verified_up_to_n"] << ")\n";
  if (doc.contains("consistency") && header("consistency", doc["consistency"]))
    for (const auto& c : doc["consistency"]["checks"])
      os << "  " << (c.value("skipped", false) ? "skip" : c["passed"].get<bool>() ? "pass" : "FAIL") << "  " << c["name"].get<std::string>() << ": "
         << c["detail"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace reesalg
