#include "wildram/job.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <set>

namespace wildram {

namespace {

using codec::encode;
using codec::invalid;

const std::set<std::string>& known_tasks() {
  static const std::set<std::string> names{"rho", "cohomology", "ascover", "deform", "predicates"};
  return names;
}

std::vector<FieldElem> decode_list(const Field& k, const Json& j, const std::string& ptr, std::size_t n) {
  if (!j.is_array() || j.size() != n) invalid(ptr, "expected " + std::to_string(n) + " entries");
  std::vector<FieldElem> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(codec::decode_field_elem(k, j[i], ptr + "/" + std::to_string(i)));
  return out;
}

Json pole_list(const Field& k, const std::vector<PolePartClass>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(encode(k, x));
  return out;
}

Json task_rho(const JobConfig& cfg, const Json&) {
  const Character& ch = cfg.character;
  const int prec = cfg.precision > 0 ? cfg.precision : ch.default_prec();
  Json gens = Json::array();
  for (int i = 0; i < ch.s(); ++i) gens.push_back(encode(build_rho(ch, GroupElem::generator(ch.s(), i), prec)));
  const auto law = verify_group_law(ch, prec);
  const auto ram = ramification_data(ch, prec);
  Json isig = Json::array();
  for (const auto& [g, i] : ram.i_sigma) isig.push_back(Json::array({encode(g), i}));
  Json out{{"precision", prec},
           {"generators", gens},
           {"group_law", {{"ok", law.ok}, {"pairs_checked", law.pairs_checked}, {"first_discrepancy", law.first_discrepancy}}},
           {"ramification",
            {{"i_sigma", isig},
             {"ar_identity", ram.ar_identity},
             {"sum_i", ram.sum_i},
             {"uniform_break", ram.uniform_break},
             {"single_jump", ram.single_jump}}}};
  out["ok"] = law.ok && ram.uniform_break && ram.single_jump && ram.ar_identity == ram.sum_i;
  return out;
}

Json task_cohomology(const JobConfig& cfg, const Json&) {
  const Character& ch = cfg.character;
  const int p = ch.p(), s = ch.s(), m = ch.m();
  const auto brute = h1_brute_force(ch, cfg.precision);
  const auto formula = h1_closed_formula(p, s, m);
  H1Engine eng(ch, cfg.precision);
  Json lead = Json::array();
  for (const auto& [e, g] : eng.leading_positions()) lead.push_back(Json::array({e, g}));
  const auto sc = split_condition(p, s, m);
  const auto chk = split_check(ch, cfg.precision);
  const auto kr = krull_dimension_sigma(p, m);
  Json out{{"h1_dim", brute.dim},
           {"h1_formula", formula.h1},
           {"a", formula.a},
           {"dim_cocycles", brute.dim_cocycles},
           {"dim_coboundaries", brute.dim_coboundaries},
           {"basis_leading", lead},
           {"split",
            {{"holds", sc.holds},
             {"digits", sc.digits},
             {"h1_total", chk.h1_total},
             {"h1_factors", chk.h1_factors},
             {"factor_sum", chk.factor_sum},
             {"restriction_injective", chk.restriction_injective}}},
           {"krull", {{"sigma", kr.sigma}, {"dim", kr.dim}}}};
  bool ok = brute.dim == static_cast<std::size_t>(formula.h1);
  if (s == 1) {
    const auto cb = h1_basis_cyclic(p, m, ch.field());
    Json ex = Json::array();
    for (const auto& e : cb.entries) ex.push_back(e.i);
    out["cyclic_basis"] = {{"exponents", ex}, {"exponents_match", cb.exponents_match}, {"span_rank", cb.span_rank}};
    ok = ok && cb.exponents_match && cb.span_rank == brute.dim;
  }
  try {
    out["h2_dim"] = H2Engine(ch).dim();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooLarge) throw;
    out["h2_dim"] = nullptr;
  }
  out["ok"] = ok;
  return out;
}

Json task_ascover(const JobConfig& cfg, const Json& params) {
  const Character& ch = cfg.character;
  const Field& k = ch.field();
  std::optional<std::vector<FieldElem>> mu;
  if (params.contains("mu")) mu = decode_list(k, params["mu"], "/tasks/" + params.value("#index", std::string()) + "/mu",
                                             static_cast<std::size_t>(ch.s()));
  const auto ud = build_u(ch, mu);
  const auto germ = germ_model(ch, mu);
  const auto cls = class_reduce(germ.downstairs, ch.s());
  const auto cond = conductor(cls);
  const bool wok = witness_ok(germ.downstairs, cls);
  const auto A = germ.downstairs.ring();
  const auto zeta = k.from_int(k.p() - 1);
  const auto eq = equivalent_covers(germ.downstairs, scale(A.embed(zeta), germ.downstairs), ch.s());
  const auto up = class_reduce(germ.upstairs, ch.s());
  Json out{{"u1", encode(ud.u1)},
           {"u", encode(ud.u)},
           {"coefficient_relation", ud.coefficient_relation},
           {"matches_generators", ud.matches_generators},
           {"upstairs", encode(germ.upstairs)},
           {"upstairs_class", encode(up.rep)},
           {"downstairs", encode(germ.downstairs)},
           {"class", {{"rep", encode(cls.rep)}, {"orbit_marker", encode(cls.orbit_marker)}, {"witness_ok", wok}}},
           {"conductor", {{"value", cond.value}, {"unramified", cond.unramified}}},
           {"equivalent_to_scaled", eq.equivalent}};
  if (params.contains("g")) {
    const auto g = codec::decode_series(ArtinAlgebra::make(k, 1), params["g"], "/tasks/" + params.value("#index", std::string()) + "/g");
    const auto gc = class_reduce(g, ch.s());
    const auto gcond = conductor(gc);
    out["g"] = {{"rep", encode(gc.rep)},
                {"witness_ok", witness_ok(g, gc)},
                {"conductor", {{"value", gcond.value}, {"unramified", gcond.unramified}}}};
  }
  out["ok"] = ud.coefficient_relation && ud.matches_generators && wok && cond.value == ch.m() && eq.equivalent;
  return out;
}

Json task_deform(const JobConfig& cfg, const Json& params, std::uint64_t seed) {
  const Character& ch = cfg.character;
  const Field& k = ch.field();
  const int m = ch.m(), s = ch.s();
  std::mt19937_64 rng(seed);
  const std::string ptr = "/tasks/" + params.value("#index", std::string());
  const DeformationDatum d = params.contains("datum") ? codec::decode_datum(ch, params["datum"], ptr + "/datum")
                                                      : random_datum(ch, rng);
  Json out{{"datum", encode(d)}};
  const auto rep = d.rep();
  const auto val = rep_validate(rep);
  out["validate"] = {{"ok", val.ok},
                     {"reduction", val.reduction},
                     {"homomorphism", val.homomorphism},
                     {"order_p", val.order_p},
                     {"commuting", val.commuting},
                     {"failures", val.failures}};
  if (!val.ok) {
    out["ok"] = false;
    return out;
  }
  H1Engine eng(ch, cfg.precision);
  const int prec = eng.N() + m + 2;
  const auto tc = tangent_cocycle_extract(rep, d.ftilde(prec + 2 * m), prec);
  std::vector<PolePartClass> formula, negated;
  OneCochain trunc;
  for (int i = 0; i < s; ++i) {
    formula.push_back(cocycle_formula(d, GroupElem::generator(s, i)));
    auto nf = formula.back();
    for (auto& c : nf.coeffs) c = k.neg(c);
    negated.push_back(nf);
    trunc.vals.push_back(tc.cochain.vals[static_cast<std::size_t>(i)].truncate(eng.N()));
  }
  const bool agrees = tc.poles == formula;
  const bool cocycle = eng.is_cocycle(trunc);
  out["tangent"] = pole_list(k, tc.poles);
  out["formula"] = pole_list(k, formula);
  out["formula_agrees"] = agrees;
  out["formula_agrees_negated"] = tc.poles == negated;
  out["is_cocycle"] = cocycle;
  out["class_is_zero"] = eng.is_coboundary(trunc);

  const int n = codec::get_int(params, "artin_order", ptr, 2, ArtinAlgebra::kMaxOrder, cfg.artin_order);
  const int oprec = m + 6;
  auto [orep, oft] = lift_data(d, n, oprec + 3 * m);
  const auto elems = group_elements(ch.p(), s);
  std::vector<LaurentSeries> lifts;
  for (const auto& g : elems) lifts.push_back(deformed_rho(orep, oft, g, oprec));
  const auto exact = obstruction_two_cocycle(orep, oft, lifts, oprec);
  const auto& A = orep.A;
  ArtinElem kappa{};
  kappa.c[static_cast<std::size_t>(n - 1)] = k.one();
  lifts[1] = add(lifts[1], LaurentSeries::monomial(A, kappa, 1, oprec));
  const auto pert = obstruction_two_cocycle(orep, oft, lifts, oprec);
  out["obstruction"] = {{"artin_order", n},
                        {"exact_vanishes", exact.cochain.is_zero()},
                        {"perturbed_nonzero", !pert.cochain.is_zero()},
                        {"perturbed_is_cocycle", pert.is_cocycle},
                        {"perturbed_is_coboundary", pert.vanishes_in_h2}};
  out["ok"] = agrees && cocycle && exact.cochain.is_zero() && pert.is_cocycle && pert.vanishes_in_h2;
  return out;
}

Json task_predicates(const JobConfig& cfg, const Json& params) {
  const std::string ptr = "/tasks/" + params.value("#index", std::string());
  const int p = codec::get_int(params, "p", ptr, 2, 1000, cfg.character.p());
  const int s = codec::get_int(params, "s", ptr, 1, 16, cfg.character.s());
  const int m = codec::get_int(params, "m", ptr, 1, 100000, cfg.character.m());
  const auto r = lifting_predicates(p, s, m);
  return {{"p", p},
          {"s", s},
          {"m", m},
          {"char0_lift_necessary_condition", r.char0_lift_necessary_condition},
          {"invariant_divisor_exists", r.invariant_divisor_exists},
          {"invariant_divisor_excluded_mixed", r.invariant_divisor_excluded_mixed},
          {"stichtenoth_two_dim", r.stichtenoth_two_dim},
          {"two_dim_wellformed", r.two_dim_wellformed},
          {"ok", true}};
}

Json run_task(const JobConfig& cfg, const Task& t, std::size_t index) {
  Json params = t.params;
  params["#index"] = std::to_string(index);
  try {
    if (t.name == "rho") return task_rho(cfg, params);
    if (t.name == "cohomology") return task_cohomology(cfg, params);
    if (t.name == "ascover") return task_ascover(cfg, params);
    if (t.name == "deform") return task_deform(cfg, params, cfg.seed + index);
    return task_predicates(cfg, params);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConfigInvalid) throw;
    return {{"ok", false}, {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
  }
}

}  // namespace

JobConfig parse_config(const Json& j) {
  if (!j.is_object()) invalid("", "config must be an object");
  if (!j.contains("field") || !j["field"].is_object()) invalid("/field", "missing field description");
  const Json& f = j["field"];
  const int p = codec::get_int(f, "p", "/field", 2, 65535);
  const int d = codec::get_int(f, "d", "/field", 1, 64, 1);
  std::optional<std::vector<int>> modulus;
  if (f.contains("modulus")) {
    if (!f["modulus"].is_array()) invalid("/field/modulus", "expected a coefficient list");
    modulus.emplace();
    for (std::size_t i = 0; i < f["modulus"].size(); ++i) {
      if (!f["modulus"][i].is_number_integer()) invalid("/field/modulus/" + std::to_string(i), "expected an integer");
      modulus->push_back(f["modulus"][i].get<int>());
    }
  }
  auto field = [&] {
    try {
      return Field::make(p, d, modulus);
    } catch (const Error& e) {
      invalid(e.kind() == ErrorKind::ReducibleModulus ? "/field/modulus" : "/field/p", e.what());
    }
  }();
  if (!j.contains("character") || !j["character"].is_object()) invalid("/character", "missing character");
  const Json& c = j["character"];
  const int s = codec::get_int(c, "s", "/character", 1, 16);
  const int m = codec::get_int(c, "m", "/character", 1, 100000);
  if (!c.contains("vals")) invalid("/character/vals", "missing");
  const auto vals = decode_list(field, c["vals"], "/character/vals", static_cast<std::size_t>(s));
  auto character = [&] {
    try {
      return Character::make(field, vals, m);
    } catch (const Error& e) {
      invalid(e.kind() == ErrorKind::InvalidCharacter ? "/character" : "/character/vals", e.what());
    }
  }();
  JobConfig cfg{field, 2, character, 0, 0, {}};
  cfg.artin_order = codec::get_int(j, "artin_order", "", 2, ArtinAlgebra::kMaxOrder, 2);
  cfg.precision = codec::get_int(j, "precision", "", 0, 100000, 0);
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() || j["seed"].get<long long>() < 0) invalid("/seed", "expected a non-negative integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("tasks")) {
    if (!j["tasks"].is_array()) invalid("/tasks", "expected a list");
    for (std::size_t i = 0; i < j["tasks"].size(); ++i) {
      const Json& t = j["tasks"][i];
      const std::string ptr = "/tasks/" + std::to_string(i);
      Task task;
      if (t.is_string()) {
        task.name = t.get<std::string>();
        task.params = Json::object();
      } else if (t.is_object() && t.contains("name") && t["name"].is_string()) {
        task.name = t["name"].get<std::string>();
        task.params = t;
      } else {
        invalid(ptr, "task must be a name or an object with a name");
      }
      if (!known_tasks().count(task.name)) throw Error(ErrorKind::UnknownTask, ptr + ": " + task.name);
      cfg.tasks.push_back(std::move(task));
    }
  }
  return cfg;
}

Json run_job(const JobConfig& cfg, bool parallel) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const std::size_t n = cfg.tasks.size();
  std::vector<Json> results(n);
  std::vector<double> ms(n);
  auto one = [&](std::size_t i) {
    const auto s = clock::now();
    results[i] = run_task(cfg, cfg.tasks[i], i);
    ms[i] = std::chrono::duration<double, std::milli>(clock::now() - s).count();
  };
  if (parallel) {
    std::vector<std::future<void>> fs;
    for (std::size_t i = 0; i < n; ++i) fs.push_back(std::async(std::launch::async, one, i));
    for (auto& f : fs) f.get();
  } else {
    for (std::size_t i = 0; i < n; ++i) one(i);
  }
  Json tasks = Json::object(), timing = Json::object(), failed = Json::array();
  std::map<std::string, int> seen;
  for (std::size_t i = 0; i < n; ++i) {
    std::string key = cfg.tasks[i].name;
    if (int c = ++seen[key]; c > 1) key += "#" + std::to_string(c);
    tasks[key] = results[i];
    timing[key] = ms[i];
    if (!results[i].value("ok", false)) failed.push_back(key);
  }
  const Field& k = cfg.field;
  Json vals = Json::array();
  for (auto v : cfg.character.vals()) vals.push_back(encode(k, v));
  return {{"schema", kReportSchema},
          {"config",
           {{"p", k.p()},
            {"d", k.d()},
            {"modulus", k.modulus()},
            {"s", cfg.character.s()},
            {"m", cfg.character.m()},
            {"vals", vals},
            {"artin_order", cfg.artin_order},
            {"precision", cfg.precision},
            {"seed", cfg.seed}}},
          {"tasks", tasks},
          {"summary", {{"tasks", n}, {"failed", failed}, {"ok", failed.empty()}}},
          {"timing",
           {{"total_ms", std::chrono::duration<double, std::milli>(clock::now() - t0).count()}, {"tasks", timing}}}};
}

bool report_ok(const Json& report) { return report.at("summary").at("ok").get<bool>(); }

Json strip_timing(const Json& j) {
  if (j.is_object()) {
    Json out = Json::object();
    for (const auto& [key, v] : j.items())
      if (key != "timing") out[key] = strip_timing(v);
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& v : j) out.push_back(strip_timing(v));
    return out;
  }
  return j;
}

Json compare_golden(const Json& report, const std::string& golden_path) {
  std::ifstream in(golden_path);
  if (!in) throw Error(ErrorKind::GoldenMissing, golden_path);
  Json golden;
  try {
    golden = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::GoldenMissing, golden_path + ": " + e.what());
  }
  return Json::diff(strip_timing(golden), strip_timing(report));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace wildram
