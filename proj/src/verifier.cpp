#include "witt/verifier.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <set>

#include "laws.hpp"

namespace wittlab {

namespace {

using detail::Law;
using detail::LawEnv;
using detail::Sampler;

struct TrialResult {
  enum Kind { Ok, Fail, PlanError } kind = Ok;
  std::string check;
  json lhs;
  json rhs;
  std::string error;
};

TrialResult run_trial(const Law& law, const LawEnv& env, Sampler& s) {
  try {
    auto out = law.run(s, env);
    if (out.ok) return {};
    return {TrialResult::Fail, out.check, detail::value_to_json(out.lhs), detail::value_to_json(out.rhs), {}};
  } catch (const WittError& e) {
    if (e.code() == ErrorCode::PrecisionUnderflow || e.code() == ErrorCode::CapacityExceeded) {
      return {TrialResult::PlanError, {}, {}, {}, e.what()};
    }
    json lhs{{"error", std::string(error_name(e.code()))}, {"message", e.message()}};
    return {TrialResult::Fail, "raised " + std::string(error_name(e.code())), lhs, nullptr, {}};
  }
}

const Law& law_or_throw(const std::string& name) {
  const Law* law = detail::find_law(name);
  if (!law) fail(ErrorCode::BadInput, "unknown law \"" + name + "\"");
  return *law;
}

ContextPtr grid_context(const GridPoint& g) {
  return RingContext::make(g.p, g.d, RingContext::default_polynomial(g.p, g.d), g.M);
}

struct Task {
  const Law* law;
  std::size_t point;
};

LawResult run_task(const TrialPlan& plan, const Task& task, const RingContext& ctx, bool timing) {
  const GridPoint& g = plan.grid[task.point];
  const LawEnv env{ctx, g.n, complex_ops(plan.mutation)};
  LawResult r;
  r.law = task.law->name;
  r.point = g;
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = plan.trials_for(r.law);
  for (std::uint64_t t = 0; t < total; ++t) {
    const std::uint64_t stream = trial_stream_seed(plan.seed, r.law, g, t);
    Sampler s(ctx, stream);
    TrialResult tr = run_trial(*task.law, env, s);
    r.trials = t + 1;
    if (tr.kind == TrialResult::PlanError) {
      r.status = LawStatus::PlanError;
      r.error = std::move(tr.error);
      break;
    }
    if (tr.kind == TrialResult::Fail) {
      r.status = LawStatus::Fail;
      r.counterexample = Counterexample{t, stream, plan.mutation, std::move(tr.check), s.recorded(),
                                        std::move(tr.lhs), std::move(tr.rhs)};
      break;
    }
  }
  if (timing) {
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

struct Prepared {
  std::vector<ContextPtr> contexts;
  std::vector<Task> tasks;
};

Prepared prepare(const TrialPlan& plan) {
  plan.validate();
  Prepared p;
  for (const auto& g : plan.grid) p.contexts.push_back(grid_context(g));
  // Grid-major order fixes the order of the report.
  const auto names = plan.selected_laws();
  for (std::size_t i = 0; i < plan.grid.size(); ++i) {
    for (const auto& name : names) p.tasks.push_back({&law_or_throw(name), i});
  }
  return p;
}

const char* status_name(LawStatus s) {
  switch (s) {
    case LawStatus::Pass: return "pass";
    case LawStatus::Fail: return "fail";
    case LawStatus::PlanError: return "plan_error";
  }
  return "pass";
}

json grid_point_json(const GridPoint& g) {
  return json{{"p", integer_to_json(g.p)}, {"d", g.d}, {"n", g.n}, {"M", g.M}};
}

GridPoint grid_point_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::BadInput, "grid point must be an object");
  for (const char* k : {"p", "d", "n", "M"}) {
    if (!j.contains(k)) fail(ErrorCode::BadInput, std::string("grid point is missing \"") + k + "\"");
  }
  auto small = [&](const char* k) {
    const i64 v = integer_from_json(j[k]);
    if (v < 0 || v > 1000000) fail(ErrorCode::BadInput, std::string("grid field \"") + k + "\" out of range");
    return static_cast<int>(v);
  };
  return {unsigned_from_json(j["p"]), small("d"), small("n"), small("M")};
}

json result_json(const LawResult& r, bool with_timing) {
  json j{{"law", r.law}, {"grid_point", grid_point_json(r.point)}, {"trials", r.trials}, {"status", status_name(r.status)}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    j["counterexample"] = json{{"trial", c.trial},
                               {"stream_seed", integer_to_json(c.stream_seed)},
                               {"mutation", mutation_name(c.mutation)},
                               {"check", c.check},
                               {"inputs", c.inputs},
                               {"lhs", c.lhs},
                               {"rhs", c.rhs}};
  }
  if (r.status == LawStatus::PlanError) j["error"] = r.error;
  j["millis"] = with_timing ? json(r.millis) : json(0);
  return j;
}

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& l : detail::laws()) v.emplace_back(l.name);
    return v;
  }();
  return names;
}

bool is_law(const std::string& name) { return detail::find_law(name) != nullptr; }

int law_min_precision(const std::string& name, int n) { return law_or_throw(name).min_precision(n); }

TrialPlan TrialPlan::default_plan(std::uint64_t seed) {
  TrialPlan plan;
  plan.seed = seed;
  for (u64 p : {3, 5, 7})
    for (int d : {1, 2})
      for (int n = 2; n <= 5; ++n) plan.grid.push_back({p, d, n, 2 * n + 4});
  plan.trials = 500;
  plan.law_trials["teich_relation"] = 1000;
  return plan;
}

TrialPlan TrialPlan::from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::BadInput, "plan must be a JSON object");
  static const std::set<std::string> known{"grid", "trials", "seed", "laws", "law_trials", "mutation"};
  for (const auto& [k, v] : j.items()) {
    if (!known.contains(k)) fail(ErrorCode::BadInput, "unknown plan field \"" + k + "\"");
  }
  TrialPlan plan;
  if (!j.contains("grid") || !j["grid"].is_array()) fail(ErrorCode::BadInput, "plan needs a \"grid\" array");
  for (const auto& g : j["grid"]) plan.grid.push_back(grid_point_from_json(g));
  if (j.contains("trials")) plan.trials = unsigned_from_json(j["trials"]);
  if (j.contains("seed")) plan.seed = unsigned_from_json(j["seed"]);
  if (j.contains("laws")) {
    if (!j["laws"].is_array()) fail(ErrorCode::BadInput, "\"laws\" must be an array of names");
    for (const auto& l : j["laws"]) {
      if (!l.is_string()) fail(ErrorCode::BadInput, "\"laws\" must be an array of names");
      plan.laws.push_back(l.get<std::string>());
    }
  }
  if (j.contains("law_trials")) {
    if (!j["law_trials"].is_object()) fail(ErrorCode::BadInput, "\"law_trials\" must map law names to counts");
    for (const auto& [k, v] : j["law_trials"].items()) plan.law_trials[k] = unsigned_from_json(v);
  }
  if (j.contains("mutation")) {
    if (!j["mutation"].is_string()) fail(ErrorCode::BadInput, "\"mutation\" must be a string");
    plan.mutation = mutation_from_name(j["mutation"].get<std::string>());
  }
  return plan;
}

json TrialPlan::to_json() const {
  json grid_j = json::array();
  for (const auto& g : grid) grid_j.push_back(grid_point_json(g));
  json lt = json::object();
  for (const auto& [k, v] : law_trials) lt[k] = v;
  return json{{"grid", grid_j},      {"trials", trials},   {"seed", integer_to_json(seed)},
              {"laws", laws},        {"law_trials", lt},   {"mutation", mutation_name(mutation)}};
}

std::vector<std::string> TrialPlan::selected_laws() const { return laws.empty() ? law_names() : laws; }

std::uint64_t TrialPlan::trials_for(const std::string& law) const {
  auto it = law_trials.find(law);
  return it == law_trials.end() ? trials : it->second;
}

void TrialPlan::validate() const {
  const auto names = selected_laws();
  std::set<std::string> seen;
  for (const auto& name : names) {
    law_or_throw(name);
    if (!seen.insert(name).second) fail(ErrorCode::BadInput, "law \"" + name + "\" selected twice");
  }
  for (const auto& [name, count] : law_trials) law_or_throw(name);
  for (const auto& g : grid) {
    const std::string where = "grid point (p=" + std::to_string(g.p) + ", d=" + std::to_string(g.d) +
                              ", n=" + std::to_string(g.n) + ", M=" + std::to_string(g.M) + ")";
    if (g.n < 2) fail(ErrorCode::BadLevel, where + ": laws need n >= 2");
    if (g.p == 2) fail(ErrorCode::OddPrimeRequired, where + ": the laws are stated for odd p");
    int need = 1;
    std::string worst;
    for (const auto& name : names) {
      const int m = law_min_precision(name, g.n);
      if (m > need) need = m, worst = name;
    }
    if (g.M < need) {
      fail(ErrorCode::BadPrecision, where + ": law " + worst + " needs M >= " + std::to_string(need));
    }
    const ContextPtr ctx = grid_context(g);
    if (g.M + g.n + 1 > ctx->capacity()) {
      fail(ErrorCode::CapacityExceeded, where + ": needs p^" + std::to_string(g.M + g.n + 1) + " < 2^63");
    }
  }
}

std::uint64_t trial_stream_seed(std::uint64_t seed, const std::string& law, const GridPoint& g, std::uint64_t trial) {
  const std::string key =
      law + "|" + std::to_string(g.p) + "|" + std::to_string(g.d) + "|" + std::to_string(g.n) + "|" + std::to_string(g.M);
  const std::uint64_t base = splitmix_finalize(seed ^ fnv1a(key));
  return splitmix_finalize(base + trial * kGolden);
}

LawStatus Report::status() const {
  LawStatus s = LawStatus::Pass;
  for (const auto& r : results) {
    if (r.status == LawStatus::Fail) return LawStatus::Fail;
    if (r.status == LawStatus::PlanError) s = LawStatus::PlanError;
  }
  return s;
}

json Report::to_json(bool with_timing) const {
  json rs = json::array();
  for (const auto& r : results) rs.push_back(result_json(r, with_timing));
  return json{{"seed", integer_to_json(seed)}, {"status", status_name(status())}, {"results", rs}};
}

Report check_axioms(const TrialPlan& plan, bool timing) {
  const Prepared prep = prepare(plan);
  Report report;
  report.seed = plan.seed;
  report.results.resize(prep.tasks.size());
  const auto count = static_cast<std::int64_t>(prep.tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    const Task& t = prep.tasks[static_cast<std::size_t>(i)];
    report.results[static_cast<std::size_t>(i)] = run_task(plan, t, *prep.contexts[t.point], timing);
  }
  return report;
}

Report check_axioms_serial(const TrialPlan& plan, bool timing) {
  const Prepared prep = prepare(plan);
  Report report;
  report.seed = plan.seed;
  for (const auto& t : prep.tasks) report.results.push_back(run_task(plan, t, *prep.contexts[t.point], timing));
  return report;
}

bool replay(const LawResult& result) {
  if (!result.counterexample) return false;
  return replay(result_json(result, false));
}

bool replay(const json& rj) {
  if (!rj.is_object() || !rj.contains("counterexample")) return false;
  const Law& law = law_or_throw(rj.at("law").get<std::string>());
  const GridPoint g = grid_point_from_json(rj.at("grid_point"));
  const json& c = rj.at("counterexample");
  const Mutation mutation = mutation_from_name(c.at("mutation").get<std::string>());

  ContextRegistry reg;
  const RingContext& ctx = reg.get(g.p, g.d, RingContext::default_polynomial(g.p, g.d), g.M);
  const LawEnv env{ctx, g.n, complex_ops(mutation)};
  Sampler s(ctx, c.at("inputs"), reg);
  const TrialResult tr = run_trial(law, env, s);
  return tr.kind == TrialResult::Fail && tr.check == c.at("check") && tr.lhs == c.at("lhs") && tr.rhs == c.at("rhs");
}

// ---------------------------------------------------------------------------
// Congruence lemma

namespace {

// Works on residues directly so that p = 2 can be evaluated as well.
CongruenceSides congruence_kernel(const RingContext& ctx, const Residue& a, int prec, int i) {
  if (i < 1) fail(ErrorCode::BadInput, "i must be >= 1");
  if (prec < 2 * i + 1) {
    fail(ErrorCode::PrecisionUnderflow, "the comparison mod p^" + std::to_string(i) + " needs precision >= " +
                                            std::to_string(2 * i + 1));
  }
  const int E = ctx.precision();
  const u64 p = ctx.prime();
  const Residue phi_a = ctx.frobenius(a, 1, E);
  const Residue a_pi = ctx.pow_p_power(a, i, E);
  const Residue num1 = ctx.sub(ctx.pow_p_power(a, i + 1, E), ctx.pow_p_power(phi_a, i, E), E);
  const Residue num2 = ctx.sub(a_pi, ctx.pow_p_power(phi_a, i - 1, E), E);
  if (ctx.valuation(num1, prec) < i + 1 || ctx.valuation(num2, prec) < i) {
    fail(ErrorCode::InternalError, "congruence numerators are not divisible as the lemma promises");
  }
  const Residue lhs = ctx.shift_down(num1, i + 1, E);
  const Residue rhs = ctx.mul(ctx.shift_down(num2, i, E), ctx.pow(a_pi, p - 1, E), E);
  return {PadicElement(ctx, lhs, prec - i - 1), PadicElement(ctx, rhs, prec - i), i};
}

}  // namespace

bool CongruenceSides::holds() const { return agree_at(lhs, rhs, modulus); }

CongruenceSides congruence_sides(const PadicElement& a, int i) {
  require_odd(a.context());
  return congruence_kernel(a.context(), a.residue(), a.prec(), i);
}

bool check_congruence(const PadicElement& a, int i) { return congruence_sides(a, i).holds(); }

bool check_congruence(u64 p, int d, const std::vector<i64>& a, int i, int M) {
  const int prec = M > 0 ? M : 2 * i + 1;
  const ContextPtr ctx = RingContext::make(p, d, RingContext::default_polynomial(p, d), prec);
  require_odd(*ctx);
  return check_congruence(PadicElement::from_coeffs(*ctx, a, prec), i);
}

CongruenceSides p2_counterexample_sides() {
  static const ContextPtr z2 = RingContext::make(2, 1, {0, 1}, 8);
  Residue two{};
  two[0] = 2;
  return congruence_kernel(*z2, two, z2->precision(), 1);
}

bool check_p2_counterexample() { return !p2_counterexample_sides().holds(); }

}  // namespace wittlab
