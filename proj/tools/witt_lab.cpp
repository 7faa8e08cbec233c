// witt-lab: command-line front end for the Witt-vector library.
//
// Exit codes: 0 success, 1 law violation or NotInKernel, 2 usage or
// validation error, 3 precision underflow. Errors go to stderr as
// {"error": <name>, "message": <text>}.

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "witt/verifier.hpp"

using namespace wittlab;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kUnderflow = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotInKernel:
    case ErrorCode::InternalNonzeroLead:
    case ErrorCode::InternalError:
    case ErrorCode::HenselFailure:
      return kViolation;
    case ErrorCode::PrecisionUnderflow:
      return kUnderflow;
    default:
      return kUsage;
  }
}

int report_error(const std::string& name, const std::string& message, int code) {
  std::cerr << json{{"error", name}, {"message", message}}.dump() << "\n";
  return code;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// "-" reads stdin, text starting with '{' is inline JSON, anything else is a path.
json read_input(const std::string& src) {
  std::string text;
  if (src == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!src.empty() && src.front() == '{') {
    text = src;
  } else {
    std::ifstream in(src);
    if (!in) fail(ErrorCode::BadInput, "cannot read " + src);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::BadInput, std::string("malformed JSON: ") + e.what());
  }
}

std::vector<i64> parse_list(const std::string& s, const char* what) {
  std::vector<i64> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorCode::BadInput, std::string(what) + " must be comma-separated integers, got \"" + s + "\"");
    }
  }
  if (out.empty()) fail(ErrorCode::BadInput, std::string(what) + " is empty");
  return out;
}

std::vector<i64> polynomial_or_default(const std::string& f, u64 p, int d) {
  return f.empty() ? RingContext::default_polynomial(p, d) : parse_list(f, "--f");
}

void apply_thread_cap() {
  if (const char* env = std::getenv("WITT_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0) fail(ErrorCode::BadInput, "WITT_LAB_THREADS must be a non-negative integer");
    if (v > 0) omp_set_num_threads(static_cast<int>(v));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Witt vectors over W(F_q) and the separated Witt complex E_n"};
  app.require_subcommand(1);

  std::string in;
  auto* decompose = app.add_subcommand("decompose", "V-decomposition of a Witt vector");
  decompose->add_option("--in", in, "Witt vector JSON (path, inline, or -)")->required();

  u64 p = 0;
  int d = 1, M = 0, n = 0, i = 0, m = 0;
  std::string f, a;
  auto* teich = app.add_subcommand("teich", "Teichmuller coefficients by the closed formula");
  teich->add_option("--p", p, "prime")->required();
  teich->add_option("--d", d, "residue degree")->required();
  teich->add_option("--f", f, "defining polynomial, constant term first");
  teich->add_option("--M", M, "working precision")->required();
  teich->add_option("--a", a, "element coefficients, comma separated")->required();
  teich->add_option("--n", n, "level")->required();

  auto* diff_cmd = app.add_subcommand("diff", "d of a Witt vector in E_n^1");
  diff_cmd->add_option("--in", in, "Witt vector JSON")->required();

  std::string map;
  int deg = 0;
  auto* apply = app.add_subcommand("apply", "apply F, V or R in degree 0 or 1");
  apply->add_option("--map", map, "F, V or R")->required()->check(CLI::IsMember({"F", "V", "R"}));
  apply->add_option("--deg", deg, "0 or 1")->required()->check(CLI::IsMember({0, 1}));
  apply->add_option("--in", in, "element JSON")->required();

  auto* k0 = app.add_subcommand("k0", "decomposition of an element of ker(W_n(A) -> W_n(A/p^m))");
  k0->add_option("--m", m, "exponent m >= 1")->required();
  k0->add_option("--in", in, "Witt vector JSON")->required();

  std::string plan_path, mutation = "none";
  bool use_default = false, timing = false;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "run the law suite");
  auto* plan_opt = verify->add_option("--plan", plan_path, "plan JSON");
  auto* default_opt = verify->add_flag("--default", use_default, "the default grid");
  plan_opt->excludes(default_opt);
  auto* seed_opt = verify->add_option("--seed", seed, "override the plan seed");
  verify->add_option("--mutation", mutation, "self-test mutation");
  verify->add_flag("--timing", timing, "record wall time per result");

  bool p2 = false;
  auto* cong = app.add_subcommand("congruence", "check the congruence lemma");
  auto* cp = cong->add_option("--p", p, "prime");
  cong->add_option("--d", d, "residue degree");
  cong->add_option("--f", f, "defining polynomial, constant term first");
  auto* ca = cong->add_option("--a", a, "element coefficients, comma separated");
  auto* ci = cong->add_option("--i", i, "exponent i >= 1");
  cong->add_option("--M", M, "working precision (default 2i+1)");
  auto* cp2 = cong->add_flag("--p2-counterexample", p2, "reproduce the p = 2 failure");
  cp2->excludes(cp)->excludes(ca)->excludes(ci);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("UsageError", e.what(), kUsage);
  }

  try {
    ContextRegistry reg;
    if (*decompose) {
      emit(to_json(v_decompose(witt_from_json(read_input(in), reg))));
    } else if (*teich) {
      const auto& ctx = reg.get(p, d, polynomial_or_default(f, p, d), M);
      const auto coeffs = parse_list(a, "--a");
      emit(to_json(teich_coefficients(PadicElement::from_coeffs(ctx, coeffs, M), n)));
    } else if (*diff_cmd) {
      emit(to_json(diff(witt_from_json(read_input(in), reg))));
    } else if (*apply) {
      const json j = read_input(in);
      if (deg == 0) {
        const auto x = witt_from_json(j, reg);
        emit(to_json(map == "F" ? frobenius(x) : map == "V" ? verschiebung(x) : restrict(x)));
      } else {
        const auto xi = e1_from_json(j, reg);
        emit(to_json(map == "F" ? frobenius(xi) : map == "V" ? verschiebung(xi) : restrict(xi)));
      }
    } else if (*k0) {
      emit(to_json(k0_decompose(witt_from_json(read_input(in), reg), m)));
    } else if (*verify) {
      if (plan_path.empty() == !use_default) {
        return report_error("UsageError", "verify needs exactly one of --plan or --default", kUsage);
      }
      TrialPlan plan = use_default ? TrialPlan::default_plan() : TrialPlan::from_json(read_input(plan_path));
      if (*seed_opt) plan.seed = seed;
      if (mutation != "none" || use_default) plan.mutation = mutation_from_name(mutation);
      apply_thread_cap();
      const Report report = check_axioms(plan, timing);
      emit(report.to_json(timing));
      switch (report.status()) {
        case LawStatus::Pass: return kOk;
        case LawStatus::Fail: return kViolation;
        case LawStatus::PlanError: return kUnderflow;
      }
    } else if (*cong) {
      if (p2) {
        const auto s = p2_counterexample_sides();
        const bool reproduced = check_p2_counterexample();
        emit(json{{"p", 2},
                  {"a", 2},
                  {"i", 1},
                  {"lhs", integer_to_json(s.lhs.coeffs()[0])},
                  {"rhs", integer_to_json(s.rhs.coeffs()[0])},
                  {"holds", !reproduced},
                  {"counterexample_reproduced", reproduced}});
        return reproduced ? kOk : kViolation;
      }
      if (!*cp || !*ca || !*ci) {
        return report_error("UsageError", "congruence needs --p, --a and --i, or --p2-counterexample", kUsage);
      }
      const int prec = M > 0 ? M : 2 * i + 1;
      const auto& ctx = reg.get(p, d, polynomial_or_default(f, p, d), prec);
      require_odd(ctx);
      const auto coeffs = parse_list(a, "--a");
      const bool holds = check_congruence(PadicElement::from_coeffs(ctx, coeffs, prec), i);
      emit(json{{"holds", holds}});
      return holds ? kOk : kViolation;
    }
  } catch (const WittError& e) {
    return report_error(std::string(error_name(e.code())), e.message(), exit_code_for(e.code()));
  } catch (const json::exception& e) {
    return report_error("BadInput", e.what(), kUsage);
  }
  return kOk;
}
