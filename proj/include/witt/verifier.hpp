#pragma once

// Seeded randomized verification of the Witt-ring and Witt-complex laws.
//
// A task is one (law, grid point) pair. Tasks are independent, so the sweep
// is an OpenMP loop over tasks; check_axioms_serial runs the same tasks in
// order and is the reference the parallel sweep is tested against.
//
// Trial t of a task draws its inputs from SplitMix64 seeded with
//   mix(mix(seed ^ fnv1a("law|p|d|n|M")) + t * 0x9E3779B97F4A7C15)
// where mix is the SplitMix64 finalizer, so any trial can be regenerated on
// its own.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "witt/serialize.hpp"

namespace wittlab {

// Deliberately broken versions of the E-complex maps for self-testing.
enum class Mutation { None, FrobeniusEWrongPower, VerschiebungEMissingP, DiffOffByOne };

std::string mutation_name(Mutation m);
Mutation mutation_from_name(const std::string& s);  // throws BadInput
const std::vector<Mutation>& all_mutations();

// The E-complex maps a law sees. Laws never call diff/frobenius/verschiebung
// on E1Element directly.
struct ComplexOps {
  E1Element (*diff)(const WittVector&);
  E1Element (*frobenius)(const E1Element&);
  E1Element (*verschiebung)(const E1Element&);
};

const ComplexOps& complex_ops(Mutation m);

struct GridPoint {
  u64 p = 3;
  int d = 1;
  int n = 2;
  int M = 8;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

const std::vector<std::string>& law_names();
bool is_law(const std::string& name);
// Smallest working precision at which the law runs at level n without underflow.
int law_min_precision(const std::string& name, int n);

struct TrialPlan {
  std::vector<GridPoint> grid;
  std::uint64_t trials = 500;
  std::uint64_t seed = 1;
  std::vector<std::string> laws;                     // empty selects every law
  std::map<std::string, std::uint64_t> law_trials;  // per-law overrides
  Mutation mutation = Mutation::None;

  // p in {3,5,7}, d in {1,2}, n in 2..5, M = 2n+4, 500 trials, 1000 for teich_relation.
  static TrialPlan default_plan(std::uint64_t seed = 1);
  static TrialPlan from_json(const json& j);
  json to_json() const;

  std::vector<std::string> selected_laws() const;
  std::uint64_t trials_for(const std::string& law) const;
  // Throws BadInput, BadPrecision, CapacityExceeded, OddPrimeRequired, CompositePrime.
  void validate() const;
};

struct Counterexample {
  std::uint64_t trial = 0;
  std::uint64_t stream_seed = 0;
  Mutation mutation = Mutation::None;
  std::string check;
  json inputs;
  json lhs;
  json rhs;
};

enum class LawStatus { Pass, Fail, PlanError };

struct LawResult {
  std::string law;
  GridPoint point;
  std::uint64_t trials = 0;  // trials executed
  LawStatus status = LawStatus::Pass;
  std::optional<Counterexample> counterexample;
  std::string error;  // set for PlanError
  double millis = 0;
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<LawResult> results;

  LawStatus status() const;
  // millis is written as 0 unless with_timing, keeping reports byte-identical.
  json to_json(bool with_timing = false) const;
};

Report check_axioms(const TrialPlan& plan, bool timing = false);
Report check_axioms_serial(const TrialPlan& plan, bool timing = false);

std::uint64_t trial_stream_seed(std::uint64_t seed, const std::string& law, const GridPoint& g, std::uint64_t trial);

// Re-evaluates a failing result's serialized inputs. Returns true when the law
// still fails on them with the same lhs and rhs.
bool replay(const LawResult& result);
bool replay(const json& result_json);

// ---- congruence lemma ------------------------------------------------------

struct CongruenceSides {
  PadicElement lhs;  // (a^{p^{i+1}} - phi(a)^{p^i}) / p^{i+1}
  PadicElement rhs;  // ((a^{p^i} - phi(a)^{p^{i-1}}) / p^i) * a^{p^i (p-1)}
  int modulus = 0;   // compared modulo p^modulus, modulus = i
  bool holds() const;
};

// Odd p only. Needs a.prec >= 2i + 1.
CongruenceSides congruence_sides(const PadicElement& a, int i);
bool check_congruence(const PadicElement& a, int i);
// a given by power-basis coefficients; M = 0 picks 2i + 1.
bool check_congruence(u64 p, int d, const std::vector<i64>& a, int i, int M = 0);
// True iff the congruence fails for A = Z_2, a = 2, i = 1.
bool check_p2_counterexample();
// The p = 2 sides themselves, (3, 4) reduced modulo 2^M.
CongruenceSides p2_counterexample_sides();

}  // namespace wittlab
