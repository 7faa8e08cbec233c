#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "witt/rng.hpp"
#include "witt/verifier.hpp"

namespace wittlab::detail {

using Value = std::variant<std::monostate, bool, std::uint64_t, PadicElement, WittVector, GhostVector, E1Element, EElement,
                           VDecomposition, K0Decomposition>;

json value_to_json(const Value& v);

// Source of law inputs. In random mode it draws from a SplitMix64 stream and
// remembers what it drew; in replay mode it hands back serialized inputs in
// the order they were recorded.
class Sampler {
 public:
  Sampler(const RingContext& ctx, std::uint64_t stream_seed);
  Sampler(const RingContext& ctx, const json& inputs, ContextRegistry& reg);

  PadicElement element(const char* name);
  WittVector witt(const char* name, int n);
  E1Element e1(const char* name, int n);
  // Uniform in [0, bound).
  std::uint64_t integer(const char* name, std::uint64_t bound);

  json recorded() const;

 private:
  const json& next_replayed(const char* name, const char* kind);

  const RingContext* ctx_;
  SplitMix64 rng_;
  std::vector<std::pair<std::string, Value>> drawn_;

  const json* replay_ = nullptr;
  ContextRegistry* reg_ = nullptr;
  std::size_t cursor_ = 0;
};

struct Outcome {
  bool ok = true;
  std::string check;
  Value lhs;
  Value rhs;
};

struct LawEnv {
  const RingContext& ctx;
  int n;
  const ComplexOps& ops;
};

struct Law {
  const char* name;
  Outcome (*run)(Sampler&, const LawEnv&);
  int (*min_precision)(int n);
};

const std::vector<Law>& laws();
const Law* find_law(const std::string& name);

}  // namespace wittlab::detail
