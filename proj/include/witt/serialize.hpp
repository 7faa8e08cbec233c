#pragma once

// JSON encodings. Integers beyond 2^53 - 1 are written as decimal strings;
// readers accept either form. Field order is fixed for byte-stable output.

#include <map>
#include <mutex>
#include <tuple>

#include <json.hpp>

#include "witt/complex.hpp"

namespace wittlab {

using json = nlohmann::ordered_json;

// Owns the contexts created while parsing; equal descriptions share one.
class ContextRegistry {
 public:
  const RingContext& get(u64 p, int d, const std::vector<i64>& f, int M);
  const RingContext& from_json(const json& j);

 private:
  std::mutex mu_;
  std::map<std::tuple<u64, int, std::vector<i64>, int>, ContextPtr> contexts_;
};

json integer_to_json(i64 v);
json integer_to_json(u64 v);
i64 integer_from_json(const json& j);
u64 unsigned_from_json(const json& j);

json to_json(const RingContext& ctx);
json to_json(const PadicElement& x);
json to_json(const WittVector& x);
json to_json(const VDecomposition& dec);
json to_json(const K0Decomposition& dec);
json to_json(const E1Element& xi);
json to_json(const EElement& x);

PadicElement element_from_json(const json& j, ContextRegistry& reg);
WittVector witt_from_json(const json& j, ContextRegistry& reg);
// The ring comes from "ring", else from the first component.
E1Element e1_from_json(const json& j, ContextRegistry& reg);
EElement e_from_json(const json& j, ContextRegistry& reg);
VDecomposition v_decomposition_from_json(const json& j, ContextRegistry& reg);
K0Decomposition k0_decomposition_from_json(const json& j, ContextRegistry& reg);

}  // namespace wittlab
