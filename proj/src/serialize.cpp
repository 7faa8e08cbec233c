#include "witt/serialize.hpp"

#include <charconv>
#include <limits>
#include <string>

namespace wittlab {

namespace {

constexpr u64 kSafeInteger = (u64{1} << 53) - 1;

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(ErrorCode::BadInput, std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorCode::BadInput, std::string("missing field \"") + key + "\"");
  return *it;
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) fail(ErrorCode::BadInput, std::string("field \"") + key + "\" must be an array");
  return a;
}

int int_field(const json& j, const char* key) {
  const i64 v = integer_from_json(field(j, key));
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    fail(ErrorCode::BadInput, std::string("field \"") + key + "\" out of range");
  }
  return static_cast<int>(v);
}

std::vector<i64> int_list(const json& a) {
  std::vector<i64> out;
  out.reserve(a.size());
  for (const auto& v : a) out.push_back(integer_from_json(v));
  return out;
}

E1Element e1_from_json_with(const json& j, ContextRegistry& reg, const RingContext* fallback) {
  const int n = int_field(j, "n");
  if (n < 1) fail(ErrorCode::BadLevel, "E_n needs n >= 1");
  const json& comps = array_field(j, "components");
  const RingContext* ctx = nullptr;
  if (j.contains("ring")) {
    ctx = &reg.from_json(j["ring"]);
  } else if (!comps.empty()) {
    ctx = &reg.from_json(field(comps[0], "value"));
  } else {
    ctx = fallback;
  }
  if (ctx == nullptr) fail(ErrorCode::BadInput, "cannot tell which ring an empty E1 element lives in");

  std::vector<PadicElement> values(n - 1, PadicElement::zero(*ctx));
  std::vector<bool> seen(n - 1, false);
  for (const auto& c : comps) {
    const int i = int_field(c, "i");
    if (i < 1 || i >= n) fail(ErrorCode::BadInput, "component index " + std::to_string(i) + " outside 1.." +
                                                        std::to_string(n - 1));
    if (seen[i - 1]) fail(ErrorCode::BadInput, "component " + std::to_string(i) + " given twice");
    seen[i - 1] = true;
    const PadicElement v = element_from_json(field(c, "value"), reg);
    require_same_context(*ctx, v.context());
    values[i - 1] = v;
  }
  return {*ctx, n, std::move(values)};
}

}  // namespace

const RingContext& ContextRegistry::get(u64 p, int d, const std::vector<i64>& f, int M) {
  std::lock_guard lock(mu_);
  auto key = std::make_tuple(p, d, f, M);
  auto it = contexts_.find(key);
  if (it != contexts_.end()) return *it->second;
  ContextPtr ctx = RingContext::make(p, d, f, M);
  return *contexts_.emplace(std::move(key), std::move(ctx)).first->second;
}

const RingContext& ContextRegistry::from_json(const json& j) {
  const u64 p = unsigned_from_json(field(j, "p"));
  const int d = int_field(j, "d");
  const int M = int_field(j, "M");
  return get(p, d, int_list(array_field(j, "f")), M);
}

json integer_to_json(i64 v) {
  const bool safe = v >= -static_cast<i64>(kSafeInteger) && v <= static_cast<i64>(kSafeInteger);
  return safe ? json(v) : json(std::to_string(v));
}

json integer_to_json(u64 v) { return v <= kSafeInteger ? json(v) : json(std::to_string(v)); }

i64 integer_from_json(const json& j) {
  if (j.is_number_unsigned()) {
    const u64 v = j.get<u64>();
    if (v > static_cast<u64>(std::numeric_limits<i64>::max())) fail(ErrorCode::BadInput, "integer out of range");
    return static_cast<i64>(v);
  }
  if (j.is_number_integer()) return j.get<i64>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    i64 v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) {
      fail(ErrorCode::BadInput, "\"" + s + "\" is not a 64-bit integer");
    }
    return v;
  }
  fail(ErrorCode::BadInput, "expected an integer, got " + j.dump());
}

u64 unsigned_from_json(const json& j) {
  if (j.is_number_unsigned()) return j.get<u64>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    u64 v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) {
      fail(ErrorCode::BadInput, "\"" + s + "\" is not an unsigned 64-bit integer");
    }
    return v;
  }
  const i64 v = integer_from_json(j);
  if (v < 0) fail(ErrorCode::BadInput, "expected a non-negative integer");
  return static_cast<u64>(v);
}

json to_json(const RingContext& ctx) {
  json f = json::array();
  for (i64 c : ctx.polynomial()) f.push_back(integer_to_json(c));
  return json{{"p", integer_to_json(ctx.prime())}, {"d", ctx.degree()}, {"f", f}, {"M", ctx.precision()}};
}

json to_json(const PadicElement& x) {
  json j = to_json(x.context());
  json coeffs = json::array();
  for (u64 c : x.coeffs()) coeffs.push_back(integer_to_json(c));
  j["coeffs"] = coeffs;
  j["prec"] = x.prec();
  return j;
}

json to_json(const WittVector& x) {
  json coords = json::array();
  for (const auto& c : x.coords()) coords.push_back(to_json(c));
  return json{{"ring", to_json(x.context())}, {"n", x.level()}, {"coords", coords}};
}

json to_json(const VDecomposition& dec) {
  json coeffs = json::array();
  for (const auto& c : dec.coeffs) coeffs.push_back(to_json(c));
  return json{{"kind", "v"}, {"coeffs", coeffs}};
}

json to_json(const K0Decomposition& dec) {
  json coeffs = json::array();
  for (const auto& c : dec.coeffs) coeffs.push_back(to_json(c));
  return json{{"kind", "k0"}, {"coeffs", coeffs}, {"m", dec.m}};
}

json to_json(const E1Element& xi) {
  json comps = json::array();
  for (int i = 1; i < xi.level(); ++i) {
    if (!xi.component(i).is_zero()) comps.push_back(json{{"i", i}, {"value", to_json(xi.component(i))}});
  }
  return json{{"ring", to_json(xi.context())}, {"n", xi.level()}, {"components", comps}};
}

json to_json(const EElement& x) { return json{{"deg0", to_json(x.deg0)}, {"deg1", to_json(x.deg1)}}; }

PadicElement element_from_json(const json& j, ContextRegistry& reg) {
  const RingContext& ctx = reg.from_json(j);
  const json& coeffs = array_field(j, "coeffs");
  if (static_cast<int>(coeffs.size()) != ctx.degree()) {
    fail(ErrorCode::BadInput, "expected " + std::to_string(ctx.degree()) + " coefficients");
  }
  const int prec = int_field(j, "prec");
  if (prec < 0 || prec > ctx.precision()) {
    fail(ErrorCode::BadInput, "prec must lie in [0, " + std::to_string(ctx.precision()) + "]");
  }
  const std::vector<i64> cs = int_list(coeffs);
  return PadicElement::from_coeffs(ctx, cs, prec);
}

WittVector witt_from_json(const json& j, ContextRegistry& reg) {
  const RingContext& ctx = reg.from_json(field(j, "ring"));
  const int n = int_field(j, "n");
  const json& coords = array_field(j, "coords");
  if (n < 1 || static_cast<int>(coords.size()) != n) {
    fail(ErrorCode::BadInput, "a level-n Witt vector needs n >= 1 coordinates, got n = " + std::to_string(n) +
                                  " with " + std::to_string(coords.size()));
  }
  std::vector<PadicElement> xs;
  xs.reserve(n);
  for (const auto& c : coords) {
    xs.push_back(element_from_json(c, reg));
    require_same_context(ctx, xs.back().context());
  }
  return {ctx, std::move(xs)};
}

E1Element e1_from_json(const json& j, ContextRegistry& reg) { return e1_from_json_with(j, reg, nullptr); }

EElement e_from_json(const json& j, ContextRegistry& reg) {
  WittVector deg0 = witt_from_json(field(j, "deg0"), reg);
  E1Element deg1 = e1_from_json_with(field(j, "deg1"), reg, &deg0.context());
  require_same_context(deg0.context(), deg1.context());
  if (deg0.level() != deg1.level()) fail(ErrorCode::BadLevel, "deg0 and deg1 levels differ");
  return {std::move(deg0), std::move(deg1)};
}

VDecomposition v_decomposition_from_json(const json& j, ContextRegistry& reg) {
  if (field(j, "kind") != "v") fail(ErrorCode::BadInput, "expected kind \"v\"");
  VDecomposition dec;
  for (const auto& c : array_field(j, "coeffs")) dec.coeffs.push_back(element_from_json(c, reg));
  return dec;
}

K0Decomposition k0_decomposition_from_json(const json& j, ContextRegistry& reg) {
  if (field(j, "kind") != "k0") fail(ErrorCode::BadInput, "expected kind \"k0\"");
  K0Decomposition dec{int_field(j, "m"), {}};
  for (const auto& c : array_field(j, "coeffs")) dec.coeffs.push_back(element_from_json(c, reg));
  return dec;
}

}  // namespace wittlab
