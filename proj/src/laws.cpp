#include "laws.hpp"

#include <algorithm>

namespace wittlab::detail {

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};

const char* kind_of(const Value& v) {
  return std::visit(overloaded{[](const std::monostate&) { return "none"; },
                               [](const bool&) { return "bool"; },
                               [](const std::uint64_t&) { return "int"; },
                               [](const PadicElement&) { return "element"; },
                               [](const WittVector&) { return "witt"; },
                               [](const GhostVector&) { return "ghost"; },
                               [](const E1Element&) { return "e1"; },
                               [](const EElement&) { return "e"; },
                               [](const VDecomposition&) { return "v"; },
                               [](const K0Decomposition&) { return "k0"; }},
                    v);
}

}  // namespace

json value_to_json(const Value& v) {
  return std::visit(overloaded{[](const std::monostate&) { return json(nullptr); },
                               [](const bool& b) { return json(b); },
                               [](const std::uint64_t& k) { return integer_to_json(k); },
                               [](const GhostVector& g) {
                                 json a = json::array();
                                 for (const auto& w : g.ghosts) a.push_back(to_json(w));
                                 return json{{"ghosts", a}};
                               },
                               [](const auto& x) { return to_json(x); }},
                    v);
}

// ---------------------------------------------------------------------------
// Sampler

Sampler::Sampler(const RingContext& ctx, std::uint64_t stream_seed) : ctx_(&ctx), rng_(stream_seed) {}

Sampler::Sampler(const RingContext& ctx, const json& inputs, ContextRegistry& reg)
    : ctx_(&ctx), rng_(0), replay_(&inputs), reg_(&reg) {
  if (!inputs.is_array()) fail(ErrorCode::BadInput, "counterexample inputs must be an array");
}

const json& Sampler::next_replayed(const char* name, const char* kind) {
  if (cursor_ >= replay_->size()) fail(ErrorCode::BadInput, std::string("replay ran out of inputs at ") + name);
  const json& e = (*replay_)[cursor_++];
  if (!e.is_object() || e.value("name", "") != name || e.value("kind", "") != kind) {
    fail(ErrorCode::BadInput, std::string("replay expected ") + kind + " input \"" + name + "\"");
  }
  return e.at("value");
}

PadicElement Sampler::element(const char* name) {
  PadicElement x;
  if (replay_) {
    x = element_from_json(next_replayed(name, "element"), *reg_);
    require_same_context(*ctx_, x.context());
  } else {
    Residue r{};
    const u64 q = ctx_->modulus(ctx_->precision());
    for (int j = 0; j < ctx_->degree(); ++j) r[j] = rng_.below(q);
    x = PadicElement(*ctx_, r, ctx_->precision());
  }
  drawn_.emplace_back(name, x);
  return x;
}

WittVector Sampler::witt(const char* name, int n) {
  if (replay_) {
    WittVector x = witt_from_json(next_replayed(name, "witt"), *reg_);
    require_same_context(*ctx_, x.context());
    if (x.level() != n) fail(ErrorCode::BadInput, std::string("replayed input ") + name + " has the wrong level");
    drawn_.emplace_back(name, x);
    return x;
  }
  std::vector<PadicElement> coords;
  coords.reserve(n);
  const u64 q = ctx_->modulus(ctx_->precision());
  for (int i = 0; i < n; ++i) {
    Residue r{};
    for (int j = 0; j < ctx_->degree(); ++j) r[j] = rng_.below(q);
    coords.emplace_back(*ctx_, r, ctx_->precision());
  }
  WittVector x(*ctx_, std::move(coords));
  drawn_.emplace_back(name, x);
  return x;
}

E1Element Sampler::e1(const char* name, int n) {
  if (replay_) {
    E1Element xi = e1_from_json(next_replayed(name, "e1"), *reg_);
    require_same_context(*ctx_, xi.context());
    if (xi.level() != n) fail(ErrorCode::BadInput, std::string("replayed input ") + name + " has the wrong level");
    drawn_.emplace_back(name, xi);
    return xi;
  }
  std::vector<PadicElement> comps;
  comps.reserve(n - 1);
  const u64 q = ctx_->modulus(ctx_->precision());
  for (int i = 1; i < n; ++i) {
    Residue r{};
    for (int j = 0; j < ctx_->degree(); ++j) r[j] = rng_.below(q);
    comps.emplace_back(*ctx_, r, ctx_->precision());
  }
  E1Element xi(*ctx_, n, std::move(comps));
  drawn_.emplace_back(name, xi);
  return xi;
}

std::uint64_t Sampler::integer(const char* name, std::uint64_t bound) {
  std::uint64_t k = 0;
  if (replay_) {
    k = unsigned_from_json(next_replayed(name, "int"));
    if (k >= bound) fail(ErrorCode::BadInput, std::string("replayed input ") + name + " is out of range");
  } else {
    k = rng_.below(bound);
  }
  drawn_.emplace_back(name, k);
  return k;
}

json Sampler::recorded() const {
  json a = json::array();
  for (const auto& [name, v] : drawn_) a.push_back(json{{"name", name}, {"kind", kind_of(v)}, {"value", value_to_json(v)}});
  return a;
}

// ---------------------------------------------------------------------------
// Laws

namespace {

bool agree(bool a, bool b) { return a == b; }
bool agree(const K0Decomposition& a, const K0Decomposition& b) {
  return a.m == b.m && wittlab::agree(VDecomposition{a.coeffs}, VDecomposition{b.coeffs});
}

// Records the first failing check.
class Checker {
 public:
  template <class T>
  bool equal(const char* check, const T& lhs, const T& rhs) {
    if (!out_.ok) return false;
    if (agree(lhs, rhs)) return true;
    out_ = {false, check, lhs, rhs};
    return false;
  }
  template <class T>
  bool distinct(const char* check, const T& lhs, const T& rhs) {
    if (!out_.ok) return false;
    if (!agree(lhs, rhs)) return true;
    out_ = {false, check, lhs, rhs};
    return false;
  }
  Outcome done() { return std::move(out_); }

 private:
  Outcome out_;
};

i64 prime(const LawEnv& e) { return static_cast<i64>(e.ctx.prime()); }

WittVector one_shifted(const RingContext& ctx, int n, int i) {
  return verschiebung_pow(WittVector::one(ctx, n - i), i);
}

GhostVector pointwise(const GhostVector& a, const GhostVector& b, bool multiply) {
  GhostVector g{a.ctx, {}};
  for (int i = 0; i < a.level(); ++i) g.ghosts.push_back(multiply ? a.ghosts[i] * b.ghosts[i] : a.ghosts[i] + b.ghosts[i]);
  return g;
}

// The E-level maps routed through the (possibly mutated) ops table.
EElement d_e(const LawEnv& e, const EElement& x) {
  return {WittVector::zero(e.ctx, x.deg0.level()), e.ops.diff(x.deg0)};
}
EElement f_e(const LawEnv& e, const EElement& x) { return {frobenius(x.deg0), e.ops.frobenius(x.deg1)}; }
EElement v_e(const LawEnv& e, const EElement& x) { return {verschiebung(x.deg0), e.ops.verschiebung(x.deg1)}; }

EElement zero_e(const RingContext& ctx, int n) { return {WittVector::zero(ctx, n), E1Element::zero(ctx, n)}; }

EElement random_e(Sampler& s, const LawEnv& e, const char* n0, const char* n1) {
  return {s.witt(n0, e.n), s.e1(n1, e.n)};
}

int prec_level(int n) { return n; }
int prec_level_up(int n) { return n + 1; }
int prec_level_up2(int n) { return n + 2; }
int prec_diff(int n) { return 2 * (n - 1); }
int prec_diff_up(int n) { return 2 * n; }
int prec_congruence(int n) { return 2 * n + 1; }
int prec_k0_m1(int n) { return n + 1; }
int prec_k0_m2(int n) { return n + 2; }

// ---- witt ring -------------------------------------------------------------

Outcome ghost_additive(Sampler& s, const LawEnv& e) {
  const auto x = s.witt("x", e.n), y = s.witt("y", e.n);
  Checker c;
  c.equal("ghost(x + y) = ghost(x) + ghost(y)", ghost(x + y), pointwise(ghost(x), ghost(y), false));
  return c.done();
}

Outcome ghost_multiplicative(Sampler& s, const LawEnv& e) {
  const auto x = s.witt("x", e.n), y = s.witt("y", e.n);
  Checker c;
  c.equal("ghost(x y) = ghost(x) ghost(y)", ghost(x * y), pointwise(ghost(x), ghost(y), true));
  return c.done();
}

Outcome ghost_inverse_roundtrip(Sampler& s, const LawEnv& e) {
  const auto x = s.witt("x", e.n);
  const auto g = ghost(x);
  const auto back = ghost_inverse(g);
  Checker c;
  c.equal("ghost_inverse(ghost(x)) = x", back, x);
  c.equal("ghost(ghost_inverse(w)) = w", ghost(back), g);
  return c.done();
}

Outcome witt_ring_axioms(Sampler& s, const LawEnv& e) {
  const auto x = s.witt("x", e.n), y = s.witt("y", e.n), z = s.witt("z", e.n);
  const auto one = WittVector::one(e.ctx, e.n), zero = WittVector::zero(e.ctx, e.n);
  Checker c;
  c.equal("(x + y) + z = x + (y + z)", (x + y) + z, x + (y + z));
  c.equal("(x y) z = x (y z)", (x * y) * z, x * (y * z));
  c.equal("x + y = y + x", x + y, y + x);
  c.equal("x y = y x", x * y, y * x);
  c.equal("x (y + z) = x y + x z", x * (y + z), x * y + x * z);
  c.equal("x + (-x) = 0", x + (-x), zero);
  c.equal("1 x = x", one * x, x);
  return c.done();
}

Outcome fv_is_p(Sampler& s, const LawEnv& e) {
  const auto x = s.witt("x", e.n);
  Checker c;
  c.equal("F(V(x)) = p x", frobenius(verschiebung(x)), scale(x, prime(e)));
  return c.done();
}

Outcome v_projection(Sampler& s, const LawEnv& e) {
  const auto X = s.witt("X", e.n + 1), y = s.witt("y", e.n);
  Checker c;
  c.equal("V(F(X) y) = X V(y)", verschiebung(frobenius(X) * y), X * verschiebung(y));
  return c.done();
}

Outcome f_ring_hom(Sampler& s, const LawEnv& e) {
  const auto X = s.witt("X", e.n + 1), Y = s.witt("Y", e.n + 1);
  Checker c;
  c.equal("F(X + Y) = F(X) + F(Y)", frobenius(X + Y), frobenius(X) + frobenius(Y));
  c.equal("F(X Y) = F(X) F(Y)", frobenius(X * Y), frobenius(X) * frobenius(Y));
  c.equal("F(1) = 1", frobenius(WittVector::one(e.ctx, e.n + 1)), WittVector::one(e.ctx, e.n));
  return c.done();
}

Outcome rf_commute(Sampler& s, const LawEnv& e) {
  const auto X = s.witt("X", e.n + 1);
  Checker c;
  c.equal("R(F(X)) = F(R(X))", restrict(frobenius(X)), frobenius(restrict(X)));
  return c.done();
}

Outcome teichmuller_multiplicative(Sampler& s, const LawEnv& e) {
  const auto a = s.element("a"), b = s.element("b");
  Checker c;
  c.equal("[a][b] = [ab]", teichmuller(a, e.n) * teichmuller(b, e.n), teichmuller(a * b, e.n));
  return c.done();
}

Outcome s_phi_ring_hom(Sampler& s, const LawEnv& e) {
  const auto a = s.element("a"), b = s.element("b");
  Checker c;
  c.equal("s(a + b) = s(a) + s(b)", s_phi(a + b, e.n), s_phi(a, e.n) + s_phi(b, e.n));
  c.equal("s(a b) = s(a) s(b)", s_phi(a * b, e.n), s_phi(a, e.n) * s_phi(b, e.n));
  c.equal("s(1) = 1", s_phi(PadicElement::one(e.ctx), e.n), WittVector::one(e.ctx, e.n));
  return c.done();
}

Outcome f_on_s_phi(Sampler& s, const LawEnv& e) {
  const auto a = s.element("a");
  Checker c;
  c.equal("F(s(a)) = s(phi(a))", frobenius(s_phi(a, e.n + 1)), s_phi(frobenius(a), e.n));
  return c.done();
}

Outcome s_phi_ghost(Sampler& s, const LawEnv& e) {
  const auto a = s.element("a");
  GhostVector expect{&e.ctx, {}};
  for (int i = 0; i < e.n; ++i) expect.ghosts.push_back(frobenius_pow(a, i));
  Checker c;
  c.equal("ghost(s(a)) = (a, phi(a), ...)", ghost(s_phi(a, e.n)), expect);
  return c.done();
}

Outcome ghost_stabilization(Sampler& s, const LawEnv& e) {
  VDecomposition dec;
  for (int i = 0; i < e.n; ++i) dec.coeffs.push_back(s.element("a"));
  const auto g = ghost(recompose(e.ctx, dec, e.n + 2));
  Checker c;
  for (int k = e.n; k < e.n + 2; ++k) c.equal("w_k = phi(w_{k-1}) past the last coefficient", g.ghosts[k], frobenius(g.ghosts[k - 1]));
  return c.done();
}

Outcome v_decompose_unique(Sampler& s, const LawEnv& e) {
  const auto x = s.witt("x", e.n);
  const auto dec = v_decompose(x);
  const auto back = recompose(e.ctx, dec, e.n);
  Checker c;
  c.equal("recompose(v_decompose(x)) = x", back, x);
  c.equal("v_decompose is a fixed point of recompose", v_decompose(back), dec);
  const int i = static_cast<int>(s.integer("i", static_cast<u64>(e.n)));
  const auto u = s.element("u");
  VDecomposition other = dec;
  other.coeffs[i] = other.coeffs[i] + PadicElement::one(e.ctx) + mul_p_power(u, 1);
  c.distinct("distinct coefficients recompose to distinct vectors", recompose(e.ctx, other, e.n), back);
  return c.done();
}

Outcome teich_coefficients_match(Sampler& s, const LawEnv& e) {
  const auto a = s.element("a");
  Checker c;
  c.equal("teich_coefficients(a) = v_decompose([a])", teich_coefficients(a, e.n), v_decompose(teichmuller(a, e.n)));
  return c.done();
}

Outcome dividing_by_p(Sampler& s, const LawEnv& e) {
  const auto a = s.element("a");
  const auto y = unshift(teichmuller(a, e.n + 1) - s_phi(a, e.n + 1));
  Checker c;
  c.equal("[a]^p = s(phi(a)) + p y", pow(teichmuller(a, e.n), e.ctx.prime()), s_phi(frobenius(a), e.n) + scale(y, prime(e)));
  return c.done();
}

Outcome v_image_shift(Sampler& s, const LawEnv& e) {
  const auto x = s.witt("x", e.n);
  const auto dec = v_decompose(x);
  VDecomposition expect;
  expect.coeffs.push_back(PadicElement::zero(e.ctx));
  for (const auto& a : dec.coeffs) expect.coeffs.push_back(frobenius_inv(a));
  Checker c;
  c.equal("v_decompose(V(x)) = (0, phi^-1(a_0), ...)", v_decompose(verschiebung(x)), expect);
  return c.done();
}

Outcome residue_map_kernel(Sampler& s, const LawEnv& e) {
  const auto x = s.witt("x", e.n), y = s.witt("y", e.n);
  const int i = 1 + static_cast<int>(s.integer("i", static_cast<u64>(e.n)));
  const int j = static_cast<int>(s.integer("j", static_cast<u64>(e.n)));
  const auto pj = WittVector::from_int(e.ctx, e.n, static_cast<i64>(e.ctx.modulus(j)));
  const auto pi = WittVector::from_int(e.ctx, e.n, static_cast<i64>(e.ctx.modulus(i)));
  const auto k = x * (one_shifted(e.ctx, e.n, j) - pj) + y * pi;
  Checker c;
  c.equal("x (V^j(1) - p^j) + y p^i maps to 0 mod p^i", wn_to_residue(k, i), PadicElement::zero(e.ctx).truncated(i));
  return c.done();
}

Outcome residue_map_ring_hom(Sampler& s, const LawEnv& e) {
  const auto x = s.witt("x", e.n), y = s.witt("y", e.n);
  const int i = 1 + static_cast<int>(s.integer("i", static_cast<u64>(e.n)));
  Checker c;
  c.equal("res(x + y) = res(x) + res(y)", wn_to_residue(x + y, i), wn_to_residue(x, i) + wn_to_residue(y, i));
  c.equal("res(x y) = res(x) res(y)", wn_to_residue(x * y, i), wn_to_residue(x, i) * wn_to_residue(y, i));
  c.equal("res(1) = 1", wn_to_residue(WittVector::one(e.ctx, e.n), i), PadicElement::one(e.ctx).truncated(i));
  return c.done();
}

template <int m>
Outcome k0_roundtrip(Sampler& s, const LawEnv& e) {
  K0Decomposition src{m, {}};
  for (int k = 0; k < e.n; ++k) src.coeffs.push_back(s.element("a"));
  const auto z = recompose_k0(e.ctx, src, e.n);
  const auto dec = k0_decompose(z, m);
  Checker c;
  c.equal("k0_decompose(sum s(a_k) V^k([p^m])) = (a_k)", dec, src);
  c.equal("recompose_k0(k0_decompose(z)) = z", recompose_k0(e.ctx, dec, e.n), z);
  return c.done();
}

Outcome teich_power_matches(Sampler& s, const LawEnv& e) {
  const auto a = s.element("a");
  Checker c;
  c.equal("[a]^(p-1) = [a^(p-1)]", pow(teichmuller(a, e.n), e.ctx.prime() - 1), teichmuller(pow(a, e.ctx.prime() - 1), e.n));
  return c.done();
}

// ---- E complex -----------------------------------------------------------------

Outcome d_squared_zero(Sampler& s, const LawEnv& e) {
  const auto x = random_e(s, e, "x", "xi");
  Checker c;
  c.equal("d(d(x)) = 0", d_e(e, d_e(e, x)), zero_e(e.ctx, e.n));
  return c.done();
}

Outcome leibniz(Sampler& s, const LawEnv& e) {
  const auto x = s.witt("x", e.n), y = s.witt("y", e.n);
  Checker c;
  c.equal("d(x y) = x dy + y dx", e.ops.diff(x * y), module_action(x, e.ops.diff(y)) + module_action(y, e.ops.diff(x)));
  return c.done();
}

Outcome d_additive(Sampler& s, const LawEnv& e) {
  const auto x = s.witt("x", e.n), y = s.witt("y", e.n);
  Checker c;
  c.equal("d(x + y) = dx + dy", e.ops.diff(x + y), e.ops.diff(x) + e.ops.diff(y));
  c.equal("d(1) = 0", e.ops.diff(WittVector::one(e.ctx, e.n)), E1Element::zero(e.ctx, e.n));
  return c.done();
}

Outcome fdv_is_d(Sampler& s, const LawEnv& e) {
  const auto x = s.witt("x", e.n);
  Checker c;
  c.equal("F(d(V(x))) = d(x)", e.ops.frobenius(e.ops.diff(verschiebung(x))), e.ops.diff(x));
  return c.done();
}

Outcome fv_is_p_e1(Sampler& s, const LawEnv& e) {
  const auto x = random_e(s, e, "x", "xi");
  Checker c;
  c.equal("F(V(xi)) = p xi", e.ops.frobenius(e.ops.verschiebung(x.deg1)), scale(x.deg1, prime(e)));
  const auto fv = f_e(e, v_e(e, x));
  c.equal("F(V(x)) = p x", fv, EElement{scale(x.deg0, prime(e)), scale(x.deg1, prime(e))});
  return c.done();
}

Outcome df_is_pfd(Sampler& s, const LawEnv& e) {
  const auto X = s.witt("X", e.n + 1);
  Checker c;
  c.equal("d(F(X)) = p F(d(X))", e.ops.diff(frobenius(X)), scale(e.ops.frobenius(e.ops.diff(X)), prime(e)));
  return c.done();
}

Outcome vd_is_pdv(Sampler& s, const LawEnv& e) {
  const auto x = s.witt("x", e.n);
  Checker c;
  c.equal("V(d(x)) = p d(V(x))", e.ops.verschiebung(e.ops.diff(x)), scale(e.ops.diff(verschiebung(x)), prime(e)));
  return c.done();
}

Outcome v_projection_e1(Sampler& s, const LawEnv& e) {
  const auto X = s.witt("X", e.n + 1);
  const auto xi = s.e1("xi", e.n);
  const auto Xi = s.e1("Xi", e.n + 1);
  const auto y = s.witt("y", e.n);
  Checker c;
  c.equal("V(F(X) xi) = X V(xi)", e.ops.verschiebung(module_action(frobenius(X), xi)), module_action(X, e.ops.verschiebung(xi)));
  c.equal("V(F(Xi) y) = Xi V(y)", e.ops.verschiebung(module_action(y, e.ops.frobenius(Xi))), module_action(verschiebung(y), Xi));
  return c.done();
}

Outcome f_multiplicative_e(Sampler& s, const LawEnv& e) {
  const auto X = s.witt("X", e.n + 1);
  const auto Xi = s.e1("Xi", e.n + 1);
  const auto Y = s.witt("Y", e.n + 1);
  Checker c;
  c.equal("F(X Xi) = F(X) F(Xi)", e.ops.frobenius(module_action(X, Xi)), module_action(frobenius(X), e.ops.frobenius(Xi)));
  const EElement a{X, Xi}, b{Y, E1Element::zero(e.ctx, e.n + 1)};
  c.equal("F(a b) = F(a) F(b)", f_e(e, graded_mul(a, b)), graded_mul(f_e(e, a), f_e(e, b)));
  return c.done();
}

Outcome teich_relation(Sampler& s, const LawEnv& e) {
  const auto a = s.element("a");
  const auto t = teichmuller(a, e.n);
  Checker c;
  c.equal("F(d[a]) = [a]^(p-1) d[a]", e.ops.frobenius(e.ops.diff(teichmuller(a, e.n + 1))),
          module_action(pow(t, e.ctx.prime() - 1), e.ops.diff(t)));
  return c.done();
}

Outcome r_commutes(Sampler& s, const LawEnv& e) {
  const auto X = s.witt("X", e.n + 1);
  const auto Xi = s.e1("Xi", e.n + 1);
  const auto xi = s.e1("xi", e.n);
  Checker c;
  c.equal("R(d(X)) = d(R(X))", restrict(e.ops.diff(X)), e.ops.diff(restrict(X)));
  c.equal("R(F(Xi)) = F(R(Xi))", restrict(e.ops.frobenius(Xi)), e.ops.frobenius(restrict(Xi)));
  c.equal("R(V(xi)) = V(R(xi))", restrict(e.ops.verschiebung(xi)), e.ops.verschiebung(restrict(xi)));
  c.equal("R(lambda(X)) = lambda(R(X))", restrict(lambda(X)), lambda(restrict(X)));
  return c.done();
}

Outcome torsion(Sampler& s, const LawEnv& e) {
  const auto xi = s.e1("xi", e.n);
  const auto zero = E1Element::zero(e.ctx, e.n);
  Checker c;
  c.equal("p^(n-1) xi = 0", scale(xi, static_cast<i64>(e.ctx.modulus(e.n - 1))), zero);
  const auto top = E1Element::basis(e.ctx, e.n, e.n - 1, PadicElement::one(e.ctx));
  c.distinct("p^(n-2) dV^(n-1)(1) != 0", scale(top, static_cast<i64>(e.ctx.modulus(e.n - 2))), zero);
  return c.done();
}

Outcome fil_kernel(Sampler& s, const LawEnv& e) {
  const auto xi = s.e1("xi", e.n);
  const u64 mask = s.integer("mask", u64{1} << (e.n - 1));
  std::vector<PadicElement> comps;
  bool lower_zero = true;
  for (int i = 1; i < e.n; ++i) {
    const bool keep = (mask >> (i - 1)) & 1;
    comps.push_back(keep ? xi.component(i) : PadicElement::zero(e.ctx));
    if (i < e.n - 1 && keep && !xi.component(i).is_zero()) lower_zero = false;
  }
  const E1Element masked(e.ctx, e.n, comps);
  Checker c;
  c.equal("R(xi) = 0 iff xi lives in the top component", restrict(masked).is_zero(), lower_zero);
  return c.done();
}

Outcome congruence_backbone(Sampler& s, const LawEnv& e) {
  const auto a = s.element("a");
  const int i = 1 + static_cast<int>(s.integer("i", static_cast<u64>(e.n)));
  const auto sides = congruence_sides(a, i);
  Checker c;
  c.equal("congruence lemma mod p^i", sides.lhs.truncated(i), sides.rhs.truncated(i));
  return c.done();
}

Outcome module_structure(Sampler& s, const LawEnv& e) {
  const auto x = s.witt("x", e.n), y = s.witt("y", e.n);
  const auto xi = s.e1("xi", e.n), eta = s.e1("eta", e.n);
  const auto a = s.element("a");
  const int j = static_cast<int>(s.integer("j", static_cast<u64>(e.n)));
  Checker c;
  c.equal("(x y) xi = x (y xi)", module_action(x * y, xi), module_action(x, module_action(y, xi)));
  c.equal("(x + y) xi = x xi + y xi", module_action(x + y, xi), module_action(x, xi) + module_action(y, xi));
  c.equal("x (xi + eta) = x xi + x eta", module_action(x, xi + eta), module_action(x, xi) + module_action(x, eta));
  c.equal("1 xi = xi", module_action(WittVector::one(e.ctx, e.n), xi), xi);
  std::vector<PadicElement> scaled;
  for (int i = 1; i < e.n; ++i) scaled.push_back(a * xi.component(i));
  c.equal("s(a) xi = a xi", module_action(s_phi(a, e.n), xi), E1Element(e.ctx, e.n, scaled));
  c.equal("V^j(1) xi = p^j xi", module_action(one_shifted(e.ctx, e.n, j), xi), scale(xi, static_cast<i64>(e.ctx.modulus(j))));
  return c.done();
}

Outcome graded_ring_axioms(Sampler& s, const LawEnv& e) {
  const auto a = random_e(s, e, "a0", "a1");
  const auto b = random_e(s, e, "b0", "b1");
  const auto g = random_e(s, e, "c0", "c1");
  Checker c;
  c.equal("(a b) c = a (b c)", graded_mul(graded_mul(a, b), g), graded_mul(a, graded_mul(b, g)));
  c.equal("a b = b a", graded_mul(a, b), graded_mul(b, a));
  c.equal("a (b + c) = a b + a c", graded_mul(a, b + g), graded_mul(a, b) + graded_mul(a, g));
  c.equal("d(a b) = d(a) b + a d(b)", d_e(e, graded_mul(a, b)), graded_mul(d_e(e, a), b) + graded_mul(a, d_e(e, b)));
  return c.done();
}

Outcome lambda_commutes(Sampler& s, const LawEnv& e) {
  const auto x = s.witt("x", e.n), y = s.witt("y", e.n);
  const auto X = s.witt("X", e.n + 1);
  Checker c;
  c.equal("V(lambda(x)) = lambda(V(x))", v_e(e, lambda(x)), lambda(verschiebung(x)));
  c.equal("F(lambda(X)) = lambda(F(X))", f_e(e, lambda(X)), lambda(frobenius(X)));
  c.equal("lambda(x + y) = lambda(x) + lambda(y)", lambda(x + y), lambda(x) + lambda(y));
  c.equal("lambda(x y) = lambda(x) lambda(y)", lambda(x * y), graded_mul(lambda(x), lambda(y)));
  return c.done();
}

}  // namespace

const std::vector<Law>& laws() {
  static const std::vector<Law> table{
      {"ghost_additive", ghost_additive, prec_level},
      {"ghost_multiplicative", ghost_multiplicative, prec_level},
      {"ghost_inverse_roundtrip", ghost_inverse_roundtrip, prec_level},
      {"witt_ring_axioms", witt_ring_axioms, prec_level},
      {"fv_is_p", fv_is_p, prec_level},
      {"v_projection", v_projection, prec_level_up},
      {"f_ring_hom", f_ring_hom, prec_level_up},
      {"rf_commute", rf_commute, prec_level_up},
      {"teichmuller_multiplicative", teichmuller_multiplicative, prec_level},
      {"s_phi_ring_hom", s_phi_ring_hom, prec_level},
      {"f_on_s_phi", f_on_s_phi, prec_level_up},
      {"s_phi_ghost", s_phi_ghost, prec_level},
      {"ghost_stabilization", ghost_stabilization, prec_level_up2},
      {"v_decompose_unique", v_decompose_unique, prec_level},
      {"teich_coefficients_match", teich_coefficients_match, prec_level},
      {"dividing_by_p", dividing_by_p, prec_level_up},
      {"v_image_shift", v_image_shift, prec_level_up},
      {"residue_map_kernel", residue_map_kernel, prec_level},
      {"residue_map_ring_hom", residue_map_ring_hom, prec_level},
      {"k0_roundtrip_m1", k0_roundtrip<1>, prec_k0_m1},
      {"k0_roundtrip_m2", k0_roundtrip<2>, prec_k0_m2},
      {"teich_power_matches", teich_power_matches, prec_level},
      {"d_squared_zero", d_squared_zero, prec_diff},
      {"leibniz", leibniz, prec_diff},
      {"d_additive", d_additive, prec_diff},
      {"fdv_is_d", fdv_is_d, prec_diff_up},
      {"fv_is_p_e1", fv_is_p_e1, prec_level},
      {"df_is_pfd", df_is_pfd, prec_diff_up},
      {"vd_is_pdv", vd_is_pdv, prec_diff_up},
      {"v_projection_e1", v_projection_e1, prec_level_up},
      {"f_multiplicative_e", f_multiplicative_e, prec_level_up},
      {"teich_relation", teich_relation, prec_diff_up},
      {"r_commutes", r_commutes, prec_diff_up},
      {"torsion", torsion, prec_level},
      {"fil_kernel", fil_kernel, prec_level},
      {"congruence_backbone", congruence_backbone, prec_congruence},
      {"module_structure", module_structure, prec_level},
      {"graded_ring_axioms", graded_ring_axioms, prec_diff},
      {"lambda_commutes", lambda_commutes, prec_level_up},
  };
  return table;
}

const Law* find_law(const std::string& name) {
  const auto& t = laws();
  auto it = std::find_if(t.begin(), t.end(), [&](const Law& l) { return name == l.name; });
  return it == t.end() ? nullptr : &*it;
}

}  // namespace wittlab::detail
