#include "witt/complex.hpp"

#include <string>

namespace wittlab {

namespace {

void require_same_level(int a, int b) {
  if (a != b) fail(ErrorCode::BadLevel, "levels " + std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

E1Element::E1Element(const RingContext& ctx, int n, std::vector<PadicElement> comps)
    : ctx_(&ctx), n_(n), comps_(std::move(comps)) {
  if (n < 1) fail(ErrorCode::BadLevel, "E_n needs n >= 1");
  if (static_cast<int>(comps_.size()) != n - 1) {
    fail(ErrorCode::BadInput, "E_" + std::to_string(n) + "^1 has " + std::to_string(n - 1) + " components");
  }
  for (int i = 1; i < n; ++i) {
    auto& c = comps_[i - 1];
    require_same_context(ctx, c.context());
    if (c.prec() < i) {
      fail(ErrorCode::PrecisionUnderflow, "component " + std::to_string(i) + " known only to precision " +
                                              std::to_string(c.prec()));
    }
    c = c.truncated(i);
  }
}

E1Element E1Element::zero(const RingContext& ctx, int n) {
  return {ctx, n, std::vector<PadicElement>(n > 0 ? n - 1 : 0, PadicElement::zero(ctx))};
}

E1Element E1Element::basis(const RingContext& ctx, int n, int i, const PadicElement& coeff) {
  if (i < 1 || i >= n) fail(ErrorCode::BadInput, "dV^" + std::to_string(i) + "(1) is not stored at level " +
                                                      std::to_string(n));
  std::vector<PadicElement> comps(n - 1, PadicElement::zero(ctx));
  comps[i - 1] = coeff;
  return {ctx, n, std::move(comps)};
}

bool E1Element::is_zero() const noexcept {
  for (const auto& c : comps_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool agree(const E1Element& a, const E1Element& b) {
  require_same_context(a.context(), b.context());
  if (a.level() != b.level()) return false;
  for (int i = 1; i < a.level(); ++i) {
    if (!agree_at(a.component(i), b.component(i), i)) return false;
  }
  return true;
}

bool agree(const EElement& a, const EElement& b) { return agree(a.deg0, b.deg0) && agree(a.deg1, b.deg1); }

E1Element operator+(const E1Element& a, const E1Element& b) {
  require_same_level(a.level(), b.level());
  std::vector<PadicElement> comps;
  for (int i = 1; i < a.level(); ++i) comps.push_back(a.component(i) + b.component(i));
  return {a.context(), a.level(), std::move(comps)};
}

E1Element operator-(const E1Element& a, const E1Element& b) {
  require_same_level(a.level(), b.level());
  std::vector<PadicElement> comps;
  for (int i = 1; i < a.level(); ++i) comps.push_back(a.component(i) - b.component(i));
  return {a.context(), a.level(), std::move(comps)};
}

E1Element operator-(const E1Element& a) { return E1Element::zero(a.context(), a.level()) - a; }

E1Element scale(const E1Element& a, i64 k) {
  std::vector<PadicElement> comps;
  for (const auto& c : a.components()) comps.push_back(scale(c, k));
  return {a.context(), a.level(), std::move(comps)};
}

EElement operator+(const EElement& a, const EElement& b) { return {a.deg0 + b.deg0, a.deg1 + b.deg1}; }

EElement lambda(const WittVector& x) { return {x, E1Element::zero(x.context(), x.level())}; }

E1Element diff(const WittVector& x) {
  const auto dec = v_decompose(x);
  std::vector<PadicElement> comps(dec.coeffs.begin() + 1, dec.coeffs.end());
  return {x.context(), x.level(), std::move(comps)};
}

EElement diff(const EElement& x) { return {WittVector::zero(x.deg0.context(), x.deg0.level()), diff(x.deg0)}; }

E1Element restrict(const E1Element& xi) {
  if (xi.level() < 2) fail(ErrorCode::BadLevel, "restriction needs level >= 2");
  std::vector<PadicElement> comps(xi.components().begin(), xi.components().end() - 1);
  return {xi.context(), xi.level() - 1, std::move(comps)};
}

E1Element frobenius(const E1Element& xi) {
  if (xi.level() < 2) fail(ErrorCode::BadLevel, "Frobenius needs level >= 2");
  // component i of the image is phi(a_{i+1}) mod p^i; a_1 lands in the dropped i = 0 slot.
  std::vector<PadicElement> comps;
  for (int i = 1; i < xi.level() - 1; ++i) comps.push_back(frobenius(xi.component(i + 1)));
  return {xi.context(), xi.level() - 1, std::move(comps)};
}

E1Element verschiebung(const E1Element& xi) {
  const auto& ctx = xi.context();
  std::vector<PadicElement> comps;
  comps.push_back(PadicElement::zero(ctx));
  for (int i = 1; i < xi.level(); ++i) comps.push_back(mul_p_power(frobenius_inv(xi.component(i)), 1));
  return {ctx, xi.level() + 1, std::move(comps)};
}

EElement restrict(const EElement& x) { return {restrict(x.deg0), restrict(x.deg1)}; }
EElement frobenius(const EElement& x) { return {frobenius(x.deg0), frobenius(x.deg1)}; }
EElement verschiebung(const EElement& x) { return {verschiebung(x.deg0), verschiebung(x.deg1)}; }

E1Element module_action(const WittVector& y, const E1Element& xi) {
  require_same_context(y.context(), xi.context());
  require_same_level(y.level(), xi.level());
  const int n = xi.level();
  if (n == 1) return xi;
  const auto scalars = wn_to_residues(y, n - 1);
  std::vector<PadicElement> comps;
  for (int i = 1; i < n; ++i) comps.push_back(scalars[i - 1] * xi.component(i));
  return {xi.context(), n, std::move(comps)};
}

EElement graded_mul(const EElement& a, const EElement& b) {
  // The deg1 * deg1 product lands in E^2 = 0.
  return {a.deg0 * b.deg0, module_action(a.deg0, b.deg1) + module_action(b.deg0, a.deg1)};
}

bool teich_relation_check(const PadicElement& a, int n) {
  if (n < 1) fail(ErrorCode::BadLevel, "level must be >= 1");
  const E1Element lhs = frobenius(diff(teichmuller(a, n + 1)));
  const WittVector t = teichmuller(a, n);
  const E1Element rhs = module_action(pow(t, a.context().prime() - 1), diff(t));
  return agree(lhs, rhs);
}

}  // namespace wittlab
