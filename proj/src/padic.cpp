#include "witt/padic.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fp_poly.hpp"

namespace wittlab {

namespace {

inline u64 mulmod(u64 a, u64 b, u64 q) {
  return static_cast<u64>(static_cast<u128>(a) * b % q);
}

inline u64 addmod(u64 a, u64 b, u64 q) {
  u64 s = a + b;
  return s >= q ? s - q : s;
}

inline u64 submod(u64 a, u64 b, u64 q) { return a >= b ? a - b : a + (q - b); }

u64 signed_mod(i64 v, u64 q) {
  __int128 r = static_cast<__int128>(v) % static_cast<__int128>(q);
  if (r < 0) r += q;
  return static_cast<u64>(r);
}

}  // namespace

// ---------------------------------------------------------------------------
// RingContext construction

ContextPtr RingContext::make(u64 p, int d, std::vector<i64> f, int M) {
  if (!fp::is_prime(p)) fail(ErrorCode::CompositePrime, std::to_string(p) + " is not prime");
  if (d < 1 || d > kMaxDegree) {
    fail(ErrorCode::BadDegree, "degree must be in [1, " + std::to_string(kMaxDegree) + "]");
  }
  if (static_cast<int>(f.size()) != d + 1 || f.back() != 1) {
    fail(ErrorCode::BadDegree, "defining polynomial must be monic of degree " + std::to_string(d));
  }

  std::shared_ptr<RingContext> ctx(new RingContext());
  ctx->p_ = p;
  ctx->d_ = d;
  ctx->f_ = std::move(f);
  ctx->pow_p_.push_back(1);
  constexpr u64 kLimit = std::numeric_limits<u64>::max() >> 1;  // 2^63 - 1
  while (ctx->pow_p_.back() <= kLimit / p) ctx->pow_p_.push_back(ctx->pow_p_.back() * p);
  ctx->cap_ = static_cast<int>(ctx->pow_p_.size()) - 1;
  if (M < 1 || M > ctx->cap_) {
    fail(ErrorCode::BadPrecision, "M must be in [1, " + std::to_string(ctx->cap_) + "] for p = " +
                                      std::to_string(p));
  }
  ctx->M_ = M;

  fp::Poly fbar(d + 1);
  for (int j = 0; j <= d; ++j) fbar[j] = signed_mod(ctx->f_[j], p);
  if (!fp::is_irreducible(fbar, p)) {
    fail(ErrorCode::ReduciblePolynomial, "defining polynomial is reducible modulo p");
  }

  ctx->f_low_.resize(ctx->cap_ + 1);
  for (int e = 0; e <= ctx->cap_; ++e) {
    Residue r{};
    if (e > 0) {
      for (int j = 0; j < d; ++j) r[j] = signed_mod(ctx->f_[j], ctx->pow_p_[e]);
    }
    ctx->f_low_[e] = r;
  }
  ctx->compute_frobenius();
  return ctx;
}

std::vector<i64> RingContext::default_polynomial(u64 p, int d) {
  if (!fp::is_prime(p)) fail(ErrorCode::CompositePrime, std::to_string(p) + " is not prime");
  if (d < 1 || d > kMaxDegree) fail(ErrorCode::BadDegree, "unsupported degree");
  // Enumerate the low coefficients as base-p digits.
  fp::Poly f(d + 1, 0);
  f[d] = 1;
  for (;;) {
    if (fp::is_irreducible(f, p)) break;
    int j = 0;
    while (j < d && ++f[j] == p) f[j++] = 0;
    if (j == d) fail(ErrorCode::InternalError, "no irreducible polynomial found");
  }
  return {f.begin(), f.end()};
}

void RingContext::compute_frobenius() {
  const int e = cap_;
  using Matrix = std::array<std::array<u64, kMaxDegree>, kMaxDegree>;
  Matrix identity{};
  for (int i = 0; i < d_; ++i) identity[i][i] = 1;
  frob_.assign(1, identity);
  if (d_ == 1) return;

  const u64 q = modulus(e);
  auto eval = [&](const Residue& r, bool derivative) {
    // f(r) or f'(r) by Horner.
    Residue acc{};
    int top = derivative ? d_ - 1 : d_;
    for (int j = top; j >= 0; --j) {
      acc = mul(acc, r, e);
      i64 coeff = derivative ? static_cast<i64>(j + 1) * f_[j + 1] : f_[j];
      acc[0] = addmod(acc[0], signed_mod(coeff, q), q);
    }
    return acc;
  };

  // Seed: g^p reduced mod p, then Newton on f.
  Residue root = reduce(pow(generator(), p_, e), 1);
  for (int iter = 0; iter < 8 && !is_zero(eval(root, false), e); ++iter) {
    Residue deriv = eval(root, true);
    if (valuation(deriv, e) != 0) fail(ErrorCode::HenselFailure, "f'(g^p) is not a unit");
    root = sub(root, mul(eval(root, false), invert(deriv, e), e), e);
  }
  if (!is_zero(eval(root, false), e)) fail(ErrorCode::HenselFailure, "Newton iteration did not converge");

  // images[k] = phi^k(g); column c of the k-th matrix is images[k]^c.
  Residue image = generator();
  frob_.resize(d_);
  for (int k = 1; k < d_; ++k) {
    // phi^k(g) = phi(phi^{k-1}(g)) = sum_c phi^{k-1}(g)_c * root^c
    Residue next{};
    Residue power = one();
    for (int c = 0; c < d_; ++c) {
      next = add(next, scale(power, image[c], e), e);
      power = mul(power, root, e);
    }
    image = next;
    Matrix m{};
    Residue col = one();
    for (int c = 0; c < d_; ++c) {
      for (int r = 0; r < d_; ++r) m[r][c] = col[r];
      col = mul(col, image, e);
    }
    frob_[k] = m;
  }
  // phi^d(g) must return to g.
  Residue back{};
  Residue power = one();
  for (int c = 0; c < d_; ++c) {
    back = add(back, scale(power, image[c], e), e);
    power = mul(power, root, e);
  }
  if (!congruent(back, generator(), e)) fail(ErrorCode::HenselFailure, "phi^d is not the identity");
}

u64 RingContext::modulus(int e) const {
  if (e < 0 || e > cap_) fail(ErrorCode::CapacityExceeded, "p^" + std::to_string(e) + " exceeds 63 bits");
  return pow_p_[e];
}

void RingContext::require_capacity(int e) const {
  if (e > cap_) {
    fail(ErrorCode::CapacityExceeded,
         "working modulus p^" + std::to_string(e) + " exceeds 63 bits (capacity " + std::to_string(cap_) + ")");
  }
}

bool RingContext::same_ring(const RingContext& other) const noexcept {
  return this == &other || (p_ == other.p_ && d_ == other.d_ && M_ == other.M_ && f_ == other.f_);
}

// ---------------------------------------------------------------------------
// Residue kernels

Residue RingContext::reduce(const Residue& x, int e) const noexcept {
  Residue r{};
  const u64 q = pow_p_[e];
  for (int i = 0; i < d_; ++i) r[i] = x[i] % q;
  return r;
}

Residue RingContext::from_int(i64 v, int e) const noexcept {
  Residue r{};
  r[0] = signed_mod(v, pow_p_[e]);
  return r;
}

Residue RingContext::one() const noexcept {
  Residue r{};
  r[0] = 1;
  return r;
}

Residue RingContext::generator() const noexcept {
  Residue r{};
  if (d_ == 1) {
    r[0] = signed_mod(-f_[0], pow_p_[cap_]);
  } else {
    r[1] = 1;
  }
  return r;
}

Residue RingContext::add(const Residue& x, const Residue& y, int e) const noexcept {
  Residue r{};
  const u64 q = pow_p_[e];
  for (int i = 0; i < d_; ++i) r[i] = addmod(x[i], y[i], q);
  return r;
}

Residue RingContext::sub(const Residue& x, const Residue& y, int e) const noexcept {
  Residue r{};
  const u64 q = pow_p_[e];
  for (int i = 0; i < d_; ++i) r[i] = submod(x[i], y[i], q);
  return r;
}

Residue RingContext::neg(const Residue& x, int e) const noexcept {
  Residue r{};
  const u64 q = pow_p_[e];
  for (int i = 0; i < d_; ++i) r[i] = x[i] == 0 ? 0 : q - x[i];
  return r;
}

Residue RingContext::mul(const Residue& x, const Residue& y, int e) const noexcept {
  const u64 q = pow_p_[e];
  Residue r{};
  if (d_ == 1) {
    r[0] = mulmod(x[0], y[0], q);
    return r;
  }
  std::array<u64, 2 * kMaxDegree> prod{};
  for (int i = 0; i < d_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < d_; ++j) prod[i + j] = addmod(prod[i + j], mulmod(x[i], y[j], q), q);
  }
  // X^d = -(f_0 + ... + f_{d-1} X^{d-1})
  const Residue& fl = f_low_[e];
  for (int k = 2 * d_ - 2; k >= d_; --k) {
    u64 c = prod[k];
    if (c == 0) continue;
    for (int j = 0; j < d_; ++j) prod[k - d_ + j] = submod(prod[k - d_ + j], mulmod(c, fl[j], q), q);
  }
  for (int i = 0; i < d_; ++i) r[i] = prod[i];
  return r;
}

Residue RingContext::scale(const Residue& x, u64 k, int e) const noexcept {
  const u64 q = pow_p_[e];
  Residue r{};
  k %= q;
  for (int i = 0; i < d_; ++i) r[i] = mulmod(x[i], k, q);
  return r;
}

Residue RingContext::pow(const Residue& x, u64 exponent, int e) const noexcept {
  Residue result = reduce(one(), e);
  Residue base = x;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base, e);
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base, e);
  }
  return result;
}

Residue RingContext::pow_p_power(const Residue& x, int k, int e) const noexcept {
  Residue r = x;
  for (int i = 0; i < k; ++i) r = pow(r, p_, e);
  return r;
}

Residue RingContext::shift_up(const Residue& x, int i, int e) const noexcept {
  if (i >= e) return Residue{};
  return scale(x, pow_p_[i], e);
}

Residue RingContext::shift_down(const Residue& x, int i, int e) const noexcept {
  Residue r{};
  const u64 div = pow_p_[i];
  const u64 q = pow_p_[e - i];
  for (int j = 0; j < d_; ++j) r[j] = (x[j] / div) % q;
  return r;
}

Residue RingContext::frobenius(const Residue& x, int k, int e) const noexcept {
  if (d_ == 1) return x;
  int kk = ((k % d_) + d_) % d_;
  if (kk == 0) return x;
  const auto& m = frob_[kk];
  const u64 q = pow_p_[e];
  Residue r{};
  for (int row = 0; row < d_; ++row) {
    u64 acc = 0;
    for (int c = 0; c < d_; ++c) acc = addmod(acc, mulmod(m[row][c], x[c], q), q);
    r[row] = acc;
  }
  return r;
}

Residue RingContext::invert(const Residue& x, int e) const {
  fp::Poly xbar(d_), fbar(d_ + 1);
  for (int i = 0; i < d_; ++i) xbar[i] = x[i] % p_;
  for (int j = 0; j <= d_; ++j) fbar[j] = signed_mod(f_[j], p_);
  auto inv = fp::inverse_mod(xbar, fbar, p_);
  if (!inv) fail(ErrorCode::NotAUnit, "element is not a unit");
  Residue y{};
  for (std::size_t i = 0; i < inv->size(); ++i) y[i] = (*inv)[i];
  // Newton: y <- y (2 - x y), doubling the correct digits each step.
  const Residue two = from_int(2, e);
  for (int correct = 1; correct < e; correct *= 2) y = mul(y, sub(two, mul(x, y, e), e), e);
  return y;
}

int RingContext::valuation(const Residue& x, int e) const noexcept {
  int v = e;
  for (int i = 0; i < d_; ++i) {
    u64 c = x[i] % pow_p_[e];
    if (c == 0) continue;
    int vi = 0;
    while (c % p_ == 0) {
      c /= p_;
      ++vi;
    }
    v = std::min(v, vi);
  }
  return v;
}

bool RingContext::is_zero(const Residue& x, int e) const noexcept {
  const u64 q = pow_p_[e];
  for (int i = 0; i < d_; ++i) {
    if (x[i] % q != 0) return false;
  }
  return true;
}

bool RingContext::congruent(const Residue& x, const Residue& y, int e) const noexcept {
  const u64 q = pow_p_[e];
  for (int i = 0; i < d_; ++i) {
    if (x[i] % q != y[i] % q) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// PadicElement

PadicElement::PadicElement(const RingContext& ctx, const Residue& r, int prec)
    : ctx_(&ctx), prec_(std::clamp(prec, 0, ctx.precision())) {
  r_ = ctx.reduce(r, prec_);
}

PadicElement PadicElement::zero(const RingContext& ctx) { return {ctx, Residue{}, ctx.precision()}; }

PadicElement PadicElement::one(const RingContext& ctx) { return {ctx, ctx.one(), ctx.precision()}; }

PadicElement PadicElement::from_int(const RingContext& ctx, i64 v) {
  return from_int(ctx, v, ctx.precision());
}

PadicElement PadicElement::from_int(const RingContext& ctx, i64 v, int prec) {
  return {ctx, ctx.from_int(v, ctx.precision()), prec};
}

PadicElement PadicElement::from_coeffs(const RingContext& ctx, std::span<const i64> coeffs, int prec) {
  if (static_cast<int>(coeffs.size()) > ctx.degree()) {
    fail(ErrorCode::BadInput, "too many coefficients for degree " + std::to_string(ctx.degree()));
  }
  Residue r{};
  const u64 q = ctx.modulus(ctx.precision());
  for (std::size_t i = 0; i < coeffs.size(); ++i) r[i] = signed_mod(coeffs[i], q);
  return {ctx, r, prec};
}

PadicElement PadicElement::generator(const RingContext& ctx) {
  return {ctx, ctx.reduce(ctx.generator(), ctx.precision()), ctx.precision()};
}

std::span<const u64> PadicElement::coeffs() const noexcept {
  return {r_.data(), static_cast<std::size_t>(ctx_ ? ctx_->degree() : 0)};
}

PadicElement PadicElement::truncated(int r) const { return {*ctx_, r_, std::min(prec_, r)}; }

bool PadicElement::is_zero() const noexcept { return ctx_->is_zero(r_, prec_); }

void require_same_context(const RingContext& a, const RingContext& b) {
  if (!a.same_ring(b)) fail(ErrorCode::ContextMismatch, "operands live in different rings");
}

void require_odd(const RingContext& ctx) {
  if (!ctx.is_odd()) fail(ErrorCode::OddPrimeRequired, "operation requires an odd prime");
}

namespace {

const RingContext& checked_pair(const PadicElement& x, const PadicElement& y) {
  require_same_context(x.context(), y.context());
  require_odd(x.context());
  return x.context();
}

const RingContext& checked(const PadicElement& x) {
  require_odd(x.context());
  return x.context();
}

}  // namespace

PadicElement operator+(const PadicElement& x, const PadicElement& y) {
  const auto& ctx = checked_pair(x, y);
  const int M = ctx.precision();
  return {ctx, ctx.add(x.residue(), y.residue(), M), std::min(x.prec(), y.prec())};
}

PadicElement operator-(const PadicElement& x, const PadicElement& y) {
  const auto& ctx = checked_pair(x, y);
  const int M = ctx.precision();
  return {ctx, ctx.sub(x.residue(), y.residue(), M), std::min(x.prec(), y.prec())};
}

PadicElement operator*(const PadicElement& x, const PadicElement& y) {
  const auto& ctx = checked_pair(x, y);
  const int M = ctx.precision();
  return {ctx, ctx.mul(x.residue(), y.residue(), M), std::min(x.prec(), y.prec())};
}

PadicElement operator-(const PadicElement& x) {
  const auto& ctx = checked(x);
  return {ctx, ctx.neg(x.residue(), ctx.precision()), x.prec()};
}

bool agree_at(const PadicElement& x, const PadicElement& y, int r) {
  require_same_context(x.context(), y.context());
  if (r > std::min(x.prec(), y.prec())) return false;
  return x.context().congruent(x.residue(), y.residue(), std::max(r, 0));
}

bool agree(const PadicElement& x, const PadicElement& y) {
  return agree_at(x, y, std::min(x.prec(), y.prec()));
}

Valuation valuation(const PadicElement& x) {
  const auto& ctx = checked(x);
  int v = ctx.valuation(x.residue(), x.prec());
  return {v, v == x.prec()};
}

PadicElement invert_unit(const PadicElement& x) {
  const auto& ctx = checked(x);
  if (x.prec() < 1 || ctx.valuation(x.residue(), 1) != 0) fail(ErrorCode::NotAUnit, "valuation >= 1");
  const int M = ctx.precision();
  return {ctx, ctx.invert(x.residue(), M), x.prec()};
}

PadicElement exact_div_p(const PadicElement& x, int i) {
  const auto& ctx = checked(x);
  if (i < 0) fail(ErrorCode::BadInput, "negative exponent");
  if (i == 0) return x;
  Valuation v = valuation(x);
  if (!v.at_least && v.value < i) {
    fail(ErrorCode::NotDivisible, "valuation " + std::to_string(v.value) + " < " + std::to_string(i));
  }
  if (x.prec() - i < 1) {
    fail(ErrorCode::PrecisionUnderflow,
         "dividing by p^" + std::to_string(i) + " at precision " + std::to_string(x.prec()));
  }
  return {ctx, ctx.shift_down(x.residue(), i, x.prec()), x.prec() - i};
}

PadicElement frobenius_pow(const PadicElement& x, int k) {
  const auto& ctx = checked(x);
  return {ctx, ctx.frobenius(x.residue(), k, ctx.precision()), x.prec()};
}

PadicElement frobenius(const PadicElement& x) { return frobenius_pow(x, 1); }

PadicElement frobenius_inv(const PadicElement& x) { return frobenius_pow(x, -1); }

PadicElement pow(const PadicElement& x, u64 exponent) {
  const auto& ctx = checked(x);
  const int prec = exponent == 0 ? ctx.precision() : x.prec();
  return {ctx, ctx.pow(x.residue(), exponent, ctx.precision()), prec};
}

PadicElement pow_p_power(const PadicElement& x, int k) {
  const auto& ctx = checked(x);
  const int M = ctx.precision();
  const int prec = x.prec() >= 1 ? std::min(M, x.prec() + k) : 0;
  return {ctx, ctx.pow_p_power(x.residue(), k, M), prec};
}

PadicElement mul_p_power(const PadicElement& x, int i) {
  const auto& ctx = checked(x);
  const int M = ctx.precision();
  return {ctx, ctx.shift_up(x.residue(), i, M), std::min(M, x.prec() + i)};
}

PadicElement scale(const PadicElement& x, i64 k) {
  const auto& ctx = checked(x);
  const int M = ctx.precision();
  return {ctx, ctx.scale(x.residue(), signed_mod(k, ctx.modulus(M)), M), x.prec()};
}

PadicElement mul_tracked(const PadicElement& x, const PadicElement& y) {
  const auto& ctx = checked_pair(x, y);
  const int M = ctx.precision();
  const int vx = ctx.valuation(x.residue(), x.prec());
  const int vy = ctx.valuation(y.residue(), y.prec());
  const int prec = std::min({M, x.prec() + vy, y.prec() + vx});
  return {ctx, ctx.mul(x.residue(), y.residue(), M), prec};
}

}  // namespace wittlab
