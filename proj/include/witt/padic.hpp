#pragma once

// Arithmetic in A = W(F_{p^d}) = Z_p[X]/(f), truncated at absolute precision p^M.
//
// Two layers live here:
//   * RingContext: the validated ring together with residue kernels that work
//     modulo p^e for any e up to the context's capacity (the largest e with
//     p^e < 2^63). Witt-vector code uses these at padded precision.
//   * PadicElement: a residue modulo p^M plus a guaranteed-precision tag.

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "witt/error.hpp"

namespace wittlab {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline constexpr int kMaxDegree = 8;

// Coordinates in the power basis 1, g, ..., g^{d-1}; entries past d are zero.
using Residue = std::array<u64, kMaxDegree>;

class RingContext;
using ContextPtr = std::shared_ptr<const RingContext>;

class RingContext {
 public:
  // Validates p, d, f, M. p = 2 is accepted here; element operations refuse it.
  static ContextPtr make(u64 p, int d, std::vector<i64> f, int M);

  // Lexicographically first monic irreducible of degree d over F_p, lifted to
  // Z with coefficients in [0, p). Gives X for d = 1.
  static std::vector<i64> default_polynomial(u64 p, int d);

  u64 prime() const noexcept { return p_; }
  int degree() const noexcept { return d_; }
  int precision() const noexcept { return M_; }
  int capacity() const noexcept { return cap_; }
  const std::vector<i64>& polynomial() const noexcept { return f_; }
  bool is_odd() const noexcept { return p_ != 2; }

  // p^e for 0 <= e <= capacity().
  u64 modulus(int e) const;
  void require_capacity(int e) const;

  bool same_ring(const RingContext& other) const noexcept;

  // ---- residue kernels, all modulo p^e --------------------------------------
  Residue reduce(const Residue& x, int e) const noexcept;
  Residue from_int(i64 v, int e) const noexcept;
  Residue one() const noexcept;
  Residue generator() const noexcept;  // class of X; equals -f_0 when d = 1

  Residue add(const Residue& x, const Residue& y, int e) const noexcept;
  Residue sub(const Residue& x, const Residue& y, int e) const noexcept;
  Residue neg(const Residue& x, int e) const noexcept;
  Residue mul(const Residue& x, const Residue& y, int e) const noexcept;
  Residue scale(const Residue& x, u64 k, int e) const noexcept;
  Residue pow(const Residue& x, u64 exponent, int e) const noexcept;
  // x^{p^k} by k successive p-th powers.
  Residue pow_p_power(const Residue& x, int k, int e) const noexcept;
  // Multiply by p^i.
  Residue shift_up(const Residue& x, int i, int e) const noexcept;
  // Exact division by p^i; caller guarantees divisibility. Result modulo p^{e-i}.
  Residue shift_down(const Residue& x, int i, int e) const noexcept;
  // phi^k for any integer k (phi^d = id).
  Residue frobenius(const Residue& x, int k, int e) const noexcept;
  // Newton inversion of a unit. Throws NotAUnit.
  Residue invert(const Residue& x, int e) const;

  // Largest r <= e with x = 0 mod p^r.
  int valuation(const Residue& x, int e) const noexcept;
  bool is_zero(const Residue& x, int e) const noexcept;
  bool congruent(const Residue& x, const Residue& y, int e) const noexcept;

 private:
  RingContext() = default;
  void compute_frobenius();

  u64 p_ = 0;
  int d_ = 0;
  int M_ = 0;
  int cap_ = 0;
  std::vector<i64> f_;
  std::vector<u64> pow_p_;                // p^0 .. p^cap
  std::vector<Residue> f_low_;            // per exponent e: f_0..f_{d-1} mod p^e
  // frob_[k][row][col]: matrix of phi^k on the power basis, modulo p^cap.
  std::vector<std::array<std::array<u64, kMaxDegree>, kMaxDegree>> frob_;
};

// Lower bound on the valuation: `value` is exact unless `at_least` is set, in
// which case the element vanishes at its full guaranteed precision.
struct Valuation {
  int value = 0;
  bool at_least = false;
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

class PadicElement {
 public:
  PadicElement() = default;
  // Canonicalizes the residue modulo p^prec.
  PadicElement(const RingContext& ctx, const Residue& r, int prec);

  static PadicElement zero(const RingContext& ctx);
  static PadicElement one(const RingContext& ctx);
  static PadicElement from_int(const RingContext& ctx, i64 v);
  static PadicElement from_int(const RingContext& ctx, i64 v, int prec);
  static PadicElement from_coeffs(const RingContext& ctx, std::span<const i64> coeffs, int prec);
  static PadicElement generator(const RingContext& ctx);

  const RingContext& context() const noexcept { return *ctx_; }
  const RingContext* context_ptr() const noexcept { return ctx_; }
  const Residue& residue() const noexcept { return r_; }
  int prec() const noexcept { return prec_; }
  std::span<const u64> coeffs() const noexcept;

  // min(prec, r); never raises precision.
  PadicElement truncated(int r) const;
  bool is_zero() const noexcept;

 private:
  const RingContext* ctx_ = nullptr;
  Residue r_{};
  int prec_ = 0;
};

void require_same_context(const RingContext& a, const RingContext& b);
void require_odd(const RingContext& ctx);

PadicElement operator+(const PadicElement& x, const PadicElement& y);
PadicElement operator-(const PadicElement& x, const PadicElement& y);
PadicElement operator*(const PadicElement& x, const PadicElement& y);
PadicElement operator-(const PadicElement& x);

// Equal at r = min(prec): the difference has valuation >= r.
bool agree(const PadicElement& x, const PadicElement& y);
bool agree_at(const PadicElement& x, const PadicElement& y, int r);

Valuation valuation(const PadicElement& x);
PadicElement invert_unit(const PadicElement& x);
// y with p^i y = x; y.prec = x.prec - i.
PadicElement exact_div_p(const PadicElement& x, int i);
PadicElement frobenius(const PadicElement& x);
PadicElement frobenius_inv(const PadicElement& x);
PadicElement frobenius_pow(const PadicElement& x, int k);

PadicElement pow(const PadicElement& x, u64 exponent);
// x^{p^k}; a congruence mod p^r (r >= 1) becomes one mod p^{r+k}.
PadicElement pow_p_power(const PadicElement& x, int k);
// p^i * x, precision raised by i (capped at M).
PadicElement mul_p_power(const PadicElement& x, int i);
PadicElement scale(const PadicElement& x, i64 k);
// Product whose precision accounts for the factors' valuations.
PadicElement mul_tracked(const PadicElement& x, const PadicElement& y);

}  // namespace wittlab
