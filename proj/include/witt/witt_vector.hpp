#pragma once

// Truncated p-typical Witt vectors W_n(A) over A = W(F_{p^d}).
//
// Ring operations go through the ghost map at a padded modulus p^{M+n-1}.
// Since the universal sum and product polynomials have integer coefficients,
// this computes W_n(A/p^M) exactly: coordinate i of a result is determined by
// coordinates 0..i of the inputs, and is stamped with the weakest of their
// precisions.
//
// Precision is lost only where it is genuinely lost:
//   * s_phi(a) coordinate i is known to a.prec - i,
//   * ghost_inverse divides remainder i by p^i,
//   * decompositions inherit both effects.

#include <vector>

#include "witt/padic.hpp"

namespace wittlab {

class WittVector {
 public:
  WittVector(const RingContext& ctx, std::vector<PadicElement> coords);

  static WittVector zero(const RingContext& ctx, int n);
  static WittVector one(const RingContext& ctx, int n);
  static WittVector from_int(const RingContext& ctx, int n, i64 k);

  const RingContext& context() const noexcept { return *ctx_; }
  int level() const noexcept { return static_cast<int>(coords_.size()); }
  const std::vector<PadicElement>& coords() const noexcept { return coords_; }
  const PadicElement& operator[](int i) const { return coords_[i]; }
  // Smallest coordinate precision.
  int min_prec() const noexcept;

 private:
  const RingContext* ctx_;
  std::vector<PadicElement> coords_;
};

struct GhostVector {
  const RingContext* ctx = nullptr;
  std::vector<PadicElement> ghosts;
  int level() const noexcept { return static_cast<int>(ghosts.size()); }
};

// x = sum_i s_phi(a_i) V^i(1)
struct VDecomposition {
  std::vector<PadicElement> coeffs;
};

// z = sum_k s_phi(a_k) V^k([p^m])
struct K0Decomposition {
  int m = 1;
  std::vector<PadicElement> coeffs;
};

// ---- ghost transport at storage precision ---------------------------------
GhostVector ghost(const WittVector& x);
// Throws NotInGhostImage when a remainder is not divisible by p^i.
WittVector ghost_inverse(const GhostVector& g);
bool agree(const GhostVector& a, const GhostVector& b);

// ---- ring structure --------------------------------------------------------
WittVector operator+(const WittVector& x, const WittVector& y);
WittVector operator-(const WittVector& x, const WittVector& y);
WittVector operator*(const WittVector& x, const WittVector& y);
WittVector operator-(const WittVector& x);
WittVector scale(const WittVector& x, i64 k);
WittVector pow(const WittVector& x, u64 exponent);

// Coordinate-wise agreement at each coordinate's guaranteed precision.
bool agree(const WittVector& x, const WittVector& y);

// ---- structure maps ----------------------------------------------------------
WittVector verschiebung(const WittVector& x);              // W_n -> W_{n+1}
WittVector verschiebung_pow(const WittVector& x, int k);   // V^k
WittVector frobenius(const WittVector& x);                  // W_{n+1} -> W_n
WittVector restrict(const WittVector& x);                   // W_{n+1} -> W_n
WittVector truncate_level(const WittVector& x, int n);     // R^{level-n}
// Drop a leading coordinate that vanishes at its guaranteed precision.
// Throws InternalNonzeroLead otherwise.
WittVector unshift(const WittVector& x);

WittVector teichmuller(const PadicElement& a, int n);
// [t] * x computed coordinate-wise: ([t]x)_j = t^{p^j} x_j.
WittVector teichmuller_mul(const PadicElement& t, const WittVector& x);
WittVector s_phi(const PadicElement& a, int n);

// ---- decompositions ------------------------------------------------------------
// Coefficient a_i carries precision (input precision) - i.
VDecomposition v_decompose(const WittVector& x);
// sum_i s_phi(a_i) * V^i(1) at level n, evaluated with witt multiplication.
WittVector recompose(const RingContext& ctx, const VDecomposition& dec, int n);
VDecomposition teich_coefficients(const PadicElement& a, int n);
bool agree(const VDecomposition& a, const VDecomposition& b);

// The ring map W_n(A) -> A/p^i, sum s_phi(a_j)V^j(1) |-> sum a_j p^j.
PadicElement wn_to_residue(const WittVector& y, int i);
// wn_to_residue(y, i) for i = 1..up_to, sharing one decomposition.
std::vector<PadicElement> wn_to_residues(const WittVector& y, int up_to);

K0Decomposition k0_decompose(const WittVector& z, int m);
WittVector recompose_k0(const RingContext& ctx, const K0Decomposition& dec, int n);

}  // namespace wittlab
