#pragma once

// The p-adically separated Witt complex E over A = W(F_{p^d}):
//
//   E_n^0 = W_n(A),   E_n^1 = prod_{i=1}^{n-1} A/p^i A . dV^i(1),   E_n^{>=2} = 0.
//
// The i = 0 factor A/p^0 A is the zero ring and is not stored, so an
// E1Element at level n holds components i = 1..n-1, component i truncated to
// precision exactly i. W_n(A) acts on component i through wn_to_residue(., i),
// which is not the action through restriction to W_1(A) = A.

#include <vector>

#include "witt/witt_vector.hpp"

namespace wittlab {

class E1Element {
 public:
  // comps[i-1] is the coefficient of dV^i(1); each is truncated to precision i.
  // Throws PrecisionUnderflow if a component is known to less than p^i.
  E1Element(const RingContext& ctx, int n, std::vector<PadicElement> comps);

  static E1Element zero(const RingContext& ctx, int n);
  // coeff . dV^i(1)
  static E1Element basis(const RingContext& ctx, int n, int i, const PadicElement& coeff);

  const RingContext& context() const noexcept { return *ctx_; }
  int level() const noexcept { return n_; }
  // 1 <= i <= level()-1
  const PadicElement& component(int i) const { return comps_.at(i - 1); }
  const std::vector<PadicElement>& components() const noexcept { return comps_; }
  bool is_zero() const noexcept;

 private:
  const RingContext* ctx_;
  int n_;
  std::vector<PadicElement> comps_;
};

struct EElement {
  WittVector deg0;
  E1Element deg1;
};

bool agree(const E1Element& a, const E1Element& b);
bool agree(const EElement& a, const EElement& b);

E1Element operator+(const E1Element& a, const E1Element& b);
E1Element operator-(const E1Element& a, const E1Element& b);
E1Element operator-(const E1Element& a);
E1Element scale(const E1Element& a, i64 k);
EElement operator+(const EElement& a, const EElement& b);

EElement lambda(const WittVector& x);

// d(sum s_phi(a_i) V^i(1)) = sum_{i>=1} (a_i mod p^i) dV^i(1)
E1Element diff(const WittVector& x);
// d on E_n: degree 0 goes to degree 1, degree 1 to E^2 = 0.
EElement diff(const EElement& x);

E1Element restrict(const E1Element& xi);      // E_{n+1}^1 -> E_n^1
E1Element frobenius(const E1Element& xi);     // E_{n+1}^1 -> E_n^1
E1Element verschiebung(const E1Element& xi);  // E_n^1 -> E_{n+1}^1
EElement restrict(const EElement& x);
EElement frobenius(const EElement& x);
EElement verschiebung(const EElement& x);

E1Element module_action(const WittVector& y, const E1Element& xi);
EElement graded_mul(const EElement& a, const EElement& b);

// F d([a]_{n+1}) == ([a]_n)^{p-1} d([a]_n) in E_n^1, with the power taken by
// repeated Witt multiplication.
bool teich_relation_check(const PadicElement& a, int n);

}  // namespace wittlab
