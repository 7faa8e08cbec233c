#pragma once

#include <vector>

#include "witt/complex.hpp"
#include "witt/rng.hpp"

namespace wittlab::testing {

inline ContextPtr context(u64 p, int d, int M) { return RingContext::make(p, d, RingContext::default_polynomial(p, d), M); }

inline PadicElement random_element(const RingContext& ctx, SplitMix64& rng, int prec) {
  Residue r{};
  const u64 q = ctx.modulus(ctx.precision());
  for (int j = 0; j < ctx.degree(); ++j) r[j] = rng.below(q);
  return {ctx, r, prec};
}

inline PadicElement random_element(const RingContext& ctx, SplitMix64& rng) {
  return random_element(ctx, rng, ctx.precision());
}

inline WittVector random_witt(const RingContext& ctx, SplitMix64& rng, int n) {
  std::vector<PadicElement> coords;
  for (int i = 0; i < n; ++i) coords.push_back(random_element(ctx, rng));
  return {ctx, std::move(coords)};
}

// Plain integer p-adic residue of a d = 1 element.
inline u64 value(const PadicElement& x) { return x.coeffs()[0]; }

}  // namespace wittlab::testing
