#pragma once

// Dense polynomials over F_p, constant term first. Used for context
// validation (irreducibility) and for the residue-field inverse that seeds
// Newton iteration.

#include <cstdint>
#include <optional>
#include <vector>

namespace wittlab::fp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exponent, u64 m);
u64 inverse(u64 a, u64 p);

void trim(Poly& a);
int degree(const Poly& a);  // -1 for the zero polynomial
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly rem(Poly a, const Poly& m, u64 p);
Poly powmod(const Poly& base, u64 exponent, const Poly& m, u64 p);
Poly gcd(Poly a, Poly b, u64 p);
// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
std::optional<Poly> inverse_mod(const Poly& a, const Poly& m, u64 p);

// Rabin's test for a monic f of degree >= 1.
bool is_irreducible(const Poly& f, u64 p);

bool is_prime(u64 n);

}  // namespace wittlab::fp
