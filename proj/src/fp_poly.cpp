#include "fp_poly.hpp"

#include <utility>

namespace wittlab::fp {

u64 powmod(u64 base, u64 exponent, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

u64 inverse(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != 0) return i;
  }
  return -1;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0;
    u64 y = i < b.size() ? b[i] : 0;
    r[i] = x >= y ? x - y : x + (p - y);
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  trim(r);
  return r;
}

Poly rem(Poly a, const Poly& m, u64 p) {
  trim(a);
  int dm = degree(m);
  u64 lead_inv = inverse(m[dm], p);
  while (degree(a) >= dm) {
    int da = degree(a);
    u64 c = mulmod(a[da], lead_inv, p);
    for (int j = 0; j <= dm; ++j) {
      u64 t = mulmod(c, m[j], p);
      u64& slot = a[da - dm + j];
      slot = slot >= t ? slot - t : slot + (p - t);
    }
    trim(a);
  }
  return a;
}

Poly powmod(const Poly& base, u64 exponent, const Poly& m, u64 p) {
  Poly result{1};
  Poly b = rem(base, m, p);
  while (exponent > 0) {
    if (exponent & 1) result = rem(mul(result, b, p), m, p);
    b = rem(mul(b, b, p), m, p);
    exponent >>= 1;
  }
  return result;
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::optional<Poly> inverse_mod(const Poly& a, const Poly& m, u64 p) {
  // Extended Euclid tracking only the coefficient of a.
  Poly r0 = m, r1 = rem(a, m, p);
  Poly s0{}, s1{1};
  trim(r0);
  while (!r1.empty()) {
    int d0 = degree(r0), d1 = degree(r1);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      continue;
    }
    // One long-division step: r0 -= c X^k r1.
    u64 c = mulmod(r0[d0], inverse(r1[d1], p), p);
    Poly mono(d0 - d1 + 1, 0);
    mono.back() = c;
    r0 = sub(r0, mul(mono, r1, p), p);
    s0 = sub(s0, mul(mono, s1, p), p);
    if (degree(r0) < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
    }
  }
  if (degree(r0) != 0) return std::nullopt;
  u64 scale = inverse(r0[0], p);
  Poly inv = rem(s0, m, p);
  for (auto& c : inv) c = mulmod(c, scale, p);
  trim(inv);
  return inv;
}

namespace {

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// X^{p^k} mod f by k successive p-th powers.
Poly frobenius_power_of_x(const Poly& f, u64 p, u64 k) {
  Poly x = rem(Poly{0, 1}, f, p);
  for (u64 i = 0; i < k; ++i) x = powmod(x, p, f, p);
  return x;
}

}  // namespace

bool is_irreducible(const Poly& f, u64 p) {
  int d = degree(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  const Poly x{0, 1};
  if (!sub(frobenius_power_of_x(f, p, d), x, p).empty()) return false;
  for (u64 r : prime_divisors(static_cast<u64>(d))) {
    Poly h = sub(frobenius_power_of_x(f, p, d / r), x, p);
    if (degree(gcd(f, h, p)) != 0) return false;
  }
  return true;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  u64 dpart = n - 1;
  int s = 0;
  while ((dpart & 1) == 0) {
    dpart >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, dpart, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace wittlab::fp
