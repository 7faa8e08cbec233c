#include "witt/witt_vector.hpp"

#include <algorithm>
#include <string>

namespace wittlab {

namespace {

std::vector<Residue> residues_of(const WittVector& x) {
  std::vector<Residue> out;
  out.reserve(x.level());
  for (const auto& c : x.coords()) out.push_back(c.residue());
  return out;
}

// w_i = sum_{j<=i} p^j x_j^{p^{i-j}} modulo p^E.
std::vector<Residue> ghost_residues(const RingContext& ctx, std::vector<Residue> powers, int E) {
  const int n = static_cast<int>(powers.size());
  std::vector<Residue> w(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) powers[j] = ctx.pow(powers[j], ctx.prime(), E);
    Residue acc{};
    for (int j = 0; j <= i; ++j) acc = ctx.add(acc, ctx.shift_up(powers[j], j, E), E);
    w[i] = acc;
  }
  return w;
}

// Inverse of ghost_residues. With w known modulo p^E the returned x_i is
// exact modulo p^{E-i}.
std::vector<Residue> ghost_inverse_residues(const RingContext& ctx, const std::vector<Residue>& w, int E) {
  const int n = static_cast<int>(w.size());
  std::vector<Residue> x(n), powers(n);
  for (int i = 0; i < n; ++i) {
    Residue rem = w[i];
    for (int j = 0; j < i; ++j) {
      powers[j] = ctx.pow(powers[j], ctx.prime(), E);
      rem = ctx.sub(rem, ctx.shift_up(powers[j], j, E), E);
    }
    if (ctx.valuation(rem, E) < i) {
      fail(ErrorCode::InternalError, "padded ghost vector left the ghost image at index " + std::to_string(i));
    }
    x[i] = ctx.shift_down(rem, i, E);
    powers[i] = x[i];
  }
  return x;
}

WittVector assemble(const RingContext& ctx, const std::vector<Residue>& xs, const std::vector<int>& precs) {
  std::vector<PadicElement> coords;
  coords.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) coords.emplace_back(ctx, xs[i], precs[i]);
  return {ctx, std::move(coords)};
}

void prefix_min(std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) v[i] = std::min(v[i], v[i - 1]);
}

const RingContext& checked_pair(const WittVector& x, const WittVector& y) {
  require_same_context(x.context(), y.context());
  require_odd(x.context());
  if (x.level() != y.level()) {
    fail(ErrorCode::BadLevel, "levels " + std::to_string(x.level()) + " and " + std::to_string(y.level()));
  }
  return x.context();
}

int padded_exponent(const RingContext& ctx, int level) {
  const int E = ctx.precision() + level - 1;
  ctx.require_capacity(E);
  return E;
}

template <class Op>
WittVector ghost_binary(const WittVector& x, const WittVector& y, Op op) {
  const auto& ctx = checked_pair(x, y);
  const int n = x.level();
  const int E = padded_exponent(ctx, n);
  auto gx = ghost_residues(ctx, residues_of(x), E);
  auto gy = ghost_residues(ctx, residues_of(y), E);
  for (int i = 0; i < n; ++i) gx[i] = op(ctx, gx[i], gy[i], E);
  std::vector<int> precs(n);
  for (int i = 0; i < n; ++i) precs[i] = std::min(x[i].prec(), y[i].prec());
  prefix_min(precs);
  return assemble(ctx, ghost_inverse_residues(ctx, gx, E), precs);
}

}  // namespace

// ---------------------------------------------------------------------------

WittVector::WittVector(const RingContext& ctx, std::vector<PadicElement> coords)
    : ctx_(&ctx), coords_(std::move(coords)) {
  if (coords_.empty()) fail(ErrorCode::BadLevel, "Witt vectors need level >= 1");
  for (const auto& c : coords_) require_same_context(ctx, c.context());
}

WittVector WittVector::zero(const RingContext& ctx, int n) {
  if (n < 1) fail(ErrorCode::BadLevel, "level must be >= 1");
  return {ctx, std::vector<PadicElement>(n, PadicElement::zero(ctx))};
}

WittVector WittVector::one(const RingContext& ctx, int n) {
  WittVector v = zero(ctx, n);
  v.coords_[0] = PadicElement::one(ctx);
  return v;
}

WittVector WittVector::from_int(const RingContext& ctx, int n, i64 k) { return scale(one(ctx, n), k); }

int WittVector::min_prec() const noexcept {
  int m = coords_[0].prec();
  for (const auto& c : coords_) m = std::min(m, c.prec());
  return m;
}

GhostVector ghost(const WittVector& x) {
  const auto& ctx = x.context();
  require_odd(ctx);
  const int M = ctx.precision();
  const auto w = ghost_residues(ctx, residues_of(x), M);
  GhostVector g{&ctx, {}};
  for (int i = 0; i < x.level(); ++i) {
    int prec = M;
    for (int j = 0; j <= i; ++j) {
      const int pj = x[j].prec();
      prec = std::min(prec, pj >= 1 ? pj + i : j);
    }
    g.ghosts.emplace_back(ctx, w[i], prec);
  }
  return g;
}

WittVector ghost_inverse(const GhostVector& g) {
  if (g.ghosts.empty()) fail(ErrorCode::BadLevel, "empty ghost vector");
  std::vector<PadicElement> xs;
  xs.reserve(g.ghosts.size());
  for (int i = 0; i < g.level(); ++i) {
    PadicElement rem = g.ghosts[i];
    for (int j = 0; j < i; ++j) rem = rem - mul_p_power(pow_p_power(xs[j], i - j), j);
    try {
      xs.push_back(exact_div_p(rem, i));
    } catch (const WittError& e) {
      if (e.code() != ErrorCode::NotDivisible) throw;
      fail(ErrorCode::NotInGhostImage, "remainder at index " + std::to_string(i) + " is not divisible by p^" +
                                           std::to_string(i));
    }
  }
  return {*g.ctx, std::move(xs)};
}

bool agree(const GhostVector& a, const GhostVector& b) {
  if (a.level() != b.level()) return false;
  for (int i = 0; i < a.level(); ++i) {
    if (!agree(a.ghosts[i], b.ghosts[i])) return false;
  }
  return true;
}

WittVector operator+(const WittVector& x, const WittVector& y) {
  return ghost_binary(x, y, [](const RingContext& c, const Residue& a, const Residue& b, int E) {
    return c.add(a, b, E);
  });
}

WittVector operator-(const WittVector& x, const WittVector& y) {
  return ghost_binary(x, y, [](const RingContext& c, const Residue& a, const Residue& b, int E) {
    return c.sub(a, b, E);
  });
}

WittVector operator*(const WittVector& x, const WittVector& y) {
  return ghost_binary(x, y, [](const RingContext& c, const Residue& a, const Residue& b, int E) {
    return c.mul(a, b, E);
  });
}

WittVector operator-(const WittVector& x) { return WittVector::zero(x.context(), x.level()) - x; }

WittVector scale(const WittVector& x, i64 k) {
  const auto& ctx = x.context();
  require_odd(ctx);
  const int n = x.level();
  const int E = padded_exponent(ctx, n);
  const u64 kk = ctx.from_int(k, E)[0];
  auto g = ghost_residues(ctx, residues_of(x), E);
  for (auto& w : g) w = ctx.scale(w, kk, E);
  std::vector<int> precs(n);
  for (int i = 0; i < n; ++i) precs[i] = x[i].prec();
  prefix_min(precs);
  return assemble(ctx, ghost_inverse_residues(ctx, g, E), precs);
}

WittVector pow(const WittVector& x, u64 exponent) {
  WittVector result = WittVector::one(x.context(), x.level());
  WittVector base = x;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool agree(const WittVector& x, const WittVector& y) {
  require_same_context(x.context(), y.context());
  if (x.level() != y.level()) return false;
  for (int i = 0; i < x.level(); ++i) {
    if (!agree(x[i], y[i])) return false;
  }
  return true;
}

WittVector verschiebung(const WittVector& x) {
  require_odd(x.context());
  std::vector<PadicElement> coords;
  coords.reserve(x.level() + 1);
  coords.push_back(PadicElement::zero(x.context()));
  coords.insert(coords.end(), x.coords().begin(), x.coords().end());
  return {x.context(), std::move(coords)};
}

WittVector verschiebung_pow(const WittVector& x, int k) {
  WittVector v = x;
  for (int i = 0; i < k; ++i) v = verschiebung(v);
  return v;
}

WittVector frobenius(const WittVector& x) {
  const auto& ctx = x.context();
  require_odd(ctx);
  const int L = x.level();
  if (L < 2) fail(ErrorCode::BadLevel, "Frobenius maps W_{n+1} to W_n and needs level >= 2");
  const int E = padded_exponent(ctx, L);
  auto g = ghost_residues(ctx, residues_of(x), E);
  g.erase(g.begin());
  std::vector<int> precs(L - 1);
  for (int i = 0; i < L - 1; ++i) precs[i] = std::min(x[i].prec(), x[i + 1].prec());
  prefix_min(precs);
  return assemble(ctx, ghost_inverse_residues(ctx, g, E), precs);
}

WittVector restrict(const WittVector& x) {
  if (x.level() < 2) fail(ErrorCode::BadLevel, "restriction needs level >= 2");
  return truncate_level(x, x.level() - 1);
}

WittVector truncate_level(const WittVector& x, int n) {
  if (n < 1 || n > x.level()) fail(ErrorCode::BadLevel, "cannot truncate to level " + std::to_string(n));
  return {x.context(), {x.coords().begin(), x.coords().begin() + n}};
}

WittVector unshift(const WittVector& x) {
  if (x.level() < 2) fail(ErrorCode::BadLevel, "unshift needs level >= 2");
  if (!x[0].is_zero()) {
    fail(ErrorCode::InternalNonzeroLead, "leading coordinate does not vanish at precision " +
                                             std::to_string(x[0].prec()));
  }
  return {x.context(), {x.coords().begin() + 1, x.coords().end()}};
}

WittVector teichmuller(const PadicElement& a, int n) {
  require_odd(a.context());
  WittVector v = WittVector::zero(a.context(), n);
  std::vector<PadicElement> coords = v.coords();
  coords[0] = a;
  return {a.context(), std::move(coords)};
}

WittVector teichmuller_mul(const PadicElement& t, const WittVector& x) {
  require_same_context(t.context(), x.context());
  std::vector<PadicElement> coords;
  coords.reserve(x.level());
  for (int j = 0; j < x.level(); ++j) coords.push_back(mul_tracked(pow_p_power(t, j), x[j]));
  return {x.context(), std::move(coords)};
}

WittVector s_phi(const PadicElement& a, int n) {
  const auto& ctx = a.context();
  require_odd(ctx);
  if (n < 1) fail(ErrorCode::BadLevel, "level must be >= 1");
  if (a.prec() - (n - 1) < 1) {
    fail(ErrorCode::PrecisionUnderflow, "s_phi at level " + std::to_string(n) + " needs precision >= " +
                                            std::to_string(n) + ", got " + std::to_string(a.prec()));
  }
  const int E = padded_exponent(ctx, n);
  std::vector<Residue> g(n);
  for (int i = 0; i < n; ++i) g[i] = ctx.frobenius(a.residue(), i, E);
  std::vector<int> precs(n);
  for (int i = 0; i < n; ++i) precs[i] = a.prec() - i;
  return assemble(ctx, ghost_inverse_residues(ctx, g, E), precs);
}

// ---------------------------------------------------------------------------
// Decompositions

VDecomposition v_decompose(const WittVector& x) {
  // x = sum_k V^k(s_phi(phi^k(a_k))): peel one s_phi per stage off the front.
  const int n = x.level();
  VDecomposition dec;
  dec.coeffs.reserve(n);
  WittVector z = x;
  for (int k = 0; k < n; ++k) {
    const PadicElement lead = z[0];
    dec.coeffs.push_back(frobenius_pow(lead, -k));
    if (k + 1 == n) break;
    z = unshift(z - s_phi(lead, z.level()));
  }
  return dec;
}

WittVector recompose(const RingContext& ctx, const VDecomposition& dec, int n) {
  WittVector acc = WittVector::zero(ctx, n);
  const int terms = std::min<int>(n, static_cast<int>(dec.coeffs.size()));
  // s_phi(a) V^i(1) = V^i(s_phi(phi^i(a))), which only needs a to level n - i.
  for (int i = 0; i < terms; ++i) {
    acc = acc + verschiebung_pow(s_phi(frobenius_pow(dec.coeffs[i], i), n - i), i);
  }
  return acc;
}

VDecomposition teich_coefficients(const PadicElement& a, int n) {
  if (n < 1) fail(ErrorCode::BadLevel, "level must be >= 1");
  VDecomposition dec;
  dec.coeffs.push_back(a);
  const PadicElement phi_a = frobenius(a);
  for (int i = 1; i < n; ++i) {
    const PadicElement num = pow_p_power(a, i) - pow_p_power(phi_a, i - 1);
    dec.coeffs.push_back(frobenius_pow(exact_div_p(num, i), -i));
  }
  return dec;
}

bool agree(const VDecomposition& a, const VDecomposition& b) {
  if (a.coeffs.size() != b.coeffs.size()) return false;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (!agree(a.coeffs[i], b.coeffs[i])) return false;
  }
  return true;
}

std::vector<PadicElement> wn_to_residues(const WittVector& y, int up_to) {
  const auto dec = v_decompose(y);
  const int n = y.level();
  std::vector<PadicElement> out;
  out.reserve(up_to);
  for (int i = 1; i <= up_to; ++i) {
    PadicElement s = PadicElement::zero(y.context());
    for (int j = 0; j < std::min(n, i); ++j) s = s + mul_p_power(dec.coeffs[j], j);
    if (s.prec() < i) {
      fail(ErrorCode::PrecisionUnderflow, "residue modulo p^" + std::to_string(i) + " known only to precision " +
                                              std::to_string(s.prec()));
    }
    out.push_back(s.truncated(i));
  }
  return out;
}

PadicElement wn_to_residue(const WittVector& y, int i) {
  if (i < 1) fail(ErrorCode::BadInput, "residue exponent must be >= 1");
  return wn_to_residues(y, i).back();
}

K0Decomposition k0_decompose(const WittVector& z, int m) {
  const auto& ctx = z.context();
  require_odd(ctx);
  if (m < 1) fail(ErrorCode::BadInput, "quotient exponent m must be >= 1");
  for (int j = 0; j < z.level(); ++j) {
    const Valuation v = valuation(z[j]);
    if (!v.at_least && v.value < m) {
      fail(ErrorCode::NotInKernel, "coordinate " + std::to_string(j) + " has valuation " +
                                       std::to_string(v.value) + " < " + std::to_string(m));
    }
    if (v.at_least && v.value < m) {
      fail(ErrorCode::PrecisionUnderflow, "coordinate " + std::to_string(j) + " known only to precision " +
                                              std::to_string(v.value));
    }
  }
  const int M = ctx.precision();
  const PadicElement t(ctx, ctx.shift_up(ctx.one(), m, M), M);  // p^m

  const int n = z.level();
  K0Decomposition dec{m, {}};
  WittVector y = z;
  for (int k = 0; k < n; ++k) {
    PadicElement b;
    try {
      b = exact_div_p(y[0], m);
    } catch (const WittError& e) {
      if (e.code() != ErrorCode::NotDivisible) throw;
      fail(ErrorCode::InternalError, "kernel element lost divisibility at stage " + std::to_string(k));
    }
    dec.coeffs.push_back(frobenius_pow(b, -k));
    if (k + 1 == n) break;
    y = unshift(y - teichmuller_mul(t, s_phi(b, y.level())));
  }
  return dec;
}

WittVector recompose_k0(const RingContext& ctx, const K0Decomposition& dec, int n) {
  const int M = ctx.precision();
  const PadicElement t(ctx, ctx.shift_up(ctx.one(), dec.m, M), M);
  WittVector acc = WittVector::zero(ctx, n);
  const int terms = std::min<int>(n, static_cast<int>(dec.coeffs.size()));
  // s_phi(a) V^k([t]) = V^k([t] s_phi(phi^k(a))) by the projection formula.
  for (int k = 0; k < terms; ++k) {
    acc = acc + verschiebung_pow(teichmuller_mul(t, s_phi(frobenius_pow(dec.coeffs[k], k), n - k)), k);
  }
  return acc;
}

}  // namespace wittlab
