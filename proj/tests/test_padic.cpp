#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace wittlab;
using namespace wittlab::testing;

namespace {

// Every monic polynomial of degree d over F_p that is a product of two monic
// factors of positive degree, as coefficient vectors.
std::set<std::vector<i64>> reducible_monics(i64 p, int d) {
  auto monics = [&](int deg) {
    std::vector<std::vector<i64>> out;
    std::vector<i64> c(deg + 1, 0);
    c[deg] = 1;
    for (;;) {
      out.push_back(c);
      int j = 0;
      while (j < deg && ++c[j] == p) c[j++] = 0;
      if (j == deg) break;
    }
    return out;
  };
  std::set<std::vector<i64>> out;
  for (int a = 1; a < d; ++a) {
    for (const auto& u : monics(a)) {
      for (const auto& v : monics(d - a)) {
        std::vector<i64> w(d + 1, 0);
        for (int i = 0; i <= a; ++i)
          for (int j = 0; j <= d - a; ++j) w[i + j] = (w[i + j] + u[i] * v[j]) % p;
        out.insert(w);
      }
    }
  }
  return out;
}

i64 egcd_inverse(i64 a, i64 m) {
  i64 r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const i64 q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return ((s0 % m) + m) % m;
}

// Schoolbook product in Z/q[X]/(f), reducing the top coefficients by hand.
std::vector<u64> naive_mul(const std::vector<u64>& x, const std::vector<u64>& y, const std::vector<i64>& f, u64 q) {
  const int d = static_cast<int>(f.size()) - 1;
  std::vector<u128> prod(2 * d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + static_cast<u128>(x[i]) * y[j]) % q;
  for (int k = 2 * d - 2; k >= d; --k) {
    const u128 c = prod[k];
    prod[k] = 0;
    for (int j = 0; j < d; ++j) {
      const u128 fj = static_cast<u128>(((f[j] % static_cast<i64>(q)) + static_cast<i64>(q)) % static_cast<i64>(q));
      prod[k - d + j] = (prod[k - d + j] + q - (c * fj) % q) % q;
    }
  }
  return {prod.begin(), prod.begin() + d};
}

}  // namespace

TEST_CASE("context construction validates its inputs") {
  CHECK_NOTHROW(RingContext::make(3, 1, {0, 1}, 10));
  CHECK_NOTHROW(RingContext::make(3, 2, {1, 0, 1}, 10));
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const WittError& e) {
      return e.code();
    }
    return ErrorCode::InternalError;
  };
  CHECK(code([] { RingContext::make(3, 2, {-1, 0, 1}, 10); }) == ErrorCode::ReduciblePolynomial);
  CHECK(code([] { RingContext::make(9, 1, {0, 1}, 10); }) == ErrorCode::CompositePrime);
  CHECK(code([] { RingContext::make(3, 2, {1, 0, 2}, 10); }) == ErrorCode::BadDegree);
  CHECK(code([] { RingContext::make(3, 2, {1, 1}, 10); }) == ErrorCode::BadDegree);
  CHECK(code([] { RingContext::make(3, 1, {0, 1}, 0); }) == ErrorCode::BadPrecision);
  CHECK(code([] { RingContext::make(3, 1, {0, 1}, 40); }) == ErrorCode::BadPrecision);
}

TEST_CASE("irreducibility agrees with brute-force factorization") {
  for (i64 p : {3, 5}) {
    for (int d : {2, 3}) {
      const auto reducible = reducible_monics(p, d);
      std::vector<i64> c(d + 1, 0);
      c[d] = 1;
      for (;;) {
        bool ok = true;
        try {
          RingContext::make(static_cast<u64>(p), d, c, 4);
        } catch (const WittError& e) {
          REQUIRE(e.code() == ErrorCode::ReduciblePolynomial);
          ok = false;
        }
        CHECK(ok == !reducible.contains(c));
        int j = 0;
        while (j < d && ++c[j] == p) c[j++] = 0;
        if (j == d) break;
      }
    }
  }
}

TEST_CASE("default polynomials") {
  CHECK(RingContext::default_polynomial(3, 1) == std::vector<i64>{0, 1});
  CHECK(RingContext::default_polynomial(3, 2) == std::vector<i64>{1, 0, 1});
  CHECK(RingContext::default_polynomial(5, 2) == std::vector<i64>{2, 0, 1});
}

TEST_CASE("basic arithmetic and the precision min rule") {
  auto ctx = context(3, 1, 10);
  CHECK(value(PadicElement::from_int(*ctx, 2) + PadicElement::from_int(*ctx, 7)) == 9);
  CHECK(value(PadicElement::from_int(*ctx, -1)) == 59048);

  auto z9 = RingContext::make(3, 2, {1, 0, 1}, 10);
  const auto g = PadicElement::generator(*z9);
  CHECK(agree(g * g, PadicElement::from_int(*z9, -1)));

  const auto a = PadicElement::from_int(*ctx, 5, 10);
  const auto b = PadicElement::from_int(*ctx, 7, 4);
  CHECK((a * b).prec() == 4);
  CHECK((a + b).prec() == 4);
  CHECK((a - b).prec() == 4);
}

TEST_CASE("multiplication matches a schoolbook oracle") {
  SplitMix64 rng(11);
  for (auto [p, d] : {std::pair<u64, int>{3, 2}, {5, 2}, {7, 3}, {3, 4}}) {
    auto ctx = context(p, d, 8);
    const u64 q = ctx->modulus(8);
    for (int t = 0; t < 200; ++t) {
      const auto x = random_element(*ctx, rng);
      const auto y = random_element(*ctx, rng);
      const std::vector<u64> xv(x.coeffs().begin(), x.coeffs().end());
      const std::vector<u64> yv(y.coeffs().begin(), y.coeffs().end());
      const auto expect = naive_mul(xv, yv, ctx->polynomial(), q);
      const auto got = x * y;
      CHECK(std::vector<u64>(got.coeffs().begin(), got.coeffs().end()) == expect);
    }
  }
}

TEST_CASE("ring axioms on representatives") {
  SplitMix64 rng(12);
  auto ctx = context(5, 2, 9);
  for (int t = 0; t < 200; ++t) {
    const auto x = random_element(*ctx, rng), y = random_element(*ctx, rng), z = random_element(*ctx, rng);
    CHECK(agree((x * y) * z, x * (y * z)));
    CHECK(agree(x * y, y * x));
    CHECK(agree(x * (y + z), x * y + x * z));
    CHECK(agree(x + (-x), PadicElement::zero(*ctx)));
  }
}

TEST_CASE("unit inversion") {
  auto ctx = context(3, 1, 4);
  CHECK(value(invert_unit(PadicElement::one(*ctx))) == 1);
  CHECK(value(invert_unit(PadicElement::from_int(*ctx, 2))) == static_cast<u64>(egcd_inverse(2, 81)));
  CHECK(egcd_inverse(2, 81) == 41);
  CHECK_THROWS_AS(invert_unit(PadicElement::from_int(*ctx, 3)), WittError);

  SplitMix64 rng(13);
  auto big = context(7, 1, 12);
  const i64 q = static_cast<i64>(big->modulus(12));
  for (int t = 0; t < 200; ++t) {
    auto x = random_element(*big, rng);
    if (value(x) % 7 == 0) continue;
    CHECK(value(invert_unit(x)) == static_cast<u64>(egcd_inverse(static_cast<i64>(value(x)), q)));
  }
  auto field = context(5, 3, 6);
  for (int t = 0; t < 100; ++t) {
    auto x = random_element(*field, rng);
    if (valuation(x).value > 0) continue;
    CHECK(agree(x * invert_unit(x), PadicElement::one(*field)));
  }
}

TEST_CASE("valuation") {
  auto ctx = context(3, 1, 10);
  CHECK(valuation(PadicElement::from_int(*ctx, 18)) == Valuation{2, false});
  CHECK(valuation(PadicElement::from_int(*ctx, 1)) == Valuation{0, false});
  CHECK(valuation(PadicElement::zero(*ctx)) == Valuation{10, true});
  CHECK(valuation(PadicElement::from_int(*ctx, 27, 2)) == Valuation{2, true});
}

TEST_CASE("exact division by powers of p") {
  auto c5 = context(3, 1, 5);
  const auto q = exact_div_p(PadicElement::from_int(*c5, 6), 1);
  CHECK(value(q) == 2);
  CHECK(q.prec() == 4);
  CHECK_THROWS_AS(exact_div_p(PadicElement::from_int(*c5, 2), 1), WittError);

  auto c10 = context(3, 1, 10);
  const auto r = exact_div_p(PadicElement::from_int(*c10, 504), 2);
  CHECK(value(r) == 504 / 9);
  CHECK(r.prec() == 8);

  try {
    exact_div_p(PadicElement::from_int(*c10, 9, 2), 2);
    FAIL("expected underflow");
  } catch (const WittError& e) {
    CHECK(e.code() == ErrorCode::PrecisionUnderflow);
  }

  SplitMix64 rng(14);
  auto ctx = context(7, 2, 8);
  for (int t = 0; t < 200; ++t) {
    const int i = 1 + static_cast<int>(rng.below(4));
    const auto x = mul_p_power(random_element(*ctx, rng), i);
    const auto y = exact_div_p(x, i);
    CHECK(y.prec() == x.prec() - i);
    CHECK(agree_at(mul_p_power(y, i), x, x.prec() - i));
  }
}

TEST_CASE("frobenius on Z_9 is conjugation") {
  auto z9 = RingContext::make(3, 2, {1, 0, 1}, 10);
  SplitMix64 rng(15);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_element(*z9, rng);
    const i64 a = static_cast<i64>(x.coeffs()[0]), b = static_cast<i64>(x.coeffs()[1]);
    const std::vector<i64> conj{a, -b};
    CHECK(agree(frobenius(x), PadicElement::from_coeffs(*z9, conj, 10)));
  }
}

TEST_CASE("frobenius is the Hensel lift of g^p") {
  for (auto [p, d] : {std::pair<u64, int>{3, 2}, {5, 3}, {7, 2}, {3, 5}}) {
    auto ctx = context(p, d, 10);
    const auto g = PadicElement::generator(*ctx);
    const auto h = frobenius(g);
    // f(h) = 0 by Horner
    const auto& f = ctx->polynomial();
    PadicElement acc = PadicElement::zero(*ctx);
    for (int j = d; j >= 0; --j) acc = acc * h + PadicElement::from_int(*ctx, f[j]);
    CHECK(acc.is_zero());
    CHECK(agree_at(h, pow(g, p), 1));
  }
}

TEST_CASE("frobenius properties on random inputs") {
  SplitMix64 rng(16);
  for (auto [p, d] : {std::pair<u64, int>{3, 1}, {3, 2}, {5, 2}, {7, 3}}) {
    auto ctx = context(p, d, 9);
    for (int t = 0; t < 100; ++t) {
      const auto x = random_element(*ctx, rng), y = random_element(*ctx, rng);
      CHECK(agree(frobenius(x + y), frobenius(x) + frobenius(y)));
      CHECK(agree(frobenius(x * y), frobenius(x) * frobenius(y)));
      CHECK(agree_at(frobenius(x), pow(x, p), 1));
      CHECK(agree(frobenius_inv(frobenius(x)), x));
      CHECK(agree(frobenius_pow(x, d), x));
      if (d == 1) CHECK(agree(frobenius(x), x));
    }
  }
}

TEST_CASE("p = 2 contexts exist but refuse arithmetic") {
  auto c2 = RingContext::make(2, 1, {0, 1}, 8);
  const auto one = PadicElement::one(*c2);
  try {
    (void)(one + one);
    FAIL("expected refusal");
  } catch (const WittError& e) {
    CHECK(e.code() == ErrorCode::OddPrimeRequired);
  }
}

TEST_CASE("mixing rings is rejected") {
  auto a = context(3, 1, 5);
  auto b = context(5, 1, 5);
  CHECK_THROWS_AS((void)(PadicElement::one(*a) + PadicElement::one(*b)), WittError);
}

TEST_CASE("precision lifting through p-th powers") {
  auto ctx = context(5, 1, 10);
  const auto x = PadicElement::from_int(*ctx, 7, 3);
  const auto y = PadicElement::from_int(*ctx, 7 + 125, 3);
  CHECK(pow_p_power(x, 2).prec() == 5);
  CHECK(agree(pow_p_power(x, 2), pow_p_power(y, 2)));
  CHECK(mul_p_power(x, 2).prec() == 5);
  CHECK(mul_tracked(PadicElement::from_int(*ctx, 25, 4), PadicElement::from_int(*ctx, 2, 3)).prec() == 4);
}
