#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace wittlab;
using namespace wittlab::testing;

namespace {

WittVector one_shifted(const RingContext& ctx, int n, int i) {
  return verschiebung_pow(WittVector::one(ctx, n - i), i);
}

E1Element random_e1(const RingContext& ctx, SplitMix64& rng, int n) {
  std::vector<PadicElement> comps;
  for (int i = 1; i < n; ++i) comps.push_back(random_element(ctx, rng));
  return {ctx, n, std::move(comps)};
}

E1Element dv(const RingContext& ctx, int n, int i, i64 c = 1) {
  return E1Element::basis(ctx, n, i, PadicElement::from_int(ctx, c));
}

}  // namespace

TEST_CASE("differential examples") {
  auto ctx = context(3, 1, 12);
  SplitMix64 rng(31);
  CHECK(diff(s_phi(random_element(*ctx, rng), 4)).is_zero());

  const auto dp = diff(teichmuller(PadicElement::from_int(*ctx, 3), 2));
  REQUIRE(dp.level() == 2);
  CHECK(value(dp.component(1)) == 2);

  const auto d2 = diff(teichmuller(PadicElement::from_int(*ctx, 2), 3));
  CHECK(value(d2.component(1)) == 2 % 3);
  CHECK(value(d2.component(2)) == 56 % 9);
  CHECK(d2.component(2).prec() == 2);
}

TEST_CASE("d[p] = -dV(1) over Z_p") {
  for (u64 p : {3, 5, 7}) {
    auto ctx = context(p, 1, 8);
    const auto dp = diff(teichmuller(PadicElement::from_int(*ctx, static_cast<i64>(p)), 2));
    CHECK(value(dp.component(1)) == p - 1);
  }
}

TEST_CASE("structure maps on basis elements") {
  auto ctx = context(3, 1, 12);
  CHECK(frobenius(dv(*ctx, 3, 1)).is_zero());
  const auto fd = frobenius(diff(teichmuller(PadicElement::from_int(*ctx, 2), 3)));
  CHECK(fd.level() == 2);
  CHECK(value(fd.component(1)) == 56 % 3);

  const auto v = verschiebung(dv(*ctx, 2, 1));
  CHECK(v.level() == 3);
  CHECK(v.component(1).is_zero());
  CHECK(value(v.component(2)) == 3);
  CHECK(value(verschiebung(dv(*ctx, 2, 1, 2)).component(2)) == 6);
  CHECK(verschiebung(E1Element::zero(*ctx, 3)).is_zero());

  CHECK(restrict(dv(*ctx, 4, 3)).is_zero());
  CHECK(!restrict(dv(*ctx, 4, 2)).is_zero());
}

TEST_CASE("module action examples") {
  auto ctx = context(3, 1, 12);
  const auto r = module_action(one_shifted(*ctx, 3, 1), dv(*ctx, 3, 2));
  CHECK(value(r.component(2)) == 3);
  const auto four = module_action(teichmuller(PadicElement::from_int(*ctx, 4), 2), dv(*ctx, 2, 1, 2));
  CHECK(value(four.component(1)) == 2);

  SplitMix64 rng(32);
  auto c = context(5, 2, 14);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_element(*c, rng);
    for (int i = 1; i < 4; ++i) {
      const auto xi = E1Element::basis(*c, 4, i, PadicElement::one(*c));
      CHECK(agree(module_action(s_phi(a, 4), xi).component(i), a.truncated(i)));
    }
  }
}

TEST_CASE("graded multiplication") {
  auto ctx = context(3, 1, 12);
  SplitMix64 rng(33);
  const int n = 3;
  const EElement beta{random_witt(*ctx, rng, n), random_e1(*ctx, rng, n)};
  const EElement unity{WittVector::one(*ctx, n), E1Element::zero(*ctx, n)};
  CHECK(agree(graded_mul(unity, beta), beta));

  const EElement xi{WittVector::zero(*ctx, n), random_e1(*ctx, rng, n)};
  const EElement eta{WittVector::zero(*ctx, n), random_e1(*ctx, rng, n)};
  const auto prod = graded_mul(xi, eta);
  CHECK(agree(prod.deg0, WittVector::zero(*ctx, n)));
  CHECK(prod.deg1.is_zero());

  const auto t2 = teichmuller(PadicElement::from_int(*ctx, 2), 2);
  const auto t4 = teichmuller(PadicElement::from_int(*ctx, 4), 2);
  const EElement d2{WittVector::zero(*ctx, 2), diff(t2)};
  const auto lhs = graded_mul(lambda(t2), graded_mul(lambda(t2), d2));
  const auto rhs = graded_mul(lambda(t4), d2);
  CHECK(agree(lhs, rhs));
}

TEST_CASE("Teichmuller relation") {
  auto ctx = context(3, 1, 12);
  CHECK(teich_relation_check(PadicElement::from_int(*ctx, 2), 2));
  CHECK(teich_relation_check(PadicElement::one(*ctx), 3));
  CHECK(teich_relation_check(PadicElement::zero(*ctx), 3));
  CHECK(diff(teichmuller(PadicElement::one(*ctx), 3)).is_zero());

  SplitMix64 rng(34);
  for (auto [p, d] : {std::pair<u64, int>{3, 2}, {5, 1}, {7, 2}}) {
    for (int n = 2; n <= 5; ++n) {
      auto c = context(p, d, 2 * n + 4);
      for (int t = 0; t < 20; ++t) {
        const auto a = random_element(*c, rng);
        CHECK(teich_relation_check(a, n));
        CHECK(agree(pow(teichmuller(a, n), p - 1), teichmuller(pow(a, p - 1), n)));
      }
    }
  }
}

TEST_CASE("Witt complex laws on random inputs") {
  SplitMix64 rng(35);
  for (auto [p, d] : {std::pair<u64, int>{3, 1}, {3, 2}, {5, 2}, {7, 1}}) {
    for (int n = 2; n <= 5; ++n) {
      auto ctx = context(p, d, 2 * n + 4);
      const i64 ip = static_cast<i64>(p);
      for (int t = 0; t < 15; ++t) {
        const auto x = random_witt(*ctx, rng, n), y = random_witt(*ctx, rng, n);
        const auto big = random_witt(*ctx, rng, n + 1);
        const auto xi = random_e1(*ctx, rng, n);
        const auto xi_big = random_e1(*ctx, rng, n + 1);

        const EElement ex{x, xi};
        CHECK(diff(diff(ex)).deg1.is_zero());
        CHECK(agree(diff(x * y), module_action(x, diff(y)) + module_action(y, diff(x))));
        CHECK(agree(diff(x + y), diff(x) + diff(y)));
        CHECK(agree(frobenius(diff(verschiebung(x))), diff(x)));
        CHECK(agree(frobenius(verschiebung(xi)), scale(xi, ip)));
        CHECK(agree(diff(frobenius(big)), scale(frobenius(diff(big)), ip)));
        CHECK(agree(verschiebung(diff(x)), scale(diff(verschiebung(x)), ip)));
        CHECK(agree(verschiebung(module_action(frobenius(big), xi)), module_action(big, verschiebung(xi))));
        CHECK(agree(frobenius(module_action(big, xi_big)), module_action(frobenius(big), frobenius(xi_big))));
        CHECK(agree(restrict(diff(big)), diff(restrict(big))));
        CHECK(agree(restrict(frobenius(xi_big)), frobenius(restrict(xi_big))));
        CHECK(agree(restrict(verschiebung(xi)), verschiebung(restrict(xi))));
        CHECK(agree(restrict(lambda(big)), lambda(restrict(big))));
        CHECK(agree(verschiebung(lambda(x)), lambda(verschiebung(x))));
        CHECK(scale(xi, static_cast<i64>(ctx->modulus(n - 1))).is_zero());
      }
    }
  }
}

TEST_CASE("torsion of the top basis element") {
  for (u64 p : {3, 5, 7}) {
    for (int n = 2; n <= 5; ++n) {
      auto ctx = context(p, 1, 2 * n + 4);
      const auto top = dv(*ctx, n, n - 1);
      CHECK(scale(top, static_cast<i64>(ctx->modulus(n - 1))).is_zero());
      CHECK(!scale(top, static_cast<i64>(ctx->modulus(n - 2))).is_zero());
    }
  }
}

TEST_CASE("component i of E_n^1 takes exactly p^i values") {
  const u64 p = 3;
  for (int n = 2; n <= 4; ++n) {
    auto ctx = context(p, 1, 2 * n + 4);
    for (int i = 1; i < n; ++i) {
      std::set<u64> seen;
      const auto vi = one_shifted(*ctx, n, i);
      const u64 bound = ctx->modulus(n);
      for (u64 a = 0; a < bound; ++a) {
        const auto x = s_phi(PadicElement::from_int(*ctx, static_cast<i64>(a)), n) * vi;
        seen.insert(value(diff(x).component(i)));
      }
      CHECK(seen.size() == ctx->modulus(i));
    }
  }
}

TEST_CASE("restriction kernel is the top component") {
  SplitMix64 rng(36);
  auto ctx = context(5, 2, 12);
  for (int t = 0; t < 100; ++t) {
    const int n = 4;
    std::vector<PadicElement> comps;
    for (int i = 1; i < n; ++i) {
      comps.push_back(rng.below(2) ? random_element(*ctx, rng) : PadicElement::zero(*ctx));
    }
    const E1Element xi(*ctx, n, comps);
    bool lower_zero = true;
    for (int i = 1; i < n - 1; ++i) lower_zero = lower_zero && xi.component(i).is_zero();
    CHECK(restrict(xi).is_zero() == lower_zero);
  }
}

TEST_CASE("level and precision errors") {
  auto ctx = context(3, 1, 6);
  CHECK_THROWS_AS(E1Element(*ctx, 3, {PadicElement::one(*ctx)}), WittError);
  CHECK_THROWS_AS(E1Element(*ctx, 3, {PadicElement::one(*ctx), PadicElement::from_int(*ctx, 1, 1)}), WittError);
  CHECK_THROWS_AS(dv(*ctx, 3, 3), WittError);
  CHECK_THROWS_AS(restrict(E1Element::zero(*ctx, 1)), WittError);
}
