#include <string>

#include "witt/verifier.hpp"

namespace wittlab {

namespace {

E1Element diff_exact(const WittVector& x) { return diff(x); }
E1Element frobenius_exact(const E1Element& xi) { return frobenius(xi); }
E1Element verschiebung_exact(const E1Element& xi) { return verschiebung(xi); }

// phi^0 in place of phi: F(sum a_i dV^i(1)) = sum a_{i+1} dV^i(1).
E1Element frobenius_wrong_power(const E1Element& xi) {
  if (xi.level() < 2) fail(ErrorCode::BadLevel, "Frobenius needs level >= 2");
  std::vector<PadicElement> comps;
  for (int i = 1; i < xi.level() - 1; ++i) comps.push_back(xi.component(i + 1));
  return {xi.context(), xi.level() - 1, std::move(comps)};
}

// V(a dV^i(1)) = phi^-1(a) dV^{i+1}(1), dropping the factor p. The
// representative of a mod p^i is reused as if it were known mod p^{i+1}.
E1Element verschiebung_missing_p(const E1Element& xi) {
  const auto& ctx = xi.context();
  std::vector<PadicElement> comps{PadicElement::zero(ctx)};
  for (int i = 1; i < xi.level(); ++i) comps.emplace_back(ctx, frobenius_inv(xi.component(i)).residue(), i + 1);
  return {ctx, xi.level() + 1, std::move(comps)};
}

// Component i read from a_{i+1} instead of a_i.
E1Element diff_off_by_one(const WittVector& x) {
  const auto dec = v_decompose(x);
  const int n = x.level();
  std::vector<PadicElement> comps;
  for (int i = 1; i < n; ++i) comps.push_back(i + 1 < n ? dec.coeffs[i + 1] : PadicElement::zero(x.context()));
  return {x.context(), n, std::move(comps)};
}

constexpr ComplexOps kExact{diff_exact, frobenius_exact, verschiebung_exact};
constexpr ComplexOps kWrongPower{diff_exact, frobenius_wrong_power, verschiebung_exact};
constexpr ComplexOps kMissingP{diff_exact, frobenius_exact, verschiebung_missing_p};
constexpr ComplexOps kOffByOne{diff_off_by_one, frobenius_exact, verschiebung_exact};

}  // namespace

std::string mutation_name(Mutation m) {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::FrobeniusEWrongPower: return "frobenius_e_wrong_power";
    case Mutation::VerschiebungEMissingP: return "verschiebung_e_missing_p";
    case Mutation::DiffOffByOne: return "diff_off_by_one";
  }
  return "none";
}

Mutation mutation_from_name(const std::string& s) {
  for (Mutation m : {Mutation::None, Mutation::FrobeniusEWrongPower, Mutation::VerschiebungEMissingP,
                     Mutation::DiffOffByOne}) {
    if (mutation_name(m) == s) return m;
  }
  fail(ErrorCode::BadInput, "unknown mutation \"" + s + "\"");
}

const std::vector<Mutation>& all_mutations() {
  static const std::vector<Mutation> list{Mutation::FrobeniusEWrongPower, Mutation::VerschiebungEMissingP,
                                          Mutation::DiffOffByOne};
  return list;
}

const ComplexOps& complex_ops(Mutation m) {
  switch (m) {
    case Mutation::FrobeniusEWrongPower: return kWrongPower;
    case Mutation::VerschiebungEMissingP: return kMissingP;
    case Mutation::DiffOffByOne: return kOffByOne;
    case Mutation::None: break;
  }
  return kExact;
}

}  // namespace wittlab
