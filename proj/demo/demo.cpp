// Walks through the main API: build a module, classify it, compare it with a
// family member, build a witness and cross-check with the oracle.

#include <iostream>

#include "bkn/families.hpp"
#include "bkn/iso.hpp"
#include "bkn/oracle.hpp"

int main() {
  using namespace bkn;

  // B = (1, 2, -1, -2, 0) with some higher-order noise on the even entries.
  const int prec = 6;
  auto b = [&](std::initializer_list<int> c) {
    std::vector<Scalar> v;
    for (int x : c) v.emplace_back(x);
    return PowerSeries(prec, v);
  };
  const CoeffTuple tuple({b({1}), b({0, 1}), b({2}), b({0, -1}), b({-1}), b({0}), b({-2, 3}), b({0}), b({0, 0, 5}),
                          b({0, -3, -5})});
  const Rank2Module m(tuple);

  const auto label = classify_case(m);
  std::cout << "case: " << label.to_string() << "\n";
  const auto inv = invariant(m);
  std::cout << "beta^2 = " << to_string(*inv.value) << "\n";

  // Compare with the family member M_{-2}.
  const auto rep = representative({CaseLabel{CaseKind::FourGeneric, {1, 3, 5, 7}, 0, 0}, {Scalar(-2)}}, prec);
  const auto d = decide_isomorphic(m, rep);
  std::cout << "isomorphic to M_{-2}: " << (d.isomorphic ? "yes" : "no") << " (" << d.criterion << ")\n";

  const auto w = construct_witness(m, rep);
  std::cout << "witness verifies: " << (verify_witness(m, rep, w) ? "yes" : "no") << "\n";
  std::cout << "phi_0 =\n" << w.phi[0].pretty() << "\n";

  const auto v = iso_oracle(m, rep, kDefaultOraclePrec);
  std::cout << "oracle: hom dimension " << v.hom_dimension << ", isomorphic " << (v.isomorphic ? "yes" : "no") << "\n";
}
