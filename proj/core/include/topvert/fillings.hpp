#pragma once

// The other three fillings: disk and anti-annulus building blocks, their
// products, closed-form partition functions, and the transported operators.

#include "topvert/abelian.hpp"
#include "topvert/skein.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace topvert {

// prod over boxes of -q^{-c/2} / (q^{h/2} - q^{-h/2}); equals s_lambda(q^{-rho}).
QScalar diskHookContent(const Partition& lambda);
// The same product with whole powers q^{-c} / (q^h - q^{-h}).
QScalar diskHookContentWholePowers(const Partition& lambda);

enum class PsiKind { Disk, AntiAnnulus, Twisted };
struct PsiSpec {
  PsiKind kind = PsiKind::Disk;
  int alpha = 1;  // components are 1-based
  int beta = 2;
  int f1 = 0, f2 = 0;  // framings of the anti-annulus
};
// The block summed over |lambda| <= n; the state itself is untruncated.
SkeinState psiBlock(const PsiSpec& spec, int n);

// W_l *_f W_m = sum_nu c^nu_{l m} s^{f (kappa(nu) - kappa(l) - kappa(m))} W_nu on the
// components listed in `framings`. Every other component must be empty on at
// least one side and is carried over, so an empty map gives the tensor product.
// With maxLambda >= 0, products whose lambda labels total more are skipped.
SkeinState starProduct(const std::map<int, int>& framings, const SkeinState& a, const SkeinState& b, int maxLambda = -1);
SkeinState starProduct(int f, int component, const SkeinState& a, const SkeinState& b, int maxLambda = -1);
// Slotwise label merge; GluingError when a slot is occupied on both sides.
SkeinState glueProduct(const SkeinState& a, const SkeinState& b, int maxLambda = -1);
// Keeps labels with |lambda_1| + |lambda_2| + |lambda_3| <= n.
SkeinState truncateLambda(const SkeinState& s, int n);

// Closed forms summed over |lambda_1| + |lambda_2| + |lambda_3| <= n.
SkeinState buildFillingZ(Family id, int n);
// Printed U(1) series; F4 is the printed product.
LaurentSeries3 buildFillingZU1(Family id, int order);

// (-1)^i and (i, j) -> (-i-j, i).
std::pair<int, std::pair<int, int>> slTwoZMap(int i, int j);

OperatorSum fillingOperator(Family id, int k);
// Times the index map is applied on each component to carry the filling's
// operators back to the main ones.
std::array<int, 3> fillingMapPowers(Family id);

struct IndexCheck {
  int component = 0;
  bool ok = false;
  std::string detail;
};
// Per component: each operator's group of P terms, transported by the index
// map (signs included, a-powers ignored) and normalized by its first sign,
// must match the main operators' groups as a multiset.
std::vector<IndexCheck> structuralIndexCheck(Family id);

struct AnsatzReport {
  std::vector<BasisLabel> violations;
  bool ok() const { return violations.empty(); }
};
AnsatzReport verifyAnsatz(Family id, const SkeinState& state);

}  // namespace topvert
