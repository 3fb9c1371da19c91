#include "topvert/errors.hpp"
#include "topvert/recursion.hpp"
#include "topvert/serialize.hpp"
#include "topvert/skein.hpp"
#include "topvert/symfunc.hpp"

#include <doctest.h>

using namespace topvert;

namespace {

const QScalar z = QScalar::z();
using F = FramedScalar;

BasisLabel single(int k, const Partition& l, bool bar = false) {
  BasisLabel b;
  b.lambda[k - 1] = l;
  if (bar) b.mubar[k - 1] = box();
  return b;
}

std::vector<Partition> upTo(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m)
    for (const auto& p : partitionsOf(m)) out.push_back(p);
  return out;
}

const OperatorTerm* findTerm(const OperatorSum& op, int comp, int i, int j) {
  for (const auto& t : op)
    if (t.component == comp && t.i == i && t.j == j) return &t;
  return nullptr;
}

}  // namespace

TEST_SUITE("skein") {

TEST_CASE("P actions on the empty label") {
  for (int k = 1; k <= 3; ++k) {
    const BasisLabel e;
    SkeinState up = applyPToLabel(0, 1, k, e);
    REQUIRE(up.terms().size() == 1);
    CHECK(up.coefficient(single(k, box())) == F(1));
    SkeinState unknot = applyPToLabel(0, 0, k, e);
    CHECK(unknot.coefficient(e) == (F::a(k) - F::a(k, -1)) * F(z.inverse()));
    SkeinState down = applyPToLabel(0, -1, k, e);
    REQUIRE(down.terms().size() == 1);
    CHECK(down.coefficient(single(k, Partition(), true)) == F(1));
  }
  CHECK_THROWS_AS(applyPToLabel(2, 1, 1, BasisLabel{}), UnsupportedActionError);
  CHECK_THROWS_AS(applyPToLabel(0, 1, 1, single(1, box(), true)), PreconditionError);
}

TEST_CASE("operator A data") {
  const OperatorSum a1 = operatorA(1);
  CHECK(a1.size() == 9);
  const OperatorTerm* t = findTerm(a1, 3, 1, -1);
  REQUIRE(t);
  CHECK(t->coef == F::a(3));
  for (int k = 2; k <= 3; ++k) {
    OperatorSum r = rotateOperator(a1, k - 1);
    const OperatorSum ak = operatorA(k);
    REQUIRE(r.size() == ak.size());
    for (std::size_t n = 0; n < r.size(); ++n) {
      CHECK(r[n].component == ak[n].component);
      CHECK(r[n].coef == ak[n].coef);
    }
  }
  CHECK_THROWS(operatorA(4));
}

TEST_CASE("Z construction") {
  const CoefficientTable t = buildTable(3, VertexFormula::T);
  CHECK(buildZ(0, t).terms().size() == 1);
  SkeinState zz = buildZ(3, t);
  CHECK(zz.coefficient(single(1, box())) == F(-z.inverse()));
  for (const auto& [l, c] : zz.terms()) CHECK_FALSE(l.mixed());
}

TEST_CASE("annihilation to size 4, and a perturbed operator fails at size 1") {
  const SkeinState zz = buildZ(5, buildTable(5, VertexFormula::T));
  for (int k = 1; k <= 3; ++k) {
    AnnihilationReport r = verifyAnnihilation(operatorA(k), k, zz, 4, 2);
    CHECK(r.ok());
    CHECK(r.checkSize == 4);
  }
  OperatorSum bad = operatorA(1);
  for (auto& term : bad)
    if (term.component == 1 && term.i == 0 && term.j == 1) term.coef = term.coef + F(1);
  AnnihilationReport r = verifyAnnihilation(bad, 1, zz, 4);
  REQUIRE_FALSE(r.ok());
  int smallest = 99;
  for (const auto& [l, c] : r.violations) smallest = std::min(smallest, l.size());
  CHECK(smallest <= 1);
  CHECK(toJson(r)["violations"].size() == r.violations.size());
  CHECK_THROWS_AS(verifyAnnihilation(operatorA(1), 1, zz, 5), TruncationError);
}

TEST_CASE("mixed-sector cancellation") {
  for (int k = 1; k <= 3; ++k)
    for (const auto& l : upTo(5)) {
      BasisLabel lab = single(k, l);
      SkeinState img = applyPToLabel(0, -1, k, lab);
      img += applyPToLabel(1, -1, k, lab).scaled(-F::a(k));
      for (const auto& [b, c] : img.terms()) CHECK_FALSE(b.mixed());
    }
}

TEST_CASE("diagonal identities") {
  for (int k = 1; k <= 3; ++k)
    for (const auto& l : upTo(6)) {
      const BasisLabel lab = single(k, l);
      const QScalar d = schurAt(box(), plusRho(l)) - schurAt(box(), rho());
      const QScalar dt = schurAt(box(), plusRho(l.transpose())) - schurAt(box(), rho());
      F lhs = applyPToLabel(0, 0, k, lab).coefficient(lab) - applyPToLabel(1, 0, k, lab).coefficient(lab);
      CHECK(lhs == -F::a(k) * F(d));
      F lhs2 = applyPToLabel(-1, 0, k, lab).coefficient(lab) - applyPToLabel(0, 0, k, lab).coefficient(lab);
      CHECK(lhs2 == -F::a(k, -1) * F(dt));
    }
}

TEST_CASE("constraint split at the origin") {
  const CoefficientTable t = buildTable(3, VertexFormula::T);
  auto eval = [&](const LinearFunctional& f) {
    QScalar acc;
    for (const auto& [l, c] : f) acc += c * t.at(l);
    return acc;
  };
  for (int k = 1; k <= 3; ++k) {
    ConstraintSplit s = splitConstraint(k, coefficientConstraint(k, TripleLabel{}));
    CHECK(s.aFree);
    auto [r0, r2] = constraintRecursions(k);
    REQUIRE(s.parts.count(0));
    REQUIRE(s.parts.count(2));
    for (const auto& x : triplesUpTo(2)) {
      ConstraintSplit sx = splitConstraint(k, coefficientConstraint(k, x));
      if (sx.parts.count(0)) CHECK(eval(sx.parts.at(0)) == -residual(r0, x, t));
      if (sx.parts.count(2)) CHECK(eval(sx.parts.at(2)) == residual(r2, x, t));
    }
  }
  CHECK(constraintRecursions(1) == std::make_pair(RecursionId::R32, RecursionId::R31));
  CHECK(constraintRecursions(2).first == RecursionId::R13);
  CHECK(constraintRecursions(2).second == RecursionId::R12);
}

TEST_CASE("monomial solve recovers A1") {
  MonomialSolution sol = solveMonomialCoefficients(knownLeadingValues());
  const OperatorSum a1 = operatorA(1);
  REQUIRE(sol.op.size() == a1.size());
  for (std::size_t n = 0; n < a1.size(); ++n) CHECK(sol.op[n].coef == a1[n].coef);
  CHECK(findTerm(sol.op, 1, 1, 0)->coef == -F::a(1, -1));
  CHECK(findTerm(sol.op, 1, 0, 1)->coef == -F::a(3, 2));
  CHECK(findTerm(sol.op, 2, -1, 1)->coef == F::a(2));
  CHECK_FALSE(sol.steps.empty());
}

}  // TEST_SUITE
