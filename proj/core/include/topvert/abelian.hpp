#pragma once

// The U(1) specialization: quantum-torus operators acting on truncated
// Laurent series, x_i by multiplication and y_i by x_i -> q x_i.

#include "topvert/series.hpp"
#include "topvert/vertex.hpp"

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace topvert {

enum class Gen { X, Y };
struct GenPower {
  Gen gen;
  int var;  // 0, 1, 2
  int power;
};
// A composition of generators; the last entry acts first.
using Word = std::vector<GenPower>;

// coef * outer . (sum of c * word)
struct OperatorGroup {
  QScalar coef;
  Word outer;
  std::vector<std::pair<QScalar, Word>> inner;
};

struct AbelianOperator {
  std::string name;
  std::vector<OperatorGroup> groups;
};

enum class Family { Main, F2, F3, F4 };
std::string familyName(Family f);
Family parseFamily(const std::string& s);

// X^{-1} checks that the result stays within the series' lower bounds and
// throws DivisibilityError otherwise.
LaurentSeries3 applyGenerator(Gen g, int var, int power, const LaurentSeries3& f);
LaurentSeries3 applyWord(const Word& w, const LaurentSeries3& f);
LaurentSeries3 applyAbelian(const AbelianOperator& op, const LaurentSeries3& f);

// coef * outer . (1 - cy y_var - cx x_var)
OperatorGroup linearGroup(const QScalar& coef, const Word& outer, int var, const QScalar& cy, const QScalar& cx);
AbelianOperator abelianOperator(Family family, int i);

struct SeriesReport {
  std::string op;
  int checkDegree = 0;
  std::vector<std::pair<Exp3, QScalar>> violations;
  bool ok() const { return violations.empty(); }
};
SeriesReport verifyAbelianAnnihilation(const AbelianOperator& op, const LaurentSeries3& z, int checkDegree);

// sum_k T_{(k1),(k2),(k3)} x^k from a table; lower bounds zero.
LaurentSeries3 specializeZ(const CoefficientTable& table, int order);
// Same, evaluating the single-row closed-form values directly.
LaurentSeries3 specializeZ(int order);
// The printed double sum, with x_i -> eps x_i.
LaurentSeries3 abelianZDirect(int order, int eps = 1);
// sum_k C_{(k1),(k2),(k3)} x^k, used to identify what the printed sum computes.
LaurentSeries3 vertexCGeneratingSeries(int order);
// The printed one-brane series of the fillings (F2, F3 with x_i -> eps x_i; F4
// as the printed product).
LaurentSeries3 abelianZFilling(Family family, int order, int eps = 1);
// The F4 product with (q^{1/2} x_i; q)_inf in place of (x_i; q)_inf.
LaurentSeries3 abelianZF4Shifted(int order);
// The lower exponent bounds each family's series lives in.
Exp3 familyLower(Family family);

// Y_i X_i f - q X_i Y_i f; zero for every f.
LaurentSeries3 torusDefect(int var, const LaurentSeries3& f);

// Commutative Laurent polynomials in (x1, x2, x3, y1, y2, y3).
using ClassicalPoly = std::map<std::array<int, 6>, mpq_class>;
ClassicalPoly dequantize(const AbelianOperator& op);
// The printed q = 1 operators.
ClassicalPoly printedClassicalA(int i);
std::string classicalToString(const ClassicalPoly& p);

}  // namespace topvert
