#pragma once

// Skein states on three solid tori in the W_{lambda, mubar} basis and the
// Morton-Samuelson P_{i,j} actions on the pure sector.

#include "topvert/framed.hpp"
#include "topvert/partition.hpp"
#include "topvert/recursion.hpp"
#include "topvert/vertex.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace topvert {

struct BasisLabel {
  std::array<Partition, 3> lambda;
  std::array<Partition, 3> mubar;

  static BasisLabel pure(const TripleLabel& t) { return {{t.l1, t.l2, t.l3}, {}}; }
  int size() const;
  bool mixed() const { return !mubar[0].empty() || !mubar[1].empty() || !mubar[2].empty(); }
  TripleLabel triple() const { return {lambda[0], lambda[1], lambda[2]}; }
  BasisLabel rotated(int steps = 1) const;
  std::string toString() const;  // "([1],[];[],[];[],[1])"

  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

class SkeinState {
 public:
  using Terms = std::map<BasisLabel, FramedScalar>;

  SkeinState() = default;
  explicit SkeinState(int bound) : bound_(bound) {}

  // Truncation bound on total label size; -1 means untruncated.
  int bound() const { return bound_; }
  void setBound(int b) { bound_ = b; }
  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  FramedScalar coefficient(const BasisLabel& l) const;

  // Adds c at l; dropped when l exceeds the bound.
  void add(const BasisLabel& l, const FramedScalar& c);
  SkeinState& operator+=(const SkeinState& o);
  SkeinState scaled(const FramedScalar& c) const;
  friend bool operator==(const SkeinState& a, const SkeinState& b) { return a.terms_ == b.terms_; }

 private:
  int bound_ = -1;
  Terms terms_;
};

struct OperatorTerm {
  int component;  // 1, 2, 3
  int i, j;
  FramedScalar coef;
};
using OperatorSum = std::vector<OperatorTerm>;

// Action of P_{i,j} on component k (1-based) of a single pure basis vector.
SkeinState applyPToLabel(int i, int j, int k, const BasisLabel& label);
SkeinState applyP(int i, int j, int k, const SkeinState& state);
// Applies every term to every basis vector; work is split over labels and
// merged in label order.
SkeinState applyOperator(const OperatorSum& op, const SkeinState& state, int jobs = 1);

OperatorSum operatorA(int k);
OperatorSum rotateOperator(const OperatorSum& op, int steps);
std::string operatorToString(const OperatorSum& op);

// sum_t T_t W_{t1} (x) W_{t2} (x) W_{t3} over the table, truncated at maxSize.
SkeinState buildZ(int maxSize, const CoefficientTable& table);

struct AnnihilationReport {
  int op = 0;
  int checkSize = 0;
  std::vector<std::pair<BasisLabel, FramedScalar>> violations;
  bool ok() const { return violations.empty(); }
};
AnnihilationReport verifyAnnihilation(const OperatorSum& op, int opIndex, const SkeinState& state, int checkSize,
                                      int jobs = 1);

// Coefficient of W_t in A_k . Z as a functional of the T values.
using FramedFunctional = std::vector<std::pair<TripleLabel, FramedScalar>>;
FramedFunctional coefficientConstraint(int k, const TripleLabel& t);

struct ConstraintSplit {
  // Keyed by the exponent of the split variable (a_3 for k = 1, a_1 for k = 2,
  // a_2 for k = 3); each part has a-free coefficients.
  std::map<int, LinearFunctional> parts;
  bool aFree = true;  // false if any other a-dependence survives
};
ConstraintSplit splitConstraint(int k, const FramedFunctional& f);
// The recursion pair matching the a^0 and a^2 parts, with their signs:
// the a^0 part is -R and the a^2 part is +R'.
std::pair<RecursionId, RecursionId> constraintRecursions(int k);

// Mechanical recovery of the coefficients of A_1 from leading Z values.
struct MonomialSolution {
  OperatorSum op;  // the nine terms in the order of operatorA(1)
  std::vector<std::string> steps;  // human-readable derivation log
};
MonomialSolution solveMonomialCoefficients(const std::map<TripleLabel, QScalar>& leading);
// The four values the derivation starts from.
std::map<TripleLabel, QScalar> knownLeadingValues();

}  // namespace topvert
