#pragma once

#include "topvert/vertex.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace topvert {

// The six recursion equations; the superscript/subscript pair of each tag is
// spelled out, e.g. R32 for the one with s_box(q^{lambda_1 + rho}).
enum class RecursionId { R32, R13, R21, R31, R12, R23 };
inline constexpr RecursionId kAllRecursions[] = {RecursionId::R32, RecursionId::R13, RecursionId::R21,
                                                 RecursionId::R31, RecursionId::R12, RecursionId::R23};
std::string recursionName(RecursionId id);
RecursionId parseRecursion(const std::string& name);
// Image under the cyclic relabeling 1 -> 2 -> 3 (R32 -> R13 -> R21, R31 -> R12 -> R23).
RecursionId rotatedRecursion(RecursionId id, int steps = 1);

// LHS - RHS as a linear combination of table entries.
using LinearFunctional = std::vector<std::pair<TripleLabel, QScalar>>;
LinearFunctional residualFunctional(RecursionId id, const TripleLabel& t);

using Lookup = std::function<const QScalar*(const TripleLabel&)>;
// Throws IncompleteDataError naming the first missing triple.
QScalar residual(RecursionId id, const TripleLabel& t, const Lookup& lookup);
QScalar residual(RecursionId id, const TripleLabel& t, const CoefficientTable& table);

struct LevelStats {
  int level = 0;  // equations indexed by size-level triples
  std::size_t equations = 0;
  std::size_t unknowns = 0;
};

// Solves the six equations level by level from T(empty) = 1. Each level is one
// exact linear system; UniquenessError if it is rank deficient or inconsistent.
CoefficientTable solveRecursion(int maxSize, int jobs = 1, std::vector<LevelStats>* stats = nullptr);

// q^{-1} - q^n, the determinant of [[1, 1], [q^n, q^{-1}]].
QScalar twoByTwoDeterminant(int n);

}  // namespace topvert
