#pragma once

// Power-series branch of the classical augmentation variety through
// y = (1, 1, 1) at x = 0.

#include "topvert/series.hpp"

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>

namespace topvert {

using Jet = std::map<Exp3, mpq_class>;  // exponents in x1, x2, x3

struct AugmentationBranch {
  int order = 0;
  std::array<Jet, 3> y;  // y_i = 1 + ...
};

// Solves order by order; BranchError names the first order at which the
// linear system is inconsistent or underdetermined.
AugmentationBranch solveAugmentationBranch(int order);

// A_i times y_b x_c (the cleared form) with the jets substituted, up to `order`.
Jet clearedResidual(int i, const std::array<Jet, 3>& y, int order);

std::string jetToString(const Jet& j);

}  // namespace topvert
