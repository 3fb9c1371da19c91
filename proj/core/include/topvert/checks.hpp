#pragma once

// Named property checks grouped in suites, shared by `verify` and the tests.

#include "topvert/abelian.hpp"
#include "topvert/symfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace topvert {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class SignMode { Auto, Plus, Minus };
SignMode parseSignMode(const std::string& s);

struct VerifyOptions {
  int maxSize = 5;  // skein / vertex / recursion size bound
  int degree = 6;  // U(1) check degree
  int jobs = 1;
  SignMode sign = SignMode::Auto;
  std::optional<Family> filling;  // restricts the fillings suite
};

// "scalars", "symfunc", "vertex", "recursion", "skein", "abelian",
// "fillings", or "all". ParseError for anything else.
std::vector<CheckResult> runSuite(const std::string& suite, const VerifyOptions& opts);
const std::vector<std::string>& suiteNames();

// Both sides of the two symmetric-function identities used for the
// recursions, at points x and y.
std::pair<QScalar, QScalar> skewPieriSides(const Partition& lambda, const Partition& mu, const SpecializationPoint& x,
                                           const SpecializationPoint& y);
std::pair<QScalar, QScalar> seeSawSides(const Partition& lambda, const Partition& mu, const SpecializationPoint& x,
                                        const SpecializationPoint& y);

}  // namespace topvert
