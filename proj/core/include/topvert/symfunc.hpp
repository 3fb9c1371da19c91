#pragma once

// Schur and skew Schur functions evaluated at the infinite alphabets
// { q^{eps (nu_i - i + 1/2)} : i >= 1 }, exactly.

#include "topvert/partition.hpp"
#include "topvert/qscalar.hpp"

#include <gmpxx.h>

#include <map>
#include <vector>

namespace topvert {

struct SpecializationPoint {
  Partition nu;
  int eps = 1;  // +1 or -1

  friend auto operator<=>(const SpecializationPoint&, const SpecializationPoint&) = default;
};

inline SpecializationPoint rho() { return {Partition(), 1}; }  // q^rho
inline SpecializationPoint minusRho() { return {Partition(), -1}; }  // q^{-rho}
inline SpecializationPoint plusRho(const Partition& nu) { return {nu, 1}; }  // q^{nu + rho}
inline SpecializationPoint minusRhoMinus(const Partition& nu) { return {nu, -1}; }  // q^{-rho - nu}

QScalar completeHomogeneous(int k, const SpecializationPoint& pt);
QScalar elementary(int k, const SpecializationPoint& pt);
QScalar schurAt(const Partition& lambda, const SpecializationPoint& pt);
// s_{lambda/eta}; zero unless eta is contained in lambda.
QScalar skewSchurAt(const Partition& lambda, const Partition& eta, const SpecializationPoint& pt);

// Littlewood-Richardson coefficient c^lambda_{mu nu} by LR tableau enumeration.
long lrCoefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Polynomials in finitely many variables, exponent vector -> coefficient.
using IntPolyN = std::map<std::vector<int>, mpz_class>;
IntPolyN schurPolynomialFinite(const Partition& lambda, int nvars);
IntPolyN multiply(const IntPolyN& a, const IntPolyN& b);
// Expansion of a symmetric polynomial in the Schur basis (nvars variables).
std::map<Partition, mpz_class> schurExpand(IntPolyN f, int nvars);

// Drops every memoized specialization value.
void clearSymfuncCaches();

}  // namespace topvert
