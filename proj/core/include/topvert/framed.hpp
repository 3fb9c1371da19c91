#pragma once

// QScalar-linear combinations of Laurent monomials a1^e1 a2^e2 a3^e3.

#include "topvert/qscalar.hpp"

#include <array>
#include <map>
#include <string>

namespace topvert {

using AExp = std::array<int, 3>;

class FramedScalar {
 public:
  using Terms = std::map<AExp, QScalar>;

  FramedScalar() = default;
  FramedScalar(const QScalar& c);  // NOLINT(google-explicit-constructor)
  FramedScalar(long c) : FramedScalar(QScalar(c)) {}  // NOLINT(google-explicit-constructor)

  static FramedScalar monomial(AExp e, const QScalar& c = QScalar(1));
  // a_k^p for k in {1,2,3}.
  static FramedScalar a(int k, int p = 1);

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  // A single a-monomial with a signed-monomial QScalar coefficient (c * s^j, |c| = 1).
  bool isSignedMonomial() const;
  bool isSingleTerm() const { return terms_.size() == 1; }
  QScalar coefficient(const AExp& e) const;
  // Value with a_k -> 1 never happens implicitly; use this when all exponents vanish.
  bool isAFree() const;

  FramedScalar inverse() const;  // only for single-term values
  FramedScalar operator-() const;

  // Rotates the a-variables: a1 -> a2 -> a3 -> a1, applied `steps` times.
  FramedScalar rotated(int steps) const;
  // Substitutes a_k -> s^{p_k} (used by the U(1) specialization a_k -> q^{1/2}).
  QScalar specializeA(const std::array<int, 3>& sPowers) const;

  friend FramedScalar operator+(const FramedScalar& a, const FramedScalar& b);
  friend FramedScalar operator-(const FramedScalar& a, const FramedScalar& b);
  friend FramedScalar operator*(const FramedScalar& a, const FramedScalar& b);
  FramedScalar& operator+=(const FramedScalar& o);
  FramedScalar& operator-=(const FramedScalar& o);
  FramedScalar& operator*=(const FramedScalar& o) { return *this = *this * o; }
  friend bool operator==(const FramedScalar& a, const FramedScalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const FramedScalar& a, const FramedScalar& b) { return !(a == b); }

  std::string toString() const;

 private:
  Terms terms_;
};

}  // namespace topvert
