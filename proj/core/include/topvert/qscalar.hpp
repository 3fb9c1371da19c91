#pragma once

// Exact rational functions in s = q^{1/2}.
//
// A nonzero value is stored as s^offset * N(s) / D(s) with N, D integer
// polynomials, N(0) != 0, D(0) > 0, gcd(N, D) = 1 in Z[s] (content included).
// Zero is offset 0, N = 0, D = 1. Equal values have identical representations.

#include "topvert/poly.hpp"

#include <gmpxx.h>

#include <memory>
#include <string>

namespace topvert {

class QScalar {
 public:
  QScalar();  // zero
  QScalar(long v);  // NOLINT(google-explicit-constructor)
  explicit QScalar(const mpz_class& v);

  // Builds s^offset * num / den and canonicalizes. Throws ArithmeticError on den == 0.
  static QScalar fromParts(int offset, poly::Poly num, poly::Poly den);
  // canonicalize(raw numerator, raw denominator) with explicit Laurent offsets.
  static QScalar canonicalize(int numOffset, const poly::Poly& num, int denOffset, const poly::Poly& den);

  static QScalar sPow(int k);  // s^k
  static QScalar qPow(int k) { return sPow(2 * k); }  // q^k
  static QScalar z();  // s - s^{-1}

  int offset() const { return rep_->offset; }
  const poly::Poly& num() const { return rep_->num; }
  const poly::Poly& den() const { return rep_->den; }

  bool isZero() const { return rep_->num.empty(); }
  bool isOne() const;
  // True if the value is c * s^k for an integer c (a signed monomial when |c| = 1).
  bool isMonomial() const;
  bool isLaurentPolynomial() const { return rep_->den.size() == 1; }

  QScalar operator-() const;
  QScalar inverse() const;
  QScalar timesSPow(int k) const;

  friend QScalar operator+(const QScalar& a, const QScalar& b);
  friend QScalar operator-(const QScalar& a, const QScalar& b);
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  friend QScalar operator/(const QScalar& a, const QScalar& b);
  QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
  QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
  QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
  QScalar& operator/=(const QScalar& o) { return *this = *this / o; }

  friend bool operator==(const QScalar& a, const QScalar& b);
  friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

  // Replaces s by s^{-1}.
  QScalar substituteQInverse() const;

  // Exact value at a rational point; throws EvaluationError at a pole.
  mpq_class evaluate(const mpq_class& s0) const;
  double evaluateNumeric(double s0) const;

  // Rough size used to choose simple pivots: degrees plus coefficient bits.
  std::size_t complexity() const;

  // "P(s)/Q(s)" in s; Laurent numerators are written with negative powers.
  std::string toString() const;

 private:
  struct Rep {
    int offset = 0;
    poly::Poly num;
    poly::Poly den{mpz_class(1)};
  };
  explicit QScalar(std::shared_ptr<const Rep> r) : rep_(std::move(r)) {}
  static QScalar fromCanonical(int offset, poly::Poly num, poly::Poly den);

  std::shared_ptr<const Rep> rep_;
};

// Convenience: q^{k/2} = s^k.
inline QScalar sPow(int k) { return QScalar::sPow(k); }
inline QScalar qPow(int k) { return QScalar::qPow(k); }

}  // namespace topvert
