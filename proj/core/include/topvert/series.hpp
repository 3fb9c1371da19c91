#pragma once

// Truncated Laurent series in x1, x2, x3 with QScalar coefficients.

#include "topvert/qscalar.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace topvert {

using Exp3 = std::array<int, 3>;

class LaurentSeries3 {
 public:
  using Terms = std::map<Exp3, QScalar>;

  // Keeps total degree <= order; exponents below `lower` are rejected.
  explicit LaurentSeries3(int order = 0, Exp3 lower = {-2, -2, -2}) : order_(order), lower_(lower) {}

  int order() const { return order_; }
  const Exp3& lower() const { return lower_; }
  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  QScalar coefficient(const Exp3& e) const;

  void add(const Exp3& e, const QScalar& c);
  LaurentSeries3 withOrder(int order) const;
  LaurentSeries3 withLower(const Exp3& lower) const;

  LaurentSeries3& operator+=(const LaurentSeries3& o);
  LaurentSeries3& operator-=(const LaurentSeries3& o);
  LaurentSeries3 scaled(const QScalar& c) const;
  LaurentSeries3 operator-() const { return scaled(QScalar(-1)); }
  // Product truncated to the smaller order; lower bounds add.
  friend LaurentSeries3 operator*(const LaurentSeries3& a, const LaurentSeries3& b);
  friend LaurentSeries3 operator+(LaurentSeries3 a, const LaurentSeries3& b) { return a += b; }
  friend LaurentSeries3 operator-(LaurentSeries3 a, const LaurentSeries3& b) { return a -= b; }
  friend bool operator==(const LaurentSeries3& a, const LaurentSeries3& b) { return a.terms_ == b.terms_; }

  // Terms sorted by total degree, then lexicographically.
  std::vector<std::pair<Exp3, QScalar>> sortedTerms() const;
  // The part of total degree <= d.
  LaurentSeries3 truncated(int d) const;

 private:
  int order_;
  Exp3 lower_;
  Terms terms_;
};

int totalDegree(const Exp3& e);

// (x; q)_n for a scalar argument.
QScalar qPochhammer(const QScalar& x, int n);
// (c x^e; q)_n as a series.
LaurentSeries3 pochhammerSeries(const QScalar& c, const Exp3& e, int n, int order);
// (c x^e; q)_inf^{-1} = sum_k (c x^e)^k / (q;q)_k, truncated.
LaurentSeries3 pochhammerInverseInfinite(const QScalar& c, const Exp3& e, int order);

}  // namespace topvert
