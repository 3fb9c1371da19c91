#include "topvert/series.hpp"

#include "topvert/errors.hpp"

#include <algorithm>

namespace topvert {

int totalDegree(const Exp3& e) { return e[0] + e[1] + e[2]; }

QScalar LaurentSeries3::coefficient(const Exp3& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QScalar() : it->second;
}

void LaurentSeries3::add(const Exp3& e, const QScalar& c) {
  if (c.isZero() || totalDegree(e) > order_) return;
  for (int i = 0; i < 3; ++i)
    if (e[i] < lower_[i])
      throw PreconditionError("exponent " + std::to_string(e[i]) + " of x" + std::to_string(i + 1) + " below the lower bound " +
                              std::to_string(lower_[i]));
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

LaurentSeries3 LaurentSeries3::withOrder(int order) const {
  LaurentSeries3 r(order, lower_);
  for (const auto& [e, c] : terms_) r.add(e, c);
  return r;
}

LaurentSeries3 LaurentSeries3::withLower(const Exp3& lower) const {
  LaurentSeries3 r(order_, lower);
  for (const auto& [e, c] : terms_) r.add(e, c);
  return r;
}

LaurentSeries3& LaurentSeries3::operator+=(const LaurentSeries3& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LaurentSeries3& LaurentSeries3::operator-=(const LaurentSeries3& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

LaurentSeries3 LaurentSeries3::scaled(const QScalar& c) const {
  LaurentSeries3 r(order_, lower_);
  if (c.isZero()) return r;
  for (const auto& [e, v] : terms_) r.add(e, v * c);
  return r;
}

LaurentSeries3 operator*(const LaurentSeries3& a, const LaurentSeries3& b) {
  Exp3 lo{a.lower_[0] + b.lower_[0], a.lower_[1] + b.lower_[1], a.lower_[2] + b.lower_[2]};
  LaurentSeries3 r(std::min(a.order_, b.order_), lo);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exp3 e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      if (totalDegree(e) <= r.order_) r.add(e, ca * cb);
    }
  return r;
}

std::vector<std::pair<Exp3, QScalar>> LaurentSeries3::sortedTerms() const {
  std::vector<std::pair<Exp3, QScalar>> v(terms_.begin(), terms_.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    int dx = totalDegree(x.first), dy = totalDegree(y.first);
    return dx != dy ? dx < dy : x.first < y.first;
  });
  return v;
}

LaurentSeries3 LaurentSeries3::truncated(int d) const { return withOrder(std::min(d, order_)); }

QScalar qPochhammer(const QScalar& x, int n) {
  if (n < 0) throw PreconditionError("qPochhammer: negative length");
  QScalar r(1);
  for (int k = 0; k < n; ++k) r *= QScalar(1) - x * qPow(k);
  return r;
}

LaurentSeries3 pochhammerSeries(const QScalar& c, const Exp3& e, int n, int order) {
  if (n < 0) throw PreconditionError("pochhammerSeries: negative length");
  Exp3 lo{std::min(0, e[0] * n), std::min(0, e[1] * n), std::min(0, e[2] * n)};
  LaurentSeries3 r(order, lo);
  r.add({0, 0, 0}, QScalar(1));
  for (int k = 0; k < n; ++k) {
    LaurentSeries3 f(order, lo);
    f.add({0, 0, 0}, QScalar(1));
    f.add(e, -(c * qPow(k)));
    r = (r * f).withLower(lo);
  }
  return r;
}

LaurentSeries3 pochhammerInverseInfinite(const QScalar& c, const Exp3& e, int order) {
  if (totalDegree(e) <= 0) throw PreconditionError("pochhammerInverseInfinite: argument must have positive degree");
  LaurentSeries3 r(order, {std::min(0, e[0] * order), std::min(0, e[1] * order), std::min(0, e[2] * order)});
  QScalar term(1);
  for (int k = 0; totalDegree(e) * k <= order; ++k) {
    if (k > 0) term = term * c / (QScalar(1) - qPow(k));
    r.add({e[0] * k, e[1] * k, e[2] * k}, term);
  }
  return r;
}

}  // namespace topvert
