#include "topvert/framed.hpp"

#include "topvert/errors.hpp"

#include <sstream>

namespace topvert {

FramedScalar::FramedScalar(const QScalar& c) {
  if (!c.isZero()) terms_.emplace(AExp{0, 0, 0}, c);
}

FramedScalar FramedScalar::monomial(AExp e, const QScalar& c) {
  FramedScalar f;
  if (!c.isZero()) f.terms_.emplace(e, c);
  return f;
}

FramedScalar FramedScalar::a(int k, int p) {
  AExp e{0, 0, 0};
  e.at(k - 1) = p;
  return monomial(e);
}

bool FramedScalar::isSignedMonomial() const {
  if (terms_.size() != 1) return false;
  const QScalar& c = terms_.begin()->second;
  return c.isMonomial() && abs(c.num()[0]) == 1;
}

QScalar FramedScalar::coefficient(const AExp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QScalar() : it->second;
}

bool FramedScalar::isAFree() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == AExp{0, 0, 0});
}

FramedScalar FramedScalar::inverse() const {
  if (terms_.size() != 1) throw ArithmeticError("inverse of a framed scalar with more than one term");
  const auto& [e, c] = *terms_.begin();
  return monomial({-e[0], -e[1], -e[2]}, c.inverse());
}

FramedScalar FramedScalar::operator-() const {
  FramedScalar r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

FramedScalar FramedScalar::rotated(int steps) const {
  steps = ((steps % 3) + 3) % 3;
  FramedScalar r;
  for (const auto& [e, c] : terms_) {
    AExp ne{};
    for (int i = 0; i < 3; ++i) ne[(i + steps) % 3] = e[i];
    r.terms_.emplace(ne, c);
  }
  return r;
}

QScalar FramedScalar::specializeA(const std::array<int, 3>& p) const {
  QScalar r;
  for (const auto& [e, c] : terms_) r += c.timesSPow(e[0] * p[0] + e[1] * p[1] + e[2] * p[2]);
  return r;
}

FramedScalar& FramedScalar::operator+=(const FramedScalar& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }
  return *this;
}

FramedScalar& FramedScalar::operator-=(const FramedScalar& o) { return *this += -o; }

FramedScalar operator+(const FramedScalar& a, const FramedScalar& b) {
  FramedScalar r = a;
  r += b;
  return r;
}

FramedScalar operator-(const FramedScalar& a, const FramedScalar& b) {
  FramedScalar r = a;
  r -= b;
  return r;
}

FramedScalar operator*(const FramedScalar& a, const FramedScalar& b) {
  FramedScalar r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      AExp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      r += FramedScalar::monomial(e, ca * cb);
    }
  return r;
}

std::string FramedScalar::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.toString() << ")";
    for (int k = 0; k < 3; ++k)
      if (e[k] != 0) os << "*a" << (k + 1) << (e[k] != 1 ? "^" + std::to_string(e[k]) : "");
  }
  return os.str();
}

}  // namespace topvert
