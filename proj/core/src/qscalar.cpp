#include "topvert/qscalar.hpp"

#include "topvert/errors.hpp"

#include <cmath>
#include <sstream>

namespace topvert {

using poly::Poly;

namespace {

const Poly& onePoly() {
  static const Poly p{mpz_class(1)};
  return p;
}

bool isUnitDen(const Poly& d) { return d.size() == 1 && d[0] == 1; }

// Sign and content normalization once num and den are coprime as polynomials
// up to an integer factor.
void normalizeConstantDen(Poly& num, Poly& den) {
  mpz_class c = den[0];
  mpz_class g = poly::content(num);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(c) < 0) g = -g;
  if (g != 1) {
    num = poly::divexactScalar(num, g);
    den[0] /= g;
  }
}

std::string laurentToString(int offset, const Poly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < p.size(); ++i) {
    const mpz_class& c = p[i];
    if (sgn(c) == 0) continue;
    int e = offset + static_cast<int>(i);
    mpz_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "s";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace

QScalar::QScalar() {
  static const auto zero = std::make_shared<const Rep>();
  rep_ = zero;
}

QScalar::QScalar(long v) : QScalar(mpz_class(v)) {}

QScalar::QScalar(const mpz_class& v) {
  if (sgn(v) == 0) {
    *this = QScalar();
    return;
  }
  auto r = std::make_shared<Rep>();
  r->num = {v};
  rep_ = std::move(r);
}

QScalar QScalar::fromCanonical(int offset, Poly num, Poly den) {
  if (num.empty()) return QScalar();
  auto r = std::make_shared<Rep>();
  r->offset = offset;
  r->num = std::move(num);
  r->den = std::move(den);
  return QScalar(std::shared_ptr<const Rep>(std::move(r)));
}

QScalar QScalar::fromParts(int offset, Poly num, Poly den) {
  poly::trim(num);
  poly::trim(den);
  if (den.empty()) throw ArithmeticError("division by the zero scalar");
  if (num.empty()) return QScalar();
  int vn = poly::valuation(num), vd = poly::valuation(den);
  num = poly::dropLow(num, vn);
  den = poly::dropLow(den, vd);
  offset += vn - vd;
  if (den.size() == 1) {
    normalizeConstantDen(num, den);
    return fromCanonical(offset, std::move(num), std::move(den));
  }
  Poly g = poly::gcd(num, den);
  if (!(g.size() == 1 && g[0] == 1)) {
    num = *poly::divide(num, g);
    den = *poly::divide(den, g);
  }
  if (sgn(den[0]) < 0) {
    num = poly::negate(std::move(num));
    den = poly::negate(std::move(den));
  }
  return fromCanonical(offset, std::move(num), std::move(den));
}

QScalar QScalar::canonicalize(int numOffset, const Poly& num, int denOffset, const Poly& den) {
  return fromParts(numOffset - denOffset, num, den);
}

QScalar QScalar::sPow(int k) { return fromCanonical(k, onePoly(), onePoly()); }

QScalar QScalar::z() { return fromParts(-1, Poly{mpz_class(-1), mpz_class(0), mpz_class(1)}, onePoly()); }

bool QScalar::isOne() const { return rep_->offset == 0 && rep_->num.size() == 1 && rep_->num[0] == 1 && isUnitDen(rep_->den); }

bool QScalar::isMonomial() const { return rep_->num.size() == 1 && isUnitDen(rep_->den); }

QScalar QScalar::operator-() const {
  if (isZero()) return *this;
  return fromCanonical(rep_->offset, poly::negate(rep_->num), rep_->den);
}

QScalar QScalar::inverse() const {
  if (isZero()) throw ArithmeticError("division by the zero scalar");
  Poly num = rep_->den, den = rep_->num;
  if (sgn(den[0]) < 0) {
    num = poly::negate(std::move(num));
    den = poly::negate(std::move(den));
  }
  return fromCanonical(-rep_->offset, std::move(num), std::move(den));
}

QScalar QScalar::timesSPow(int k) const {
  if (isZero() || k == 0) return *this;
  return fromCanonical(rep_->offset + k, rep_->num, rep_->den);
}

QScalar operator+(const QScalar& a, const QScalar& b) {
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  const int m = std::min(a.offset(), b.offset());
  const Poly na = poly::shift(a.num(), a.offset() - m);
  const Poly nb = poly::shift(b.num(), b.offset() - m);
  if (a.den() == b.den()) {
    Poly n = poly::add(na, nb);
    if (isUnitDen(a.den())) {
      if (n.empty()) return QScalar();
      int v = poly::valuation(n);
      return QScalar::fromCanonical(m + v, poly::dropLow(n, v), a.den());
    }
    return QScalar::fromParts(m, std::move(n), a.den());
  }
  // Henrici: with g = gcd(Da, Db), the sum's numerator can only share factors with g.
  Poly g = poly::gcd(a.den(), b.den());
  Poly da = *poly::divide(a.den(), g);
  Poly db = *poly::divide(b.den(), g);
  Poly n = poly::add(poly::mul(na, db), poly::mul(nb, da));
  if (n.empty()) return QScalar();
  Poly d = poly::mul(a.den(), db);
  if (g.size() > 1) {
    Poly h = poly::gcd(n, g);
    if (!(h.size() == 1 && h[0] == 1)) {
      n = *poly::divide(n, h);
      d = *poly::divide(d, h);
    }
  }
  int v = poly::valuation(n);
  n = poly::dropLow(n, v);
  if (sgn(d[0]) < 0) {
    n = poly::negate(std::move(n));
    d = poly::negate(std::move(d));
  }
  if (d.size() == 1) normalizeConstantDen(n, d);
  return QScalar::fromCanonical(m + v, std::move(n), std::move(d));
}

QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }

QScalar operator*(const QScalar& a, const QScalar& b) {
  if (a.isZero() || b.isZero()) return QScalar();
  const int off = a.offset() + b.offset();
  const bool ua = isUnitDen(a.den()), ub = isUnitDen(b.den());
  if (ua && ub) return QScalar::fromCanonical(off, poly::mul(a.num(), b.num()), onePoly());
  Poly na = a.num(), nb = b.num(), da = a.den(), db = b.den();
  if (!ub) {
    Poly g = poly::gcd(na, db);
    if (!(g.size() == 1 && g[0] == 1)) {
      na = *poly::divide(na, g);
      db = *poly::divide(db, g);
    }
  }
  if (!ua) {
    Poly g = poly::gcd(nb, da);
    if (!(g.size() == 1 && g[0] == 1)) {
      nb = *poly::divide(nb, g);
      da = *poly::divide(da, g);
    }
  }
  Poly n = poly::mul(na, nb), d = poly::mul(da, db);
  if (sgn(d[0]) < 0) {
    n = poly::negate(std::move(n));
    d = poly::negate(std::move(d));
  }
  if (d.size() == 1) normalizeConstantDen(n, d);
  return QScalar::fromCanonical(off, std::move(n), std::move(d));
}

QScalar operator/(const QScalar& a, const QScalar& b) { return a * b.inverse(); }

bool operator==(const QScalar& a, const QScalar& b) {
  if (a.rep_ == b.rep_) return true;
  return a.offset() == b.offset() && a.num() == b.num() && a.den() == b.den();
}

QScalar QScalar::substituteQInverse() const {
  if (isZero()) return *this;
  // s^o N(1/s) / D(1/s) = s^{-o - deg N + deg D} rev(N) / rev(D)
  Poly n = poly::reversed(num()), d = poly::reversed(den());
  int off = -offset() - poly::degree(num()) + poly::degree(den());
  if (sgn(d[0]) < 0) {
    n = poly::negate(std::move(n));
    d = poly::negate(std::move(d));
  }
  return fromCanonical(off, std::move(n), std::move(d));
}

mpq_class QScalar::evaluate(const mpq_class& s0) const {
  if (isZero()) return 0;
  auto horner = [&s0](const Poly& p) {
    mpq_class r = 0;
    for (size_t i = p.size(); i-- > 0;) r = r * s0 + mpq_class(p[i]);
    return r;
  };
  mpq_class d = horner(den());
  if (sgn(d) == 0) throw EvaluationError("pole at evaluation point");
  if (sgn(s0) == 0) {
    if (offset() < 0) throw EvaluationError("pole at s = 0");
    if (offset() > 0) return 0;
  }
  mpq_class r = horner(num()) / d;
  mpq_class p = 1;
  int e = offset();
  mpq_class base = e >= 0 ? s0 : mpq_class(1) / s0;
  for (int i = 0; i < std::abs(e); ++i) p *= base;
  r *= p;
  r.canonicalize();
  return r;
}

double QScalar::evaluateNumeric(double s0) const {
  if (isZero()) return 0.0;
  auto horner = [s0](const Poly& p) {
    long double r = 0;
    for (size_t i = p.size(); i-- > 0;) r = r * s0 + static_cast<long double>(p[i].get_d());
    return r;
  };
  long double d = horner(den());
  if (d == 0.0L) throw EvaluationError("pole at evaluation point");
  if (s0 == 0.0 && offset() < 0) throw EvaluationError("pole at s = 0");
  return static_cast<double>(horner(num()) / d * std::pow(static_cast<long double>(s0), offset()));
}

std::size_t QScalar::complexity() const {
  std::size_t c = num().size() + den().size();
  for (const auto& x : num()) c += mpz_sizeinbase(x.get_mpz_t(), 2) / 16;
  for (const auto& x : den()) c += mpz_sizeinbase(x.get_mpz_t(), 2) / 16;
  return c;
}

std::string QScalar::toString() const {
  std::string n = laurentToString(offset(), num());
  if (isUnitDen(den())) return n;
  return "(" + n + ")/(" + laurentToString(0, den()) + ")";
}

}  // namespace topvert
