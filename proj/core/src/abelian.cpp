#include "topvert/abelian.hpp"

#include "topvert/errors.hpp"

#include <sstream>

namespace topvert {

std::string familyName(Family f) {
  switch (f) {
    case Family::Main: return "main";
    case Family::F2: return "F2";
    case Family::F3: return "F3";
    case Family::F4: return "F4";
  }
  return "?";
}

Family parseFamily(const std::string& s) {
  if (s == "main" || s == "vertex") return Family::Main;
  if (s == "F2" || s == "f2") return Family::F2;
  if (s == "F3" || s == "f3") return Family::F3;
  if (s == "F4" || s == "f4") return Family::F4;
  throw ParseError("unknown family '" + s + "' (expected main, F2, F3, F4)");
}

Exp3 familyLower(Family family) {
  switch (family) {
    case Family::Main: return {0, 0, 0};
    case Family::F2:
    case Family::F3: return {0, -1, 0};
    case Family::F4: return {0, -1, -2};
  }
  return {0, 0, 0};
}

LaurentSeries3 applyGenerator(Gen g, int var, int power, const LaurentSeries3& f) {
  if (var < 0 || var > 2) throw PreconditionError("generator index out of range");
  LaurentSeries3 out(f.order(), f.lower());
  for (const auto& [e, c] : f.terms()) {
    if (g == Gen::Y) {
      out.add(e, c * qPow(power * e[var]));
      continue;
    }
    Exp3 ne = e;
    ne[var] += power;
    if (ne[var] < f.lower()[var]) {
      std::ostringstream msg;
      msg << "x" << var + 1 << "^" << power << " does not act on the term x^(" << e[0] << "," << e[1] << "," << e[2] << ")";
      throw DivisibilityError(msg.str());
    }
    out.add(ne, c);
  }
  return out;
}

LaurentSeries3 applyWord(const Word& w, const LaurentSeries3& f) {
  LaurentSeries3 cur = f;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = applyGenerator(it->gen, it->var, it->power, cur);
  return cur;
}

LaurentSeries3 applyAbelian(const AbelianOperator& op, const LaurentSeries3& f) {
  LaurentSeries3 total(f.order(), f.lower());
  for (const auto& g : op.groups) {
    // The inner sum is combined first, so an outer x^{-1} only sees what survives.
    LaurentSeries3 inner(f.order(), f.lower());
    for (const auto& [c, w] : g.inner) inner += applyWord(w, f).scaled(c);
    total += applyWord(g.outer, inner).scaled(g.coef);
  }
  return total;
}

OperatorGroup linearGroup(const QScalar& coef, const Word& outer, int var, const QScalar& cy, const QScalar& cx) {
  return {coef, outer, {{QScalar(1), {}}, {-cy, {{Gen::Y, var, 1}}}, {-cx, {{Gen::X, var, 1}}}}};
}

namespace {

Word Xw(int v, int p) { return {{Gen::X, v, p}}; }
Word Yw(int v, int p) { return {{Gen::Y, v, p}}; }

}  // namespace

AbelianOperator abelianOperator(Family family, int i) {
  if (i < 1 || i > 3) throw PreconditionError("operator index must be 1, 2 or 3");
  AbelianOperator op;
  op.name = "A" + std::to_string(i) + (family == Family::Main ? std::string() : "^" + familyName(family));
  const QScalar one(1);
  auto& G = op.groups;
  switch (family) {
    case Family::Main: {
      int a = i - 1, b = i % 3, c = (i + 1) % 3;
      G = {linearGroup(one, {}, a, one, sPow(3)), linearGroup(-qPow(2), Yw(b, -1), b, one, sPow(-1)),
           linearGroup(-sPow(1), Xw(c, -1), c, one, sPow(1))};
      break;
    }
    case Family::F2:
      if (i == 1)
        G = {linearGroup(one, {}, 0, one, sPow(3)), linearGroup(qPow(1), {}, 1, one, sPow(1)),
             linearGroup(-qPow(2), Yw(2, -1), 2, one, sPow(1))};
      else if (i == 2)
        G = {linearGroup(sPow(5), Yw(0, -1), 0, one, sPow(-1)), linearGroup(sPow(3), Yw(1, -1), 1, one, sPow(-1)),
             linearGroup(one, Xw(2, -1), 2, one, sPow(1))};
      else
        G = {linearGroup(sPow(1), Xw(0, -1), 0, one, sPow(3)), linearGroup(sPow(1), Xw(1, -1), 1, qPow(1), sPow(1)),
             linearGroup(QScalar(-1), {}, 2, one, sPow(5))};
      break;
    case Family::F3:
      if (i == 1)
        G = {linearGroup(one, {}, 0, one, sPow(5)), linearGroup(qPow(1), {}, 1, one, sPow(3)),
             linearGroup(-sPow(3), Xw(2, -1), 2, one, sPow(1))};
      else if (i == 2)
        G = {linearGroup(sPow(5), Yw(0, -1), 0, one, sPow(1)), linearGroup(sPow(3), Yw(1, -1), 1, one, sPow(1)),
             linearGroup(-sPow(1), {}, 2, one, sPow(1))};
      else
        G = {linearGroup(one, Xw(0, -1), 0, one, sPow(3)), linearGroup(one, Xw(1, -1), 1, qPow(1), sPow(1)),
             linearGroup(sPow(5), Yw(2, -1), 2, one, sPow(-3))};
      break;
    case Family::F4:
      if (i == 1)
        G = {linearGroup(one, {}, 0, one, sPow(5)), linearGroup(qPow(1), {}, 1, one, sPow(3)),
             linearGroup(qPow(2), {}, 2, one, sPow(1))};
      else if (i == 2)
        G = {linearGroup(one, Yw(0, -1), 0, one, sPow(1)), linearGroup(qPow(-1), Yw(1, -1), 1, one, sPow(1)),
             linearGroup(qPow(-2), Yw(2, -1), 2, one, sPow(1))};
      else
        G = {linearGroup(one, Xw(0, -1), 0, one, sPow(5)), linearGroup(one, Xw(1, -1), 1, qPow(1), sPow(3)),
             linearGroup(one, Xw(2, -1), 2, qPow(2), sPow(1))};
      break;
  }
  return op;
}

SeriesReport verifyAbelianAnnihilation(const AbelianOperator& op, const LaurentSeries3& z, int checkDegree) {
  if (checkDegree > z.order() - 1)
    throw TruncationError("check degree " + std::to_string(checkDegree) + " needs a series of order at least " +
                          std::to_string(checkDegree + 1));
  SeriesReport r;
  r.op = op.name;
  r.checkDegree = checkDegree;
  for (const auto& [e, c] : applyAbelian(op, z).sortedTerms())
    if (totalDegree(e) <= checkDegree) r.violations.emplace_back(e, c);
  return r;
}

namespace {

Partition row(int k) { return k == 0 ? Partition() : Partition{k}; }

QScalar qFactorialInverse(int n) { return qPochhammer(qPow(1), n).inverse(); }

QScalar signPow(int eps, int n) { return (eps < 0 && n % 2 != 0) ? QScalar(-1) : QScalar(1); }

template <class F>
void forEachExp(int order, F&& fn) {
  for (int a = 0; a <= order; ++a)
    for (int b = 0; a + b <= order; ++b)
      for (int c = 0; a + b + c <= order; ++c) fn(a, b, c);
}

}  // namespace

LaurentSeries3 specializeZ(const CoefficientTable& table, int order) {
  LaurentSeries3 z(order, {0, 0, 0});
  forEachExp(order, [&](int a, int b, int c) { z.add({a, b, c}, table.at(TripleLabel{row(a), row(b), row(c)})); });
  return z;
}

LaurentSeries3 specializeZ(int order) {
  LaurentSeries3 z(order, {0, 0, 0});
  forEachExp(order, [&](int a, int b, int c) { z.add({a, b, c}, vertexT(TripleLabel{row(a), row(b), row(c)})); });
  return z;
}

LaurentSeries3 vertexCGeneratingSeries(int order) {
  LaurentSeries3 z(order, {0, 0, 0});
  forEachExp(order, [&](int a, int b, int c) { z.add({a, b, c}, vertexC(TripleLabel{row(a), row(b), row(c)})); });
  return z;
}

LaurentSeries3 abelianZDirect(int order, int eps) {
  if (eps != 1 && eps != -1) throw PreconditionError("sign must be +1 or -1");
  LaurentSeries3 z(order, {0, 0, 0});
  forEachExp(order, [&](int n1, int n2, int n3) {
    QScalar pre(1);
    for (int n : {n1, n2, n3}) pre *= signPow(-1, n * n).timesSPow(n * n) * qFactorialInverse(n);
    for (int m12 = 0; m12 < 2; ++m12)
      for (int m23 = 0; m23 < 2; ++m23)
        for (int m31 = 0; m31 < 2; ++m31) {
          Exp3 e{n1 + m12 + m31, n2 + m12 + m23, n3 + m23 + m31};
          int qe = n1 * m12 + n2 * m23 + n3 * m31 + m12 * m23 * m31;
          z.add(e, pre * qPow(qe) * signPow(eps, totalDegree(e)));
        }
    Exp3 e{n1 + 1, n2 + 1, n3 + 1};
    z.add(e, pre * QScalar::z() * qPow(n1 + n2 + n3) * signPow(eps, totalDegree(e)));
  });
  return z;
}

LaurentSeries3 abelianZFilling(Family family, int order, int eps) {
  if (eps != 1 && eps != -1) throw PreconditionError("sign must be +1 or -1");
  LaurentSeries3 z(order, familyLower(family));
  if (family == Family::Main) return abelianZDirect(order, eps);
  if (family == Family::F4) {
    // (1 - x1/x2)(1 - x1/x3)(1 - x2/x3) prod_i 1/(x_i; q)_inf; the prefactor has degree 0.
    std::map<Exp3, int> pre;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) pre[{a + b, c - a, -b - c}] += ((a + b + c) % 2 ? -1 : 1);
    for (const auto& [pe, pc] : pre) {
      if (pc == 0) continue;
      for (int n1 = 0; n1 <= order + 3; ++n1)
        for (int n2 = 0; n2 <= order + 3; ++n2)
          for (int n3 = 0; n1 + n2 + n3 <= order; ++n3) {
            Exp3 e{pe[0] + n1, pe[1] + n2, pe[2] + n3};
            QScalar c = QScalar(pc) * qFactorialInverse(n1) * qFactorialInverse(n2) * qFactorialInverse(n3);
            z.add(e, c * signPow(eps, totalDegree(e)));
          }
    }
    return z;
  }
  forEachExp(order + 1, [&](int n1, int n2, int n3) {
    QScalar base = sPow(n1 + n2 + n3) * qFactorialInverse(n1) * qFactorialInverse(n2) * qFactorialInverse(n3);
    for (int m1 = 0; m1 < 2; ++m1)
      for (int m2 = 0; m2 < 2; ++m2)
        for (int m3 = 0; m3 < 2; ++m3) {
          int qe = family == Family::F2 ? -m1 * (n2 - m3) - m2 * (n1 + m3) : -(m1 + m2) * n3 - 2 * m1 * m2 - m2 * m3 + m1 * m3;
          Exp3 e{n1 + m3 + m2, n2 - m3 + m1, n3 + m1 + m2};
          QScalar c = base * qPow(qe + m2) * signPow(-1, m3);
          z.add(e, c * signPow(eps, totalDegree(e)));
        }
  });
  return z;
}

LaurentSeries3 abelianZF4Shifted(int order) {
  LaurentSeries3 printed = abelianZFilling(Family::F4, order);
  // x_i -> s x_i multiplies x^e by s^{|e|}.
  LaurentSeries3 z(order, printed.lower());
  for (const auto& [e, c] : printed.terms()) z.add(e, c.timesSPow(totalDegree(e)));
  return z;
}

LaurentSeries3 torusDefect(int var, const LaurentSeries3& f) {
  LaurentSeries3 yx = applyGenerator(Gen::Y, var, 1, applyGenerator(Gen::X, var, 1, f));
  LaurentSeries3 xy = applyGenerator(Gen::X, var, 1, applyGenerator(Gen::Y, var, 1, f));
  return yx - xy.scaled(qPow(1));
}

ClassicalPoly dequantize(const AbelianOperator& op) {
  ClassicalPoly out;
  auto mono = [](const Word& w) {
    std::array<int, 6> e{};
    for (const auto& g : w) e[(g.gen == Gen::X ? 0 : 3) + g.var] += g.power;
    return e;
  };
  const mpq_class one(1);
  for (const auto& g : op.groups) {
    std::array<int, 6> o = mono(g.outer);
    mpq_class gc = g.coef.evaluate(one);
    for (const auto& [c, w] : g.inner) {
      std::array<int, 6> e = mono(w);
      for (int k = 0; k < 6; ++k) e[k] += o[k];
      out[e] += gc * c.evaluate(one);
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

ClassicalPoly printedClassicalA(int i) {
  if (i < 1 || i > 3) throw PreconditionError("operator index must be 1, 2 or 3");
  // (1 - y_a - x_a) - y_b^{-1} (1 - y_b - x_b) - x_c^{-1} (1 - y_c - x_c)
  int a = i - 1, b = i % 3, c = (i + 1) % 3;
  ClassicalPoly p;
  auto add = [&](std::array<int, 6> e, int v) {
    p[e] += v;
  };
  std::array<int, 6> e{};
  add(e, 1);
  e = {}; e[3 + a] = 1; add(e, -1);
  e = {}; e[a] = 1; add(e, -1);
  e = {}; e[3 + b] = -1; add(e, -1);
  e = {}; add(e, 1);
  e = {}; e[3 + b] = -1; e[b] = 1; add(e, 1);
  e = {}; e[c] = -1; add(e, -1);
  e = {}; e[c] = -1; e[3 + c] = 1; add(e, 1);
  e = {}; add(e, 1);
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
  return p;
}

std::string classicalToString(const ClassicalPoly& p) {
  static const char* names[6] = {"x1", "x2", "x3", "y1", "y2", "y3"};
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    mpq_class a = abs(c);
    bool any = false;
    for (int k = 0; k < 6; ++k)
      if (e[k] != 0) any = true;
    if (a != 1 || !any) os << a.get_str();
    bool needStar = a != 1;
    for (int k = 0; k < 6; ++k) {
      if (e[k] == 0) continue;
      if (needStar) os << "*";
      os << names[k];
      if (e[k] != 1) os << "^" << e[k];
      needStar = true;
    }
  }
  return os.str();
}

}  // namespace topvert
