#include "topvert/checks.hpp"

#include "topvert/augmentation.hpp"
#include "topvert/errors.hpp"
#include "topvert/fillings.hpp"
#include "topvert/hopf.hpp"
#include "topvert/parallel.hpp"
#include "topvert/recursion.hpp"
#include "topvert/serialize.hpp"
#include "topvert/skein.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace topvert {

SignMode parseSignMode(const std::string& s) {
  if (s == "auto") return SignMode::Auto;
  if (s == "plus" || s == "+1") return SignMode::Plus;
  if (s == "minus" || s == "-1") return SignMode::Minus;
  throw ParseError("unknown sign mode '" + s + "' (expected auto, plus, minus)");
}

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names{"scalars", "symfunc", "vertex", "recursion", "skein", "abelian", "fillings"};
  return names;
}

std::pair<QScalar, QScalar> skewPieriSides(const Partition& lambda, const Partition& mu, const SpecializationPoint& x,
                                           const SpecializationPoint& y) {
  QScalar lhs, rhs;
  const QScalar sb = schurAt(box(), y);
  for (const auto& eta : subpartitions(lambda)) {
    if (!mu.contains(eta)) continue;
    lhs += skewSchurAt(lambda, eta, x) * sb * skewSchurAt(mu, eta, y);
  }
  for (const auto& beta : mu.addCorners())
    for (const auto& eta : subpartitions(lambda)) rhs += skewSchurAt(lambda, eta, x) * skewSchurAt(beta, eta, y);
  for (const auto& alpha : lambda.removeCorners())
    for (const auto& eta : subpartitions(alpha)) rhs -= skewSchurAt(alpha, eta, x) * skewSchurAt(mu, eta, y);
  return {lhs, rhs};
}

std::pair<QScalar, QScalar> seeSawSides(const Partition& lambda, const Partition& mu, const SpecializationPoint& x,
                                        const SpecializationPoint& y) {
  QScalar lhs, rhs;
  for (const auto& eta : subpartitions(lambda))
    for (const auto& tau : eta.removeCorners()) lhs += skewSchurAt(lambda, eta, x) * skewSchurAt(mu, tau, y);
  for (const auto& alpha : lambda.removeCorners())
    for (const auto& eta : subpartitions(alpha)) rhs += skewSchurAt(alpha, eta, x) * skewSchurAt(mu, eta, y);
  return {lhs, rhs};
}

namespace {

using Checks = std::vector<CheckResult>;

std::vector<Partition> upTo(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m)
    for (const auto& p : partitionsOf(m)) out.push_back(p);
  return out;
}

// Counts failures of pred over items; the detail names the first one.
template <class Items, class Pred, class Name>
CheckResult countCheck(std::string name, const Items& items, Pred pred, Name label) {
  CheckResult r{std::move(name), true, ""};
  std::size_t bad = 0, total = 0;
  std::string first;
  for (const auto& it : items) {
    ++total;
    if (!pred(it)) {
      if (bad++ == 0) first = label(it);
    }
  }
  r.passed = bad == 0;
  std::ostringstream os;
  os << total - bad << "/" << total << " hold";
  if (bad) os << "; first failure " << first;
  r.detail = os.str();
  return r;
}

struct Rng {
  std::mt19937_64 gen{20240611};
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  poly::Poly poly(int maxDeg) {
    poly::Poly p(uniform(1, maxDeg + 1));
    for (auto& c : p) c = uniform(-3, 3);
    poly::trim(p);
    return p;
  }
  QScalar scalar() {
    poly::Poly den;
    while (den.empty()) den = poly(3);
    return QScalar::fromParts(uniform(-3, 3), poly(3), den);
  }
  QScalar nonzero() {
    QScalar v;
    while (v.isZero()) v = scalar();
    return v;
  }
};

std::string str(const TripleLabel& t) { return t.toString(); }

// ---- scalars and partitions

void scalarsSuite(const VerifyOptions&, Checks& out) {
  Rng rng;
  {
    bool ok = true;
    for (int n = 0; n < 100 && ok; ++n) {
      QScalar x = rng.scalar(), y = rng.scalar(), w = rng.scalar(), v = rng.nonzero();
      ok = (x + y) * w == x * w + y * w && v / v == QScalar(1) && (x - x).isZero();
    }
    out.push_back({"scalars.field-axioms", ok, "100 random triples"});
  }
  {
    bool ok = true;
    for (int n = 0; n < 100 && ok; ++n) {
      QScalar x = rng.scalar();
      ok = x.substituteQInverse().substituteQInverse() == x;
    }
    out.push_back({"scalars.q-inverse-involution", ok, "100 random scalars"});
  }
  {
    bool ok = true;
    for (int n = 0; n < 100 && ok; ++n) {
      poly::Poly p = rng.poly(3), q, r;
      while (q.empty()) q = rng.poly(3);
      while (r.empty()) r = rng.poly(2);
      ok = QScalar::canonicalize(0, poly::mul(p, r), 0, poly::mul(q, r)) == QScalar::canonicalize(0, p, 0, q);
    }
    out.push_back({"scalars.canonical-uniqueness", ok, "100 random common factors"});
  }
  {
    Rng local;
    bool ok = true;
    for (int n = 0; n < 50 && ok; ++n) {
      FramedScalar f = FramedScalar::monomial({local.uniform(-2, 2), local.uniform(-2, 2), local.uniform(-2, 2)}, local.scalar());
      ok = f.rotated(3) == f;
    }
    out.push_back({"scalars.framed-rotation-order-3", ok, "50 random monomials"});
  }
  const auto parts8 = upTo(8);
  out.push_back(countCheck(
      "partitions.content-step", parts8,
      [](const Partition& l) {
        for (const auto& b : l.addCorners())
          if (contentPolynomial(b) - contentPolynomial(l) != sPow(kappa(b) - kappa(l))) return false;
        return true;
      },
      [](const Partition& l) { return l.toString(); }));
  out.push_back(countCheck(
      "partitions.corner-adjoint", parts8,
      [](const Partition& l) {
        for (const auto& b : l.addCorners()) {
          auto r = b.removeCorners();
          if (std::find(r.begin(), r.end(), l) == r.end()) return false;
        }
        for (const auto& b : l.removeCorners()) {
          auto a = b.addCorners();
          if (std::find(a.begin(), a.end(), l) == a.end()) return false;
        }
        return true;
      },
      [](const Partition& l) { return l.toString(); }));
  out.push_back(countCheck(
      "partitions.kappa-transpose", upTo(10), [](const Partition& l) { return kappa(l.transpose()) == -kappa(l); },
      [](const Partition& l) { return l.toString(); }));
}

// ---- symmetric functions

void symfuncSuite(const VerifyOptions& opts, Checks& out) {
  const int n = std::min(opts.maxSize, 4);
  std::vector<SpecializationPoint> pts;
  for (const auto& nu : upTo(2)) pts.push_back(plusRho(nu));
  std::vector<std::tuple<Partition, Partition, SpecializationPoint, SpecializationPoint>> cases;
  for (const auto& l : upTo(n))
    for (const auto& m : upTo(n))
      for (const auto& x : pts)
        for (const auto& y : pts) cases.emplace_back(l, m, x, y);
  auto label = [](const auto& c) {
    return std::get<0>(c).toString() + "," + std::get<1>(c).toString() + " at " + std::get<2>(c).nu.toString() + "," +
           std::get<3>(c).nu.toString();
  };
  std::vector<char> pieri(cases.size()), seesaw(cases.size());
  parallelFor(cases.size(), opts.jobs, [&](std::size_t i) {
    const auto& [l, m, x, y] = cases[i];
    auto a = skewPieriSides(l, m, x, y);
    auto b = seeSawSides(l, m, x, y);
    pieri[i] = a.first == a.second;
    seesaw[i] = b.first == b.second;
  });
  std::vector<std::size_t> idx(cases.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  out.push_back(countCheck("symfunc.skew-pieri", idx, [&](std::size_t i) { return pieri[i] != 0; },
                           [&](std::size_t i) { return label(cases[i]); }));
  out.push_back(countCheck("symfunc.see-saw", idx, [&](std::size_t i) { return seesaw[i] != 0; },
                           [&](std::size_t i) { return label(cases[i]); }));
  out.push_back(countCheck(
      "symfunc.box-content", upTo(8),
      [](const Partition& l) {
        return schurAt(box(), plusRho(l)) == QScalar::z() * contentPolynomial(l) + QScalar::z().inverse();
      },
      [](const Partition& l) { return l.toString(); }));
  std::vector<std::pair<Partition, Partition>> flips;
  for (const auto& l : upTo(4))
    for (const auto& nu : upTo(4)) flips.emplace_back(l, nu);
  out.push_back(countCheck(
      "symfunc.eps-flip", flips,
      [](const auto& p) { return schurAt(p.first, minusRhoMinus(p.second)) == schurAt(p.first, plusRho(p.second)).substituteQInverse(); },
      [](const auto& p) { return p.first.toString() + " at " + p.second.toString(); }));
  std::vector<std::pair<Partition, Partition>> pairs;
  for (const auto& m : upTo(6))
    for (const auto& v : upTo(6 - m.size())) pairs.emplace_back(m, v);
  out.push_back(countCheck(
      "symfunc.lr-oracle", pairs,
      [](const auto& p) {
        const int nv = std::max(1, p.first.size() + p.second.size());
        auto expansion = schurExpand(multiply(schurPolynomialFinite(p.first, nv), schurPolynomialFinite(p.second, nv)), nv);
        for (const auto& lam : partitionsOf(p.first.size() + p.second.size())) {
          auto it = expansion.find(lam);
          mpz_class want = it == expansion.end() ? mpz_class(0) : it->second;
          if (want != lrCoefficient(lam, p.first, p.second)) return false;
        }
        return true;
      },
      [](const auto& p) { return p.first.toString() + "*" + p.second.toString(); }));
  std::vector<std::tuple<Partition, Partition, Partition>> assoc;
  for (const auto& l : upTo(5))
    for (const auto& eta : upTo(l.size() - 1 < 0 ? 0 : l.size() - 1))
      for (const auto& d : partitionsOf(std::max(0, l.size() - 1 - eta.size())))
        if (eta.size() + d.size() + 1 == l.size()) assoc.emplace_back(l, eta, d);
  out.push_back(countCheck(
      "symfunc.lr-associativity", assoc,
      [](const auto& c) {
        const auto& [l, eta, d] = c;
        long lhs = 0, rhs = 0;
        for (const auto& a : partitionsOf(l.size() - 1)) {
          lhs += lrCoefficient(l, a, box()) * lrCoefficient(a, eta, d);
        }
        for (const auto& a : partitionsOf(eta.size() + 1)) rhs += lrCoefficient(l, a, d) * lrCoefficient(a, eta, box());
        return lhs == rhs;
      },
      [](const auto& c) { return std::get<0>(c).toString(); }));
}

// ---- vertex

void vertexSuite(const VerifyOptions& opts, Checks& out) {
  const int n = opts.maxSize;
  {
    bool ok = vertexC({}) == QScalar(1) && vertexC({box(), {}, {}}) == QScalar::z().inverse() &&
              vertexC({box(), {}, box()}) == QScalar(1) + (QScalar::z() * QScalar::z()).inverse();
    out.push_back({"vertex.first-values", ok, "C(0,0,0), C(1,0,0), C(1,0,1)"});
  }
  const CoefficientTable c = buildTable(n, VertexFormula::C, opts.jobs);
  const CoefficientTable t = buildTable(n, VertexFormula::T, opts.jobs);
  const CoefficientTable alt = buildTable(n, VertexFormula::Alternate, opts.jobs);
  const CoefficientTable hopf = buildTable(n, VertexFormula::Hopf, opts.jobs);
  const auto triples = triplesUpTo(n);
  out.push_back(countCheck(
      "vertex.cyclic-symmetry", triples, [&](const TripleLabel& x) { return c.at(x) == c.at(x.rotated(2)); }, str));
  out.push_back(countCheck(
      "vertex.transpose-symmetry", triples,
      [&](const TripleLabel& x) {
        TripleLabel y{x.l3.transpose(), x.l2.transpose(), x.l1.transpose()};
        return c.at(x) == c.at(y).timesSPow(kappa(x.l1) + kappa(x.l2) + kappa(x.l3));
      },
      str));
  out.push_back(countCheck(
      "vertex.three-way", triples, [&](const TripleLabel& x) { return t.at(x) == alt.at(x) && t.at(x) == hopf.at(x); }, str));
  std::vector<TripleLabel> two;
  for (const auto& x : triples)
    if (x.l3.empty()) two.push_back(x);
  out.push_back(countCheck(
      "vertex.two-brane-printed", two,
      [&](const TripleLabel& x) { return t.at(x) == sPow(-2 * kappa(x.l2)) * hopfH(x.l1, x.l2.transpose()); }, str));
  out.push_back(countCheck(
      "vertex.two-brane-half-exponent", two,
      [&](const TripleLabel& x) { return t.at(x) == sPow(-kappa(x.l2)) * hopfH(x.l1, x.l2.transpose()); }, str));
  {
    bool ok = true;
    try {
      ok = tableFromJson(json::parse(tableToJson(t).dump()), t.maxSize(), t.formula()) == t;
    } catch (const Error&) {
      ok = false;
    }
    out.push_back({"vertex.table-json-roundtrip", ok, std::to_string(t.size()) + " entries"});
  }
}

// ---- recursion

void recursionSuite(const VerifyOptions& opts, Checks& out) {
  const int n = opts.maxSize;
  const CoefficientTable t = buildTable(n, VertexFormula::T, opts.jobs);
  {
    CheckResult r{"recursion.solve-equals-closed-form", false, ""};
    try {
      std::vector<LevelStats> stats;
      CoefficientTable s = solveRecursion(n, opts.jobs, &stats);
      r.passed = s == t;
      std::ostringstream os;
      os << "levels 0.." << n - 1 << " uniquely solvable;";
      for (const auto& st : stats) os << " " << st.equations << "x" << st.unknowns;
      r.detail = os.str();
    } catch (const UniquenessError& e) {
      r.detail = e.what();
    }
    out.push_back(r);
  }
  std::vector<std::pair<RecursionId, TripleLabel>> cases;
  for (RecursionId id : kAllRecursions)
    for (const auto& x : triplesUpTo(n - 1)) cases.emplace_back(id, x);
  out.push_back(countCheck(
      "recursion.residuals-vanish", cases, [&](const auto& c) { return residual(c.first, c.second, t).isZero(); },
      [](const auto& c) { return recursionName(c.first) + " at " + c.second.toString(); }));
  const int m = std::min(4, n - 1);
  std::vector<std::pair<RecursionId, TripleLabel>> transport;
  for (RecursionId id : kAllRecursions)
    for (const auto& x : triplesUpTo(m)) transport.emplace_back(id, x);
  out.push_back(countCheck(
      "recursion.symmetry-transport", transport,
      [&](const auto& c) {
        // Relabeling every index 1 -> 2 -> 3 carries one functional onto the other.
        std::map<TripleLabel, QScalar> m;
        for (const auto& [l, v] : residualFunctional(c.first, c.second)) m[l.rotated(1)] += v;
        for (const auto& [l, v] : residualFunctional(rotatedRecursion(c.first), c.second.rotated(1))) m[l] -= v;
        for (const auto& [l, v] : m)
          if (!v.isZero()) return false;
        return true;
      },
      [](const auto& c) { return recursionName(c.first) + " at " + c.second.toString(); }));
}

// ---- skein

void skeinSuite(const VerifyOptions& opts, Checks& out) {
  const int n = opts.maxSize;
  const CoefficientTable t = buildTable(n + 1, VertexFormula::T, opts.jobs);
  const SkeinState z = buildZ(n + 1, t);
  for (int k = 1; k <= 3; ++k) {
    AnnihilationReport r = verifyAnnihilation(operatorA(k), k, z, n, opts.jobs);
    std::string d = std::to_string(r.violations.size()) + " violations to size " + std::to_string(n);
    if (!r.ok()) d += "; first at " + r.violations.front().first.toString();
    out.push_back({"skein.annihilation-A" + std::to_string(k), r.ok(), d});
  }
  std::vector<std::pair<int, Partition>> cancel;
  for (int k = 1; k <= 3; ++k)
    for (const auto& l : upTo(6)) cancel.emplace_back(k, l);
  out.push_back(countCheck(
      "skein.mixed-sector-cancellation", cancel,
      [](const auto& c) {
        BasisLabel b;
        b.lambda[c.first - 1] = c.second;
        OperatorSum op{{c.first, 0, -1, FramedScalar(1)}, {c.first, 1, -1, -FramedScalar::a(c.first)}};
        SkeinState st;
        st.add(b, FramedScalar(1));
        const SkeinState img = applyOperator(op, st);
        for (const auto& [l, v] : img.terms())
          if (l.mixed()) return false;
        return true;
      },
      [](const auto& c) { return "component " + std::to_string(c.first) + " " + c.second.toString(); }));
  std::vector<std::pair<int, Partition>> diag;
  for (int k = 1; k <= 3; ++k)
    for (const auto& l : upTo(8)) diag.emplace_back(k, l);
  out.push_back(countCheck(
      "skein.diagonal-identities", diag,
      [](const auto& c) {
        const int k = c.first;
        BasisLabel b;
        b.lambda[k - 1] = c.second;
        auto d1 = applyPToLabel(0, 0, k, b).coefficient(b) - applyPToLabel(1, 0, k, b).coefficient(b);
        auto d2 = applyPToLabel(-1, 0, k, b).coefficient(b) - applyPToLabel(0, 0, k, b).coefficient(b);
        QScalar box1 = schurAt(box(), plusRho(c.second)) - schurAt(box(), rho());
        QScalar box2 = schurAt(box(), plusRho(c.second.transpose())) - schurAt(box(), rho());
        return d1 == -(FramedScalar::a(k) * FramedScalar(box1)) && d2 == -(FramedScalar::a(k, -1) * FramedScalar(box2));
      },
      [](const auto& c) { return "component " + std::to_string(c.first) + " " + c.second.toString(); }));
  std::vector<std::pair<int, TripleLabel>> props;
  for (int k = 1; k <= 3; ++k)
    for (const auto& x : triplesUpTo(std::min(4, n))) props.emplace_back(k, x);
  out.push_back(countCheck(
      "skein.constraint-split", props,
      [](const auto& c) {
        const int k = c.first;
        ConstraintSplit sp = splitConstraint(k, coefficientConstraint(k, c.second));
        auto [r0, r2] = constraintRecursions(k);
        auto same = [](const LinearFunctional& a, const LinearFunctional& b, int sign) {
          std::map<TripleLabel, QScalar> m;
          for (const auto& [l, v] : a) m[l] += v;
          for (const auto& [l, v] : b) m[l] -= sign > 0 ? v : -v;
          for (const auto& [l, v] : m)
            if (!v.isZero()) return false;
          return true;
        };
        if (!sp.aFree) return false;
        for (const auto& [e, f] : sp.parts)
          if (e != 0 && e != 2 && !f.empty()) return false;
        auto part = [&](int e) { auto it = sp.parts.find(e); return it == sp.parts.end() ? LinearFunctional{} : it->second; };
        return same(part(0), residualFunctional(r0, c.second), -1) && same(part(2), residualFunctional(r2, c.second), 1);
      },
      [](const auto& c) { return "k=" + std::to_string(c.first) + " " + c.second.toString(); }));
  {
    CheckResult r{"skein.monomial-solve", false, ""};
    try {
      MonomialSolution s = solveMonomialCoefficients(knownLeadingValues());
      OperatorSum want = operatorA(1);
      bool ok = s.op.size() == want.size();
      for (std::size_t i = 0; ok && i < want.size(); ++i)
        ok = s.op[i].component == want[i].component && s.op[i].i == want[i].i && s.op[i].j == want[i].j &&
             s.op[i].coef == want[i].coef;
      r.passed = ok;
      r.detail = operatorToString(s.op);
    } catch (const Error& e) {
      r.detail = e.what();
    }
    out.push_back(r);
  }
}

// ---- abelian

std::vector<int> signsFor(SignMode m) {
  if (m == SignMode::Plus) return {1};
  if (m == SignMode::Minus) return {-1};
  return {1, -1};
}

std::string seriesReportDetail(const SeriesReport& r) {
  std::ostringstream os;
  os << r.violations.size() << " violations to degree " << r.checkDegree;
  if (!r.ok()) {
    const auto& e = r.violations.front().first;
    os << "; first at x^(" << e[0] << "," << e[1] << "," << e[2] << ")";
  }
  return os.str();
}

CheckResult annihilationCheck(const std::string& name, const AbelianOperator& op, const LaurentSeries3& z, int degree) {
  try {
    SeriesReport r = verifyAbelianAnnihilation(op, z, degree);
    return {name, r.ok(), seriesReportDetail(r)};
  } catch (const DivisibilityError& e) {
    return {name, false, std::string("divisibility: ") + e.what()};
  }
}

void abelianSuite(const VerifyOptions& opts, Checks& out) {
  const int d = opts.degree;
  const LaurentSeries3 z = specializeZ(d + 1);
  for (int i = 1; i <= 3; ++i)
    out.push_back(annihilationCheck("abelian.main-annihilation-A" + std::to_string(i), abelianOperator(Family::Main, i), z, d));
  {
    CheckResult r{"abelian.direct-sign-reconciliation", false, ""};
    std::string tried;
    for (int eps : signsFor(opts.sign)) {
      tried += (tried.empty() ? "" : ", ") + std::string(eps > 0 ? "+1" : "-1");
      if (abelianZDirect(d + 1, eps) == z) {
        r.passed = true;
        r.detail = std::string("agrees with eps = ") + (eps > 0 ? "+1" : "-1");
        break;
      }
    }
    if (!r.passed) r.detail = "no global eps in {" + tried + "} matches the specialized T";
    out.push_back(r);
  }
  {
    bool ok = abelianZDirect(d + 1, 1) == vertexCGeneratingSeries(d + 1);
    out.push_back({"abelian.direct-equals-C-series", ok, "printed sum vs sum_k C_(k1),(k2),(k3) x^k"});
  }
  {
    Rng rng;
    bool ok = true;
    for (int n = 0; n < 100 && ok; ++n) {
      LaurentSeries3 f(8, {0, 0, 0});
      for (int m = 0; m < 4; ++m) f.add({rng.uniform(0, 2), rng.uniform(0, 2), rng.uniform(0, 2)}, rng.scalar());
      ok = torusDefect(rng.uniform(0, 2), f).isZero();
    }
    out.push_back({"abelian.quantum-torus", ok, "100 random series"});
  }
  {
    bool ok = true;
    for (int i = 1; i <= 3; ++i) ok = ok && dequantize(abelianOperator(Family::Main, i)) == printedClassicalA(i);
    out.push_back({"abelian.dequantization", ok, "q = 1 matches the printed A_i"});
  }
  {
    CheckResult r{"abelian.augmentation-branch", false, ""};
    try {
      AugmentationBranch b = solveAugmentationBranch(4);
      bool ok = true;
      for (int i = 1; i <= 3; ++i) ok = ok && clearedResidual(i, b.y, 4).empty();
      r.passed = ok;
      r.detail = "y1 = " + jetToString(b.y[0]) + ", y2 = " + jetToString(b.y[1]) + ", y3 = " + jetToString(b.y[2]);
    } catch (const BranchError& e) {
      r.detail = e.what();
    }
    out.push_back(r);
  }
}

// ---- fillings

void fillingsSuite(const VerifyOptions& opts, Checks& out) {
  const int n = opts.maxSize, d = opts.degree;
  std::vector<Family> fams{Family::F2, Family::F3, Family::F4};
  if (opts.filling) fams = {*opts.filling};
  std::vector<std::pair<Partition, Partition>> hp;
  for (const auto& l : upTo(n))
    for (const auto& m : upTo(n)) hp.emplace_back(l, m);
  out.push_back(countCheck(
      "fillings.hopf-forms-and-symmetry", hp,
      [](const auto& p) {
        try {
          return hopfH(p.first, p.second) == hopfH(p.second, p.first);
        } catch (const FormulaDivergenceError&) {
          return false;
        }
      },
      [](const auto& p) { return p.first.toString() + "," + p.second.toString(); }));
  out.push_back(countCheck(
      "fillings.disk-hook-content", upTo(8), [](const Partition& l) { return diskHookContent(l) == schurAt(l, minusRho()); },
      [](const Partition& l) { return l.toString(); }));
  for (Family f : fams) {
    const std::string fn = familyName(f);
    {
      // F4 has no sign to reconcile; F2/F3 pass if some allowed eps works.
      std::vector<int> signs = f == Family::F4 ? std::vector<int>{1} : signsFor(opts.sign);
      CheckResult r{"fillings.u1-annihilation-" + fn, false, ""};
      for (int eps : signs) {
        const LaurentSeries3 zf = abelianZFilling(f, d + 1, eps);
        bool all = true;
        std::string detail;
        for (int i = 1; i <= 3; ++i) {
          CheckResult c = annihilationCheck("", abelianOperator(f, i), zf, d);
          all = all && c.passed;
          if (!c.passed && detail.empty()) detail = "A" + std::to_string(i) + ": " + c.detail;
        }
        std::string tag = f == Family::F4 ? "" : std::string(eps > 0 ? "eps = +1: " : "eps = -1: ");
        if (all) {
          r.passed = true;
          r.detail = tag + "A1, A2, A3 vanish to degree " + std::to_string(d);
          break;
        }
        r.detail += (r.detail.empty() ? "" : "; ") + tag + detail;
      }
      out.push_back(r);
    }
    if (f == Family::F4) {
      const LaurentSeries3 zs = abelianZF4Shifted(d + 1);
      bool all = true;
      for (int i = 1; i <= 3; ++i) all = all && annihilationCheck("", abelianOperator(f, i), zs, d).passed;
      out.push_back({"fillings.u1-annihilation-F4-half-shift", all, "x_i -> q^{1/2} x_i in the product"});
      // Independent expansion: the prefactor times three Euler series.
      const int order = std::max(d, 8);
      LaurentSeries3 pre(order, familyLower(f));
      pre.add({0, 0, 0}, QScalar(1));
      auto factor = [&](Exp3 e) {
        LaurentSeries3 s(order, familyLower(f));
        s.add({0, 0, 0}, QScalar(1));
        s.add(e, QScalar(-1));
        return s;
      };
      LaurentSeries3 prod = pre * factor({1, -1, 0});
      prod = prod.withLower(familyLower(f)) * factor({1, 0, -1});
      prod = prod.withLower(familyLower(f)) * factor({0, 1, -1});
      for (int v = 0; v < 3; ++v) {
        Exp3 e{0, 0, 0};
        e[v] = 1;
        prod = prod.withLower(familyLower(f)) * pochhammerInverseInfinite(QScalar(1), e, order);
      }
      bool ok = prod.withLower(familyLower(f)) == abelianZFilling(f, order);
      out.push_back({"fillings.F4-euler-product", ok, "to degree " + std::to_string(order)});
    }
  }
  {
    bool ok = true;
    for (int i = -3; i <= 3; ++i)
      for (int j = -3; j <= 3; ++j) {
        int sign = 1, a = i, b = j;
        for (int r = 0; r < 3; ++r) {
          auto [s, ij] = slTwoZMap(a, b);
          sign *= s;
          a = ij.first;
          b = ij.second;
        }
        ok = ok && sign == 1 && a == i && b == j;
      }
    out.push_back({"fillings.sl2z-cube", ok, "|i|,|j| <= 3"});
  }
  for (Family f : fams) {
    const std::string fn = familyName(f);
    bool ok = true;
    std::string detail;
    for (const auto& c : structuralIndexCheck(f)) {
      ok = ok && c.ok;
      if (!c.ok && detail.empty()) detail = "component " + std::to_string(c.component) + " " + c.detail;
    }
    out.push_back({"fillings.index-transport-" + fn, ok, ok ? "groups match the main operators" : detail});
    SkeinState zf = buildFillingZ(f, n);
    AnsatzReport ar = verifyAnsatz(f, zf);
    out.push_back({"fillings.ansatz-" + fn, ar.ok(),
                   std::to_string(ar.violations.size()) + " violations on " + std::to_string(zf.terms().size()) + " labels"});
    // Gluing cross-check against the two-brane vertex.
    SkeinState glued;
    if (f == Family::F4) {
      glued = glueProduct(glueProduct(psiBlock({PsiKind::Twisted, 1, 2}, n), psiBlock({PsiKind::Twisted, 2, 3}, n), n),
                          psiBlock({PsiKind::Disk, 3}, n), n);
    } else {
      SkeinState z2;
      for (const auto& x : triplesUpTo(n)) {
        if (!x.l1.empty()) continue;
        BasisLabel b;
        b.lambda[1] = x.l2;
        b.lambda[2] = x.l3;
        z2.add(b, f == Family::F2 ? vertexT({Partition(), x.l2, x.l3}) : vertexT({x.l3, x.l2, Partition()}));
      }
      glued = glueProduct(psiBlock({PsiKind::Twisted, 1, 2}, n), z2, n);
    }
    out.push_back({"fillings.glue-" + fn, truncateLambda(glued, n) == zf, "glued blocks vs closed form"});
  }
  {
    SkeinState dd = glueProduct(psiBlock({PsiKind::Disk, 1}, n), psiBlock({PsiKind::Disk, 2}, n), n);
    SkeinState printed = starProduct({{1, -1}, {2, 0}}, psiBlock({PsiKind::AntiAnnulus, 1, 2, -1, 0}, n), dd, n);
    SkeinState mid;
    for (const auto& b : upTo(n)) {
      BasisLabel l;
      l.lambda[0] = b;
      l.lambda[1] = b.transpose();
      mid.add(l, sPow(-kappa(b)));
    }
    SkeinState middle = starProduct({{1, -1}, {2, 0}}, mid, dd, n);
    std::vector<TripleLabel> two;
    for (const auto& x : triplesUpTo(n))
      if (x.l3.empty()) two.push_back(x);
    out.push_back(countCheck(
        "fillings.two-brane-star-printed", two,
        [&](const TripleLabel& x) { return printed.coefficient(BasisLabel::pure(x)) == FramedScalar(vertexT(x)); }, str));
    out.push_back(countCheck(
        "fillings.two-brane-star-middle-line", two,
        [&](const TripleLabel& x) { return middle.coefficient(BasisLabel::pure(x)) == FramedScalar(vertexT(x)); }, str));
  }
}

}  // namespace

std::vector<CheckResult> runSuite(const std::string& suite, const VerifyOptions& opts) {
  if (opts.maxSize < 1) throw PreconditionError("verify needs --max-size >= 1");
  if (opts.degree < 0) throw PreconditionError("verify needs --degree >= 0");
  static const std::map<std::string, std::function<void(const VerifyOptions&, Checks&)>> table{
      {"scalars", scalarsSuite}, {"symfunc", symfuncSuite}, {"vertex", vertexSuite},   {"recursion", recursionSuite},
      {"skein", skeinSuite},     {"abelian", abelianSuite}, {"fillings", fillingsSuite}};
  Checks out;
  if (suite == "all") {
    for (const auto& name : suiteNames()) table.at(name)(opts, out);
    return out;
  }
  auto it = table.find(suite);
  if (it == table.end()) throw ParseError("unknown suite '" + suite + "'");
  it->second(opts, out);
  return out;
}

}  // namespace topvert
