// One PASS/FAIL line per acceptance criterion, followed by indented detail.
// Exit status is nonzero if any criterion fails.

#include "cli.hpp"

#include "topvert/abelian.hpp"
#include "topvert/checks.hpp"
#include "topvert/errors.hpp"
#include "topvert/fillings.hpp"
#include "topvert/hopf.hpp"
#include "topvert/parallel.hpp"
#include "topvert/recursion.hpp"
#include "topvert/skein.hpp"
#include "topvert/symfunc.hpp"
#include "topvert/vertex.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>

using namespace topvert;

namespace {

const int kJobs = 0;  // all cores

struct Criterion {
  int id;
  std::string title;
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    ok = ok && cond;
    notes.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
  }
  void info(const std::string& what) { notes.push_back("info " + what); }
};

std::vector<Partition> upTo(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m)
    for (const auto& p : partitionsOf(m)) out.push_back(p);
  return out;
}

// Counts indices where pred fails, in parallel; returns (failures, first failing index).
template <class Pred>
std::pair<std::size_t, std::size_t> countFailures(std::size_t n, Pred pred) {
  std::vector<char> bad(n, 0);
  parallelFor(n, kJobs, [&](std::size_t i) { bad[i] = !pred(i); });
  std::size_t count = 0, first = n;
  for (std::size_t i = 0; i < n; ++i)
    if (bad[i]) {
      if (count++ == 0) first = i;
    }
  return {count, first};
}

std::string counted(std::size_t bad, std::size_t total) {
  return std::to_string(total - bad) + "/" + std::to_string(total);
}

Criterion c1() {
  Criterion c{1, "first values of C"};
  const QScalar iz = QScalar::z().inverse();
  const Partition e, b{1};
  c.require(vertexC({e, e, e}) == QScalar(1), "C(0,0,0) = 1");
  c.require(vertexC({b, e, e}) == iz, "C(1,0,0) = 1/z");
  c.require(vertexC({b, e, b}) == iz * iz + QScalar(1), "C(1,0,1) = 1/z^2 + 1");
  return c;
}

Criterion c2() {
  Criterion c{2, "recursion solve equals the closed form to size 6"};
  std::vector<LevelStats> stats;
  try {
    CoefficientTable solved = solveRecursion(6, kJobs, &stats);
    CoefficientTable closed = buildTable(6, VertexFormula::T, kJobs);
    for (const auto& s : stats)
      c.info("level " + std::to_string(s.level) + ": " + std::to_string(s.equations) + " equations, " +
             std::to_string(s.unknowns) + " unknowns, full column rank");
    c.require(solved == closed, std::to_string(closed.size()) + " entries equal");
  } catch (const UniquenessError& e) {
    c.require(false, e.what());
  }
  return c;
}

Criterion c3() {
  Criterion c{3, "A_1, A_2, A_3 annihilate Z built to size 6, checked to size 5"};
  const SkeinState z = buildZ(6, buildTable(6, VertexFormula::T, kJobs));
  for (int k = 1; k <= 3; ++k) {
    AnnihilationReport r = verifyAnnihilation(operatorA(k), k, z, 5, kJobs);
    c.require(r.ok(), "A" + std::to_string(k) + ": " + std::to_string(r.violations.size()) + " nonzero coefficients");
  }
  return c;
}

Criterion c4() {
  Criterion c{4, "constraint split equals the recursion pair, size <= 4"};
  auto same = [](const LinearFunctional& a, const LinearFunctional& b, int sign) {
    std::map<TripleLabel, QScalar> m;
    for (const auto& [l, v] : a) m[l] += v;
    for (const auto& [l, v] : b) m[l] -= sign > 0 ? v : -v;
    for (const auto& [l, v] : m)
      if (!v.isZero()) return false;
    return true;
  };
  const auto triples = triplesUpTo(4);
  for (int k = 1; k <= 3; ++k) {
    auto [r0, r2] = constraintRecursions(k);
    auto [bad, first] = countFailures(triples.size(), [&](std::size_t i) {
      ConstraintSplit sp = splitConstraint(k, coefficientConstraint(k, triples[i]));
      if (!sp.aFree) return false;
      for (const auto& [e, f] : sp.parts)
        if (e != 0 && e != 2 && !f.empty()) return false;
      auto part = [&](int e) {
        auto it = sp.parts.find(e);
        return it == sp.parts.end() ? LinearFunctional{} : it->second;
      };
      return same(part(0), residualFunctional(r0, triples[i]), -1) && same(part(2), residualFunctional(r2, triples[i]), 1);
    });
    c.require(bad == 0, "k=" + std::to_string(k) + ": a^0 = -" + recursionName(r0) + ", a^2 = +" + recursionName(r2) +
                            " on " + counted(bad, triples.size()) + " triples");
  }
  return c;
}

Criterion c5() {
  Criterion c{5, "monomial solve recovers A_1"};
  MonomialSolution s = solveMonomialCoefficients(knownLeadingValues());
  const OperatorSum want = operatorA(1);
  bool ok = s.op.size() == want.size();
  for (std::size_t i = 0; ok && i < want.size(); ++i)
    ok = s.op[i].component == want[i].component && s.op[i].i == want[i].i && s.op[i].j == want[i].j &&
         s.op[i].coef == want[i].coef;
  c.require(ok, "nine signed monomials: " + operatorToString(s.op));
  return c;
}

Criterion c6() {
  Criterion c{6, "skew Pieri and see-saw at q^{nu+rho}, |nu| <= 2, |lambda|,|mu| <= 4"};
  struct Case {
    Partition l, m, a, b;
  };
  std::vector<Case> cases;
  for (const auto& a : upTo(2))
    for (const auto& b : upTo(2))
      for (const auto& l : upTo(4))
        for (const auto& m : upTo(4)) cases.push_back({l, m, a, b});
  auto [bp, fp] = countFailures(cases.size(), [&](std::size_t i) {
    auto [x, y] = skewPieriSides(cases[i].l, cases[i].m, plusRho(cases[i].a), plusRho(cases[i].b));
    return x == y;
  });
  c.require(bp == 0, "skew Pieri " + counted(bp, cases.size()));
  auto [bs, fs] = countFailures(cases.size(), [&](std::size_t i) {
    auto [x, y] = seeSawSides(cases[i].l, cases[i].m, plusRho(cases[i].a), plusRho(cases[i].b));
    return x == y;
  });
  c.require(bs == 0, "see-saw " + counted(bs, cases.size()));
  return c;
}

Criterion c7() {
  Criterion c{7, "U(1): annihilation to degree 7, torus relation, dequantization, sign reconciliation to degree 8"};
  const LaurentSeries3 z8 = specializeZ(8);
  for (int i = 1; i <= 3; ++i) {
    SeriesReport r = verifyAbelianAnnihilation(abelianOperator(Family::Main, i), z8, 7);
    c.require(r.ok(), "main A" + std::to_string(i) + " on the specialized T: " + std::to_string(r.violations.size()) +
                          " violations to degree 7");
  }
  {
    std::uint64_t st = 0x2545F4914F6CDD1Dull;
    auto next = [&](int lo, int hi) {
      st ^= st << 13;
      st ^= st >> 7;
      st ^= st << 17;
      return lo + static_cast<int>(st % static_cast<std::uint64_t>(hi - lo + 1));
    };
    bool ok = true;
    for (int n = 0; n < 100; ++n) {
      LaurentSeries3 f(6, {0, 0, 0});
      for (int m = 0; m < 5; ++m)
        f.add({next(0, 2), next(0, 2), next(0, 2)}, QScalar(next(-4, 4)) * sPow(next(-3, 3)) / (QScalar(1) - sPow(next(1, 4))));
      ok = ok && torusDefect(next(0, 2), f).isZero();
    }
    c.require(ok, "Y_i X_i = q X_i Y_i on 100 random series");
  }
  bool deq = true;
  for (int i = 1; i <= 3; ++i) deq = deq && dequantize(abelianOperator(Family::Main, i)) == printedClassicalA(i);
  c.require(deq, "q = 1 reproduces the printed A_i");
  const LaurentSeries3 z9 = specializeZ(9).truncated(8);
  int found = 0;
  for (int eps : {1, -1}) {
    const LaurentSeries3 d = abelianZDirect(9, eps).truncated(8);
    std::size_t diff = 0;
    for (const auto& [e, v] : d.terms())
      if (z9.coefficient(e) != v) ++diff;
    for (const auto& [e, v] : z9.terms())
      if (d.coefficient(e).isZero() && !v.isZero()) ++diff;
    c.info(std::string("eps = ") + (eps > 0 ? "+1" : "-1") + ": " + std::to_string(diff) + " differing coefficients to degree 8");
    if (diff == 0) found = eps;
  }
  c.require(found != 0, found ? std::string("reconciled with eps = ") + (found > 0 ? "+1" : "-1")
                              : "no single global eps reconciles the printed sum with the specialized T");
  c.info(std::string("printed sum equals sum_k C_(k1),(k2),(k3) x^k to degree 8: ") +
         (abelianZDirect(9).truncated(8) == vertexCGeneratingSeries(9).truncated(8) ? "yes" : "no"));
  return c;
}

Criterion c8() {
  Criterion c{8, "fillings: Hopf forms, two-brane reduction, U(1) annihilation, F4 product, SL(2,Z), ansatz"};
  {
    const auto ps = upTo(6);
    std::vector<std::pair<Partition, Partition>> pairs;
    for (const auto& l : ps)
      for (const auto& m : ps) pairs.emplace_back(l, m);
    auto [bad, first] = countFailures(pairs.size(), [&](std::size_t i) {
      try {
        return hopfH(pairs[i].first, pairs[i].second) == hopfH(pairs[i].second, pairs[i].first);
      } catch (const FormulaDivergenceError&) {
        return false;
      }
    });
    c.require(bad == 0, "Hopf forms agree and H is symmetric on " + counted(bad, pairs.size()) + " pairs");
  }
  {
    std::vector<TripleLabel> two;
    for (const auto& t : triplesUpTo(6))
      if (t.l3.empty()) two.push_back(t);
    auto printed = countFailures(two.size(), [&](std::size_t i) {
      return vertexT(two[i]) == qPow(-kappa(two[i].l2)) * hopfH(two[i].l1, two[i].l2.transpose());
    });
    auto halved = countFailures(two.size(), [&](std::size_t i) {
      return vertexT(two[i]) == sPow(-kappa(two[i].l2)) * hopfH(two[i].l1, two[i].l2.transpose());
    });
    c.require(printed.first == 0, "T(l1,l2,0) = q^{-kappa(l2)} H(l1,l2^t) holds on " + counted(printed.first, two.size()) +
                                      (printed.first ? "; first failure " + two[printed.second].toString() : ""));
    c.info("with q^{-kappa(l2)/2} instead: " + counted(halved.first, two.size()));
  }
  for (Family f : {Family::F2, Family::F3, Family::F4}) {
    const LaurentSeries3 zf = buildFillingZU1(f, 7);
    bool all = true;
    std::string first;
    for (int i = 1; i <= 3; ++i) {
      try {
        SeriesReport r = verifyAbelianAnnihilation(abelianOperator(f, i), zf, 6);
        if (!r.ok() && first.empty()) first = "; A" + std::to_string(i) + " has " + std::to_string(r.violations.size()) + " violations";
        all = all && r.ok();
      } catch (const DivisibilityError& e) {
        all = false;
        if (first.empty()) first = std::string("; ") + e.what();
      }
    }
    c.require(all, familyName(f) + " operators annihilate the printed series to degree 6" + first);
  }
  {
    bool shifted = true;
    const LaurentSeries3 zs = abelianZF4Shifted(7);
    for (int i = 1; i <= 3; ++i) shifted = shifted && verifyAbelianAnnihilation(abelianOperator(Family::F4, i), zs, 6).ok();
    c.info(std::string("F4 with (q^{1/2} x_i; q)_inf in the product: ") + (shifted ? "annihilated" : "not annihilated"));
  }
  {
    const int order = 8;
    const Exp3 lo = familyLower(Family::F4);
    auto factor = [&](Exp3 e) {
      LaurentSeries3 s(order, lo);
      s.add({0, 0, 0}, QScalar(1));
      s.add(e, QScalar(-1));
      return s;
    };
    LaurentSeries3 prod = factor({1, -1, 0});
    prod = prod.withLower(lo) * factor({1, 0, -1});
    prod = prod.withLower(lo) * factor({0, 1, -1});
    for (int v = 0; v < 3; ++v) {
      Exp3 e{0, 0, 0};
      e[v] = 1;
      prod = prod.withLower(lo) * pochhammerInverseInfinite(QScalar(1), e, order);
    }
    c.require(prod.withLower(lo) == buildFillingZU1(Family::F4, order), "F4 series equals the Euler product to degree 8");
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
    c.require(ok, "SL(2,Z) map cubes to the identity on |i|,|j| <= 3");
  }
  for (Family f : {Family::F2, Family::F3, Family::F4}) {
    SkeinState s = buildFillingZ(f, 6);
    AnsatzReport r = verifyAnsatz(f, s);
    c.require(r.ok(), familyName(f) + " ansatz: " + std::to_string(r.violations.size()) + " violations on " +
                          std::to_string(s.terms().size()) + " labels");
  }
  return c;
}

Criterion c9() {
  Criterion c{9, "oracle cross-checks: LR against Schur products, three T formulas"};
  struct Case {
    Partition mu, nu;
  };
  std::vector<Case> cases;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b)
      for (const auto& mu : partitionsOf(a))
        for (const auto& nu : partitionsOf(b)) cases.push_back({mu, nu});
  const int nvars = 8;
  auto [bad, first] = countFailures(cases.size(), [&](std::size_t i) {
    const auto& [mu, nu] = cases[i];
    auto expansion = schurExpand(multiply(schurPolynomialFinite(mu, nvars), schurPolynomialFinite(nu, nvars)), nvars);
    for (const auto& lam : partitionsOf(mu.size() + nu.size())) {
      auto it = expansion.find(lam);
      const mpz_class want = it == expansion.end() ? mpz_class(0) : it->second;
      if (want != lrCoefficient(lam, mu, nu)) return false;
    }
    return true;
  });
  c.require(bad == 0, "LR coefficients match s_mu s_nu in 8 variables for " + counted(bad, cases.size()) + " pairs");
  const auto triples = triplesUpTo(5);
  auto [bt, ft] = countFailures(triples.size(), [&](std::size_t i) {
    const QScalar v = vertexT(triples[i]);
    return v == vertexTAlternate(triples[i]) && v == vertexTviaHopf(triples[i]);
  });
  c.require(bt == 0, "T = alternate = via Hopf on " + counted(bt, triples.size()) + " triples");
  return c;
}

Criterion c10() {
  Criterion c{10, "verify --suite all is byte-identical across parallelism widths"};
  auto run = [](const std::string& jobs) {
    std::vector<std::string> args{"topvert", "verify", "--suite", "all", "--jobs", jobs};
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = topvert::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return std::make_pair(code, out.str() + err.str());
  };
  auto a = run("1");
  auto b = run("4");
  c.require(!a.second.empty() && a == b, "jobs 1 vs jobs 4: " + std::to_string(a.second.size()) + " bytes, exit " +
                                             std::to_string(a.first) + (a == b ? ", identical" : ", DIFFERENT"));
  return c;
}

}  // namespace

int main() {
  using Fn = Criterion (*)();
  const Fn all[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  int failed = 0;
  for (Fn fn : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes.push_back(std::string("FAIL exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!c.ok) ++failed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (c.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << secs << " s)";
    std::cout << line.str() << "\n";
    for (const auto& n : c.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  std::cout << (10 - failed) << "/10 criteria pass\n";
  return failed == 0 ? 0 : 1;
}
