#include "topvert/abelian.hpp"
#include "topvert/errors.hpp"
#include "topvert/fillings.hpp"
#include "topvert/hopf.hpp"
#include "topvert/series.hpp"
#include "topvert/symfunc.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace topvert;

namespace {

const QScalar z = QScalar::z();
const Partition E;
const Partition B{1};

BasisLabel lab(std::array<Partition, 3> l, std::array<Partition, 3> m = {}) { return {l, m}; }

SkeinState one(const BasisLabel& l, const QScalar& c = QScalar(1)) {
  SkeinState s;
  s.add(l, FramedScalar(c));
  return s;
}

std::vector<Partition> upTo(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m)
    for (const auto& p : partitionsOf(m)) out.push_back(p);
  return out;
}

// A small random single-component state.
SkeinState randomState(int seed) {
  SkeinState s;
  int k = 0;
  for (const auto& p : upTo(2)) {
    if ((seed >> k++) & 1) s.add(lab({p, E, E}), FramedScalar(QScalar(1 + k) * sPow(seed % 3)));
  }
  return s;
}

std::set<std::pair<int, int>> indices(const OperatorSum& op, int comp) {
  std::set<std::pair<int, int>> out;
  for (const auto& t : op)
    if (t.component == comp) out.insert({t.i, t.j});
  return out;
}

}  // namespace

TEST_SUITE("fillings") {

TEST_CASE("disk block") {
  SkeinState d = psiBlock({PsiKind::Disk, 1}, 3);
  CHECK(d.coefficient(BasisLabel{}) == FramedScalar(1));
  CHECK(d.coefficient(lab({B, E, E})) == FramedScalar(-z.inverse()));
  for (const auto& l : upTo(8)) CHECK(diskHookContent(l) == schurAt(l, minusRho()));
  // The whole-power reading is a different function already at one box.
  CHECK(diskHookContentWholePowers(B) == sPow(2) / (QScalar(1) - sPow(4)));
  CHECK(diskHookContentWholePowers(B) != diskHookContent(B));
}

TEST_CASE("twisted block") {
  SkeinState t = psiBlock({PsiKind::Twisted, 1, 2}, 2);
  CHECK(t.coefficient(BasisLabel{}) == FramedScalar(1));
  CHECK(t.coefficient(lab({B, E, E}, {E, B, E})) == FramedScalar(-1));
  CHECK(t.coefficient(lab({Partition{2}, E, E}, {E, Partition{1, 1}, E})) == FramedScalar(1));
}

TEST_CASE("star product") {
  const SkeinState w0 = one(BasisLabel{}), wb = one(lab({B, E, E}));
  for (const auto& mu : upTo(3)) CHECK(starProduct(0, 1, w0, one(lab({mu, E, E}))) == one(lab({mu, E, E})));
  SkeinState sq = starProduct(0, 1, wb, wb);
  SkeinState want = one(lab({Partition{2}, E, E}));
  want += one(lab({Partition{1, 1}, E, E}));
  CHECK(sq == want);
  SkeinState tw = starProduct(1, 1, wb, wb);
  CHECK(tw.coefficient(lab({Partition{2}, E, E})) == FramedScalar(sPow(2)));
  CHECK(tw.coefficient(lab({Partition{1, 1}, E, E})) == FramedScalar(sPow(-2)));
}

TEST_CASE("star product is associative for every framing") {
  // With LR multiplicity the framing factors telescope, so f = 1 is as
  // associative as f = 0; no witness triple exists.
  for (int f : {0, 1, -1, 2})
    for (int a = 1; a < 16; a += 3)
      for (int b = 2; b < 16; b += 5)
        for (int c = 1; c < 16; c += 7) {
          SkeinState x = randomState(a), y = randomState(b), w = randomState(c);
          CHECK(starProduct(f, 1, starProduct(f, 1, x, y), w) == starProduct(f, 1, x, starProduct(f, 1, y, w)));
        }
}

TEST_CASE("glue product") {
  SkeinState g = glueProduct(one(lab({B, E, E})), one(lab({E, E, E}, {B, E, E})));
  CHECK(g == one(lab({B, E, E}, {B, E, E})));
  CHECK(glueProduct(one(BasisLabel{}), one(BasisLabel{})) == one(BasisLabel{}));
  CHECK_THROWS_AS(glueProduct(one(lab({B, E, E})), one(lab({B, E, E}))), GluingError);
  const int n = 4;
  SkeinState glued = glueProduct(glueProduct(psiBlock({PsiKind::Twisted, 1, 2}, n), psiBlock({PsiKind::Twisted, 2, 3}, n), n),
                                 psiBlock({PsiKind::Disk, 3}, n), n);
  SkeinState zf = buildFillingZ(Family::F4, n);
  CHECK(truncateLambda(glued, n) == zf);
  for (const auto& l1 : upTo(2))
    for (const auto& l2 : upTo(1))
      for (const auto& l3 : upTo(1)) {
        QScalar sign = (l1.size() + l2.size()) % 2 ? QScalar(-1) : QScalar(1);
        CHECK(zf.coefficient(lab({l1, l2, l3}, {E, l1.transpose(), l2.transpose()})) ==
              FramedScalar(sign * schurAt(l3, minusRho())));
      }
}

TEST_CASE("filling partition functions") {
  for (Family f : {Family::F2, Family::F3, Family::F4}) {
    SkeinState s = buildFillingZ(f, 4);
    CHECK(s.coefficient(BasisLabel{}) == FramedScalar(1));
    CHECK(verifyAnsatz(f, s).ok());
  }
  SkeinState bad = buildFillingZ(Family::F2, 2);
  const BasisLabel odd = lab({E, B, E}, {B, E, E});
  bad.add(odd, FramedScalar(1));
  AnsatzReport r = verifyAnsatz(Family::F2, bad);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0] == odd);
}

TEST_CASE("U(1) series of the fillings") {
  // F4: prefactor (1 - x1/x2)(1 - x1/x3)(1 - x2/x3) times three Euler series,
  // multiplied out here by hand.
  const int order = 6;
  auto euler = [](int k) {
    QScalar d(1);
    for (int j = 1; j <= k; ++j) d *= QScalar(1) - qPow(j);
    return d.inverse();
  };
  std::map<Exp3, QScalar> want;
  for (int m = 0; m < 8; ++m) {
    Exp3 pre{0, 0, 0};
    int sign = 1;
    if (m & 1) pre = {pre[0] + 1, pre[1] - 1, pre[2]}, sign = -sign;
    if (m & 2) pre = {pre[0] + 1, pre[1], pre[2] - 1}, sign = -sign;
    if (m & 4) pre = {pre[0], pre[1] + 1, pre[2] - 1}, sign = -sign;
    for (int a = 0; a <= order; ++a)
      for (int b = 0; a + b <= order; ++b)
        for (int c = 0; a + b + c <= order; ++c) {
          Exp3 e{pre[0] + a, pre[1] + b, pre[2] + c};
          want[e] += QScalar(sign) * euler(a) * euler(b) * euler(c);
        }
  }
  for (auto it = want.begin(); it != want.end();) it = it->second.isZero() ? want.erase(it) : std::next(it);
  LaurentSeries3 f4 = buildFillingZU1(Family::F4, order);
  CHECK(f4.terms() == want);
  CHECK(f4.coefficient({0, 0, 0}) == QScalar(1));

  LaurentSeries3 f2 = buildFillingZU1(Family::F2, 5);
  int lowest = 0;
  for (const auto& [e, c] : f2.terms()) lowest = std::min(lowest, e[1]);
  CHECK(lowest == -1);
  for (int i = 1; i <= 3; ++i) {
    CHECK(verifyAbelianAnnihilation(abelianOperator(Family::F2, i), f2, 4).ok());
    CHECK(verifyAbelianAnnihilation(abelianOperator(Family::F3, i), buildFillingZU1(Family::F3, 5), 4).ok());
    CHECK(verifyAbelianAnnihilation(abelianOperator(Family::F4, i), abelianZF4Shifted(5), 4).ok());
  }
  // The product exactly as printed is not annihilated (see the README).
  CHECK_FALSE(verifyAbelianAnnihilation(abelianOperator(Family::F4, 1), buildFillingZU1(Family::F4, 5), 4).ok());
}

TEST_CASE("SL(2,Z) index map") {
  CHECK(slTwoZMap(1, 0) == std::make_pair(-1, std::make_pair(-1, 1)));
  CHECK(slTwoZMap(0, 1) == std::make_pair(1, std::make_pair(-1, 0)));
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j) {
      int s = 1, a = i, b = j;
      for (int r = 0; r < 3; ++r) {
        auto [sg, ij] = slTwoZMap(a, b);
        s *= sg;
        std::tie(a, b) = ij;
      }
      CHECK(s == 1);
      CHECK(a == i);
      CHECK(b == j);
    }
}

TEST_CASE("filling operators and index transport") {
  const OperatorSum f42 = fillingOperator(Family::F4, 2);
  bool found = false;
  for (const auto& t : f42)
    if (t.component == 3 && t.i == -1 && t.j == 1) {
      found = true;
      CHECK(t.coef == FramedScalar(-1));
    }
  CHECK(found);
  // Main A1 on component 3, carried by the inverse map (two applications),
  // gives the F2 pattern; one application carries F2 back.
  auto carry = [](std::set<std::pair<int, int>> s, int times) {
    std::set<std::pair<int, int>> out;
    for (auto [i, j] : s) {
      for (int r = 0; r < times; ++r) std::tie(i, j) = slTwoZMap(i, j).second;
      out.insert({i, j});
    }
    return out;
  };
  const auto mainIdx = indices(operatorA(1), 3), f2Idx = indices(fillingOperator(Family::F2, 1), 3);
  CHECK(carry(mainIdx, 2) == f2Idx);
  CHECK(carry(f2Idx, 1) == mainIdx);
  CHECK(carry(mainIdx, 1) != f2Idx);
  for (Family f : {Family::F2, Family::F3, Family::F4})
    for (const auto& c : structuralIndexCheck(f)) CHECK_MESSAGE(c.ok, c.detail);
}

}  // TEST_SUITE
