#include "topvert/fillings.hpp"

#include "topvert/errors.hpp"
#include "topvert/hopf.hpp"
#include "topvert/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace topvert {

namespace {

QScalar signOf(int n) { return n % 2 ? QScalar(-1) : QScalar(1); }

QScalar hookContentProduct(const Partition& lambda, int scale) {
  QScalar v(1);
  std::vector<int> h = lambda.hookLengths(), c = lambda.contents();
  for (size_t b = 0; b < h.size(); ++b) v *= -sPow(-scale * c[b]) / (sPow(scale * h[b]) - sPow(-scale * h[b]));
  return v;
}

// Nonzero c^nu_{lambda mu}, cached.
const std::vector<std::pair<Partition, long>>& lrProduct(const Partition& lambda, const Partition& mu) {
  static std::mutex m;
  static std::map<std::pair<Partition, Partition>, std::vector<std::pair<Partition, long>>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_pair(lambda, mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::pair<Partition, long>> out;
  for (const auto& nu : partitionsOf(lambda.size() + mu.size())) {
    if (!nu.contains(lambda) || !nu.contains(mu)) continue;
    long c = lrCoefficient(nu, lambda, mu);
    if (c) out.emplace_back(nu, c);
  }
  return cache.emplace(key, std::move(out)).first->second;
}

void checkComponent(int k) {
  if (k < 1 || k > 3) throw PreconditionError("component must be 1, 2 or 3");
}

// Merges slot by slot; both sides occupied is an error.
Partition mergeSlot(const Partition& a, const Partition& b, const char* what) {
  if (!a.empty() && !b.empty()) throw GluingError(std::string("both operands occupy the ") + what + " slot");
  return a.empty() ? b : a;
}

}  // namespace

QScalar diskHookContent(const Partition& lambda) { return hookContentProduct(lambda, 1); }

QScalar diskHookContentWholePowers(const Partition& lambda) { return hookContentProduct(lambda, 2); }

SkeinState psiBlock(const PsiSpec& spec, int n) {
  if (n < 0) throw PreconditionError("psiBlock: negative truncation");
  checkComponent(spec.alpha);
  if (spec.kind != PsiKind::Disk) {
    checkComponent(spec.beta);
    if (spec.alpha == spec.beta) throw PreconditionError("psiBlock: the two components must differ");
  }
  const int a = spec.alpha - 1, b = spec.beta - 1;
  SkeinState out;
  for (int m = 0; m <= n; ++m)
    for (const auto& lam : partitionsOf(m)) {
      BasisLabel l;
      switch (spec.kind) {
        case PsiKind::Disk:
          l.lambda[a] = lam;
          out.add(l, schurAt(lam, minusRho()));
          break;
        case PsiKind::AntiAnnulus: {
          const int d = spec.f1 - spec.f2;
          l.lambda[a] = lam;
          l.lambda[b] = lam.transpose();
          out.add(l, signOf(m * (d + 1)) * sPow(2 * kappa(lam) * d));
          break;
        }
        case PsiKind::Twisted:
          l.lambda[a] = lam;
          l.mubar[b] = lam.transpose();
          out.add(l, signOf(m));
          break;
      }
    }
  return out;
}

SkeinState starProduct(const std::map<int, int>& framings, const SkeinState& a, const SkeinState& b, int maxLambda) {
  for (const auto& [k, f] : framings) checkComponent(k);
  auto lambdaSize = [](const BasisLabel& l) { return l.lambda[0].size() + l.lambda[1].size() + l.lambda[2].size(); };
  SkeinState out;
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) {
      if (maxLambda >= 0 && lambdaSize(la) + lambdaSize(lb) > maxLambda) continue;
      std::vector<std::pair<BasisLabel, FramedScalar>> acc{{BasisLabel{}, ca * cb}};
      for (int k = 0; k < 3; ++k) {
        auto fit = framings.find(k + 1);
        if (fit == framings.end()) {
          Partition lam = mergeSlot(la.lambda[k], lb.lambda[k], "lambda");
          Partition mub = mergeSlot(la.mubar[k], lb.mubar[k], "mubar");
          for (auto& [l, c] : acc) {
            l.lambda[k] = lam;
            l.mubar[k] = mub;
          }
          continue;
        }
        if (!la.mubar[k].empty() || !lb.mubar[k].empty())
          throw PreconditionError("star product needs pure-sector operands on component " + std::to_string(k + 1));
        const int f = fit->second;
        const Partition& x = la.lambda[k];
        const Partition& y = lb.lambda[k];
        std::vector<std::pair<BasisLabel, FramedScalar>> next;
        for (const auto& [l, c] : acc)
          for (const auto& [nu, mult] : lrProduct(x, y)) {
            BasisLabel nl = l;
            nl.lambda[k] = nu;
            next.emplace_back(nl, c * FramedScalar(QScalar(mult) * sPow(f * (kappa(nu) - kappa(x) - kappa(y)))));
          }
        acc = std::move(next);
      }
      for (const auto& [l, c] : acc) out.add(l, c);
    }
  return out;
}

SkeinState starProduct(int f, int component, const SkeinState& a, const SkeinState& b, int maxLambda) {
  return starProduct(std::map<int, int>{{component, f}}, a, b, maxLambda);
}

SkeinState glueProduct(const SkeinState& a, const SkeinState& b, int maxLambda) {
  return starProduct(std::map<int, int>{}, a, b, maxLambda);
}

SkeinState truncateLambda(const SkeinState& s, int n) {
  SkeinState out(s.bound());
  for (const auto& [l, c] : s.terms())
    if (l.lambda[0].size() + l.lambda[1].size() + l.lambda[2].size() <= n) out.add(l, c);
  return out;
}

SkeinState buildFillingZ(Family id, int n) {
  if (id == Family::Main) throw PreconditionError("buildFillingZ: use buildZ for the main filling");
  if (n < 0) throw PreconditionError("buildFillingZ: negative truncation");
  SkeinState out;
  for (const TripleLabel& t : triplesUpTo(n)) {
    const Partition &l1 = t.l1, &l2 = t.l2, &l3 = t.l3;
    BasisLabel b;
    b.lambda = {l1, l2, l3};
    b.mubar[1] = l1.transpose();
    QScalar c;
    switch (id) {
      case Family::F2: c = signOf(l1.size()) * sPow(-kappa(l3)) * hopfH(l2, l3.transpose()); break;
      case Family::F3: c = signOf(l1.size()) * sPow(-kappa(l2)) * hopfH(l3, l2.transpose()); break;
      default:
        b.mubar[2] = l2.transpose();
        c = signOf(l1.size() + l2.size()) * schurAt(l3, minusRho());
        break;
    }
    out.add(b, c);
  }
  return out;
}

LaurentSeries3 buildFillingZU1(Family id, int order) { return abelianZFilling(id, order); }

std::pair<int, std::pair<int, int>> slTwoZMap(int i, int j) { return {i % 2 ? -1 : 1, {-i - j, i}}; }

namespace {

OperatorTerm term(int comp, int i, int j, int sign, AExp e) {
  return {comp, i, j, FramedScalar::monomial(e, QScalar(sign))};
}

}  // namespace

OperatorSum fillingOperator(Family id, int k) {
  if (k < 1 || k > 3) throw PreconditionError("operator index must be 1, 2 or 3");
  if (id == Family::Main) return operatorA(k);
  const int key = static_cast<int>(id) * 10 + k;
  switch (key) {
    case 11:  // F2
      return {term(1, 0, 0, 1, {0, 0, 0}), term(1, 1, 0, -1, {0, 0, 0}), term(1, 0, 1, -1, {1, 2, 0}),
              term(2, 0, 0, 1, {1, 1, 0}), term(2, 1, 0, -1, {1, 1, 0}), term(2, 0, 1, -1, {1, 2, 0}),
              term(3, -1, 0, -1, {1, 2, 1}), term(3, 0, 0, 1, {1, 2, 1}), term(3, -1, 1, 1, {1, 2, 1})};
    case 12:
      return {term(1, -1, 0, 1, {1, 2, 2}), term(1, 0, 0, -1, {1, 2, 2}), term(1, -1, 1, -1, {1, 2, 0}),
              term(2, -1, 0, 1, {0, 1, 2}), term(2, 0, 0, -1, {0, 1, 2}), term(2, -1, 1, -1, {0, 1, 0}),
              term(3, 0, -1, 1, {0, 0, 0}), term(3, 1, -1, -1, {0, 0, 1}), term(3, 0, 0, -1, {0, 0, 1})};
    case 13:
      return {term(1, 0, -1, 1, {0, 0, 1}), term(1, 1, -1, -1, {1, 0, 1}), term(1, 0, 0, -1, {1, 2, 1}),
              term(2, 0, -1, 1, {0, 0, 1}), term(2, 1, -1, -1, {2, 1, 1}), term(2, 0, 0, -1, {0, 1, 1}),
              term(3, 0, 0, -1, {0, 0, 0}), term(3, 1, 0, 1, {0, 0, 0}), term(3, 0, 1, 1, {2, 2, 1})};
    case 21:  // F3
      return {term(1, 0, 0, 1, {0, 0, 0}), term(1, 1, 0, -1, {0, 0, 0}), term(1, 0, 1, -1, {1, 2, 2}),
              term(2, 0, 0, 1, {1, 1, 0}), term(2, 1, 0, -1, {1, 1, 0}), term(2, 0, 1, -1, {1, 2, 2}),
              term(3, 0, -1, -1, {1, 2, 0}), term(3, 1, -1, 1, {1, 2, 1}), term(3, 0, 0, 1, {1, 2, 1})};
    case 22:
      return {term(1, -1, 0, 1, {1, 2, 2}), term(1, 0, 0, -1, {1, 2, 2}), term(1, -1, 1, -1, {1, 2, 2}),
              term(2, -1, 0, 1, {0, 1, 2}), term(2, 0, 0, -1, {0, 1, 2}), term(2, -1, 1, -1, {0, 1, 2}),
              term(3, 0, 0, -1, {0, 0, 1}), term(3, 1, 0, 1, {0, 0, 1}), term(3, 0, 1, 1, {0, 0, 2})};
    case 23:
      return {term(1, 0, -1, 1, {0, 0, 0}), term(1, 1, -1, -1, {1, 0, 0}), term(1, 0, 0, -1, {1, 2, 0}),
              term(2, 0, -1, 1, {0, 0, 0}), term(2, 1, -1, -1, {2, 1, 0}), term(2, 0, 0, -1, {0, 1, 0}),
              term(3, -1, 0, 1, {2, 2, 1}), term(3, 0, 0, -1, {2, 2, 1}), term(3, -1, 1, -1, {0, 0, 1})};
    case 31:  // F4
      return {term(1, 0, 0, 1, {0, 0, 0}), term(1, 1, 0, -1, {0, 0, 0}), term(1, 0, 1, -1, {1, 2, 2}),
              term(2, 0, 0, 1, {1, 1, 0}), term(2, 1, 0, -1, {1, 1, 0}), term(2, 0, 1, -1, {1, 2, 2}),
              term(3, 0, 0, 1, {1, 2, 1}), term(3, 1, 0, -1, {1, 2, 1}), term(3, 0, 1, -1, {1, 2, 2})};
    case 32:
      return {term(1, -1, 0, 1, {1, 2, 1}), term(1, 0, 0, -1, {1, 2, 1}), term(1, -1, 1, -1, {1, 2, 1}),
              term(2, -1, 0, 1, {0, 1, 1}), term(2, 0, 0, -1, {0, 1, 1}), term(2, -1, 1, -1, {0, 1, 1}),
              term(3, -1, 0, 1, {0, 0, 0}), term(3, 0, 0, -1, {0, 0, 0}), term(3, -1, 1, -1, {0, 0, 0})};
    case 33:
      return {term(1, 0, -1, 1, {0, 0, 0}), term(1, 1, -1, -1, {1, 0, 0}), term(1, 0, 0, -1, {1, 2, 2}),
              term(2, 0, -1, 1, {0, 0, 0}), term(2, 1, -1, -1, {2, 1, 0}), term(2, 0, 0, -1, {0, 1, 2}),
              term(3, 0, -1, 1, {0, 0, 0}), term(3, 1, -1, -1, {2, 2, 1}), term(3, 0, 0, -1, {0, 0, 1})};
  }
  throw PreconditionError("no operator data");
}

std::array<int, 3> fillingMapPowers(Family id) {
  switch (id) {
    case Family::Main: return {0, 0, 0};
    case Family::F2: return {0, 0, 1};
    case Family::F3: return {0, 0, 2};
    case Family::F4: return {0, 2, 1};
  }
  return {0, 0, 0};
}

namespace {

// Sorted (i, j, sign) with the first sign made positive.
using Group = std::vector<std::tuple<int, int, int>>;

int numericSign(const FramedScalar& c) {
  if (!c.isSingleTerm()) throw PreconditionError("operator coefficient is not a single monomial");
  const QScalar& v = c.terms().begin()->second;
  return v.evaluate(mpq_class(1)) < 0 ? -1 : 1;
}

Group normalize(Group g) {
  std::sort(g.begin(), g.end());
  if (!g.empty() && std::get<2>(g.front()) < 0)
    for (auto& t : g) std::get<2>(t) = -std::get<2>(t);
  return g;
}

Group groupOf(const OperatorSum& op, int comp, int power) {
  Group g;
  for (const auto& t : op) {
    if (t.component != comp) continue;
    int i = t.i, j = t.j, sign = numericSign(t.coef);
    for (int r = 0; r < power; ++r) {
      auto [sg, ij] = slTwoZMap(i, j);
      sign *= sg;
      i = ij.first;
      j = ij.second;
    }
    g.emplace_back(i, j, sign);
  }
  return normalize(g);
}

std::string groupString(const Group& g) {
  std::ostringstream os;
  os << "{";
  for (size_t n = 0; n < g.size(); ++n) {
    auto [i, j, s] = g[n];
    os << (n ? " " : "") << (s < 0 ? "-" : "+") << "P" << i << "," << j;
  }
  return os.str() + "}";
}

}  // namespace

std::vector<IndexCheck> structuralIndexCheck(Family id) {
  std::vector<IndexCheck> out;
  const std::array<int, 3> powers = fillingMapPowers(id);
  for (int comp = 1; comp <= 3; ++comp) {
    std::vector<Group> mine, main;
    for (int k = 1; k <= 3; ++k) {
      mine.push_back(groupOf(fillingOperator(id, k), comp, powers[comp - 1]));
      main.push_back(groupOf(operatorA(k), comp, 0));
    }
    std::vector<Group> a = mine, b = main;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    IndexCheck c;
    c.component = comp;
    c.ok = a == b;
    std::ostringstream os;
    os << "power " << powers[comp - 1] << ":";
    for (const auto& g : mine) os << " " << groupString(g);
    c.detail = os.str();
    out.push_back(c);
  }
  return out;
}

AnsatzReport verifyAnsatz(Family id, const SkeinState& state) {
  AnsatzReport r;
  for (const auto& [l, c] : state.terms()) {
    if (c.isZero()) continue;
    const int l1 = l.lambda[0].size(), l2 = l.lambda[1].size();
    bool bad = !l.mubar[0].empty() || l.mubar[1].size() > l1;
    if (id == Family::F4) bad = bad || l.mubar[2].size() > l1 + l2;
    else bad = bad || !l.mubar[2].empty();
    if (id == Family::Main) bad = l.mixed();
    if (bad) r.violations.push_back(l);
  }
  return r;
}

}  // namespace topvert
