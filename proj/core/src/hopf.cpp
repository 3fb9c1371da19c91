#include "topvert/hopf.hpp"

#include "topvert/errors.hpp"
#include "topvert/symfunc.hpp"

#include <map>
#include <mutex>

namespace topvert {

QScalar hopfHForm1(const Partition& lambda, const Partition& mu) {
  const Partition M = mu.transpose();
  const Partition lt = lambda.transpose();
  QScalar sum;
  for (const auto& eta : subpartitions(lt)) {
    if (!M.contains(eta)) continue;
    sum += skewSchurAt(lt, eta, minusRho()) * skewSchurAt(M, eta, minusRho());
  }
  return sum.timesSPow(kappa(M) - kappa(lambda));
}

QScalar hopfHForm2(const Partition& lambda, const Partition& mu) {
  QScalar v = schurAt(lambda.transpose(), minusRho()) * schurAt(mu, minusRhoMinus(lambda));
  return v.timesSPow(-kappa(lambda));
}

namespace {
std::mutex hopfMu;
std::map<std::pair<Partition, Partition>, QScalar> hopfCache;
}  // namespace

QScalar hopfH(const Partition& lambda, const Partition& mu) {
  auto key = std::make_pair(lambda, mu);
  {
    std::lock_guard<std::mutex> lock(hopfMu);
    auto it = hopfCache.find(key);
    if (it != hopfCache.end()) return it->second;
  }
  QScalar a = hopfHForm1(lambda, mu);
  QScalar b = hopfHForm2(lambda, mu);
  if (a != b)
    throw FormulaDivergenceError("Hopf forms disagree at " + lambda.toString() + "," + mu.toString() + ": " + a.toString() +
                                 " vs " + b.toString());
  std::lock_guard<std::mutex> lock(hopfMu);
  return hopfCache.emplace(std::move(key), a).first->second;
}

void clearHopfCache() {
  std::lock_guard<std::mutex> lock(hopfMu);
  hopfCache.clear();
}

}  // namespace topvert
