#include "topvert/symfunc.hpp"

#include "topvert/errors.hpp"

#include <mutex>
#include <tuple>

namespace topvert {

namespace {

// Geometric tail alphabet a, a r, a r^2, ... with a = s^{-eps}, r = s^{-2 eps}:
//   h_k = a^k / prod_{j<=k} (1 - r^j),  e_k = a^k r^{k(k-1)/2} / prod_{j<=k} (1 - r^j).
struct TailCache {
  std::mutex mu;
  std::map<int, std::vector<QScalar>> h, e;
};

TailCache& tailCache() {
  static TailCache c;
  return c;
}

std::vector<QScalar> tailValues(int eps, int k, bool elementaryKind) {
  TailCache& c = tailCache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto& vec = elementaryKind ? c.e[eps] : c.h[eps];
  if (vec.empty()) vec.push_back(QScalar(1));
  while (static_cast<int>(vec.size()) <= k) {
    int j = static_cast<int>(vec.size());
    QScalar oneMinusR = QScalar(1) - sPow(-2 * eps * j);
    QScalar step = sPow(-eps) / oneMinusR;
    if (elementaryKind) step = step.timesSPow(-2 * eps * (j - 1));
    vec.push_back(vec.back() * step);
  }
  return std::vector<QScalar>(vec.begin(), vec.begin() + k + 1);
}

// Coefficients of t^0..t^k in prod_i (1 + sign*t*y_i) and prod_i 1/(1 - sign*t*w_i).
std::vector<QScalar> productSeries(const std::vector<int>& yExp, int ySign, const std::vector<int>& wExp, int wSign, int k) {
  std::vector<QScalar> out(k + 1);
  out[0] = QScalar(1);
  for (int y : yExp) {
    for (int m = k; m >= 1; --m)
      if (!out[m - 1].isZero()) out[m] += (ySign > 0 ? out[m - 1] : -out[m - 1]).timesSPow(y);
  }
  for (int w : wExp) {
    // multiply by 1/(1 - wSign*s^w t): out[m] += wSign*s^w*out[m-1], increasing m
    for (int m = 1; m <= k; ++m)
      if (!out[m - 1].isZero()) out[m] += (wSign > 0 ? out[m - 1] : -out[m - 1]).timesSPow(w);
  }
  return out;
}

struct PointCache {
  std::vector<QScalar> h, e;
};

struct ValueCaches {
  std::mutex mu;
  std::map<SpecializationPoint, PointCache> points;
  std::mutex skewMu;
  std::map<std::tuple<Partition, Partition, SpecializationPoint>, QScalar> skew;
};

ValueCaches& caches() {
  static ValueCaches c;
  return c;
}

// Values h_0..h_k (or e_0..e_k) at the point. The finite correction is
//   prod_{i<=l} (1 - t x0_i) / (1 - t x_i)  for h,
//   prod_{i<=l} (1 + t x_i) / (1 + t x0_i)  for e,
// where x_i = s^{eps(2 nu_i - 2i + 1)} and x0_i = s^{eps(-2i + 1)} is the tail's own variable.
std::vector<QScalar> computeValues(const SpecializationPoint& pt, int k, bool elementaryKind) {
  std::vector<int> x, x0;
  for (int i = 1; i <= pt.nu.length(); ++i) {
    x.push_back(pt.eps * (2 * pt.nu.part(i - 1) - 2 * i + 1));
    x0.push_back(pt.eps * (-2 * i + 1));
  }
  std::vector<QScalar> corr = elementaryKind ? productSeries(x, +1, x0, -1, k) : productSeries(x0, -1, x, +1, k);
  std::vector<QScalar> tail = tailValues(pt.eps, k, elementaryKind);
  std::vector<QScalar> out(k + 1);
  for (int n = 0; n <= k; ++n) {
    QScalar acc;
    for (int m = 0; m <= n; ++m)
      if (!corr[m].isZero()) acc += corr[m] * tail[n - m];
    out[n] = acc;
  }
  return out;
}

QScalar cachedValue(int k, const SpecializationPoint& pt, bool elementaryKind) {
  if (k < 0) return QScalar();
  if (k == 0) return QScalar(1);
  if (pt.eps != 1 && pt.eps != -1) throw PreconditionError("specialization sign must be +1 or -1");
  ValueCaches& c = caches();
  std::lock_guard<std::mutex> lock(c.mu);
  PointCache& pc = c.points[pt];
  auto& vec = elementaryKind ? pc.e : pc.h;
  if (static_cast<int>(vec.size()) <= k) vec = computeValues(pt, std::max(k, 2 * static_cast<int>(vec.size())), elementaryKind);
  return vec[k];
}

QScalar determinant(std::vector<std::vector<QScalar>> m) {
  const int n = static_cast<int>(m.size());
  QScalar det(1);
  for (int c = 0; c < n; ++c) {
    int best = -1;
    for (int r = c; r < n; ++r)
      if (!m[r][c].isZero() && (best < 0 || m[r][c].complexity() < m[best][c].complexity())) best = r;
    if (best < 0) return QScalar();
    if (best != c) {
      std::swap(m[best], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const QScalar inv = m[c][c].inverse();
    for (int r = c + 1; r < n; ++r) {
      if (m[r][c].isZero()) continue;
      QScalar f = m[r][c] * inv;
      for (int j = c + 1; j < n; ++j)
        if (!m[c][j].isZero()) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

QScalar jacobiTrudi(const Partition& lambda, const Partition& eta, const SpecializationPoint& pt) {
  // Use the smaller of the h-form (size l(lambda)) and the e-form (size lambda_1).
  const bool useE = lambda.part(0) < lambda.length();
  const Partition L = useE ? lambda.transpose() : lambda;
  const Partition E = useE ? eta.transpose() : eta;
  const int n = L.length();
  if (n == 0) return QScalar(1);
  std::vector<std::vector<QScalar>> m(n, std::vector<QScalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = cachedValue(L.part(i) - E.part(j) - i + j, pt, useE);
  if (n == 1) return m[0][0];
  return determinant(std::move(m));
}

}  // namespace

QScalar completeHomogeneous(int k, const SpecializationPoint& pt) { return cachedValue(k, pt, false); }

QScalar elementary(int k, const SpecializationPoint& pt) { return cachedValue(k, pt, true); }

QScalar schurAt(const Partition& lambda, const SpecializationPoint& pt) { return skewSchurAt(lambda, Partition(), pt); }

QScalar skewSchurAt(const Partition& lambda, const Partition& eta, const SpecializationPoint& pt) {
  if (!lambda.contains(eta)) return QScalar();
  if (lambda == eta) return QScalar(1);
  ValueCaches& c = caches();
  auto key = std::make_tuple(lambda, eta, pt);
  {
    std::lock_guard<std::mutex> lock(c.skewMu);
    auto it = c.skew.find(key);
    if (it != c.skew.end()) return it->second;
  }
  QScalar v = jacobiTrudi(lambda, eta, pt);
  std::lock_guard<std::mutex> lock(c.skewMu);
  return c.skew.emplace(std::move(key), v).first->second;
}

void clearSymfuncCaches() {
  ValueCaches& c = caches();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    c.points.clear();
  }
  std::lock_guard<std::mutex> lock(c.skewMu);
  c.skew.clear();
}

}  // namespace topvert
