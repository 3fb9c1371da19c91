#include "topvert/vertex.hpp"

#include "topvert/errors.hpp"
#include "topvert/hopf.hpp"
#include "topvert/parallel.hpp"
#include "topvert/symfunc.hpp"

namespace topvert {

TripleLabel TripleLabel::rotated(int steps) const {
  steps = ((steps % 3) + 3) % 3;
  TripleLabel t = *this;
  for (int s = 0; s < steps; ++s) t = {t.l3, t.l1, t.l2};
  return t;
}

std::string TripleLabel::toString() const { return "(" + l1.toString() + "," + l2.toString() + "," + l3.toString() + ")"; }

std::vector<TripleLabel> triplesOfSize(int n) {
  std::vector<TripleLabel> out;
  for (int n1 = n; n1 >= 0; --n1)
    for (int n2 = n - n1; n2 >= 0; --n2) {
      int n3 = n - n1 - n2;
      for (const auto& a : partitionsOf(n1))
        for (const auto& b : partitionsOf(n2))
          for (const auto& c : partitionsOf(n3)) out.push_back({a, b, c});
    }
  return out;
}

std::vector<TripleLabel> triplesUpTo(int maxSize) {
  std::vector<TripleLabel> out;
  for (int n = 0; n <= maxSize; ++n) {
    auto level = triplesOfSize(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string formulaName(VertexFormula f) {
  switch (f) {
    case VertexFormula::C: return "C";
    case VertexFormula::T: return "T";
    case VertexFormula::Alternate: return "alt";
    case VertexFormula::Hopf: return "hopf";
    case VertexFormula::Recursion: return "recursion";
  }
  return "?";
}

VertexFormula parseFormula(const std::string& name) {
  if (name == "C") return VertexFormula::C;
  if (name == "T") return VertexFormula::T;
  if (name == "alt") return VertexFormula::Alternate;
  if (name == "hopf") return VertexFormula::Hopf;
  throw ParseError("unknown formula '" + name + "' (expected C, T, alt or hopf)");
}

namespace {

std::vector<Partition> commonSubpartitions(const Partition& a, const Partition& b) {
  std::vector<Partition> out;
  for (const auto& eta : subpartitions(a))
    if (b.contains(eta)) out.push_back(eta);
  return out;
}

int sign(int n) { return n % 2 ? -1 : 1; }

}  // namespace

QScalar vertexC(const TripleLabel& t) {
  const Partition l2t = t.l2.transpose(), l3t = t.l3.transpose();
  QScalar sum;
  for (const auto& eta : commonSubpartitions(t.l1, l3t))
    sum += skewSchurAt(l3t, eta, plusRho(t.l2)) * skewSchurAt(t.l1, eta, plusRho(l2t));
  if (sum.isZero()) return sum;
  return (schurAt(l2t, rho()) * sum).timesSPow(kappa(t.l2) + kappa(t.l3));
}

QScalar vertexT(const TripleLabel& t) {
  QScalar c = vertexC(t.transposed());
  return sign(t.size()) < 0 ? -c : c;
}

QScalar vertexTAlternate(const TripleLabel& t) {
  const Partition l1t = t.l1.transpose(), l3t = t.l3.transpose();
  QScalar sum;
  for (const auto& eta : commonSubpartitions(l1t, t.l2))
    sum += skewSchurAt(l1t, eta, minusRhoMinus(t.l3)) * skewSchurAt(t.l2, eta, minusRhoMinus(l3t));
  if (sum.isZero()) return sum;
  return (schurAt(l3t, minusRho()) * sum).timesSPow(-kappa(t.l1) - kappa(t.l3));
}

QScalar vertexTviaHopf(const TripleLabel& t) {
  const Partition l2t = t.l2.transpose(), l3t = t.l3.transpose();
  QScalar sum;
  for (const auto& nu : commonSubpartitions(t.l1, l3t)) {
    for (const auto& mu1 : partitionsOf(t.l1.size() - nu.size())) {
      long c1 = lrCoefficient(t.l1, nu, mu1);
      if (c1 == 0) continue;
      QScalar h1 = hopfH(l2t, mu1);
      for (const auto& mu3t : partitionsOf(t.l3.size() - nu.size())) {
        long c3 = lrCoefficient(l3t, nu, mu3t);
        if (c3 == 0) continue;
        sum += QScalar(c1 * c3) * h1 * hopfH(t.l2, mu3t);
      }
    }
  }
  if (sum.isZero()) return sum;
  return (sum / hopfH(t.l2, Partition())).timesSPow(-kappa(t.l2) - kappa(t.l3));
}

QScalar evaluateVertex(VertexFormula f, const TripleLabel& t) {
  switch (f) {
    case VertexFormula::C: return vertexC(t);
    case VertexFormula::T: return vertexT(t);
    case VertexFormula::Alternate: return vertexTAlternate(t);
    case VertexFormula::Hopf: return vertexTviaHopf(t);
    case VertexFormula::Recursion: break;
  }
  throw PreconditionError("evaluateVertex: the recursion table is produced by solveRecursion");
}

void CoefficientTable::set(const TripleLabel& t, const QScalar& v) {
  auto it = index_.find(t);
  if (it != index_.end()) {
    entries_[it->second].second = v;
    return;
  }
  index_.emplace(t, entries_.size());
  entries_.emplace_back(t, v);
}

const QScalar* CoefficientTable::find(const TripleLabel& t) const {
  auto it = index_.find(t);
  return it == index_.end() ? nullptr : &entries_[it->second].second;
}

const QScalar& CoefficientTable::at(const TripleLabel& t) const {
  const QScalar* v = find(t);
  if (!v) throw IncompleteDataError("no table entry for " + t.toString());
  return *v;
}

CoefficientTable buildTable(int maxSize, VertexFormula f, int jobs) {
  if (maxSize < 0) throw PreconditionError("buildTable: negative maxSize");
  std::vector<TripleLabel> labels = triplesUpTo(maxSize);
  std::vector<QScalar> values(labels.size());
  parallelFor(labels.size(), jobs, [&](std::size_t i) { values[i] = evaluateVertex(f, labels[i]); });
  CoefficientTable table(maxSize, formulaName(f));
  for (std::size_t i = 0; i < labels.size(); ++i) table.set(labels[i], values[i]);
  return table;
}

}  // namespace topvert
