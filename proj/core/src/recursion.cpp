#include "topvert/recursion.hpp"

#include "topvert/errors.hpp"
#include "topvert/parallel.hpp"
#include "topvert/symfunc.hpp"

#include <map>
#include <set>

namespace topvert {

namespace {

struct Shape {
  int sComp;  // s_box(q^{lambda_sComp + rho}), possibly transposed
  bool sTransposed;
  int minusComp;  // component losing a box
  bool minusWeighted;  // q^{(kappa(beta) - kappa(lambda))/2}
  int plusComp;  // component gaining a box
  bool plusWeighted;  // q^{(kappa(gamma) - kappa(lambda))/2}
};

Shape shapeOf(RecursionId id) {
  switch (id) {
    case RecursionId::R32: return {0, false, 1, true, 2, false};
    case RecursionId::R13: return {1, false, 2, true, 0, false};
    case RecursionId::R21: return {2, false, 0, true, 1, false};
    case RecursionId::R31: return {1, true, 0, false, 2, true};
    case RecursionId::R12: return {2, true, 1, false, 0, true};
    case RecursionId::R23: return {0, true, 2, false, 1, true};
  }
  throw PreconditionError("bad recursion id");
}

}  // namespace

std::string recursionName(RecursionId id) {
  switch (id) {
    case RecursionId::R32: return "R32";
    case RecursionId::R13: return "R13";
    case RecursionId::R21: return "R21";
    case RecursionId::R31: return "R31";
    case RecursionId::R12: return "R12";
    case RecursionId::R23: return "R23";
  }
  return "?";
}

RecursionId parseRecursion(const std::string& name) {
  for (RecursionId id : kAllRecursions)
    if (recursionName(id) == name) return id;
  throw ParseError("unknown recursion id '" + name + "'");
}

RecursionId rotatedRecursion(RecursionId id, int steps) {
  static const RecursionId a[] = {RecursionId::R32, RecursionId::R13, RecursionId::R21};
  static const RecursionId b[] = {RecursionId::R31, RecursionId::R12, RecursionId::R23};
  steps = ((steps % 3) + 3) % 3;
  for (int i = 0; i < 3; ++i) {
    if (a[i] == id) return a[(i + steps) % 3];
    if (b[i] == id) return b[(i + steps) % 3];
  }
  return id;
}

LinearFunctional residualFunctional(RecursionId id, const TripleLabel& t) {
  const Shape sh = shapeOf(id);
  LinearFunctional out;
  const Partition& sp = t[sh.sComp];
  out.emplace_back(t, schurAt(box(), plusRho(sh.sTransposed ? sp.transpose() : sp)));
  const Partition& lm = t[sh.minusComp];
  for (const auto& beta : lm.removeCorners()) {
    TripleLabel u = t;
    u[sh.minusComp] = beta;
    QScalar w = sh.minusWeighted ? sPow(kappa(beta) - kappa(lm)) : QScalar(1);
    out.emplace_back(u, -w);
  }
  const Partition& lp = t[sh.plusComp];
  for (const auto& gamma : lp.addCorners()) {
    TripleLabel u = t;
    u[sh.plusComp] = gamma;
    QScalar w = sh.plusWeighted ? sPow(kappa(gamma) - kappa(lp)) : QScalar(1);
    out.emplace_back(u, w);
  }
  return out;
}

QScalar residual(RecursionId id, const TripleLabel& t, const Lookup& lookup) {
  QScalar r;
  for (const auto& [u, c] : residualFunctional(id, t)) {
    const QScalar* v = lookup(u);
    if (!v) throw IncompleteDataError(recursionName(id) + " at " + t.toString() + " needs " + u.toString());
    if (!v->isZero()) r += c * *v;
  }
  return r;
}

QScalar residual(RecursionId id, const TripleLabel& t, const CoefficientTable& table) {
  return residual(id, t, [&](const TripleLabel& u) { return table.find(u); });
}

QScalar twoByTwoDeterminant(int n) {
  if (n < 1) throw PreconditionError("twoByTwoDeterminant: n must be positive");
  QScalar d = qPow(-1) - qPow(n);
  if (d.isZero()) throw UniquenessError("two-by-two determinant vanishes");
  return d;
}

namespace {

struct Row {
  std::map<int, QScalar> a;
  QScalar rhs;
};

// Row reduction of an overdetermined sparse system. Returns the unique solution
// or throws UniquenessError.
std::vector<QScalar> solveSparse(std::vector<Row> rows, int ncols, int level, int jobs) {
  std::vector<std::set<int>> colRows(ncols);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (const auto& [c, v] : rows[r].a) colRows[c].insert(r);
  std::vector<char> used(rows.size(), 0);
  std::vector<int> pivotRow(ncols, -1);
  for (int c = 0; c < ncols; ++c) {
    int best = -1;
    std::size_t bestLen = 0, bestCx = 0;
    for (int r : colRows[c]) {
      if (used[r]) continue;
      std::size_t len = rows[r].a.size(), cx = rows[r].a.at(c).complexity();
      if (best < 0 || len < bestLen || (len == bestLen && cx < bestCx)) best = r, bestLen = len, bestCx = cx;
    }
    if (best < 0)
      throw UniquenessError("recursion level " + std::to_string(level) + " is rank deficient (column " + std::to_string(c) + ")");
    used[best] = 1;
    pivotRow[c] = best;
    const Row& p = rows[best];
    const QScalar pinv = p.a.at(c).inverse();
    std::vector<int> targets;
    for (int r : colRows[c])
      if (!used[r]) targets.push_back(r);
    std::vector<Row> updated(targets.size());
    parallelFor(targets.size(), jobs, [&](std::size_t k) {
      Row nr = rows[targets[k]];
      const QScalar f = nr.a.at(c) * pinv;
      for (const auto& [j, v] : p.a) {
        QScalar nv = nr.a.count(j) ? nr.a[j] - f * v : -(f * v);
        if (nv.isZero()) nr.a.erase(j); else nr.a[j] = nv;
      }
      nr.a.erase(c);
      nr.rhs -= f * p.rhs;
      updated[k] = std::move(nr);
    });
    for (std::size_t k = 0; k < targets.size(); ++k) {
      int r = targets[k];
      for (const auto& [j, v] : rows[r].a) colRows[j].erase(r);
      rows[r] = std::move(updated[k]);
      for (const auto& [j, v] : rows[r].a) colRows[j].insert(r);
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!used[r] && (!rows[r].a.empty() || !rows[r].rhs.isZero()))
      throw UniquenessError("recursion level " + std::to_string(level) + " is inconsistent");
  std::vector<QScalar> x(ncols);
  for (int c = ncols - 1; c >= 0; --c) {
    const Row& p = rows[pivotRow[c]];
    QScalar acc = p.rhs;
    for (const auto& [j, v] : p.a)
      if (j != c) acc -= v * x[j];
    x[c] = acc / p.a.at(c);
  }
  return x;
}

}  // namespace

CoefficientTable solveRecursion(int maxSize, int jobs, std::vector<LevelStats>* stats) {
  if (maxSize < 0) throw PreconditionError("solveRecursion: negative maxSize");
  CoefficientTable table(maxSize, formulaName(VertexFormula::Recursion));
  table.set(TripleLabel{}, QScalar(1));
  for (int n = 0; n < maxSize; ++n) {
    const std::vector<TripleLabel> here = triplesOfSize(n);
    const std::vector<TripleLabel> next = triplesOfSize(n + 1);
    std::map<TripleLabel, int> col;
    for (std::size_t i = 0; i < next.size(); ++i) col.emplace(next[i], static_cast<int>(i));
    std::vector<Row> rows(here.size() * 6);
    parallelFor(rows.size(), jobs, [&](std::size_t k) {
      const TripleLabel& t = here[k / 6];
      Row row;
      for (const auto& [u, c] : residualFunctional(kAllRecursions[k % 6], t)) {
        if (u.size() == n + 1) {
          row.a[col.at(u)] += c;
        } else {
          row.rhs -= c * table.at(u);
        }
      }
      for (auto it = row.a.begin(); it != row.a.end();) it = it->second.isZero() ? row.a.erase(it) : std::next(it);
      rows[k] = std::move(row);
    });
    if (stats) stats->push_back({n, rows.size(), next.size()});
    std::vector<QScalar> x = solveSparse(std::move(rows), static_cast<int>(next.size()), n, jobs);
    for (std::size_t i = 0; i < next.size(); ++i) table.set(next[i], x[i]);
  }
  return table;
}

}  // namespace topvert
