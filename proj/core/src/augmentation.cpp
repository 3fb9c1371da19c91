#include "topvert/augmentation.hpp"

#include "topvert/abelian.hpp"
#include "topvert/errors.hpp"

#include <sstream>
#include <vector>

namespace topvert {

namespace {

Jet mul(const Jet& a, const Jet& b, int order) {
  Jet out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exp3 e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      if (totalDegree(e) <= order) out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::vector<Exp3> monomialsOfDegree(int n) {
  std::vector<Exp3> out;
  for (int a = n; a >= 0; --a)
    for (int b = n - a; b >= 0; --b) out.push_back({a, b, n - a - b});
  return out;
}

}  // namespace

Jet clearedResidual(int i, const std::array<Jet, 3>& y, int order) {
  ClassicalPoly p = printedClassicalA(i);
  const int b = i % 3, c = (i + 1) % 3;
  Jet out;
  for (const auto& [pe, coef] : p) {
    std::array<int, 6> e = pe;
    e[3 + b] += 1;
    e[c] += 1;
    Exp3 xe{e[0], e[1], e[2]};
    if (xe[0] < 0 || xe[1] < 0 || xe[2] < 0 || e[3] < 0 || e[4] < 0 || e[5] < 0)
      throw ArithmeticError("clearing denominators left a negative exponent");
    if (totalDegree(xe) > order) continue;
    Jet term{{xe, coef}};
    for (int k = 0; k < 3; ++k)
      for (int r = 0; r < e[3 + k]; ++r) term = mul(term, y[k], order);
    for (const auto& [te, tc] : term) out[te] += tc;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

AugmentationBranch solveAugmentationBranch(int order) {
  if (order < 1) throw PreconditionError("augmentation order must be at least 1");
  AugmentationBranch br;
  br.order = order;
  for (auto& j : br.y) j[{0, 0, 0}] = 1;
  for (int i = 1; i <= 3; ++i)
    if (!clearedResidual(i, br.y, 0).empty()) throw BranchError("base point y = (1,1,1) is not on the variety");

  for (int n = 1; n <= order; ++n) {
    const std::vector<Exp3> mons = monomialsOfDegree(n);
    const int m = static_cast<int>(mons.size());
    const int unknowns = 3 * m;
    // Degree-n coefficients of the three cleared equations. They are affine
    // in the degree-n jet coefficients, so unit vectors give the linear part.
    auto evalAt = [&](int which) {
      std::array<Jet, 3> y = br.y;
      if (which >= 0) y[which / m][mons[which % m]] += 1;
      std::vector<mpq_class> v;
      for (int i = 1; i <= 3; ++i) {
        Jet r = clearedResidual(i, y, n);
        for (const Exp3& e : mons) {
          auto it = r.find(e);
          v.push_back(it == r.end() ? mpq_class(0) : it->second);
        }
      }
      return v;
    };
    const std::vector<mpq_class> base = evalAt(-1);
    const int rows = static_cast<int>(base.size());
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(unknowns + 1));
    for (int j = 0; j < unknowns; ++j) {
      std::vector<mpq_class> col = evalAt(j);
      for (int r = 0; r < rows; ++r) a[r][j] = col[r] - base[r];
    }
    for (int r = 0; r < rows; ++r) a[r][unknowns] = -base[r];

    std::vector<int> pivotCol;
    int rank = 0;
    for (int c = 0; c < unknowns && rank < rows; ++c) {
      int p = -1;
      for (int r = rank; r < rows; ++r)
        if (a[r][c] != 0) { p = r; break; }
      if (p < 0) continue;
      std::swap(a[p], a[rank]);
      mpq_class inv = 1 / a[rank][c];
      for (auto& v : a[rank]) v *= inv;
      for (int r = 0; r < rows; ++r) {
        if (r == rank || a[r][c] == 0) continue;
        mpq_class f = a[r][c];
        for (int k = c; k <= unknowns; ++k) a[r][k] -= f * a[rank][k];
      }
      pivotCol.push_back(c);
      ++rank;
    }
    for (int r = rank; r < rows; ++r)
      if (a[r][unknowns] != 0) throw BranchError("augmentation system inconsistent at order " + std::to_string(n));
    if (rank < unknowns)
      throw BranchError("augmentation system underdetermined at order " + std::to_string(n) + " (rank " +
                        std::to_string(rank) + " of " + std::to_string(unknowns) + ")");
    for (int r = 0; r < rank; ++r) {
      const int c = pivotCol[r];
      if (a[r][unknowns] != 0) br.y[c / m][mons[c % m]] = a[r][unknowns];
    }
  }
  return br;
}

std::string jetToString(const Jet& j) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : j) {
    if (c == 0) continue;
    os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
    first = false;
    mpq_class a = abs(c);
    bool unit = a == 1 && totalDegree(e) > 0;
    if (!unit) os << a.get_str();
    bool star = !unit;
    for (int k = 0; k < 3; ++k) {
      if (e[k] == 0) continue;
      os << (star ? "*" : "") << "x" << k + 1;
      if (e[k] != 1) os << "^" << e[k];
      star = true;
    }
  }
  return first ? "0" : os.str();
}

}  // namespace topvert
