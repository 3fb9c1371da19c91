#include "topvert/symfunc.hpp"

#include "topvert/errors.hpp"

namespace topvert {

namespace {

// Fills the skew shape lambda/mu row by row, each row right to left, so the
// filling order is the reverse reading word and the lattice condition can be
// checked incrementally.
struct LRFiller {
  const Partition& lambda;
  const Partition& mu;
  const Partition& nu;
  std::vector<std::vector<int>> grid;  // grid[i][j], 0 for cells of mu
  std::vector<int> count;
  long found = 0;

  LRFiller(const Partition& l, const Partition& m, const Partition& n)
      : lambda(l), mu(m), nu(n), grid(l.length()), count(n.length() + 2, 0) {
    for (int i = 0; i < l.length(); ++i) grid[i].assign(l.part(i), 0);
  }

  void fill(int row, int col) {
    if (row == lambda.length()) {
      ++found;
      return;
    }
    if (col < mu.part(row)) {
      fill(row + 1, row + 1 < lambda.length() ? lambda.part(row + 1) - 1 : 0);
      return;
    }
    int hi = nu.length();
    if (col + 1 < lambda.part(row)) hi = std::min(hi, grid[row][col + 1]);  // rows weakly increase
    hi = std::min(hi, row + 1);
    int lo = 1;
    if (row > 0 && col < lambda.part(row - 1) && col >= mu.part(row - 1)) lo = grid[row - 1][col] + 1;  // columns strictly increase
    for (int v = lo; v <= hi; ++v) {
      if (count[v] >= nu.part(v - 1)) continue;
      if (v > 1 && count[v] + 1 > count[v - 1]) continue;
      grid[row][col] = v;
      ++count[v];
      if (col == mu.part(row)) fill(row + 1, row + 1 < lambda.length() ? lambda.part(row + 1) - 1 : 0);
      else fill(row, col - 1);
      --count[v];
    }
    grid[row][col] = 0;
  }
};

}  // namespace

long lrCoefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (mu.size() + nu.size() != lambda.size()) return 0;
  if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
  if (nu.empty()) return 1;
  LRFiller f(lambda, mu, nu);
  // Rows fully inside mu are skipped by fill().
  f.fill(0, lambda.length() > 0 ? lambda.part(0) - 1 : 0);
  return f.found;
}

namespace {

void ssyt(const Partition& lambda, int nvars, int row, int col, std::vector<std::vector<int>>& t, std::vector<int>& exps,
          IntPolyN& out) {
  if (row == lambda.length()) {
    out[exps] += 1;
    return;
  }
  if (col == lambda.part(row)) {
    ssyt(lambda, nvars, row + 1, 0, t, exps, out);
    return;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, t[row][col - 1]);
  if (row > 0) lo = std::max(lo, t[row - 1][col] + 1);
  for (int v = lo; v <= nvars; ++v) {
    t[row][col] = v;
    ++exps[v - 1];
    ssyt(lambda, nvars, row, col + 1, t, exps, out);
    --exps[v - 1];
  }
}

}  // namespace

IntPolyN schurPolynomialFinite(const Partition& lambda, int nvars) {
  if (nvars <= 0) throw PreconditionError("schurPolynomialFinite: need at least one variable");
  IntPolyN out;
  if (lambda.length() > nvars) return out;
  std::vector<std::vector<int>> t(lambda.length());
  for (int i = 0; i < lambda.length(); ++i) t[i].assign(lambda.part(i), 0);
  std::vector<int> exps(nvars, 0);
  ssyt(lambda, nvars, 0, 0, t, exps, out);
  return out;
}

IntPolyN multiply(const IntPolyN& a, const IntPolyN& b) {
  IntPolyN out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::map<Partition, mpz_class> schurExpand(IntPolyN f, int nvars) {
  // The lexicographically largest monomial of s_lambda is x^lambda with coefficient 1.
  std::map<Partition, mpz_class> out;
  while (!f.empty()) {
    auto top = std::prev(f.end());
    std::vector<int> e = top->first;
    mpz_class c = top->second;
    std::vector<int> parts;
    for (int x : e)
      if (x > 0) parts.push_back(x);
    Partition lam(parts);  // throws if the leading exponent is not a partition
    out[lam] = c;
    for (const auto& [m, v] : schurPolynomialFinite(lam, nvars)) {
      auto& slot = f[m];
      slot -= c * v;
      if (sgn(slot) == 0) f.erase(m);
    }
  }
  return out;
}

}  // namespace topvert
