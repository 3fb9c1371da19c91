#include "topvert/skein.hpp"

#include "topvert/errors.hpp"
#include "topvert/parallel.hpp"
#include "topvert/symfunc.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace topvert {

int BasisLabel::size() const {
  int n = 0;
  for (int k = 0; k < 3; ++k) n += lambda[k].size() + mubar[k].size();
  return n;
}

BasisLabel BasisLabel::rotated(int steps) const {
  steps = ((steps % 3) + 3) % 3;
  BasisLabel r;
  for (int k = 0; k < 3; ++k) {
    r.lambda[(k + steps) % 3] = lambda[k];
    r.mubar[(k + steps) % 3] = mubar[k];
  }
  return r;
}

std::string BasisLabel::toString() const {
  std::string s = "(";
  for (int k = 0; k < 3; ++k) s += (k ? ";" : "") + lambda[k].toString() + "," + mubar[k].toString();
  return s + ")";
}

FramedScalar SkeinState::coefficient(const BasisLabel& l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? FramedScalar() : it->second;
}

void SkeinState::add(const BasisLabel& l, const FramedScalar& c) {
  if (c.isZero() || (bound_ >= 0 && l.size() > bound_)) return;
  auto it = terms_.find(l);
  if (it == terms_.end()) {
    terms_.emplace(l, c);
    return;
  }
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

SkeinState& SkeinState::operator+=(const SkeinState& o) {
  for (const auto& [l, c] : o.terms_) add(l, c);
  return *this;
}

SkeinState SkeinState::scaled(const FramedScalar& c) const {
  SkeinState r(bound_);
  for (const auto& [l, v] : terms_) r.add(l, v * c);
  return r;
}

namespace {

// (a - a^{-1}) / z, the unknot on component k.
FramedScalar unknot(int k) {
  const QScalar invz = QScalar::z().inverse();
  return FramedScalar::a(k, 1) * FramedScalar(invz) - FramedScalar::a(k, -1) * FramedScalar(invz);
}

// s_box(q^{lambda + rho}) - s_box(q^rho) = z C_lambda(q).
QScalar shiftedBox(const Partition& lambda) { return schurAt(box(), plusRho(lambda)) - schurAt(box(), rho()); }

}  // namespace

SkeinState applyPToLabel(int i, int j, int k, const BasisLabel& label) {
  if (k < 1 || k > 3) throw PreconditionError("component must be 1, 2 or 3");
  const int c = k - 1;
  if (!label.mubar[c].empty())
    throw PreconditionError("P action on a mixed-sector label " + label.toString() + " (component " + std::to_string(k) + ")");
  const Partition& lam = label.lambda[c];
  SkeinState out;
  auto with = [&](const Partition& p) {
    BasisLabel l = label;
    l.lambda[c] = p;
    return l;
  };
  auto withBar = [&] {
    BasisLabel l = label;
    l.mubar[c] = box();
    return l;
  };
  const FramedScalar a = FramedScalar::a(k, 1), ainv = FramedScalar::a(k, -1);
  if (i == 0 && j == 0) {
    out.add(label, unknot(k));
  } else if (i == 1 && j == 0) {
    out.add(label, unknot(k) + a * FramedScalar(shiftedBox(lam)));
  } else if (i == 0 && j == 1) {
    for (const auto& alpha : lam.addCorners()) out.add(with(alpha), FramedScalar(1));
  } else if (i == -1 && j == 0) {
    out.add(label, unknot(k) - ainv * FramedScalar(shiftedBox(lam.transpose())));
  } else if (i == -1 && j == 1) {
    for (const auto& beta : lam.addCorners()) out.add(with(beta), ainv * FramedScalar(sPow(kappa(lam) - kappa(beta))));
  } else if (i == 0 && j == -1) {
    for (const auto& gamma : lam.removeCorners()) out.add(with(gamma), FramedScalar(1));
    out.add(withBar(), FramedScalar(1));
  } else if (i == 1 && j == -1) {
    for (const auto& gamma : lam.removeCorners()) out.add(with(gamma), a * FramedScalar(sPow(kappa(lam) - kappa(gamma))));
    out.add(withBar(), ainv);
  } else {
    throw UnsupportedActionError("no action for P_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  }
  return out;
}

SkeinState applyP(int i, int j, int k, const SkeinState& state) {
  SkeinState out;
  for (const auto& [l, c] : state.terms()) out += applyPToLabel(i, j, k, l).scaled(c);
  return out;
}

SkeinState applyOperator(const OperatorSum& op, const SkeinState& state, int jobs) {
  std::vector<const std::pair<const BasisLabel, FramedScalar>*> items;
  for (const auto& kv : state.terms()) items.push_back(&kv);
  std::vector<SkeinState> parts(items.size());
  parallelFor(items.size(), jobs, [&](std::size_t n) {
    SkeinState local;
    for (const auto& t : op) local += applyPToLabel(t.i, t.j, t.component, items[n]->first).scaled(t.coef * items[n]->second);
    parts[n] = std::move(local);
  });
  SkeinState out(state.bound() < 0 ? -1 : state.bound() + 1);
  for (const auto& p : parts) out += p;
  return out;
}

OperatorSum operatorA(int k) {
  if (k < 1 || k > 3) throw PreconditionError("operatorA: k must be 1, 2 or 3");
  using F = FramedScalar;
  const F a1i = F::a(1, -1);
  const F a3sq = F::a(3, 2);
  OperatorSum op = {
      {1, 0, 0, a1i},
      {1, 1, 0, -a1i},
      {1, 0, 1, -a3sq},
      {2, 0, 0, F::a(2) * a3sq},
      {2, -1, 1, F::a(2)},
      {2, -1, 0, -(F::a(2) * a3sq)},
      {3, 0, 0, F::a(3)},
      {3, 0, -1, F(-1)},
      {3, 1, -1, F::a(3)},
  };
  return rotateOperator(op, k - 1);
}

OperatorSum rotateOperator(const OperatorSum& op, int steps) {
  OperatorSum r;
  for (const auto& t : op) r.push_back({((t.component - 1 + steps) % 3 + 3) % 3 + 1, t.i, t.j, t.coef.rotated(steps)});
  return r;
}

std::string operatorToString(const OperatorSum& op) {
  std::ostringstream os;
  for (std::size_t n = 0; n < op.size(); ++n) {
    if (n) os << " + ";
    os << "(" << op[n].coef.toString() << ") P" << op[n].component << "[" << op[n].i << "," << op[n].j << "]";
  }
  return os.str();
}

SkeinState buildZ(int maxSize, const CoefficientTable& table) {
  SkeinState z(maxSize);
  for (const auto& t : triplesUpTo(maxSize)) z.add(BasisLabel::pure(t), FramedScalar(table.at(t)));
  return z;
}

AnnihilationReport verifyAnnihilation(const OperatorSum& op, int opIndex, const SkeinState& state, int checkSize, int jobs) {
  if (state.bound() >= 0 && checkSize > state.bound() - 1)
    throw TruncationError("checkSize " + std::to_string(checkSize) + " exceeds bound - 1 = " + std::to_string(state.bound() - 1));
  AnnihilationReport rep;
  rep.op = opIndex;
  rep.checkSize = checkSize;
  SkeinState img = applyOperator(op, state, jobs);
  for (const auto& [l, c] : img.terms())
    if (l.size() <= checkSize) rep.violations.emplace_back(l, c);
  return rep;
}

FramedFunctional coefficientConstraint(int k, const TripleLabel& t) {
  std::vector<TripleLabel> sources{t};
  for (int c = 0; c < 3; ++c) {
    for (const auto& p : t[c].removeCorners()) {
      TripleLabel u = t;
      u[c] = p;
      sources.push_back(u);
    }
    for (const auto& p : t[c].addCorners()) {
      TripleLabel u = t;
      u[c] = p;
      sources.push_back(u);
    }
  }
  const OperatorSum op = operatorA(k);
  const BasisLabel target = BasisLabel::pure(t);
  FramedFunctional out;
  for (const auto& s : sources) {
    FramedScalar acc;
    for (const auto& term : op) acc += term.coef * applyPToLabel(term.i, term.j, term.component, BasisLabel::pure(s)).coefficient(target);
    if (!acc.isZero()) out.emplace_back(s, acc);
  }
  return out;
}

ConstraintSplit splitConstraint(int k, const FramedFunctional& f) {
  static const int splitVar[] = {2, 0, 1};
  const int v = splitVar[k - 1];
  ConstraintSplit out;
  for (const auto& [t, c] : f)
    for (const auto& [e, q] : c.terms()) {
      for (int i = 0; i < 3; ++i)
        if (i != v && e[i] != 0) out.aFree = false;
      out.parts[e[v]].emplace_back(t, q);
    }
  return out;
}

std::pair<RecursionId, RecursionId> constraintRecursions(int k) {
  return {rotatedRecursion(RecursionId::R32, k - 1), rotatedRecursion(RecursionId::R31, k - 1)};
}

std::map<TripleLabel, QScalar> knownLeadingValues() {
  const QScalar invz = QScalar::z().inverse();
  const Partition b = box();
  return {
      {TripleLabel{}, QScalar(1)},
      {TripleLabel{{}, {}, b}, -invz},
      {TripleLabel{{}, b, b}, QScalar(1) + invz * invz},
      {TripleLabel{b, {}, b}, QScalar(1) + invz * invz},
  };
}

namespace {

int signRule(int i, int j) { return (i + j) % 2 ? -1 : 1; }

// Sign of a signed monomial, 0 if the value is not one.
int monomialSign(const FramedScalar& f) {
  if (!f.isSignedMonomial()) return 0;
  const QScalar& c = f.terms().begin()->second;
  if (c.offset() != 0) return 0;  // framing variables only, no stray powers of q
  return sgn(c.num()[0]);
}

}  // namespace

MonomialSolution solveMonomialCoefficients(const std::map<TripleLabel, QScalar>& leading) {
  MonomialSolution sol;
  auto& log = sol.steps;

  // Close the leading data under cyclic relabeling.
  std::map<TripleLabel, QScalar> z;
  for (const auto& [t, v] : leading)
    for (int r = 0; r < 3; ++r) {
      auto [it, fresh] = z.emplace(t.rotated(r), v);
      if (!fresh && it->second != v) throw NoSolutionError("leading values disagree on the cyclic orbit of " + t.toString());
    }
  SkeinState Z;
  for (const auto& [t, v] : z) Z.add(BasisLabel::pure(t), FramedScalar(v));
  log.push_back("leading data closed under cyclic relabeling: " + std::to_string(z.size()) + " labels");

  const OperatorSum shape = operatorA(1);  // only (component, i, j) are read from this
  const int n = static_cast<int>(shape.size());
  std::vector<std::optional<FramedScalar>> coef(n);
  auto idx = [&](int k, int i, int j) {
    for (int m = 0; m < n; ++m)
      if (shape[m].component == k && shape[m].i == i && shape[m].j == j) return m;
    throw PreconditionError("no such term");
  };
  auto contribution = [&](int m, const BasisLabel& target) {
    return applyP(shape[m].i, shape[m].j, shape[m].component, Z).coefficient(target);
  };
  auto checkSign = [&](int m, const FramedScalar& v) {
    int s = monomialSign(v);
    if (s == 0 || s != signRule(shape[m].i, shape[m].j))
      throw NoSolutionError("coefficient " + v.toString() + " of P" + std::to_string(shape[m].component) + "[" +
                            std::to_string(shape[m].i) + "," + std::to_string(shape[m].j) + "] violates the sign rule");
  };

  // Normalization.
  const int m0m1 = idx(3, 0, -1), m1m1 = idx(3, 1, -1), m00c3 = idx(3, 0, 0);
  coef[m0m1] = FramedScalar(-1);
  checkSign(m0m1, *coef[m0m1]);
  log.push_back("normalize a(3)[0,-1] = -1");

  // Mixed sector W_{empty, box-bar} on component 3.
  BasisLabel mixed;
  mixed.mubar[2] = box();
  for (int m = 0; m < n; ++m)
    if (m != m0m1 && m != m1m1 && !contribution(m, mixed).isZero())
      throw NoSolutionError("unexpected mixed-sector contribution");
  FramedScalar cm = contribution(m1m1, mixed);
  if (!cm.isSingleTerm()) throw NoSolutionError("mixed-sector coefficient is not invertible");
  coef[m1m1] = -(*coef[m0m1] * contribution(m0m1, mixed)) * cm.inverse();
  checkSign(m1m1, *coef[m1m1]);
  log.push_back("mixed sector vanishes: a(3)[1,-1] = " + coef[m1m1]->toString());

  // Size zero: one equation per component, since the unknots are independent.
  const BasisLabel empty;
  std::map<int, int> partner;  // m -> m' with a_m = -a_{m'}
  for (int k = 1; k <= 3; ++k) {
    FramedScalar known;
    std::vector<int> unknown;
    for (int m = 0; m < n; ++m) {
      if (shape[m].component != k) continue;
      FramedScalar c = contribution(m, empty);
      if (c.isZero()) continue;
      if (coef[m]) known += *coef[m] * c; else unknown.push_back(m);
    }
    if (unknown.size() == 1) {
      // Search the signed monomials a^e, |e_i| <= 3, allowed by the sign rule.
      const int m = unknown[0];
      const FramedScalar c = contribution(m, empty);
      std::vector<FramedScalar> hits;
      for (int e1 = -3; e1 <= 3; ++e1)
        for (int e2 = -3; e2 <= 3; ++e2)
          for (int e3 = -3; e3 <= 3; ++e3) {
            FramedScalar cand = FramedScalar::monomial({e1, e2, e3}, QScalar(signRule(shape[m].i, shape[m].j)));
            if ((cand * c + known).isZero()) hits.push_back(cand);
          }
      if (hits.size() != 1) throw NoSolutionError("size-0 equation on component " + std::to_string(k) + " has " +
                                                  std::to_string(hits.size()) + " monomial solutions");
      coef[m] = hits[0];
      log.push_back("size-0 equation, component " + std::to_string(k) + ": a(" + std::to_string(k) + ")[0,0] = " +
                    hits[0].toString());
    } else if (unknown.size() == 2 && known.isZero() &&
               contribution(unknown[0], empty) == contribution(unknown[1], empty)) {
      const int keep = shape[unknown[0]].i == 0 && shape[unknown[0]].j == 0 ? unknown[1] : unknown[0];
      const int drop = keep == unknown[0] ? unknown[1] : unknown[0];
      partner[drop] = keep;
      log.push_back("size-0 equation, component " + std::to_string(k) + ": a(" + std::to_string(k) + ")[0,0] = -a(" +
                    std::to_string(k) + ")[" + std::to_string(shape[keep].i) + "," + std::to_string(shape[keep].j) + "]");
    } else {
      throw NoSolutionError("size-0 equation on component " + std::to_string(k) + " is not of the expected form");
    }
  }
  (void)m00c3;

  // One-box labels on components 1 and 2, solved by monomial matching.
  for (int k : {1, 2}) {
    BasisLabel target;
    target.lambda[k - 1] = box();
    FramedScalar known;
    std::vector<int> unknown;
    std::vector<FramedScalar> eff;
    for (int m = 0; m < n; ++m) {
      if (partner.count(m)) continue;  // folded into its partner
      FramedScalar c = contribution(m, target);
      for (const auto& [d, keep] : partner)
        if (keep == m) c -= contribution(d, target);
      if (coef[m]) {
        known += *coef[m] * c;
      } else if (!c.isZero()) {
        unknown.push_back(m);
        eff.push_back(c);
      }
    }
    std::vector<std::pair<AExp, QScalar>> rhs(known.terms().begin(), known.terms().end());
    if (rhs.size() != unknown.size()) throw NoSolutionError("monomial count mismatch at " + target.toString());
    for (auto& r : rhs) r.second = -r.second;
    std::vector<int> perm(rhs.size());
    for (std::size_t p = 0; p < perm.size(); ++p) perm[p] = static_cast<int>(p);
    std::vector<std::vector<FramedScalar>> valid;
    do {
      std::vector<FramedScalar> vals;
      bool ok = true;
      for (std::size_t u = 0; u < unknown.size() && ok; ++u) {
        if (!eff[u].isSingleTerm()) { ok = false; break; }
        FramedScalar v = FramedScalar::monomial(rhs[perm[u]].first, rhs[perm[u]].second) * eff[u].inverse();
        int s = monomialSign(v);
        ok = s != 0 && s == signRule(shape[unknown[u]].i, shape[unknown[u]].j);
        vals.push_back(v);
      }
      if (ok) valid.push_back(vals);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (valid.size() != 1) throw NoSolutionError("sign rule leaves " + std::to_string(valid.size()) + " assignments at " + target.toString());
    std::string line = "label " + target.toString() + ":";
    for (std::size_t u = 0; u < unknown.size(); ++u) {
      coef[unknown[u]] = valid[0][u];
      line += " a(" + std::to_string(shape[unknown[u]].component) + ")[" + std::to_string(shape[unknown[u]].i) + "," +
              std::to_string(shape[unknown[u]].j) + "] = " + valid[0][u].toString();
    }
    log.push_back(line);
  }
  for (const auto& [d, keep] : partner) {
    if (!coef[keep]) throw NoSolutionError("partner coefficient left undetermined");
    coef[d] = -*coef[keep];
    checkSign(d, *coef[d]);
  }
  for (int m = 0; m < n; ++m) {
    if (!coef[m]) throw NoSolutionError("coefficient left undetermined");
    sol.op.push_back({shape[m].component, shape[m].i, shape[m].j, *coef[m]});
  }
  return sol;
}

}  // namespace topvert
