#include "topvert/poly.hpp"

#include "topvert/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace topvert::poly {

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

int valuation(const Poly& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (sgn(p[i]) != 0) return static_cast<int>(i);
  return -1;
}

Poly add(const Poly& a, const Poly& b) {
  const Poly& lo = a.size() < b.size() ? a : b;
  const Poly& hi = a.size() < b.size() ? b : a;
  Poly r = hi;
  for (size_t i = 0; i < lo.size(); ++i) r[i] += lo[i];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

namespace {

// Kronecker substitution: pack into one big integer and let GMP multiply.
// Signed coefficients are handled by evaluating at 2^bits with borrows.
Poly mulKronecker(const Poly& a, const Poly& b) {
  size_t maxBits = 1;
  for (const auto& c : a) maxBits = std::max(maxBits, mpz_sizeinbase(c.get_mpz_t(), 2));
  size_t maxBitsB = 1;
  for (const auto& c : b) maxBitsB = std::max(maxBitsB, mpz_sizeinbase(c.get_mpz_t(), 2));
  size_t n = std::min(a.size(), b.size());
  size_t lenBits = 1;
  while ((size_t{1} << lenBits) < n + 1) ++lenBits;
  const size_t bits = maxBits + maxBitsB + lenBits + 2;

  auto pack = [bits](const Poly& p) {
    mpz_class r = 0;
    for (size_t i = p.size(); i-- > 0;) {
      r <<= bits;
      r += p[i];
    }
    return r;
  };
  mpz_class prod = pack(a) * pack(b);

  Poly r(a.size() + b.size() - 1);
  const mpz_class half = mpz_class(1) << (bits - 1);
  const mpz_class base = mpz_class(1) << bits;
  for (size_t i = 0; i < r.size(); ++i) {
    mpz_class low;
    mpz_fdiv_r_2exp(low.get_mpz_t(), prod.get_mpz_t(), bits);
    if (low >= half) low -= base;
    r[i] = low;
    prod -= low;
    mpz_fdiv_q_2exp(prod.get_mpz_t(), prod.get_mpz_t(), bits);
  }
  trim(r);
  return r;
}

}  // namespace

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1) return scale(b, a[0]);
  if (b.size() == 1) return scale(a, b[0]);
  if (a.size() > 24 && b.size() > 24) return mulKronecker(a, b);
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, const mpz_class& c) {
  if (sgn(c) == 0) return {};
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}

Poly negate(Poly a) {
  for (auto& x : a) x = -x;
  return a;
}

Poly shift(const Poly& a, int k) {
  if (a.empty() || k == 0) return a;
  Poly r(a.size() + k);
  for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}

Poly dropLow(const Poly& a, int k) {
  if (k <= 0) return a;
  if (static_cast<int>(a.size()) <= k) return {};
  return Poly(a.begin() + k, a.end());
}

Poly reversed(const Poly& a) { return Poly(a.rbegin(), a.rend()); }

mpz_class content(const Poly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly divexactScalar(const Poly& a, const mpz_class& c) {
  Poly r = a;
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

std::optional<Poly> divide(const Poly& a, const Poly& b) {
  if (b.empty()) throw ArithmeticError("polynomial division by zero");
  if (a.empty()) return Poly{};
  int da = degree(a), db = degree(b);
  if (da < db) return std::nullopt;
  if (db == 0) {
    Poly r = a;
    for (auto& x : r) {
      if (!mpz_divisible_p(x.get_mpz_t(), b[0].get_mpz_t())) return std::nullopt;
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), b[0].get_mpz_t());
    }
    return r;
  }
  Poly rem = a;
  Poly q(da - db + 1);
  const mpz_class& lc = b.back();
  for (int i = da - db; i >= 0; --i) {
    mpz_class& top = rem[i + db];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (int j = 0; j <= db; ++j) mpz_submul(rem[i + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    q[i] = c;
  }
  for (const auto& c : rem)
    if (sgn(c) != 0) return std::nullopt;
  trim(q);
  return q;
}

// ---------------------------------------------------------------------------
// Modular gcd (Brown's dense algorithm over word-size primes).

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

const std::vector<u64>& primeTable() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    mpz_class p = 2147000000u;
    for (int i = 0; i < 2048; ++i) {
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      out.push_back(p.get_ui());
    }
    return out;
  }();
  return primes;
}

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trimMod(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const Poly& a, u64 p) {
  ModPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  trimMod(r);
  return r;
}

void remInPlace(ModPoly& a, const ModPoly& b, u64 p) {
  const size_t db = b.size() - 1;
  const u64 inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    u64 c = mulmod(a.back(), inv, p);
    size_t off = a.size() - b.size();
    for (size_t j = 0; j <= db; ++j) {
      u64 t = mulmod(c, b[j], p);
      a[off + j] = a[off + j] >= t ? a[off + j] - t : a[off + j] + p - t;
    }
    trimMod(a);
  }
}

ModPoly gcdMod(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    remInPlace(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

Poly primitivePositive(Poly p) {
  mpz_class c = content(p);
  if (c != 1 && c != 0) p = divexactScalar(p, c);
  if (!p.empty() && sgn(p.back()) < 0) p = negate(std::move(p));
  return p;
}

Poly gcdPrimitive(const Poly& a, const Poly& b) {
  // a, b primitive, both of positive degree.
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
  const mpz_class lcProd = a.back() * b.back();

  Poly H;
  mpz_class M;
  int curDeg = -1;
  Poly prevCandidate;
  const int bound = std::min(degree(a), degree(b));

  for (u64 p : primeTable()) {
    if (mpz_divisible_ui_p(lcProd.get_mpz_t(), p)) continue;
    ModPoly gp = gcdMod(reduce(a, p), reduce(b, p), p);
    int d = static_cast<int>(gp.size()) - 1;
    if (d == 0) return Poly{1};
    if (d > bound) continue;
    u64 gm = mpz_fdiv_ui(g.get_mpz_t(), p);
    for (auto& c : gp) c = mulmod(c, gm, p);

    if (curDeg == -1 || d < curDeg) {
      curDeg = d;
      H.assign(gp.size(), 0);
      for (size_t i = 0; i < gp.size(); ++i) H[i] = static_cast<unsigned long>(gp[i]);
      M = static_cast<unsigned long>(p);
      prevCandidate.clear();
    } else if (d > curDeg) {
      continue;
    } else {
      u64 minv = invmod(mpz_fdiv_ui(M.get_mpz_t(), p), p);
      for (size_t i = 0; i < H.size(); ++i) {
        u64 r = mpz_fdiv_ui(H[i].get_mpz_t(), p);
        u64 diff = gp[i] >= r ? gp[i] - r : gp[i] + p - r;
        u64 t = mulmod(diff, minv, p);
        H[i] += M * static_cast<unsigned long>(t);
      }
      M *= static_cast<unsigned long>(p);
    }

    Poly cand(H.size());
    mpz_class half = M / 2;
    for (size_t i = 0; i < H.size(); ++i) cand[i] = H[i] > half ? mpz_class(H[i] - M) : H[i];
    cand = primitivePositive(cand);
    if (cand == prevCandidate) {
      if (divide(a, cand) && divide(b, cand)) return cand;
    }
    prevCandidate = std::move(cand);
  }
  throw ArithmeticError("modular gcd: prime table exhausted");
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) {
    Poly r = a.empty() ? b : a;
    if (!r.empty() && sgn(r.back()) < 0) r = negate(std::move(r));
    return r;
  }
  mpz_class ca = content(a), cb = content(b);
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (degree(a) == 0 || degree(b) == 0) return Poly{c};
  Poly pa = primitivePositive(a), pb = primitivePositive(b);
  Poly g;
  if (pa == pb) {
    g = pa;
  } else {
    g = gcdPrimitive(pa, pb);
  }
  return scale(g, c);
}

std::string toString(const Poly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < p.size(); ++i) {
    const mpz_class& c = p[i];
    if (sgn(c) == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace topvert::poly
