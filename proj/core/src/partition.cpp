#include "topvert/partition.hpp"

#include "topvert/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace topvert {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw PreconditionError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw PreconditionError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition box() { return Partition{1}; }

Partition Partition::transpose() const {
  std::vector<int> t;
  if (!parts_.empty()) {
    t.resize(parts_[0]);
    for (int j = 0; j < parts_[0]; ++j) {
      int c = 0;
      while (c < length() && parts_[c] > j) ++c;
      t[j] = c;
    }
  }
  return Partition(std::move(t));
}

bool Partition::contains(const Partition& eta) const {
  if (eta.length() > length()) return false;
  for (int i = 0; i < eta.length(); ++i)
    if (eta.parts_[i] > parts_[i]) return false;
  return true;
}

std::vector<Partition> Partition::addCorners() const {
  std::vector<Partition> out;
  for (int i = 0; i <= length(); ++i) {
    if (i == 0 || part(i) < part(i - 1)) {
      std::vector<int> p = parts_;
      if (i == length()) p.push_back(1); else ++p[i];
      out.emplace_back(std::move(p));
    }
  }
  return out;
}

std::vector<Partition> Partition::removeCorners() const {
  std::vector<Partition> out;
  for (int i = 0; i < length(); ++i) {
    if (part(i) > part(i + 1)) {
      std::vector<int> p = parts_;
      if (--p[i] == 0) p.pop_back();
      out.emplace_back(std::move(p));
    }
  }
  return out;
}

std::vector<int> Partition::hookLengths() const {
  Partition t = transpose();
  std::vector<int> h;
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[i]; ++j) h.push_back((parts_[i] - j - 1) + (t.part(j) - i - 1) + 1);
  return h;
}

std::vector<int> Partition::contents() const {
  std::vector<int> c;
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[i]; ++j) c.push_back(j - i);
  return c;
}

std::string Partition::toString() const {
  std::string s = "[";
  for (int i = 0; i < length(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + "]";
}

namespace {

void generate(int remaining, int maxPart, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, maxPart); p >= 1; --p) {
    cur.push_back(p);
    generate(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitionsOf(int n) {
  if (n < 0) throw PreconditionError("partitionsOf: negative size");
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> cur;
  generate(n, n, cur, out);
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  for (int n = 0; n <= lambda.size(); ++n)
    for (const auto& eta : partitionsOf(n))
      if (lambda.contains(eta)) out.push_back(eta);
  return out;
}

int kappa(const Partition& lambda) {
  int k = 0;
  for (int c : lambda.contents()) k += c;
  return 2 * k;
}

QScalar contentPolynomial(const Partition& lambda) {
  if (lambda.empty()) return QScalar();
  std::vector<int> c = lambda.contents();
  int lo = *std::min_element(c.begin(), c.end());
  int hi = *std::max_element(c.begin(), c.end());
  poly::Poly p(2 * (hi - lo) + 1);
  for (int x : c) p[2 * (x - lo)] += 1;
  return QScalar::fromParts(2 * lo, p, poly::Poly{mpz_class(1)});
}

}  // namespace topvert
