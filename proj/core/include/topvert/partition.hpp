#pragma once

#include "topvert/qscalar.hpp"

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace topvert {

// Integer partition; boxes are (row i, column j), both starting at 1, with
// content j - i.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);  // validates

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // i-th part, 0-based, zero beyond the length.
  int part(int i) const { return i < length() ? parts_[i] : 0; }

  Partition transpose() const;
  bool contains(const Partition& eta) const;

  // Partitions obtained by adding (removing) one box, ordered by row index.
  std::vector<Partition> addCorners() const;
  std::vector<Partition> removeCorners() const;

  std::vector<int> hookLengths() const;  // row-major box order
  std::vector<int> contents() const;  // row-major box order

  std::string toString() const;  // "[3,1]"

  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition box();  // the single-box partition (1)

// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
const std::vector<Partition>& partitionsOf(int n);
// All eta with eta contained in lambda, ordered by size then reverse lex.
std::vector<Partition> subpartitions(const Partition& lambda);

// kappa(lambda) = 2 * sum of contents.
int kappa(const Partition& lambda);
// C_lambda(q) = sum over boxes of q^{content}.
QScalar contentPolynomial(const Partition& lambda);

}  // namespace topvert
