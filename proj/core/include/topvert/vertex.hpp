#pragma once

#include "topvert/partition.hpp"
#include "topvert/qscalar.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace topvert {

struct TripleLabel {
  Partition l1, l2, l3;

  int size() const { return l1.size() + l2.size() + l3.size(); }
  const Partition& operator[](int k) const { return k == 0 ? l1 : (k == 1 ? l2 : l3); }
  Partition& operator[](int k) { return k == 0 ? l1 : (k == 1 ? l2 : l3); }
  // (l1, l2, l3) -> (l3, l1, l2): component k moves to slot k+1.
  TripleLabel rotated(int steps = 1) const;
  TripleLabel transposed() const { return {l1.transpose(), l2.transpose(), l3.transpose()}; }
  std::string toString() const;

  friend auto operator<=>(const TripleLabel&, const TripleLabel&) = default;
  friend bool operator==(const TripleLabel&, const TripleLabel&) = default;
};

// All triples of total size n: size splits (n1,n2,n3) with n1 then n2
// descending, then reverse-lex partitions in each slot.
std::vector<TripleLabel> triplesOfSize(int n);
std::vector<TripleLabel> triplesUpTo(int maxSize);

enum class VertexFormula { C, T, Alternate, Hopf, Recursion };
std::string formulaName(VertexFormula f);
VertexFormula parseFormula(const std::string& name);  // "C", "T", "alt", "hopf"

QScalar vertexC(const TripleLabel& t);
QScalar vertexT(const TripleLabel& t);
QScalar vertexTAlternate(const TripleLabel& t);
QScalar vertexTviaHopf(const TripleLabel& t);
QScalar evaluateVertex(VertexFormula f, const TripleLabel& t);

class CoefficientTable {
 public:
  CoefficientTable() = default;
  CoefficientTable(int maxSize, std::string formula) : maxSize_(maxSize), formula_(std::move(formula)) {}

  int maxSize() const { return maxSize_; }
  const std::string& formula() const { return formula_; }
  std::size_t size() const { return entries_.size(); }

  // Entries keep insertion order, which is the enumeration order.
  void set(const TripleLabel& t, const QScalar& v);
  bool contains(const TripleLabel& t) const { return index_.count(t) > 0; }
  const QScalar* find(const TripleLabel& t) const;
  const QScalar& at(const TripleLabel& t) const;  // IncompleteDataError if absent
  const std::vector<std::pair<TripleLabel, QScalar>>& entries() const { return entries_; }

  friend bool operator==(const CoefficientTable& a, const CoefficientTable& b) { return a.entries_ == b.entries_; }

 private:
  int maxSize_ = 0;
  std::string formula_;
  std::vector<std::pair<TripleLabel, QScalar>> entries_;
  std::map<TripleLabel, std::size_t> index_;
};

// Every triple of total size <= maxSize; entries are evaluated on `jobs`
// threads and stored in enumeration order.
CoefficientTable buildTable(int maxSize, VertexFormula f, int jobs = 1);

}  // namespace topvert
