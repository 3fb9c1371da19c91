#include "topvert/serialize.hpp"

#include "topvert/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>

namespace topvert {

namespace {

json coefJson(const mpz_class& c) {
  if (c.fits_slong_p()) return static_cast<long>(c.get_si());
  return c.get_str();
}

mpz_class coefFromJson(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer '" + j.get<std::string>() + "'");
    return v;
  }
  throw ParseError("coefficient must be an integer or a decimal string");
}

json polyJson(const poly::Poly& p) {
  json a = json::array();
  for (const auto& c : p) a.push_back(coefJson(c));
  return a;
}

poly::Poly polyFromJson(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array");
  poly::Poly p;
  for (const auto& c : j) p.push_back(coefFromJson(c));
  return p;
}

json expJson(const Exp3& e) { return json::array({e[0], e[1], e[2]}); }

}  // namespace

json toJson(const QScalar& v) { return {{"offset", v.offset()}, {"num", polyJson(v.num())}, {"den", polyJson(v.den())}}; }

QScalar qscalarFromJson(const json& j) {
  if (!j.is_object() || !j.contains("offset") || !j.contains("num") || !j.contains("den") || !j["offset"].is_number_integer())
    throw ParseError("QScalar must be an object with offset, num and den");
  poly::Poly num = polyFromJson(j["num"]), den = polyFromJson(j["den"]);
  int off = j["offset"].get<int>();
  QScalar v;
  try {
    v = QScalar::fromParts(off, num, den);
  } catch (const ArithmeticError& e) {
    throw ParseError(std::string("invalid QScalar: ") + e.what());
  }
  if (v.offset() != off || v.num() != num || v.den() != den) throw ParseError("QScalar is not in canonical form");
  return v;
}

json toJson(const Partition& p) { return p.parts(); }

Partition partitionFromJson(const json& j) {
  if (!j.is_array()) throw ParseError("partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("partition parts must be integers");
    parts.push_back(x.get<int>());
  }
  try {
    return Partition(parts);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Partition parsePartition(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception&) {
    throw ParseError("cannot parse partition '" + text + "' (expected a JSON array such as [2,1])");
  }
  return partitionFromJson(j);
}

json toJson(const TripleLabel& t) { return json::array({toJson(t.l1), toJson(t.l2), toJson(t.l3)}); }

json toJson(const FramedScalar& f) {
  json a = json::array();
  for (const auto& [e, c] : f.terms()) a.push_back({{"a", json::array({e[0], e[1], e[2]})}, {"coef", toJson(c)}});
  return a;
}

json toJson(const BasisLabel& l) {
  json lam = json::array(), mu = json::array();
  for (int k = 0; k < 3; ++k) {
    lam.push_back(toJson(l.lambda[k]));
    mu.push_back(toJson(l.mubar[k]));
  }
  return {{"lambda", lam}, {"mubar", mu}};
}

json tableToJson(const CoefficientTable& t) {
  json a = json::array();
  for (const auto& [l, v] : t.entries())
    a.push_back({{"l1", toJson(l.l1)}, {"l2", toJson(l.l2)}, {"l3", toJson(l.l3)}, {"value", toJson(v)}});
  return a;
}

CoefficientTable tableFromJson(const json& j, int maxSize, const std::string& formula) {
  if (!j.is_array()) throw ParseError("table must be a JSON array");
  CoefficientTable t(maxSize, formula);
  for (const auto& e : j) {
    if (!e.is_object()) throw ParseError("table entry must be an object");
    TripleLabel l{partitionFromJson(e.at("l1")), partitionFromJson(e.at("l2")), partitionFromJson(e.at("l3"))};
    if (l.size() > maxSize) throw ParseError("table entry " + l.toString() + " exceeds the size bound");
    if (t.contains(l)) throw ParseError("duplicate table entry " + l.toString());
    t.set(l, qscalarFromJson(e.at("value")));
  }
  if (t.size() != triplesUpTo(maxSize).size()) throw ParseError("table is incomplete");
  return t;
}

json seriesToJson(const LaurentSeries3& s) {
  json a = json::array();
  for (const auto& [e, c] : s.sortedTerms()) a.push_back({{"exp", expJson(e)}, {"coef", toJson(c)}});
  return a;
}

json jetToJson(const Jet& jt) {
  std::vector<std::pair<Exp3, mpq_class>> terms(jt.begin(), jt.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = totalDegree(a.first), db = totalDegree(b.first);
    return da != db ? da < db : a.first < b.first;
  });
  json a = json::array();
  for (const auto& [e, c] : terms) a.push_back({{"exp", expJson(e)}, {"coef", c.get_str()}});
  return a;
}

json toJson(const AnnihilationReport& r) {
  json v = json::array();
  for (const auto& [l, c] : r.violations) v.push_back({{"label", toJson(l)}, {"coefficient", toJson(c)}});
  return {{"operator", r.op}, {"checkSize", r.checkSize}, {"violations", v}};
}

std::filesystem::path defaultCacheDir() {
  if (const char* d = std::getenv("TOPVERT_CACHE_DIR"); d && *d) return d;
  return ".topvert-cache";
}

std::filesystem::path cacheFile(const std::filesystem::path& dir, const std::string& formula, int maxSize) {
  return dir / ("table-" + formula + "-" + std::to_string(maxSize) + ".json");
}

void saveTable(const std::filesystem::path& file, const CoefficientTable& t) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  // Write then rename so a killed run never leaves a half-written cache.
  std::filesystem::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write " + tmp.string());
    out << tableToJson(t).dump() << "\n";
  }
  std::filesystem::rename(tmp, file);
}

std::optional<CoefficientTable> loadTable(const std::filesystem::path& file, int maxSize, const std::string& formula) {
  if (!std::filesystem::exists(file)) return std::nullopt;
  std::ifstream in(file);
  if (!in) throw ParseError("cannot read cache file " + file.string());
  try {
    return tableFromJson(json::parse(in), maxSize, formula);
  } catch (const json::exception& e) {
    throw ParseError("corrupt cache file " + file.string() + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError("corrupt cache file " + file.string() + ": " + e.what());
  }
}

}  // namespace topvert
