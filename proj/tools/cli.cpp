#include "cli.hpp"

#include "topvert/abelian.hpp"
#include "topvert/augmentation.hpp"
#include "topvert/checks.hpp"
#include "topvert/errors.hpp"
#include "topvert/recursion.hpp"
#include "topvert/serialize.hpp"
#include "topvert/vertex.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace topvert::cli {

namespace {

enum class Format { Json, Csv, Text };

struct Common {
  std::string format = "text";
  int jobs = 1;
  std::string cacheDir;
  bool noCache = false;
  std::string sign = "auto";
};

void addCommon(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--jobs,-j", c.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  sub->add_option("--cache", c.cacheDir, "Table cache directory (default $TOPVERT_CACHE_DIR or .topvert-cache)");
  sub->add_flag("--no-cache", c.noCache, "Neither read nor write cached tables");
  sub->add_option("--sign", c.sign, "Sign for the printed U(1) sums: auto, plus, minus")
      ->check(CLI::IsMember({"auto", "plus", "minus"}));
}

Format formatOf(const Common& c) {
  if (c.format == "json") return Format::Json;
  if (c.format == "csv") return Format::Csv;
  return Format::Text;
}

const char* kHeader = "# s = q^(1/2)";

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char ch : s) o += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return o + "\"";
}

std::string expString(const Exp3& e) {
  return std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]);
}

CoefficientTable obtainTable(int maxSize, VertexFormula f, const Common& c, std::ostream& err) {
  const std::filesystem::path dir = c.cacheDir.empty() ? defaultCacheDir() : std::filesystem::path(c.cacheDir);
  const std::filesystem::path file = cacheFile(dir, formulaName(f), maxSize);
  if (!c.noCache) {
    if (auto t = loadTable(file, maxSize, formulaName(f))) return *t;
  }
  CoefficientTable t = buildTable(maxSize, f, c.jobs);
  if (!c.noCache) {
    try {
      saveTable(file, t);
    } catch (const std::exception& e) {
      err << "warning: could not write cache: " << e.what() << "\n";
    }
  }
  return t;
}

void printTable(std::ostream& out, const CoefficientTable& t, Format fmt) {
  if (fmt == Format::Json) {
    out << json{{"maxSize", t.maxSize()}, {"formula", t.formula()}, {"entries", tableToJson(t)}}.dump(1) << "\n";
    return;
  }
  if (fmt == Format::Csv) {
    out << "l1,l2,l3,value\n";
    for (const auto& [l, v] : t.entries())
      out << csvField(l.l1.toString()) << "," << csvField(l.l2.toString()) << "," << csvField(l.l3.toString()) << ","
          << csvField(v.toString()) << "\n";
    return;
  }
  out << kHeader << "\n";
  for (const auto& [l, v] : t.entries()) out << l.toString() << "  " << v.toString() << "\n";
}

int cmdVertex(const std::vector<std::string>& labels, const std::string& formula, const Common& c, std::ostream& out) {
  TripleLabel t{parsePartition(labels[0]), parsePartition(labels[1]), parsePartition(labels[2])};
  VertexFormula f = parseFormula(formula);
  if (f == VertexFormula::Recursion) throw ParseError("vertex: use `solve` for recursion-derived values");
  QScalar v = evaluateVertex(f, t);
  switch (formatOf(c)) {
    case Format::Json:
      out << json{{"triple", toJson(t)}, {"formula", formulaName(f)}, {"value", toJson(v)}}.dump() << "\n";
      break;
    case Format::Csv:
      out << "l1,l2,l3,formula,value\n"
          << csvField(t.l1.toString()) << "," << csvField(t.l2.toString()) << "," << csvField(t.l3.toString()) << ","
          << formulaName(f) << "," << csvField(v.toString()) << "\n";
      break;
    case Format::Text:
      out << kHeader << "\n" << v.toString() << "\n";
      break;
  }
  return 0;
}

int cmdSolve(int maxSize, const Common& c, std::ostream& out, std::ostream& err) {
  std::vector<LevelStats> stats;
  CoefficientTable solved = solveRecursion(maxSize, c.jobs, &stats);
  CoefficientTable closed = obtainTable(maxSize, VertexFormula::T, c, err);
  std::size_t mismatches = 0;
  std::string first;
  for (const auto& [l, v] : closed.entries()) {
    const QScalar* s = solved.find(l);
    if (!s || *s != v) {
      if (mismatches++ == 0) first = l.toString();
    }
  }
  const bool equal = mismatches == 0 && solved.size() == closed.size();
  switch (formatOf(c)) {
    case Format::Json: {
      json levels = json::array();
      for (const auto& s : stats) levels.push_back({{"level", s.level}, {"equations", s.equations}, {"unknowns", s.unknowns}});
      out << json{{"maxSize", maxSize}, {"entries", solved.size()}, {"levels", levels}, {"equalsClosedForm", equal},
                  {"mismatches", mismatches}}
                 .dump(1)
          << "\n";
      break;
    }
    case Format::Csv:
      out << "level,equations,unknowns\n";
      for (const auto& s : stats) out << s.level << "," << s.equations << "," << s.unknowns << "\n";
      break;
    case Format::Text:
      for (const auto& s : stats)
        out << "level " << s.level << ": " << s.equations << " equations, " << s.unknowns << " unknowns, unique\n";
      out << solved.size() << " entries; " << (equal ? "equal to the closed form" : "MISMATCH at " + first) << "\n";
      break;
  }
  return equal ? 0 : 1;
}

int cmdVerify(const std::string& suite, const VerifyOptions& opts, const Common& c, std::ostream& out) {
  std::vector<CheckResult> results = runSuite(suite, opts);
  std::size_t failed = 0;
  for (const auto& r : results)
    if (!r.passed) ++failed;
  switch (formatOf(c)) {
    case Format::Json: {
      json checks = json::array();
      for (const auto& r : results) checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      out << json{{"suite", suite}, {"maxSize", opts.maxSize}, {"degree", opts.degree}, {"checks", checks},
                  {"failed", failed}, {"passed", failed == 0}}
                 .dump(1)
          << "\n";
      break;
    }
    case Format::Csv:
      out << "name,passed,detail\n";
      for (const auto& r : results) out << r.name << "," << (r.passed ? "true" : "false") << "," << csvField(r.detail) << "\n";
      break;
    case Format::Text:
      for (const auto& r : results) out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
      out << results.size() << " checks, " << failed << " failed\n";
      break;
  }
  return failed == 0 ? 0 : 1;
}

int cmdSeries(const std::string& family, int degree, std::string source, const Common& c, std::ostream& out) {
  Family f = parseFamily(family);
  const int eps = c.sign == "minus" ? -1 : 1;
  LaurentSeries3 s;
  if (source.empty()) source = f == Family::Main ? "specialized" : "printed";
  if (f == Family::Main) {
    if (source == "printed") s = abelianZDirect(degree, eps);
    else if (source == "specialized") s = specializeZ(degree);
    else throw ParseError("--source must be printed or specialized");
  } else {
    if (source == "specialized") throw ParseError("--source specialized applies to the main family only");
    s = abelianZFilling(f, degree, eps);
  }
  switch (formatOf(c)) {
    case Format::Json:
      out << seriesToJson(s).dump(1) << "\n";
      break;
    case Format::Csv:
      out << "d1,d2,d3,coef\n";
      for (const auto& [e, v] : s.sortedTerms()) out << expString(e) << "," << csvField(v.toString()) << "\n";
      break;
    case Format::Text:
      out << kHeader << "\n";
      for (const auto& [e, v] : s.sortedTerms()) out << "x^(" << expString(e) << ")  " << v.toString() << "\n";
      break;
  }
  return 0;
}

int cmdAugmentation(int order, const Common& c, std::ostream& out) {
  AugmentationBranch b = solveAugmentationBranch(order);
  bool ok = true;
  for (int i = 1; i <= 3; ++i) ok = ok && clearedResidual(i, b.y, order).empty();
  switch (formatOf(c)) {
    case Format::Json:
      out << json{{"order", order}, {"y", {jetToJson(b.y[0]), jetToJson(b.y[1]), jetToJson(b.y[2])}}, {"residualsVanish", ok}}
                 .dump(1)
          << "\n";
      break;
    case Format::Csv:
      out << "component,d1,d2,d3,coef\n";
      for (int i = 0; i < 3; ++i)
        for (const auto& [e, v] : b.y[i]) out << i + 1 << "," << expString(e) << "," << v.get_str() << "\n";
      break;
    case Format::Text:
      for (int i = 0; i < 3; ++i) out << "y" << i + 1 << " = " << jetToString(b.y[i]) << " + O(x^" << order + 1 << ")\n";
      out << (ok ? "A1, A2, A3 vanish through order " : "residual left at order ") << order << "\n";
      break;
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact topological vertex computations"};
  app.require_subcommand(1);

  Common common;

  std::vector<std::string> labels(3);
  std::string formula = "T";
  CLI::App* vertex = app.add_subcommand("vertex", "Evaluate one vertex coefficient");
  // Separate scalar positionals: CLI11 would read "[2,1]" as a container literal.
  vertex->add_option("l1", labels[0], "Partition as a JSON array, e.g. \"[2,1]\" or \"[]\"")->required();
  vertex->add_option("l2", labels[1])->required();
  vertex->add_option("l3", labels[2])->required();
  vertex->add_option("--formula", formula, "C, T, alt or hopf");
  addCommon(vertex, common);

  int maxSize = 4;
  CLI::App* table = app.add_subcommand("table", "Tabulate T (or another formula) up to a total size");
  table->add_option("--max-size", maxSize, "Largest total size")->check(CLI::NonNegativeNumber);
  table->add_option("--formula", formula, "C, T, alt or hopf");
  addCommon(table, common);

  CLI::App* solve = app.add_subcommand("solve", "Solve the recursions level by level and compare with the closed form");
  solve->add_option("--max-size", maxSize, "Largest total size")->check(CLI::NonNegativeNumber);
  addCommon(solve, common);

  std::string suite = "all";
  std::string filling;
  VerifyOptions vopts;
  CLI::App* verify = app.add_subcommand("verify", "Run named property checks; nonzero exit on any failure");
  CLI::Option* suiteOpt =
      verify->add_option("--suite", suite, "skein, recursion, abelian, fillings, scalars, symfunc, vertex or all");
  verify->add_option("--max-size", vopts.maxSize, "Size bound for skein, vertex and recursion checks")->check(CLI::PositiveNumber);
  verify->add_option("--degree", vopts.degree, "Degree bound for U(1) checks")->check(CLI::NonNegativeNumber);
  verify->add_option("--filling", filling, "Restrict the fillings suite to F2, F3 or F4")
      ->check(CLI::IsMember({"F2", "F3", "F4"}));
  addCommon(verify, common);

  std::string family = "main", source;
  int degree = 6;
  CLI::App* series = app.add_subcommand("series", "Print a U(1) partition function");
  series->add_option("--family", family, "main, F2, F3 or F4")->check(CLI::IsMember({"main", "F2", "F3", "F4"}));
  series->add_option("--degree", degree, "Truncation degree")->check(CLI::NonNegativeNumber);
  series->add_option("--source", source, "specialized (from T, main only) or printed; default specialized for main, printed otherwise");
  addCommon(series, common);

  int order = 3;
  CLI::App* aug = app.add_subcommand("augmentation", "Power-series branch of the augmentation variety");
  aug->add_option("--order", order, "Jet order")->check(CLI::PositiveNumber);
  addCommon(aug, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*vertex) return cmdVertex(labels, formula, common, out);
    if (*table) {
      VertexFormula f = parseFormula(formula);
      if (f == VertexFormula::Recursion) throw ParseError("table: use `solve` for the recursion");
      printTable(out, obtainTable(maxSize, f, common, err), formatOf(common));
      return 0;
    }
    if (*solve) return cmdSolve(maxSize, common, out, err);
    if (*verify) {
      vopts.jobs = common.jobs;
      vopts.sign = parseSignMode(common.sign);
      if (!filling.empty()) {
        vopts.filling = parseFamily(filling);
        if (suiteOpt->count() == 0) suite = "fillings";
      }
      return cmdVerify(suite, vopts, common, out);
    }
    if (*series) return cmdSeries(family, degree, source, common, out);
    if (*aug) return cmdAugmentation(order, common, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace topvert::cli
