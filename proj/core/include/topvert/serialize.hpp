#pragma once

// JSON encodings and the on-disk table cache.

#include "topvert/augmentation.hpp"
#include "topvert/series.hpp"
#include "topvert/skein.hpp"
#include "topvert/vertex.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace topvert {

using nlohmann::json;

// {"offset": k, "num": [...], "den": [...]}, low degree first; coefficients
// outside the int64 range are decimal strings.
json toJson(const QScalar& v);
QScalar qscalarFromJson(const json& j);  // ParseError unless canonical

json toJson(const Partition& p);  // [3,1]; [] for the empty partition
Partition partitionFromJson(const json& j);
Partition parsePartition(const std::string& text);  // "[2,1]"

json toJson(const TripleLabel& t);
json toJson(const FramedScalar& f);  // [{"a": [e1,e2,e3], "coef": ...}]
json toJson(const BasisLabel& l);  // {"lambda": [..], "mubar": [..]}

// [{"l1": .., "l2": .., "l3": .., "value": ..}] in table order.
json tableToJson(const CoefficientTable& t);
CoefficientTable tableFromJson(const json& j, int maxSize, const std::string& formula);

json seriesToJson(const LaurentSeries3& s);  // [{"exp": [..], "coef": ..}]
json jetToJson(const Jet& j);  // [{"exp": [..], "coef": "p/q"}]
json toJson(const AnnihilationReport& r);

// Cache files live in <dir>/table-<formula>-<maxSize>.json.
std::filesystem::path defaultCacheDir();  // $TOPVERT_CACHE_DIR, else ./.topvert-cache
std::filesystem::path cacheFile(const std::filesystem::path& dir, const std::string& formula, int maxSize);
void saveTable(const std::filesystem::path& file, const CoefficientTable& t);
// nullopt if the file is absent; ParseError if it is unreadable or corrupt.
std::optional<CoefficientTable> loadTable(const std::filesystem::path& file, int maxSize, const std::string& formula);

}  // namespace topvert
