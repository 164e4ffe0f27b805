#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "refl/braid.hpp"

namespace refl {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv, Markdown };
OutputFormat parse_format(const std::string& s);

/// Column-labelled string table; the common carrier for csv and markdown.
struct FlatTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const FlatTable& t);
std::string to_markdown(const FlatTable& t);

Json cyclotomic_json(const Cyclotomic& c);
Json hyperplane_json(const Hyperplane& h);

/// One row per hyperplane class (W-orbit): representative label, e, f, d.
struct RamificationRow {
  std::string label;
  long e = 0, f = 0, d = 0;
  long class_size = 0;
};
struct RamificationTable {
  std::string group;
  long order = 0;
  std::vector<RamificationRow> rows;
};
RamificationTable ramification_table(const ReflectionGroup& g, const Arrangement& arr);
Json ramification_json(const RamificationTable& t);
FlatTable ramification_flat(const RamificationTable& t);

Json group_info_json(const ReflectionGroup& g, const Arrangement& arr);
FlatTable group_info_flat(const ReflectionGroup& g, const Arrangement& arr);

Json hyperplanes_json(const ReflectionGroup& g, const Arrangement& arr);
FlatTable hyperplanes_flat(const ReflectionGroup& g, const Arrangement& arr);

Json stabilizer_json(const ReflectionGroup& g, const Arrangement& arr,
                     const std::vector<ExactnessReport>& reports);
FlatTable stabilizer_flat(const ReflectionGroup& g, const Arrangement& arr,
                          const std::vector<ExactnessReport>& reports);

Json orbits_json(const ReflectionGroup& g, const Arrangement& arr);
FlatTable orbits_flat(const ReflectionGroup& g, const Arrangement& arr);

Json kappa_json(const ReflectionGroup& g, const Arrangement& arr, const ExtensionReport& rep);
FlatTable kappa_flat(const ReflectionGroup& g, const Arrangement& arr,
                     const ExtensionReport& rep);

/// Serialize with a fixed, reproducible layout (2-space indent, '\n' endings).
std::string dump_json(const Json& j);

}  // namespace refl
