#include "refl/data_io.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "refl/errors.hpp"

namespace refl {

namespace {

nlohmann::json read_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DataError("cannot open " + file.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw DataError(file.string() + ": " + ex.what());
  }
  return j;
}

}  // namespace

ExceptionalRecord load_exceptional_record(const std::filesystem::path& file) {
  nlohmann::json j = read_json(file);
  ExceptionalRecord rec;
  try {
    rec.name = j.at("name").get<std::string>();
    rec.declared_order = j.at("declared_order").get<long>();
    rec.conductor = j.at("conductor").get<long>();
    rec.rank = j.at("rank").get<long>();
    for (const auto& mat : j.at("generators")) {
      DenseElement d;
      d.conductor = rec.conductor;
      d.rank = rec.rank;
      if (static_cast<long>(mat.size()) != rec.rank)
        throw DataError(rec.name + ": generator row count != rank");
      for (const auto& row : mat) {
        if (static_cast<long>(row.size()) != rec.rank)
          throw DataError(rec.name + ": generator column count != rank");
        for (const auto& entry : row) {
          std::vector<Rational> coeffs;
          for (const auto& s : entry) coeffs.push_back(Rational::parse(s.get<std::string>()));
          if (static_cast<long>(coeffs.size()) > rec.conductor)
            throw DataError(rec.name + ": coefficient array longer than conductor");
          d.entries.push_back(Cyclotomic::canonicalize(rec.conductor, coeffs));
        }
      }
      rec.generators.push_back(std::move(d));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw DataError(file.string() + ": " + ex.what());
  }
  rec.source = file.string();
  return rec;
}

namespace {
std::filesystem::path exceptional_dir(const std::filesystem::path& data_dir) {
  auto sub = data_dir / "exceptional";
  return std::filesystem::is_directory(sub) ? sub : data_dir;
}
}  // namespace

ExceptionalRecord load_exceptional_by_name(const std::filesystem::path& data_dir,
                                           const std::string& name) {
  auto file = exceptional_dir(data_dir) / (name + ".json");
  if (!std::filesystem::exists(file))
    throw DataError("no data file for " + name + " under " + data_dir.string());
  return load_exceptional_record(file);
}

std::vector<std::string> list_exceptional_names(const std::filesystem::path& data_dir) {
  std::vector<std::string> names;
  auto dir = exceptional_dir(data_dir);
  if (!std::filesystem::is_directory(dir)) return names;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") names.push_back(entry.path().stem().string());
  }
  // numeric sort: G4, G5, ..., G28
  std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
    auto num = [](const std::string& s) {
      long v = 0;
      for (char c : s)
        if (c >= '0' && c <= '9') v = v * 10 + (c - '0');
      return v;
    };
    long na = num(a), nb = num(b);
    if (na != nb) return na < nb;
    return a < b;
  });
  return names;
}

Fixtures load_fixtures(const std::filesystem::path& data_dir) {
  auto file = data_dir / "fixtures" / "exceptional_claims.json";
  if (!std::filesystem::exists(file)) file = data_dir / "exceptional_claims.json";
  nlohmann::json j = read_json(file);
  Fixtures fx;
  try {
    for (const auto& [name, body] : j.at("groups").items()) {
      GroupClaims gc;
      gc.name = name;
      for (const auto& c : body.at("classes")) {
        ClassClaim cc;
        cc.e = c.at(0).get<long>();
        cc.f = c.at(1).get<long>();
        cc.d = c.at(2).get<long>();
        gc.classes.push_back(cc);
      }
      gc.kappa = body.at("kappa").get<long>();
      if (body.contains("commuting_orbit_mismatch"))
        for (const auto& p : body["commuting_orbit_mismatch"])
          gc.commuting_orbit_mismatch.emplace_back(p.at(0).get<long>(), p.at(1).get<long>());
      if (body.contains("noncommuting_orbit_mismatch"))
        for (const auto& p : body["noncommuting_orbit_mismatch"])
          gc.noncommuting_orbit_mismatch.emplace_back(p.at(0).get<long>(), p.at(1).get<long>());
      if (body.contains("exactness_fails")) gc.exactness_fails = body["exactness_fails"].get<bool>();
      fx.exceptional.emplace(name, std::move(gc));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw DataError(file.string() + ": " + ex.what());
  }
  return fx;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("REFLGRP_DATA_DIR"); env && *env) return env;
#ifdef REFLGRP_DEFAULT_DATA_DIR
  return REFLGRP_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace refl
