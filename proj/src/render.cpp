#include "refl/render.hpp"

#include <numeric>
#include <sstream>

#include "refl/errors.hpp"

namespace refl {

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "md" || s == "markdown") return OutputFormat::Markdown;
  throw UsageError("unknown output format: " + s);
}

std::string to_csv(const FlatTable& t) {
  std::ostringstream os;
  auto esc = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += "\"\"";
      else out += c;
    }
    return out + "\"";
  };
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    os << (i ? "," : "") << esc(t.columns[i]);
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << esc(row[i]);
    os << "\n";
  }
  return os.str();
}

std::string to_markdown(const FlatTable& t) {
  std::ostringstream os;
  os << "|";
  for (const auto& c : t.columns) os << " " << c << " |";
  os << "\n|";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& row : t.rows) {
    os << "|";
    for (const auto& c : row) os << " " << c << " |";
    os << "\n";
  }
  return os.str();
}

Json cyclotomic_json(const Cyclotomic& c) {
  Json j;
  j["conductor"] = c.conductor();
  j["coeffs"] = c.coeff_strings();
  return j;
}

Json hyperplane_json(const Hyperplane& h) {
  Json j;
  j["label"] = h.label_str();
  Json normal = Json::array();
  for (const auto& x : h.normal) normal.push_back(cyclotomic_json(x));
  j["normal"] = normal;
  return j;
}

RamificationTable ramification_table(const ReflectionGroup& g, const Arrangement& arr) {
  RamificationTable t;
  t.group = g.family_label();
  t.order = static_cast<long>(g.order());
  ExtensionReport rep = kappa(g, arr);
  for (const auto& o : rep.orbits) {
    const auto& rec = arr.record(o.representative);
    RamificationRow row;
    row.label = rec.hyperplane.label_str();
    row.e = rec.e;
    row.f = rec.f;
    row.d = rec.ramification;
    row.class_size = static_cast<long>(o.members.size());
    t.rows.push_back(std::move(row));
  }
  return t;
}

Json ramification_json(const RamificationTable& t) {
  Json j;
  j["group"] = t.group;
  j["order"] = t.order;
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row;
    row["class"] = r.label;
    row["e"] = r.e;
    row["f"] = r.f;
    row["d"] = r.d;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

FlatTable ramification_flat(const RamificationTable& t) {
  FlatTable f;
  f.columns = {"class", "e_H", "f_H", "d_H"};
  for (const auto& r : t.rows)
    f.rows.push_back({r.label, std::to_string(r.e), std::to_string(r.f), std::to_string(r.d)});
  return f;
}

Json group_info_json(const ReflectionGroup& g, const Arrangement& arr) {
  Json j;
  j["group"] = g.family_label();
  j["order"] = g.order();
  j["rank"] = g.rank();
  j["conductor"] = g.conductor();
  j["generators"] = g.generators().size();
  j["reflections"] = arr.reflections().size();
  j["hyperplanes"] = arr.size();
  std::vector<HypId> all(arr.size());
  std::iota(all.begin(), all.end(), 0);
  j["hyperplane_classes"] =
      orbit_decomposition(g, arr, Subgroup::full(g), all).size();
  return j;
}

FlatTable group_info_flat(const ReflectionGroup& g, const Arrangement& arr) {
  Json j = group_info_json(g, arr);
  FlatTable t;
  t.columns = {"property", "value"};
  for (auto& [k, v] : j.items())
    t.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
  return t;
}

Json hyperplanes_json(const ReflectionGroup& g, const Arrangement& arr) {
  Json j;
  j["group"] = g.family_label();
  Json list = Json::array();
  for (HypId h = 0; h < arr.size(); ++h) {
    const auto& rec = arr.record(h);
    Json r;
    r["id"] = h;
    r["hyperplane"] = hyperplane_json(rec.hyperplane);
    r["e"] = rec.e;
    if (rec.completed) {
      r["f"] = rec.f;
      r["d"] = rec.ramification;
      r["stabilizer_order"] = rec.stabilizer.size();
      r["parabolic_order"] = rec.parabolic.size();
      r["commuting"] = rec.commuting;
    }
    list.push_back(r);
  }
  j["hyperplanes"] = list;
  return j;
}

FlatTable hyperplanes_flat(const ReflectionGroup& g, const Arrangement& arr) {
  (void)g;
  FlatTable t;
  t.columns = {"id", "hyperplane", "e_H", "f_H", "d_H", "|N_H|", "|C_H|", "commuting"};
  for (HypId h = 0; h < arr.size(); ++h) {
    const auto& rec = arr.record(h);
    t.rows.push_back({std::to_string(h), rec.hyperplane.label_str(), std::to_string(rec.e),
                      rec.completed ? std::to_string(rec.f) : "-",
                      rec.completed ? std::to_string(rec.ramification) : "-",
                      rec.completed ? std::to_string(rec.stabilizer.size()) : "-",
                      rec.completed ? std::to_string(rec.parabolic.size()) : "-",
                      rec.completed ? std::to_string(rec.commuting.size()) : "-"});
  }
  return t;
}

Json stabilizer_json(const ReflectionGroup& g, const Arrangement& arr,
                     const std::vector<ExactnessReport>& reports) {
  Json j;
  j["group"] = g.family_label();
  Json list = Json::array();
  for (const auto& rep : reports) {
    const auto& rec = arr.record(rep.hyperplane);
    Json r;
    r["id"] = rep.hyperplane;
    r["hyperplane"] = rec.hyperplane.label_str();
    r["e"] = rec.e;
    r["f"] = rec.f;
    r["d"] = rec.ramification;
    r["stabilizer_order"] = rec.stabilizer.size();
    r["parabolic_order"] = rec.parabolic.size();
    r["stabilizer_ab"] = rep.n_ab.str();
    r["parabolic_ab"] = rep.c_ab.str();
    // the element realizing the ramification: its eigenvalue on D has order f
    r["witness_index"] = rec.witness;
    r["witness_order"] = g.element_order(rec.witness);
    r["injective"] = rep.injective;
    r["orbit_criterion_commuting"] = rep.orbit_criterion_commuting;
    r["orbit_criterion_full"] = rep.orbit_criterion_full;
    auto sbr = stabilizer_braid_rank(g, arr, rep.hyperplane);
    if (sbr.rank)
      r["braid_rank"] = *sbr.rank;
    else
      r["braid_rank"] = nullptr;
    list.push_back(r);
  }
  j["stabilizers"] = list;
  return j;
}

FlatTable stabilizer_flat(const ReflectionGroup& g, const Arrangement& arr,
                          const std::vector<ExactnessReport>& reports) {
  (void)g;
  FlatTable t;
  t.columns = {"hyperplane", "e_H", "f_H", "d_H",    "|N_H|",     "|C_H|",
               "N_ab",       "C_ab", "inj", "braid_rank"};
  for (const auto& rep : reports) {
    const auto& rec = arr.record(rep.hyperplane);
    auto sbr = stabilizer_braid_rank(g, arr, rep.hyperplane);
    t.rows.push_back({rec.hyperplane.label_str(), std::to_string(rec.e), std::to_string(rec.f),
                      std::to_string(rec.ramification), std::to_string(rec.stabilizer.size()),
                      std::to_string(rec.parabolic.size()), rep.n_ab.str(), rep.c_ab.str(),
                      rep.injective ? "yes" : "no",
                      sbr.rank ? std::to_string(*sbr.rank) : "-"});
  }
  return t;
}

Json orbits_json(const ReflectionGroup& g, const Arrangement& arr) {
  Json j;
  j["group"] = g.family_label();
  std::vector<HypId> all(arr.size());
  std::iota(all.begin(), all.end(), 0);
  Json list = Json::array();
  for (const auto& orbit : orbit_decomposition(g, arr, Subgroup::full(g), all)) {
    Json o;
    o["representative"] = arr.record(orbit.front()).hyperplane.label_str();
    o["size"] = orbit.size();
    o["members"] = orbit;
    list.push_back(o);
  }
  j["orbits"] = list;
  return j;
}

FlatTable orbits_flat(const ReflectionGroup& g, const Arrangement& arr) {
  FlatTable t;
  t.columns = {"representative", "size", "members"};
  Json j = orbits_json(g, arr);
  for (const auto& o : j["orbits"]) {
    std::ostringstream ms;
    for (std::size_t i = 0; i < o["members"].size(); ++i)
      ms << (i ? " " : "") << o["members"][i].get<long>();
    t.rows.push_back({o["representative"].get<std::string>(),
                      std::to_string(o["size"].get<long>()), ms.str()});
  }
  return t;
}

Json kappa_json(const ReflectionGroup& g, const Arrangement& arr, const ExtensionReport& rep) {
  Json j;
  j["group"] = g.family_label();
  Json orbits = Json::array();
  for (const auto& o : rep.orbits) {
    Json e;
    e["representative"] = arr.record(o.representative).hyperplane.label_str();
    e["f"] = o.f;  // order of the natural character of N_C in Hom(N_C, Q/Z)
    e["size"] = o.members.size();
    orbits.push_back(e);
  }
  j["orbits"] = orbits;
  j["kappa"] = rep.kappa;
  return j;
}

FlatTable kappa_flat(const ReflectionGroup& g, const Arrangement& arr,
                     const ExtensionReport& rep) {
  (void)g;
  FlatTable t;
  t.columns = {"orbit_representative", "f", "orbit_size"};
  for (const auto& o : rep.orbits)
    t.rows.push_back({arr.record(o.representative).hyperplane.label_str(), std::to_string(o.f),
                      std::to_string(o.members.size())});
  return t;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace refl
