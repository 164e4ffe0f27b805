// Acceptance suite: runs every acceptance criterion and prints one PASS/FAIL
// line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include "oracles.hpp"
#include "refl/checks.hpp"
#include "refl/data_io.hpp"
#include "refl/parallel.hpp"

using namespace refl;

namespace {

unsigned g_threads = 2;

struct Analyzed {
  ReflectionGroup g;
  Arrangement arr;
  std::vector<ExactnessReport> exactness;  // per hyperplane
};

Analyzed analyze(ReflectionGroup g, bool with_exactness) {
  Arrangement arr = Arrangement::find_hyperplanes(g);
  complete_arrangement(g, arr, g_threads);
  std::vector<ExactnessReport> ex;
  if (with_exactness) {
    ex.resize(arr.size());
    parallel_for(arr.size(), g_threads,
                 [&](std::size_t i) { ex[i] = exactness_report(g, arr, static_cast<HypId>(i)); });
  }
  return {std::move(g), std::move(arr), std::move(ex)};
}

struct GridPoint {
  long d, e, r;
};

std::vector<GridPoint> grid_points() {
  std::vector<GridPoint> out;
  for (long d = 1; d <= 4; ++d)
    for (long e = 1; e <= 4; ++e)
      for (long r = 1; r <= 4; ++r) {
        double order = 1;
        for (long i = 0; i < r; ++i) order *= static_cast<double>(d) * e;
        for (long i = 2; i <= r; ++i) order *= i;
        order /= e;
        if (order <= 100000.0) out.push_back({d, e, r});
      }
  return out;
}

const std::vector<std::string> kMinimumShipped = {
    "G4",  "G5",  "G6",  "G8",  "G12", "G13", "G15", "G16",
    "G20", "G23", "G24", "G25", "G26", "G27", "G28"};

std::map<std::string, Analyzed>& grid_cache() {
  static std::map<std::string, Analyzed> cache;
  return cache;
}

Analyzed& grid_group(long d, long e, long r, bool with_exactness = true) {
  std::ostringstream key;
  key << d << "," << e << "," << r;
  auto& cache = grid_cache();
  auto it = cache.find(key.str());
  if (it == cache.end()) {
    it = cache.emplace(key.str(), analyze(ReflectionGroup::build_gde(d, e, r), with_exactness))
             .first;
  } else if (with_exactness && it->second.exactness.empty() && it->second.arr.size() > 0) {
    auto& a = it->second;
    a.exactness.resize(a.arr.size());
    parallel_for(a.arr.size(), g_threads, [&](std::size_t i) {
      a.exactness[i] = exactness_report(a.g, a.arr, static_cast<HypId>(i));
    });
  }
  return it->second;
}

std::map<std::string, Analyzed>& exceptional_cache() {
  static std::map<std::string, Analyzed> cache;
  return cache;
}

Analyzed& exceptional_group(const std::string& name) {
  auto& cache = exceptional_cache();
  auto it = cache.find(name);
  if (it == cache.end()) {
    auto rec = load_exceptional_by_name(default_data_dir(), name);
    it = cache.emplace(name, analyze(ReflectionGroup::build_from_matrices(rec), false)).first;
  }
  return it->second;
}

int g_failures = 0;

void run_criterion(int number, const std::string& title, const std::function<std::string()>& fn) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = fn();
  } catch (const std::exception& ex) {
    ok = false;
    detail = ex.what();
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  line << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << title;
  if (!detail.empty()) line << " -- " << detail;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << " (" << secs << "s)";
  std::cout << line.str() << std::endl;
  if (!ok) ++g_failures;
}

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& msg) {
  if (!cond) throw Failure(msg);
}

// ---- criterion 1: published ramification rows reproduction ----
std::string criterion1() {
  Fixtures fx = load_fixtures(default_data_dir());
  auto shipped = list_exceptional_names(default_data_dir());
  for (const auto& need : kMinimumShipped)
    expect(std::find(shipped.begin(), shipped.end(), need) != shipped.end(),
           "minimum group not shipped: " + need);
  long checked = 0;
  for (const auto& name : shipped) {
    auto& a = exceptional_group(name);
    if (a.g.order() > 1000000) continue;
    CheckReport rep = check_ramification(a.g, a.arr, fx);
    for (const auto& item : rep.items)
      expect(item.pass, item.name + ": expected " + item.expected + ", got " + item.got);
    ++checked;
  }
  return std::to_string(checked) + " groups match their published (e,f,d) rows exactly";
}

// ---- criterion 2: infinite-series f-table ----
std::string criterion2() {
  Fixtures fx;  // unused for series
  long classes = 0;
  for (const auto& p : grid_points()) {
    auto& a = grid_group(p.d, p.e, p.r, false);
    CheckReport rep = check_ramification(a.g, a.arr, fx);
    for (const auto& item : rep.items)
      expect(item.pass, item.name + ": expected " + item.expected + ", got " + item.got);
    classes += static_cast<long>(rep.items.size()) - 1;  // minus the count check
  }
  return std::to_string(grid_points().size()) + " grid groups, " + std::to_string(classes) +
         " class rows match the closed form";
}

// ---- criterion 3: kappa ----
std::string criterion3() {
  long flagged = 0;
  for (const auto& p : grid_points()) {
    auto& a = grid_group(p.d, p.e, p.r, false);
    ExtensionReport rep = kappa(a.g, a.arr);
    long want = series_expected_kappa(p.d, p.e, p.r);
    std::ostringstream label;
    label << "G(" << p.d * p.e << "," << p.e << "," << p.r << ")";
    expect(rep.kappa == want, label.str() + ": kappa " + std::to_string(rep.kappa) +
                                  " != lcm-definition value " + std::to_string(want));
    auto errata = series_errata_kappa(p.d, p.e, p.r);
    if (p.r >= 3) {
      expect(errata.has_value() && rep.kappa == *errata,
             label.str() + ": errata formula mismatch for r >= 3");
    } else if (errata && *errata != rep.kappa) {
      // r = 2 with d, e odd and d != 1: report the lcm value, flag the clause
      expect(p.r == 2 && p.d != 1 && p.d % 2 == 1 && p.e % 2 == 1,
             label.str() + ": unexpected errata discrepancy regime");
      ++flagged;
    }
  }
  expect(exceptional_group("G4").arr.size() == 4, "G4 arrangement size");
  expect(kappa(exceptional_group("G4").g, exceptional_group("G4").arr).kappa == 6,
         "kappa(G4) != 6");
  expect(kappa(exceptional_group("G13").g, exceptional_group("G13").arr).kappa == 8,
         "kappa(G13) != 8");
  return "grid kappa matches the lcm definition; " + std::to_string(flagged) +
         " r=2 points flagged where the errata clause disagrees; kappa(G4)=6, kappa(G13)=8";
}

// ---- criterion 4: exactness-failure census ----
std::string criterion4() {
  long failures_seen = 0;
  for (const auto& p : grid_points()) {
    auto& a = grid_group(p.d, p.e, p.r, true);
    for (HypId h = 0; h < a.arr.size(); ++h) {
      const auto& rec = a.arr.record(h);
      bool want_fail = rec.hyperplane.label->kind == SeriesLabel::Kind::Coordinate &&
                       p.r == 3 && p.e % 2 == 0 && p.d > 1;
      std::ostringstream label;
      label << "G(" << p.d * p.e << "," << p.e << "," << p.r << ") "
            << rec.hyperplane.label_str();
      expect(a.exactness[h].injective == !want_fail,
             label.str() + ": injective=" + std::to_string(a.exactness[h].injective) +
                 " expected " + std::to_string(!want_fail));
      if (!a.exactness[h].injective) ++failures_seen;
    }
  }
  for (const auto& name : list_exceptional_names(default_data_dir())) {
    auto& a = exceptional_group(name);
    if (a.exactness.empty()) {
      a.exactness.resize(a.arr.size());
      parallel_for(a.arr.size(), g_threads, [&](std::size_t i) {
        a.exactness[i] = exactness_report(a.g, a.arr, static_cast<HypId>(i));
      });
    }
    bool want_fail = name == "G25";
    for (HypId h = 0; h < a.arr.size(); ++h) {
      expect(a.exactness[h].injective == !want_fail,
             name + " hyperplane " + std::to_string(h) + ": injective=" +
                 std::to_string(a.exactness[h].injective));
      if (!a.exactness[h].injective) ++failures_seen;
    }
  }
  return "failure set is exactly {G25} u {H_i of G(de,e,3), e even, d != 1}; " +
         std::to_string(failures_seen) + " failing hyperplanes seen";
}

// ---- criterion 5: orbit-coincidence census ----
std::string criterion5() {
  Fixtures fx = load_fixtures(default_data_dir());
  long mismatches = 0;
  for (const auto& name : list_exceptional_names(default_data_dir())) {
    auto& a = exceptional_group(name);
    CheckReport rep = check_orbits(a.g, a.arr, fx);
    for (const auto& item : rep.items) {
      expect(item.pass, item.name + ": expected " + item.expected + ", got " + item.got);
      if (item.got == "mismatch") ++mismatches;
    }
  }
  return "censuses match: commuting mismatch only in G25; non-commuting only in "
         "G4, G6(3,12), G13(2,8), G15(2,24); " +
         std::to_string(mismatches) + " mismatching class criteria in total";
}

// ---- criterion 6: property suite over the grid ----
std::string criterion6() {
  long checks = 0;
  for (const auto& p : grid_points()) {
    auto& a = grid_group(p.d, p.e, p.r, true);
    const auto& g = a.g;
    const auto& arr = a.arr;
    std::ostringstream glabel;
    glabel << "G(" << p.d * p.e << "," << p.e << "," << p.r << ")";
    std::vector<HypId> all(arr.size());
    std::iota(all.begin(), all.end(), 0);
    for (HypId h = 0; h < arr.size(); ++h) {
      const auto& rec = arr.record(h);
      std::string at = glabel.str() + " at " + rec.hyperplane.label_str();
      expect(rec.stabilizer.size() == static_cast<std::size_t>(rec.f) * rec.parabolic.size(),
             at + ": |N_H| != f_H |C_H|");
      expect(rec.f % rec.e == 0, at + ": e_H does not divide f_H");
      expect(centralizer(g, rec.distinguished).members() == rec.stabilizer.members(),
             at + ": N_H != centralizer(s_H)");
      std::vector<Index> rc;
      for (Index s : arr.reflections())
        if (rec.parabolic.contains(s)) rc.push_back(s);
      expect(Subgroup::generated(g, rc).members() == rec.parabolic.members(),
             at + ": Steinberg regeneration of C_H failed");
      // the f-th power of the defining form is N_H-invariant
      {
        LinearFormProduct q;
        q.scalar = Cyclotomic::one(g.conductor());
        q.factors = {{h, rec.f}};
        expect(semi_invariance_check(g, arr, rec.stabilizer, q).all_one,
               at + ": alpha_H^f not N_H-invariant");
      }
      // class products with exponents e_H/a_H are C_H-invariant
      for (const auto& orbit : orbit_decomposition(g, arr, rec.parabolic, all)) {
        LinearFormProduct q;
        q.scalar = Cyclotomic::one(g.conductor());
        for (HypId k : orbit) {
          long aexp = subgroup_exponent_a(g, rec.parabolic, arr.record(k));
          q.factors.emplace_back(k, arr.record(k).e / aexp);
        }
        expect(semi_invariance_check(g, arr, rec.parabolic, q).all_one,
               at + ": class product not C_H-invariant");
      }
      // |S| = |[S,S]| |S^ab| for the computed subgroups
      for (const Subgroup* s : {&rec.stabilizer, &rec.parabolic, &rec.fixator}) {
        auto der = derived_subgroup(g, *s);
        auto inv = abelian_invariants(g, *s, der);
        expect(s->size() == der.size() * static_cast<std::size_t>(inv.order),
               at + ": |S| != |[S,S]| |S^ab|");
      }
      // count criterion <-> orbit criterion: exactness_report already threw
      // CriterionMismatch if they disagreed; assert consistency field-wise
      expect(a.exactness[h].injective == a.exactness[h].orbit_criterion_commuting,
             at + ": criteria disagree");
      checks += 7;
    }
    // commuting characterization equivalence over all pairs
    for (HypId x = 0; x < arr.size(); ++x) {
      const auto& rx = arr.record(x);
      std::vector<std::uint8_t> cm(arr.size(), 0);
      for (HypId c : rx.commuting) cm[c] = 1;
      for (HypId y = 0; y < arr.size(); ++y) {
        const auto& ry = arr.record(y);
        bool via_i = cm[y] != 0;
        bool via_ii = x == y;
        if (!via_ii) {
          Cyclotomic v = Cyclotomic::zero(g.conductor());
          for (long i = 0; i < g.rank(); ++i) v = v + ry.hyperplane.normal[i] * rx.line[i];
          via_ii = v.is_zero();
        }
        expect(via_i == via_ii, glabel.str() + ": commuting characterizations (i)/(ii) differ");
        bool via_iv = false, via_iii = true;
        for (Index s : rx.fixator.members()) {
          if (s == g.identity()) continue;
          for (Index t : ry.fixator.members()) {
            if (t == g.identity()) continue;
            bool comm = g.mul(s, t) == g.mul(t, s);
            via_iii = via_iii && comm;
            via_iv = via_iv || comm;
          }
        }
        expect(via_i == via_iii && via_i == via_iv,
               glabel.str() + ": commuting characterizations (iii)/(iv) differ");
        ++checks;
      }
    }
    // full group bookkeeping
    auto full = Subgroup::full(g);
    auto der = derived_subgroup(g, full);
    auto inv = abelian_invariants(g, full, der);
    expect(g.order() == der.size() * static_cast<std::size_t>(inv.order),
           glabel.str() + ": |W| != |[W,W]| |W^ab|");
    ++checks;
  }
  return std::to_string(checks) + " property checks hold on " +
         std::to_string(grid_points().size()) + " grid groups";
}

// ---- criterion 7: brute-force oracle equivalence ----
std::string criterion7() {
  long groups = 0, subgroups = 0;
  for (const auto& p : grid_points()) {
    auto& probe = grid_group(p.d, p.e, p.r, false);
    if (probe.g.order() > 200) continue;
    const auto& g = probe.g;
    const auto& arr = probe.arr;
    ++groups;
    auto check_one = [&](const Subgroup& s) {
      auto der = derived_subgroup(g, s);
      auto naive = oracle::derived_subgroup_naive(g, s.members());
      expect(der.members() == naive, "derived subgroup differs from the exhaustive oracle");
      auto inv = abelian_invariants(g, s, der);
      auto ninv = oracle::abelian_invariants_naive(g, s.members(), naive);
      expect(inv.factors == ninv, "abelian invariants differ from the oracle");
      ++subgroups;
    };
    check_one(Subgroup::full(g));
    for (const auto& rec : arr.records()) {
      check_one(rec.stabilizer);
      check_one(rec.parabolic);
    }
  }
  return std::to_string(groups) + " grid groups of order <= 200, " +
         std::to_string(subgroups) + " subgroups agree with the exhaustive oracle";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_threads = static_cast<unsigned>(std::stoul(argv[1]));
  std::cout << "acceptance suite (data dir: " << default_data_dir().string() << ")"
            << std::endl;
  run_criterion(1, "published ramification rows for the shipped exceptional groups", criterion1);
  run_criterion(2, "infinite-series f-table on the (d,e,r) grid", criterion2);
  run_criterion(3, "kappa: lcm definition, errata for r>=3, flagged r=2 regime", criterion3);
  run_criterion(4, "exactness-failure census", criterion4);
  run_criterion(5, "orbit-coincidence census (commuting and non-commuting)", criterion5);
  run_criterion(6, "per-hyperplane property suite over the grid", criterion6);
  run_criterion(7, "brute-force oracle equivalence for groups of order <= 200", criterion7);
  if (g_failures == 0) {
    std::cout << "acceptance: all criteria PASS" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criteria FAILED" << std::endl;
  return 1;
}
