#pragma once

#include "refl/data_io.hpp"
#include "refl/render.hpp"

namespace refl {

// Closed-form expectations for the infinite series G(de,e,r), per hyperplane
// class. The class of H_1 = {z_1 = 0} exists iff d > 1; the class of
// H_{1,2,1} iff r >= 2; for r = 2 with e even the difference hyperplanes
// split into a second class represented by H_{1,2,zeta_de}.
struct SeriesClassRule {
  SeriesLabel::Kind kind;
  long e = 0;
  long f = 0;
};
std::vector<SeriesClassRule> series_expected_classes(long d, long e, long r);

/// kappa per the lcm definition.
long series_expected_kappa(long d, long e, long r);
/// kappa per the published errata clause, when one applies to (d,e,r).
std::optional<long> series_errata_kappa(long d, long e, long r);

/// Expected injectivity of i^ab at a hyperplane of G(de,e,r).
bool series_expected_injective(long d, long e, long r, const HyperplaneRecord& rec);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string got;
  std::string note;
};
struct CheckReport {
  std::vector<CheckItem> items;
  bool all_pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

/// Exactness verdicts against the claim tables (exceptional) or the series
/// closed form.
CheckReport check_exactness(const ReflectionGroup& g, const Arrangement& arr,
                            const Fixtures& fx);
/// Orbit-coincidence verdicts (commuting and non-commuting parts) against the
/// claim tables; for the series, the full-orbit criterion claims.
CheckReport check_orbits(const ReflectionGroup& g, const Arrangement& arr, const Fixtures& fx);
/// kappa against the published values (exceptional) or the errata/lcm rules (series).
CheckReport check_kappa(const ReflectionGroup& g, const Arrangement& arr, const Fixtures& fx);
/// Ramification table against the published rows (exceptional) or the
/// closed form (series).
CheckReport check_ramification(const ReflectionGroup& g, const Arrangement& arr,
                               const Fixtures& fx);

CheckReport check_all(const ReflectionGroup& g, const Arrangement& arr, const Fixtures& fx);

Json check_json(const CheckReport& rep);
FlatTable check_flat(const CheckReport& rep);

/// Orbit partitions of the commuting / non-commuting hyperplanes around H
/// under N_H vs C_H; the two booleans of the orbit-coincidence census.
struct OrbitCoincidence {
  bool commuting_match = false;
  bool noncommuting_match = false;
};
OrbitCoincidence orbit_coincidence(const ReflectionGroup& g, const Arrangement& arr, HypId h);

}  // namespace refl
