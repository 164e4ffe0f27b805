#include "refl/braid.hpp"

#include <numeric>

#include "refl/errors.hpp"

namespace refl {

long braid_abelianization_rank(const ReflectionGroup& g, const Arrangement& arr,
                               const Subgroup& c) {
  // Steinberg-style regeneration: the reflections inside C must generate it
  std::vector<Index> refl_in_c;
  for (Index r : arr.reflections())
    if (c.contains(r)) refl_in_c.push_back(r);
  Subgroup regen = Subgroup::generated(g, refl_in_c);
  if (!(regen == c))
    throw NotReflectionSubgroup("subgroup is not generated by its reflections");
  std::vector<HypId> all(arr.size());
  std::iota(all.begin(), all.end(), 0);
  return static_cast<long>(orbit_decomposition(g, arr, c, all).size());
}

StabilizerBraidRank stabilizer_braid_rank(const ReflectionGroup& g, const Arrangement& arr,
                                          HypId h) {
  const auto& rec = arr.record(h);
  if (!rec.completed) throw UsageError("stabilizer_braid_rank needs a completed record");
  StabilizerBraidRank out;
  std::vector<HypId> all(arr.size());
  std::iota(all.begin(), all.end(), 0);
  out.orbits_match = same_orbits(g, arr, rec.stabilizer, rec.parabolic, all);
  if (!out.orbits_match) return out;
  std::vector<HypId> commuting_others, noncommuting;
  {
    std::vector<std::uint8_t> mask(arr.size(), 0);
    for (HypId k : rec.commuting) mask[k] = 1;
    for (HypId k = 0; k < arr.size(); ++k) {
      if (k == h) continue;
      if (mask[k])
        commuting_others.push_back(k);
      else
        noncommuting.push_back(k);
    }
  }
  long rank = 1;  // the lifted witness w~
  rank += static_cast<long>(orbit_decomposition(g, arr, rec.parabolic, commuting_others).size());
  rank += static_cast<long>(orbit_decomposition(g, arr, rec.parabolic, noncommuting).size());
  out.rank = rank;
  return out;
}

ExtensionReport kappa(const ReflectionGroup& g, const Arrangement& arr) {
  ExtensionReport rep;
  std::vector<HypId> all(arr.size());
  std::iota(all.begin(), all.end(), 0);
  Subgroup w = Subgroup::full(g);
  for (auto& orbit : orbit_decomposition(g, arr, w, all)) {
    ExtensionReport::Orbit o;
    o.representative = orbit.front();
    if (!arr.record(o.representative).completed)
      throw UsageError("kappa needs a completed arrangement");
    o.f = arr.record(o.representative).f;
    for (HypId h : orbit) {
      if (arr.record(h).f != o.f)
        throw OrbitInconsistent("f varies along a W-orbit of hyperplanes");
    }
    o.members = std::move(orbit);
    rep.orbits.push_back(std::move(o));
  }
  rep.kappa = 1;
  for (const auto& o : rep.orbits) rep.kappa = std::lcm(rep.kappa, o.f);
  return rep;
}

}  // namespace refl
