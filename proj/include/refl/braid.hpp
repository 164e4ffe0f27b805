#pragma once

#include <optional>

#include "refl/abelian.hpp"

namespace refl {

// Finite shadows of the braid-group statements: only ranks and character
// orders are computed here; paths, monodromy generators and the lifting
// construction stay out of scope.
//
//  * braid_abelianization_rank(C)  — rank of p^{-1}(C)^ab, the free abelian
//    group over Hyp/C, for a reflection subgroup C;
//  * stabilizer_braid_rank(H)     — rank of p^{-1}(N_H)^ab with basis
//    {w~, s_C (C in H'_H/C_H), s_C^{e_C} (C in (Hyp \ H_H)/C_H)}, defined when
//    the orbits of all hyperplanes under N_H and C_H coincide;
//  * kappa(W)                     — the order of the extension
//    1 -> P/[P,P] -> B/[P,P] -> W -> 1 in H^2(W, ZHyp): per W-orbit the natural
//    character of N_C has order f_C in Hom(N_C, Q/Z), and kappa is their lcm.

/// Number of C-orbits on all hyperplanes of W. Pre: C is regenerated by the
/// reflections it contains (NotReflectionSubgroup otherwise).
long braid_abelianization_rank(const ReflectionGroup& g, const Arrangement& arr,
                               const Subgroup& c);

struct StabilizerBraidRank {
  std::optional<long> rank;   // absent when the orbit criterion fails
  bool orbits_match = false;  // orbits of all hyperplanes under N_H vs C_H
};
StabilizerBraidRank stabilizer_braid_rank(const ReflectionGroup& g, const Arrangement& arr,
                                          HypId h);

struct ExtensionReport {
  struct Orbit {
    HypId representative;
    long f = 0;
    std::vector<HypId> members;
  };
  std::vector<Orbit> orbits;  // ordered by least member
  long kappa = 1;
};

/// Decomposes the arrangement into W-orbits, asserts that f is constant on
/// each orbit (OrbitInconsistent otherwise) and returns kappa = lcm of the f.
ExtensionReport kappa(const ReflectionGroup& g, const Arrangement& arr);

}  // namespace refl
