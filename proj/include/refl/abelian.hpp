#pragma once

#include <map>
#include <vector>

#include "refl/hyperplane.hpp"

namespace refl {

/// Invariant factors d_1 | d_2 | ... | d_k of a finite abelian group, each > 1.
struct AbelianInvariants {
  std::vector<long> factors;
  long order = 1;  // product of factors (= 1 for the trivial group)

  bool operator==(const AbelianInvariants&) const = default;
  std::string str() const;
};

/// Derived subgroup [S, S]: the subgroup generated by commutators of the
/// generating set, closed under conjugation by S. When S carries no stored
/// generating set, all member pairs are used.
Subgroup derived_subgroup(const ReflectionGroup& g, const Subgroup& s);

/// Invariant factors of S/[S,S], read off the coset quotient by counting
/// solutions of x^(p^k) = 1 for each prime power dividing the quotient order.
AbelianInvariants abelian_invariants(const ReflectionGroup& g, const Subgroup& s);

/// Same, reusing a precomputed derived subgroup.
AbelianInvariants abelian_invariants(const ReflectionGroup& g, const Subgroup& s,
                                     const Subgroup& derived);

/// Exactness data for C_H^ab -> N_H^ab -> mu_f -> 1 at one hyperplane.
struct ExactnessReport {
  HypId hyperplane = 0;
  AbelianInvariants c_ab;
  AbelianInvariants n_ab;
  long f = 0;
  bool injective = false;                 // |C^ab| * f == |N^ab|
  bool orbit_criterion_commuting = false; // N_H and C_H orbits agree on commuting hyperplanes
  bool orbit_criterion_full = false;      // ... on all hyperplanes
};

/// Computes both sides of the counting criterion and both orbit criteria;
/// throws CriterionMismatch if the counting and commuting-orbit verdicts
/// disagree (they are equivalent).
ExactnessReport exactness_report(const ReflectionGroup& g, const Arrangement& arr, HypId h);

/// a_H for a reflection subgroup C: the exponent with C ∩ W_H = <s_H^{a_H}>;
/// returns e_H when the intersection is trivial.
long subgroup_exponent_a(const ReflectionGroup& g, const Subgroup& c,
                         const HyperplaneRecord& rec);

/// scalar * prod_H alpha_H^{k_H} with hyperplanes referenced by id.
struct LinearFormProduct {
  Cyclotomic scalar;
  std::vector<std::pair<HypId, long>> factors;  // sorted by id, exponents > 0
};

/// Per-generator scalars lambda_g with g.Q = lambda_g Q. The hyperplane
/// multiset of Q must be stable under S (NotStable otherwise); scalars are
/// tracked through the canonical-normal renormalization.
struct SemiInvarianceResult {
  std::vector<std::pair<Index, Cyclotomic>> scalars;  // one per generator of S
  bool all_one = true;
};
SemiInvarianceResult semi_invariance_check(const ReflectionGroup& g, const Arrangement& arr,
                                           const Subgroup& s, const LinearFormProduct& q);

}  // namespace refl
