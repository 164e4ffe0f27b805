#include "refl/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "refl/errors.hpp"

namespace refl {

std::string AbelianInvariants::str() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << " x ";
    os << "Z/" << factors[i];
  }
  return os.str();
}

Subgroup derived_subgroup(const ReflectionGroup& g, const Subgroup& s) {
  const std::vector<Index>& gens =
      s.has_stored_generators() ? s.generator_set() : s.members();
  // seed with commutators of generator pairs
  std::vector<Index> seed;
  {
    std::vector<std::uint8_t> have(g.order(), 0);
    for (Index a : gens)
      for (Index b : gens) {
        Index c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
        if (!have[c]) {
          have[c] = 1;
          seed.push_back(c);
        }
      }
  }
  std::vector<Index> closure_gens = seed;
  std::vector<Index> members = close_indices(g, closure_gens);
  // normal closure under conjugation by the generators of S
  bool stable = false;
  std::vector<std::uint8_t> mask(g.order(), 0);
  for (Index m : members) mask[m] = 1;
  while (!stable) {
    stable = true;
    for (Index a : gens) {
      for (Index m : members) {
        Index c = g.conjugate(a, m);
        if (!mask[c]) {
          closure_gens.push_back(c);
          members = close_indices(g, closure_gens);
          std::fill(mask.begin(), mask.end(), 0);
          for (Index x : members) mask[x] = 1;
          stable = false;
          break;
        }
      }
      if (!stable) break;
    }
  }
  return Subgroup::from_members(g, std::move(members));
}

namespace {

// multiset of p-exponents (descending) from the counts of p^k-torsion cosets
std::vector<long> p_partition(long p, const std::vector<long>& torsion_counts) {
  // torsion_counts[k] = #cosets of order dividing p^(k+1)
  std::vector<long> m;  // m[k] = log_p torsion_counts[k]
  for (long c : torsion_counts) {
    long lg = 0, v = c;
    while (v > 1) {
      if (v % p != 0) throw Error("torsion count is not a p-power");
      v /= p;
      ++lg;
    }
    m.push_back(lg);
  }
  std::vector<long> lambda;  // exponents, descending
  long prev = 0;
  std::vector<long> heights;  // heights[k] = #parts >= k+1
  for (std::size_t k = 0; k < m.size(); ++k) {
    heights.push_back(m[k] - prev);
    prev = m[k];
  }
  long max_parts = heights.empty() ? 0 : heights[0];
  for (long i = 0; i < max_parts; ++i) {
    long len = 0;
    for (std::size_t k = 0; k < heights.size(); ++k)
      if (heights[k] > i) len = static_cast<long>(k) + 1;
    lambda.push_back(len);
  }
  return lambda;
}

}  // namespace

AbelianInvariants abelian_invariants(const ReflectionGroup& g, const Subgroup& s,
                                     const Subgroup& derived) {
  // cosets of [S,S] in S: canonical representative = least member index
  std::vector<std::int64_t> coset_of(g.order(), -1);
  std::vector<Index> reps;
  for (Index m : s.members()) {
    if (coset_of[m] >= 0) continue;
    long id = static_cast<long>(reps.size());
    reps.push_back(m);
    for (Index d : derived.members()) coset_of[g.mul(m, d)] = id;
    if (coset_of[m] != id) throw Error("coset enumeration is inconsistent");
  }
  long q = static_cast<long>(reps.size());
  AbelianInvariants inv;
  inv.order = q;
  if (q == 1) return inv;
  long id_coset = coset_of[g.identity()];
  // order of each coset in the quotient
  std::vector<long> orders(q, 0);
  for (long i = 0; i < q; ++i) {
    Index r = reps[i];
    Index cur = r;
    long o = 1;
    while (coset_of[cur] != id_coset) {
      cur = g.mul(cur, r);
      ++o;
    }
    orders[i] = o;
  }
  // primes dividing q
  std::vector<long> primes;
  long qq = q;
  for (long p = 2; p * p <= qq; ++p)
    if (qq % p == 0) {
      primes.push_back(p);
      while (qq % p == 0) qq /= p;
    }
  if (qq > 1) primes.push_back(qq);
  std::map<long, std::vector<long>> partitions;
  std::size_t max_len = 0;
  for (long p : primes) {
    long full = 1;  // the p-part of q
    for (long qp = q; qp % p == 0; qp /= p) full *= p;
    std::vector<long> counts;  // counts[k-1] = #cosets of order dividing p^k
    for (long pk = p; pk <= full; pk *= p) {
      long c = 0;
      for (long o : orders)
        if (pk % o == 0) ++c;
      counts.push_back(c);
    }
    partitions[p] = p_partition(p, counts);
    max_len = std::max(max_len, partitions[p].size());
  }
  // weave the partitions into an ascending divisor chain
  std::vector<long> factors(max_len, 1);
  for (auto& [p, lambda] : partitions) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      long pw = 1;
      for (long t = 0; t < lambda[i]; ++t) pw *= p;
      factors[max_len - 1 - i] *= pw;  // largest exponents into the last factor
    }
  }
  factors.erase(std::remove(factors.begin(), factors.end(), 1L), factors.end());
  inv.factors = std::move(factors);
  long prod = 1;
  for (long f : inv.factors) prod *= f;
  if (prod != q) throw Error("invariant factors do not multiply to the quotient order");
  return inv;
}

AbelianInvariants abelian_invariants(const ReflectionGroup& g, const Subgroup& s) {
  return abelian_invariants(g, s, derived_subgroup(g, s));
}

ExactnessReport exactness_report(const ReflectionGroup& g, const Arrangement& arr, HypId h) {
  const auto& rec = arr.record(h);
  if (!rec.completed) throw UsageError("exactness_report needs a completed record");
  ExactnessReport rep;
  rep.hyperplane = h;
  rep.f = rec.f;
  rep.c_ab = abelian_invariants(g, rec.parabolic);
  rep.n_ab = abelian_invariants(g, rec.stabilizer);
  rep.injective = rep.c_ab.order * rep.f == rep.n_ab.order;
  rep.orbit_criterion_commuting =
      same_orbits(g, arr, rec.stabilizer, rec.parabolic, rec.commuting);
  std::vector<HypId> all(arr.size());
  std::iota(all.begin(), all.end(), 0);
  rep.orbit_criterion_full = same_orbits(g, arr, rec.stabilizer, rec.parabolic, all);
  if (rep.injective != rep.orbit_criterion_commuting) {
    std::ostringstream os;
    os << "count criterion (" << rep.injective << ") and commuting-orbit criterion ("
       << rep.orbit_criterion_commuting << ") disagree at " << rec.hyperplane.label_str()
       << " of " << g.family_label();
    throw CriterionMismatch(os.str());
  }
  return rep;
}

long subgroup_exponent_a(const ReflectionGroup& g, const Subgroup& c,
                         const HyperplaneRecord& rec) {
  (void)g;
  long inter = 0;
  for (Index m : rec.fixator.members())
    if (c.contains(m)) ++inter;
  if (rec.e % inter != 0) throw Error("fixator intersection size does not divide e_H");
  return rec.e / inter;  // trivial intersection (inter = 1) gives a_H = e_H
}

SemiInvarianceResult semi_invariance_check(const ReflectionGroup& g, const Arrangement& arr,
                                           const Subgroup& s, const LinearFormProduct& q) {
  SemiInvarianceResult res;
  for (Index gen : s.generator_set()) {
    // image multiset with scalar tracking
    std::vector<std::pair<HypId, long>> image;
    Cyclotomic lambda = Cyclotomic::one(g.conductor());
    for (const auto& [h, k] : q.factors) {
      auto img = act_on_form(g.element(gen), arr.record(h).hyperplane.normal);
      Cyclotomic c = normalize_projective(img);
      HypId target = arr.id_of_normal(img);
      image.emplace_back(target, k);
      // contribution c^k
      Cyclotomic ck = Cyclotomic::one(g.conductor());
      for (long t = 0; t < k; ++t) ck = ck * c;
      lambda = lambda * ck;
    }
    std::sort(image.begin(), image.end());
    if (image != q.factors)
      throw NotStable("hyperplane multiset moves under the subgroup action");
    if (!lambda.is_one()) res.all_one = false;
    res.scalars.emplace_back(gen, std::move(lambda));
  }
  return res;
}

}  // namespace refl
