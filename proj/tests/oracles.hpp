#pragma once

// Brute-force oracles for the test suites. Everything here is deliberately
// naive and independent of the main computation paths it cross-checks.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "refl/group.hpp"

namespace refl::oracle {

/// Remainder of x^k modulo the n-th cyclotomic polynomial via plain long
/// division over Q, built from scratch (used to pin [DERIVED] examples).
inline std::vector<Rational> power_mod_cyclotomic(long n, long k) {
  // numerator x^n - 1, divided by all lower Phi_d, gives Phi_n; then divide
  // x^k by Phi_n. Long arithmetic only.
  std::map<long, std::vector<long>> phis;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::vector<long> num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    for (auto& [dd, p] : phis) {
      if (d % dd != 0) continue;
      // divide num by p exactly
      std::vector<long> q(num.size() - p.size() + 1, 0);
      for (long i = static_cast<long>(num.size()) - 1;
           i >= static_cast<long>(p.size()) - 1; --i) {
        long c = num[i];
        if (c == 0) continue;
        long f = c / p.back();
        q[i - (p.size() - 1)] = f;
        for (std::size_t j = 0; j < p.size(); ++j) num[i - (p.size() - 1) + j] -= f * p[j];
      }
      num = q;
    }
    phis[d] = num;
  }
  const auto& phi = phis[n];
  std::vector<Rational> rem(k + 1);
  rem[k] = Rational(1);
  for (long i = k; i >= static_cast<long>(phi.size()) - 1; --i) {
    if (rem[i].is_zero()) continue;
    Rational f = rem[i] / Rational(phi.back());
    long shift = i - (static_cast<long>(phi.size()) - 1);
    for (std::size_t j = 0; j < phi.size(); ++j)
      rem[shift + j] -= f * Rational(phi[j]);
  }
  rem.resize(std::max<std::size_t>(1, phi.size() - 1));
  return rem;
}

/// Exhaustive commutator closure: the subgroup generated by all commutators
/// of all member pairs, closed by repeated full pairwise multiplication.
inline std::vector<Index> derived_subgroup_naive(const ReflectionGroup& g,
                                                 const std::vector<Index>& members) {
  std::set<Index> cur;
  cur.insert(g.identity());
  for (Index a : members)
    for (Index b : members)
      cur.insert(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  while (true) {
    std::set<Index> next = cur;
    for (Index a : cur)
      for (Index b : cur) next.insert(g.mul(a, b));
    if (next == cur) break;
    cur = std::move(next);
  }
  return std::vector<Index>(cur.begin(), cur.end());
}

/// All abelian groups of order n as ascending invariant-factor chains.
inline void divisor_chains(long n, long max_first, std::vector<long>& cur,
                           std::vector<std::vector<long>>& out) {
  if (n == 1) {
    out.push_back(cur);
    return;
  }
  for (long d = 2; d <= std::min(n, max_first); ++d) {
    if (n % d != 0) continue;
    // ascending chain d_1 | d_2 | ...: build from the largest factor down
    if (!cur.empty() && cur.front() % d != 0) continue;
    cur.insert(cur.begin(), d);
    divisor_chains(n / d, d, cur, out);
    cur.erase(cur.begin());
  }
}

/// Element-order multiset of the abelian group with the given invariant
/// factors (computed structurally, no group elements involved).
inline std::map<long, long> abelian_order_multiset(const std::vector<long>& factors) {
  std::map<long, long> counts;
  std::vector<long> idx(factors.size(), 0);
  while (true) {
    long o = 1;
    for (std::size_t i = 0; i < factors.size(); ++i)
      o = std::lcm(o, factors[i] / std::gcd(idx[i], factors[i]));
    ++counts[o];
    long pos = static_cast<long>(factors.size()) - 1;
    while (pos >= 0 && idx[pos] == factors[pos] - 1) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  if (factors.empty()) counts[1] = 1;
  return counts;
}

/// Invariant factors of S/D by direct structure analysis: enumerate all
/// abelian groups of the right order and match element-order multisets.
inline std::vector<long> abelian_invariants_naive(const ReflectionGroup& g,
                                                  const std::vector<Index>& members,
                                                  const std::vector<Index>& derived) {
  std::set<Index> dset(derived.begin(), derived.end());
  // left cosets
  std::map<Index, long> coset;  // element -> coset id (id = least member)
  std::vector<Index> reps;
  for (Index m : members) {
    if (coset.count(m)) continue;
    long id = static_cast<long>(reps.size());
    reps.push_back(m);
    for (Index d : derived) coset[g.mul(m, d)] = id;
  }
  long q = static_cast<long>(reps.size());
  if (q == 1) return {};
  std::map<long, long> order_counts;
  for (Index r : reps) {
    long o = 1;
    Index cur = r;
    while (coset.at(cur) != coset.at(g.identity())) {
      cur = g.mul(cur, r);
      ++o;
    }
    ++order_counts[o];
  }
  std::vector<std::vector<long>> candidates;
  std::vector<long> scratch;
  divisor_chains(q, q, scratch, candidates);
  std::vector<std::vector<long>> matches;
  for (const auto& cand : candidates)
    if (abelian_order_multiset(cand) == order_counts) matches.push_back(cand);
  if (matches.size() != 1) throw Error("oracle: order multiset did not pin down the group");
  return matches.front();
}

}  // namespace refl::oracle
