#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "refl/checks.hpp"
#include "refl/data_io.hpp"

using namespace refl;

namespace {

struct Analyzed {
  ReflectionGroup g;
  Arrangement arr;
};

Analyzed analyze_gde(long d, long e, long r) {
  auto g = ReflectionGroup::build_gde(d, e, r);
  auto arr = Arrangement::find_hyperplanes(g);
  complete_arrangement(g, arr);
  return {std::move(g), std::move(arr)};
}

Analyzed analyze_exceptional(const std::string& name) {
  auto g = ReflectionGroup::build_from_matrices(
      load_exceptional_by_name(default_data_dir(), name));
  auto arr = Arrangement::find_hyperplanes(g);
  complete_arrangement(g, arr);
  return {std::move(g), std::move(arr)};
}

}  // namespace

TEST_SUITE("abelianization") {

TEST_CASE("derived subgroup basics") {
  // symmetric group on 3 letters: derived = alternating, order 3
  auto s3 = ReflectionGroup::build_gde(1, 1, 3);
  CHECK(derived_subgroup(s3, Subgroup::full(s3)).size() == 3);
  // abelian group: trivial derived subgroup
  auto c6 = ReflectionGroup::build_gde(6, 1, 1);
  CHECK(derived_subgroup(c6, Subgroup::full(c6)).size() == 1);
  // dihedral of order 8 = G(2,1,2): derived subgroup is the center, order 2
  auto b2 = ReflectionGroup::build_gde(2, 1, 2);
  auto der = derived_subgroup(b2, Subgroup::full(b2));
  CHECK(der.size() == 2);
  // brute force over all 64 commutators agrees
  auto naive = oracle::derived_subgroup_naive(b2, Subgroup::full(b2).members());
  CHECK(der.members() == naive);
}

TEST_CASE("abelian invariants basics") {
  auto s3 = ReflectionGroup::build_gde(1, 1, 3);
  CHECK(abelian_invariants(s3, Subgroup::full(s3)).factors == std::vector<long>{2});
  auto c6 = ReflectionGroup::build_gde(6, 1, 1);
  CHECK(abelian_invariants(c6, Subgroup::full(c6)).factors == std::vector<long>{6});
  auto [g4, arr4] = analyze_exceptional("G4");
  CHECK(abelian_invariants(g4, Subgroup::full(g4)).factors == std::vector<long>{3});
  // Klein four group: [2, 2]
  auto v4 = ReflectionGroup::build_gde(1, 2, 2);
  CHECK(abelian_invariants(v4, Subgroup::full(v4)).factors == std::vector<long>{2, 2});
}

TEST_CASE("brute-force oracle equivalence on groups of order <= 200") {
  for (auto [d, e, r] : {std::tuple<long, long, long>{1, 1, 3}, {1, 1, 4}, {2, 1, 2},
                         {3, 1, 2}, {2, 2, 2}, {4, 1, 2}, {2, 1, 3}, {1, 2, 4}, {6, 1, 1},
                         {4, 2, 2}, {3, 3, 2}, {2, 2, 3}}) {
    auto g = ReflectionGroup::build_gde(d, e, r);
    REQUIRE(g.order() <= 200);
    auto full = Subgroup::full(g);
    auto der = derived_subgroup(g, full);
    auto naive = oracle::derived_subgroup_naive(g, full.members());
    CHECK(der.members() == naive);
    auto inv = abelian_invariants(g, full, der);
    CHECK(inv.factors == oracle::abelian_invariants_naive(g, full.members(), naive));
    // subgroups around each hyperplane too
    auto arr = Arrangement::find_hyperplanes(g);
    complete_arrangement(g, arr);
    for (const auto& rec : arr.records()) {
      for (const Subgroup* s : {&rec.stabilizer, &rec.parabolic}) {
        auto dmain = derived_subgroup(g, *s);
        auto dnaive = oracle::derived_subgroup_naive(g, s->members());
        CHECK(dmain.members() == dnaive);
        CHECK(abelian_invariants(g, *s, dmain).factors ==
              oracle::abelian_invariants_naive(g, s->members(), dnaive));
      }
    }
  }
}

TEST_CASE("|S| = |[S,S]| * |S^ab| and Stanley-Springer order cross-check") {
  for (auto [d, e, r] : {std::tuple<long, long, long>{3, 1, 2}, {2, 2, 3}, {4, 2, 2},
                         {1, 1, 4}, {3, 3, 2}}) {
    auto [g, arr] = analyze_gde(d, e, r);
    auto full = Subgroup::full(g);
    auto der = derived_subgroup(g, full);
    auto inv = abelian_invariants(g, full, der);
    CHECK(g.order() == der.size() * inv.order);
    // W^ab order = product of e_C over hyperplane classes
    std::vector<HypId> all(arr.size());
    std::iota(all.begin(), all.end(), 0);
    long prod = 1;
    for (const auto& orbit : orbit_decomposition(g, arr, full, all))
      prod *= arr.record(orbit.front()).e;
    CHECK(inv.order == prod);
    for (const auto& rec : arr.records()) {
      auto dn = derived_subgroup(g, rec.stabilizer);
      CHECK(rec.stabilizer.size() ==
            dn.size() * abelian_invariants(g, rec.stabilizer, dn).order);
    }
  }
  // same cross-check on exceptional groups
  for (const char* name : {"G4", "G5", "G12", "G23"}) {
    auto [g, arr] = analyze_exceptional(name);
    auto full = Subgroup::full(g);
    auto inv = abelian_invariants(g, full);
    std::vector<HypId> all(arr.size());
    std::iota(all.begin(), all.end(), 0);
    long prod = 1;
    for (const auto& orbit : orbit_decomposition(g, arr, full, all))
      prod *= arr.record(orbit.front()).e;
    CHECK(inv.order == prod);
  }
}

TEST_CASE("exactness reports") {
  {
    // Coxeter: trivially injective everywhere
    auto [g, arr] = analyze_gde(2, 1, 3);
    for (HypId h = 0; h < arr.size(); ++h) {
      auto rep = exactness_report(g, arr, h);
      CHECK(rep.injective);
      CHECK(rep.orbit_criterion_commuting);
      CHECK(rep.c_ab.order * rep.f == rep.n_ab.order);
    }
  }
  {
    // G25: fails at every hyperplane
    auto [g, arr] = analyze_exceptional("G25");
    for (HypId h = 0; h < arr.size(); ++h) {
      auto rep = exactness_report(g, arr, h);
      CHECK(!rep.injective);
      CHECK(!rep.orbit_criterion_commuting);
    }
  }
  {
    // G(4,2,3): fails exactly at the coordinate hyperplanes
    auto [g, arr] = analyze_gde(2, 2, 3);
    for (HypId h = 0; h < arr.size(); ++h) {
      auto rep = exactness_report(g, arr, h);
      bool coord =
          arr.record(h).hyperplane.label->kind == SeriesLabel::Kind::Coordinate;
      CHECK(rep.injective == !coord);
    }
  }
}

TEST_CASE("subgroup_exponent_a") {
  auto [g, arr] = analyze_gde(4, 1, 1);
  const auto& rec = arr.record(0);
  CHECK(subgroup_exponent_a(g, Subgroup::full(g), rec) == 1);
  CHECK(subgroup_exponent_a(g, Subgroup::trivial(g), rec) == 4);
  // index-2 cyclic subgroup generated by s^2
  Index s2 = g.mul(rec.distinguished, rec.distinguished);
  CHECK(subgroup_exponent_a(g, Subgroup::generated(g, {s2}), rec) == 2);
}

TEST_CASE("semi-invariance") {
  auto [g, arr] = analyze_gde(3, 1, 2);
  // alpha_H^{f_H} is invariant under N_H
  for (HypId h = 0; h < arr.size(); ++h) {
    const auto& rec = arr.record(h);
    LinearFormProduct q;
    q.scalar = Cyclotomic::one(g.conductor());
    q.factors = {{h, rec.f}};
    auto res = semi_invariance_check(g, arr, rec.stabilizer, q);
    CHECK(res.all_one);
  }
  // the class products with exponents e_H/a_H are invariant under C = C_H
  std::vector<HypId> all(arr.size());
  std::iota(all.begin(), all.end(), 0);
  for (HypId h = 0; h < arr.size(); ++h) {
    const auto& rec = arr.record(h);
    for (const auto& orbit : orbit_decomposition(g, arr, rec.parabolic, all)) {
      LinearFormProduct q;
      q.scalar = Cyclotomic::one(g.conductor());
      for (HypId k : orbit) {
        long a = subgroup_exponent_a(g, rec.parabolic, arr.record(k));
        q.factors.emplace_back(k, arr.record(k).e / a);
      }
      auto res = semi_invariance_check(g, arr, rec.parabolic, q);
      CHECK(res.all_one);
    }
  }
  // the same products for C = W itself (a_H = 1, exponents e_H) over W-classes
  {
    auto full = Subgroup::full(g);
    for (const auto& orbit : orbit_decomposition(g, arr, full, all)) {
      LinearFormProduct q;
      q.scalar = Cyclotomic::one(g.conductor());
      for (HypId k : orbit) {
        long a = subgroup_exponent_a(g, full, arr.record(k));
        CHECK(a == 1);
        q.factors.emplace_back(k, arr.record(k).e / a);
      }
      CHECK(semi_invariance_check(g, arr, full, q).all_one);
    }
  }
  // alpha_H with exponent 1 under W_H: scalar zeta_e^{-1} on s_H
  {
    HypId h = 0;
    const auto& rec = arr.record(h);
    LinearFormProduct q;
    q.scalar = Cyclotomic::one(g.conductor());
    q.factors = {{h, 1}};
    auto res = semi_invariance_check(g, arr, rec.fixator, q);
    for (const auto& [gen, lam] : res.scalars) {
      if (gen == rec.distinguished)
        CHECK(lam == Cyclotomic::root_of_unity(rec.e, rec.e - 1));
    }
  }
  // a product whose hyperplane multiset moves is rejected
  {
    auto [g4, arr4] = analyze_gde(1, 1, 3);
    LinearFormProduct q;
    q.scalar = Cyclotomic::one(g4.conductor());
    q.factors = {{0, 1}};
    CHECK_THROWS_AS(semi_invariance_check(g4, arr4, Subgroup::full(g4), q), NotStable);
  }
}

TEST_CASE("random generated subgroups satisfy the order bookkeeping") {
  std::mt19937 rng(20250808);
  for (auto [d, e, r] : {std::tuple<long, long, long>{4, 1, 3}, {3, 3, 3}, {2, 2, 4}}) {
    auto g = ReflectionGroup::build_gde(d, e, r);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(g.order() - 1));
    for (int iter = 0; iter < 12; ++iter) {
      auto s = Subgroup::generated(g, {pick(rng), pick(rng)});
      auto der = derived_subgroup(g, s);
      CHECK(der.is_subset_of(s));
      auto inv = abelian_invariants(g, s, der);
      CHECK(s.size() == der.size() * static_cast<std::size_t>(inv.order));
      // invariant factors form a divisibility chain, all > 1
      for (std::size_t i = 0; i + 1 < inv.factors.size(); ++i)
        CHECK(inv.factors[i + 1] % inv.factors[i] == 0);
      for (long f : inv.factors) CHECK(f > 1);
      // derived subgroup is normal in S
      for (Index a : s.generator_set())
        for (Index m : der.members()) CHECK(der.contains(g.conjugate(a, m)));
    }
  }
}

TEST_CASE("count criterion matches orbit criterion everywhere on a small grid") {
  for (auto [d, e, r] : {std::tuple<long, long, long>{1, 1, 3}, {2, 1, 2}, {3, 1, 2},
                         {2, 2, 2}, {2, 2, 3}, {3, 3, 2}}) {
    auto [g, arr] = analyze_gde(d, e, r);
    for (HypId h = 0; h < arr.size(); ++h)
      CHECK_NOTHROW(exactness_report(g, arr, h));  // throws CriterionMismatch on disagreement
  }
}

}  // TEST_SUITE
