#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "refl/group.hpp"

namespace refl {

/// Symbolic tag for hyperplanes of the infinite series.
struct SeriesLabel {
  enum class Kind { Coordinate, Difference };
  Kind kind = Kind::Coordinate;
  long i = 0;        // 1-based
  long j = 0;        // 1-based, Difference only
  long zeta_exp = 0; // H = {z_i = zeta_{de}^k z_j}
};

/// A reflecting hyperplane, stored through the linear form alpha whose kernel
/// it is; the coefficient vector is scaled so the first nonzero coordinate
/// equals 1, which makes the representation unique.
struct Hyperplane {
  std::vector<Cyclotomic> normal;
  std::optional<SeriesLabel> label;

  std::string label_str() const;
};

using HypId = std::uint32_t;

/// Everything the engine knows about one hyperplane. find_hyperplanes leaves
/// the stabilizer block (stabilizer, parabolic, f, ramification, witness,
/// commuting) empty; stabilizer_data and commuting_set fill it in.
struct HyperplaneRecord {
  Hyperplane hyperplane;
  Subgroup fixator;            // W_H, cyclic of order e
  long e = 0;
  Index distinguished = kNoIndex;  // s_H, det = exp(2 i pi / e)
  std::vector<Cyclotomic> line;    // D = im(s_H - id), first nonzero scaled to 1
  Subgroup stabilizer;         // N_H = {w : w D = D}
  Subgroup parabolic;          // C_H = {w : w fixes D pointwise}
  long f = 0;
  long ramification = 0;       // d_H = f / e
  Index witness = kNoIndex;    // element whose eigenvalue on D has order f
  std::vector<HypId> commuting;  // sorted ids, includes the hyperplane itself
  bool completed = false;
};

/// The arrangement of a group: hyperplane records in canonical order plus
/// index structures for the action of the group on hyperplanes.
class Arrangement {
public:
  static Arrangement find_hyperplanes(const ReflectionGroup& g);

  const std::vector<HyperplaneRecord>& records() const { return records_; }
  HyperplaneRecord& record(HypId i) { return records_[i]; }
  const HyperplaneRecord& record(HypId i) const { return records_[i]; }
  std::size_t size() const { return records_.size(); }

  /// Id of the hyperplane with the given canonical normal, or throws.
  HypId id_of_normal(const std::vector<Cyclotomic>& normal) const;

  /// Image hyperplane id under w, i.e. w(H).
  HypId act(const ReflectionGroup& g, Index w, HypId h) const;

  /// All reflections of the group (non-identity fixator members).
  std::vector<Index> reflections() const;

  /// Sorted member list of reflections, as a mask too.
  const std::vector<std::uint8_t>& reflection_mask() const { return refl_mask_; }

private:
  struct VecHash {
    std::size_t operator()(const std::vector<Cyclotomic>& v) const {
      std::size_t h = 17;
      for (const auto& x : v) h = hash_combine(h, x.hash());
      return h;
    }
  };
  struct VecEq {
    bool operator()(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) const {
      return a == b;
    }
  };

  std::vector<HyperplaneRecord> records_;
  std::unordered_map<std::vector<Cyclotomic>, HypId, VecHash, VecEq> by_normal_;
  std::vector<std::uint8_t> refl_mask_;
};

/// Completes the stabilizer block of one record: N_H, C_H, f, d_H, witness.
void stabilizer_data(const ReflectionGroup& g, Arrangement& arr, HypId h);

/// Hyperplanes whose distinguished reflections commute with s_H (includes H).
std::vector<HypId> commuting_set(const ReflectionGroup& g, const Arrangement& arr, HypId h);

/// Completes every record (stabilizer data + commuting sets), fanning the
/// per-hyperplane work out over `threads` workers when threads > 1.
void complete_arrangement(const ReflectionGroup& g, Arrangement& arr, unsigned threads = 1);

/// Orbits of the natural action of S on the given hyperplane set; each orbit
/// sorted, orbits ordered by least member. OrbitEscape if the action leaves
/// the set.
std::vector<std::vector<HypId>> orbit_decomposition(const ReflectionGroup& g,
                                                    const Arrangement& arr, const Subgroup& s,
                                                    const std::vector<HypId>& hyps);

/// true iff two subgroups induce the same orbit partition on the given set.
bool same_orbits(const ReflectionGroup& g, const Arrangement& arr, const Subgroup& a,
                 const Subgroup& b, const std::vector<HypId>& hyps);

}  // namespace refl
