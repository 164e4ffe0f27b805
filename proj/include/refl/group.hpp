#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "refl/element.hpp"

namespace refl {

using Index = std::uint32_t;
inline constexpr Index kNoIndex = static_cast<Index>(-1);

struct BuildOptions {
  long order_bound = 10'000'000;
};

struct GdeFamily {
  long d = 1, e = 1, r = 1;
};

struct ExceptionalFamily {
  std::string name;
  std::string source;  // data file provenance
  long declared_order = 0;
};

using Family = std::variant<GdeFamily, ExceptionalFamily>;

/// Exceptional generator record, as read from a data file.
struct ExceptionalRecord {
  std::string name;
  std::string source;
  long declared_order = 0;
  long conductor = 1;
  long rank = 0;
  std::vector<DenseElement> generators;
};

/// A finite complex reflection group held as a closed, canonically sorted
/// element table. Immutable after construction; shareable across threads.
class ReflectionGroup {
public:
  /// The imprimitive series G(de, e, r), built by direct enumeration of all
  /// monomial matrices with entries in mu_{de} and entry product in mu_d.
  static ReflectionGroup build_gde(long d, long e, long r, const BuildOptions& opts = {});

  /// Breadth-first closure of an exceptional generator record; the computed
  /// order must equal the declared one.
  static ReflectionGroup build_from_matrices(const ExceptionalRecord& rec,
                                             const BuildOptions& opts = {});

  std::size_t order() const { return elements_.size(); }
  long rank() const { return rank_; }
  long conductor() const { return conductor_; }
  const Family& family() const { return family_; }
  std::string family_label() const;

  const Element& element(Index i) const { return elements_[i]; }
  Index identity() const { return identity_; }
  const std::vector<Index>& generators() const { return generators_; }

  Index index_of(const Element& e) const;  // kNoIndex when absent
  Index mul(Index a, Index b) const;
  Index inv(Index a) const { return inverse_[a]; }
  Index conjugate(Index g, Index x) const;  // g x g^{-1}

  /// Order of the cyclic group generated by an element.
  long element_order(Index a) const;

private:
  ReflectionGroup() = default;
  void finalize();  // sort canonically, build index/inverse tables

  Family family_;
  long rank_ = 0;
  long conductor_ = 1;
  std::vector<Element> elements_;
  std::vector<Index> inverse_;
  std::vector<Index> generators_;
  Index identity_ = 0;
  std::unordered_map<Element, Index, ElementHash, ElementEq> index_;
};

/// Subgroup of a ReflectionGroup: sorted member indices plus a generating
/// subset (verified to generate the members).
class Subgroup {
public:
  Subgroup() = default;

  /// Closure of the given generators inside the parent's table.
  static Subgroup generated(const ReflectionGroup& g, std::vector<Index> gens);
  /// Subgroup from a full member list (must be closed); a small generating
  /// set is derived greedily in canonical order.
  static Subgroup from_members(const ReflectionGroup& g, std::vector<Index> members);
  /// Same, but keeps the member list only (generators = members); used where
  /// a stored generating set is deliberately absent.
  static Subgroup from_members_raw(const ReflectionGroup& g, std::vector<Index> members);
  static Subgroup full(const ReflectionGroup& g);
  static Subgroup trivial(const ReflectionGroup& g);

  const ReflectionGroup& parent() const { return *parent_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<Index>& members() const { return members_; }
  const std::vector<Index>& generator_set() const { return generators_; }
  bool has_stored_generators() const { return has_generators_; }
  bool contains(Index i) const { return mask_[i] != 0; }

  bool operator==(const Subgroup& o) const { return members_ == o.members_; }
  bool is_subset_of(const Subgroup& o) const;

private:
  const ReflectionGroup* parent_ = nullptr;
  std::vector<Index> members_;     // sorted
  std::vector<std::uint8_t> mask_; // size parent order
  std::vector<Index> generators_;
  bool has_generators_ = false;
};

/// Closure of a set of indices inside the parent group.
std::vector<Index> close_indices(const ReflectionGroup& g, const std::vector<Index>& gens);

/// pi(g) = product of the nonzero coefficients of a monomial element,
/// as an exact root of unity.
Cyclotomic pi(const ReflectionGroup& g, Index i);

Subgroup subgroup_generated(const ReflectionGroup& g, const std::vector<Index>& gens);
Subgroup centralizer(const ReflectionGroup& g, Index x);

}  // namespace refl
