#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "refl/cyclotomic.hpp"

namespace refl {

/// Monomial matrix in G(de,e,r) form: column i carries zeta_m^exps[i] in row
/// perm[i], with m = de. Multiplication matches the dense matrix product.
struct MonomialElement {
  std::uint32_t modulus = 1;        // m = d*e
  std::vector<std::uint16_t> perm;  // 0-based images
  std::vector<std::uint16_t> exps;  // residues mod modulus

  bool operator==(const MonomialElement&) const = default;
};

/// Dense square matrix over a fixed cyclotomic field, row-major.
struct DenseElement {
  long conductor = 1;
  long rank = 0;
  std::vector<Cyclotomic> entries;

  const Cyclotomic& at(long i, long j) const { return entries[i * rank + j]; }
  Cyclotomic& at(long i, long j) { return entries[i * rank + j]; }
  bool operator==(const DenseElement& o) const {
    return rank == o.rank && entries == o.entries;
  }
};

using Element = std::variant<MonomialElement, DenseElement>;

long element_rank(const Element& e);
bool is_identity(const Element& e);
Element identity_like(const Element& e);
Element multiply(const Element& a, const Element& b);
Element inverse(const Element& e);
Cyclotomic determinant(const Element& e);
DenseElement to_dense(const Element& e, long conductor);

/// Image of a column vector under the element's matrix.
std::vector<Cyclotomic> apply(const Element& e, const std::vector<Cyclotomic>& v);

/// Action on a linear form: returns the coefficient vector of alpha o e^{-1}.
std::vector<Cyclotomic> act_on_form(const Element& e, const std::vector<Cyclotomic>& alpha);

/// For a reflection (rank(M - id) == 1) returns the pair
/// (alpha, line): alpha spans the row space of M - id (its kernel is the fixed
/// hyperplane) and line spans the image (the line of the reflection); both are
/// scaled so their first nonzero coordinate is 1. nullopt otherwise.
struct ReflectionData {
  std::vector<Cyclotomic> alpha;
  std::vector<Cyclotomic> line;
};
std::optional<ReflectionData> reflection_data(const Element& e, long conductor);

/// Deterministic total order used for canonical element tables.
int element_compare(const Element& a, const Element& b);
bool element_equal(const Element& a, const Element& b);
std::size_t element_hash(const Element& e);

struct ElementHash {
  std::size_t operator()(const Element& e) const { return element_hash(e); }
};
struct ElementEq {
  bool operator()(const Element& a, const Element& b) const { return element_equal(a, b); }
};

/// Scales a nonzero vector so its first nonzero coordinate is 1.
/// Returns the scaling divisor c (original = c * result).
Cyclotomic normalize_projective(std::vector<Cyclotomic>& v);

}  // namespace refl
