#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "refl/rational.hpp"

namespace refl {

/// An element of the cyclotomic field Q(zeta_n), stored in canonical form:
/// coefficients over the power basis 1, z, ..., z^(phi(n)-1) after reduction
/// modulo the n-th cyclotomic polynomial. Values are immutable once built and
/// safe to share across threads.
///
/// Conventions:
///  * the conductor n is any positive integer; n = 1 gives plain rationals,
///  * arithmetic between different conductors embeds both operands into the
///    lcm conductor and leaves the result there (no re-minimization),
///  * equality first minimizes the conductor of both sides, so e.g.
///    zeta_6^3 at conductor 6 equals -1 at conductor 1.
class Cyclotomic {
public:
  Cyclotomic() : conductor_(1), coeffs_(1) {}

  static Cyclotomic zero(long conductor);
  static Cyclotomic one(long conductor);
  static Cyclotomic from_rational(long conductor, const Rational& q);
  /// zeta_n^k (k arbitrary, reduced mod n).
  static Cyclotomic root_of_unity(long conductor, long k);
  /// Canonical representative of sum raw[i] * zeta_n^i; raw may have any
  /// length, exponents are folded mod n first.
  static Cyclotomic canonicalize(long conductor, std::span<const Rational> raw);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic scaled(const Rational& q) const;

  /// Multiplicative inverse; throws DivisionByZero on zero.
  Cyclotomic inverse() const;
  /// Complex conjugation, zeta_n -> zeta_n^(n-1).
  Cyclotomic conjugate() const;
  /// Galois substitution zeta_n -> zeta_n^k; requires gcd(k, n) = 1.
  Cyclotomic galois(long k) const;

  /// Embeds into Q(zeta_m); m must be a multiple of the conductor.
  Cyclotomic embedded(long m) const;
  /// Rewrites over the smallest Q(zeta_m) containing the value (m | conductor).
  Cyclotomic minimized() const;

  /// Minimal k >= 1 with this^k = 1, searched up to lcm(2, conductor);
  /// nullopt if the value is not a root of unity.
  std::optional<long> root_of_unity_order() const;

  /// Equality across conductors (both sides minimized first).
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Lexicographic order on coefficient vectors; both sides must share a
  /// conductor (used for canonical sorting inside one group).
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  std::size_t hash() const;

  /// "-1/2 + 3*z^2" style rendering, z the primitive conductor-th root.
  std::string str() const;
  /// Coefficients as "a/b" strings (JSON form).
  std::vector<std::string> coeff_strings() const;

private:
  Cyclotomic(long conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  long conductor_;
  std::vector<Rational> coeffs_;  // size phi(conductor)
};

long euler_phi(long n);

/// Immutable per-conductor tables (cyclotomic polynomial, reduction rows,
/// power-to-basis map). Built once, shared thereafter.
struct ConductorData {
  long n = 1;
  long phi = 1;
  std::vector<long> cyclo_poly;             // Phi_n, degree phi, monic, integer
  std::vector<std::vector<long>> red_rows;  // z^(phi+i) over basis, i in [0, phi-1)
  std::vector<std::vector<long>> powers;    // z^k over basis, k in [0, n)
};

const ConductorData& conductor_data(long n);

}  // namespace refl
