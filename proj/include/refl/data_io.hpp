#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "refl/group.hpp"

namespace refl {

/// Reads an exceptional group record:
/// {"name", "declared_order", "conductor", "rank", "generators": [[[["a/b",...]...]...]...]}
/// with each matrix entry a coefficient array over the power basis of
/// zeta_conductor.
ExceptionalRecord load_exceptional_record(const std::filesystem::path& file);

/// Locates NAME.json inside the data directory (expects a subdirectory
/// "exceptional" or the files directly).
ExceptionalRecord load_exceptional_by_name(const std::filesystem::path& data_dir,
                                           const std::string& name);

std::vector<std::string> list_exceptional_names(const std::filesystem::path& data_dir);

/// Claim fixtures distilled from the published tables: per-group hyperplane
/// class data (e, f, d), kappa, and the orbit-coincidence censuses.
struct ClassClaim {
  long e = 0, f = 0, d = 0;
};

struct GroupClaims {
  std::string name;
  std::vector<ClassClaim> classes;  // in the source's (GAP) class order
  long kappa = 0;
  // classes keyed by (e, f) where a criterion fails
  std::vector<std::pair<long, long>> commuting_orbit_mismatch;
  std::vector<std::pair<long, long>> noncommuting_orbit_mismatch;
  bool exactness_fails = false;  // i^ab fails to inject on every hyperplane
};

struct Fixtures {
  std::map<std::string, GroupClaims> exceptional;
};

Fixtures load_fixtures(const std::filesystem::path& data_dir);

/// Default data directory: $REFLGRP_DATA_DIR, else the compile-time default.
std::filesystem::path default_data_dir();

}  // namespace refl
