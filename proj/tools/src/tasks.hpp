#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "logobf/bench/records.hpp"
#include "logobf/kinship/substitution.hpp"
#include "logobf/spatial/obfuscate.hpp"

namespace logobf::cli {

/// A generated record plus the reason its verification failed, if it did.
struct Generated {
  bench::ObfuscationRecord record;
  std::optional<std::string> failure;
};

struct FolParams {
  std::uint64_t seed = 0;
  std::size_t min_rules = 4;
  bool verify = true;
  std::size_t max_domain = 3;
};
Generated obfuscate_fol(const bench::ObfuscationRecord& base, const FolParams& p);
std::optional<std::string> verify_fol(const bench::ObfuscationRecord& r, std::size_t max_domain);
/// Prover9 input for a fol record.
std::string fol_prover9(const bench::ObfuscationRecord& r);

struct KinshipParams {
  std::uint64_t seed = 0;
  kin::Level level = kin::Level::L1;
  bool verify = false;
  const kin::SubstitutionTable* table = nullptr;
};
Generated obfuscate_kinship(const bench::ObfuscationRecord& base, const KinshipParams& p);
std::optional<std::string> verify_kinship_record(const bench::ObfuscationRecord& r);

struct SeriesParams {
  std::uint64_t seed = 0;
  int type = 1;
};
Generated encode_series(const bench::ObfuscationRecord& base, const SeriesParams& p);
std::optional<std::string> verify_series(const bench::ObfuscationRecord& r);

struct DirectionParams {
  std::uint64_t seed = 0;
  int pairs = 2;
  spatial::MagnitudeRange range;
  int distractors = 0;
  bool verify = true;
};
Generated obfuscate_direction(const bench::ObfuscationRecord& base, const DirectionParams& p);
std::optional<std::string> verify_direction(const bench::ObfuscationRecord& r);

}  // namespace logobf::cli
