#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace logobf {

/// Seeded generator with a portable bounded draw.
///
/// std::mt19937_64 has a fully specified output sequence, but the standard
/// distributions do not, so bounded integers are drawn here by rejection to
/// keep generated data byte-identical across standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n). n must be positive.
  std::size_t index(std::size_t n);

  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used to derive independent per-item seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

/// FNV-1a over bytes; stable salt for string keys such as record ids.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace logobf
