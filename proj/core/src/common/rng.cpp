#include "logobf/common/rng.hpp"

#include <limits>

#include "logobf/common/error.hpp"

namespace logobf {

std::size_t SeededRng::index(std::size_t n) {
  if (n == 0) throw InvalidArgument("SeededRng::index: empty range");
  const std::uint64_t bound = n;
  // Largest multiple of bound that fits; values above it are rejected.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      (std::numeric_limits<std::uint64_t>::max() % bound);
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return static_cast<std::size_t>(v % bound);
}

std::int64_t SeededRng::between(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InvalidArgument("SeededRng::between: lo > hi");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(index(static_cast<std::size_t>(span)));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace logobf
