#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "logobf/bench/records.hpp"

namespace logobf::cli {

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::size_t jobs = 1;
};

/// Thrown for bad flag combinations detected after parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// LOGOBF_JOBS when set to a positive integer, else 1.
std::size_t default_jobs();

/// Rejects an output path that names the same file as the input.
void check_distinct(const std::filesystem::path& in, const std::filesystem::path& out);

/// Seed for one record, independent of processing order.
std::uint64_t record_seed(std::uint64_t seed, const std::string& id);

template <class T>
struct Outcome {
  std::optional<T> value;
  std::string error;
};

/// Applies `f` to 0..n-1 on up to `jobs` threads. Results keep index order.
template <class T, class F>
std::vector<Outcome<T>> parallel_map(std::size_t n, std::size_t jobs, F f) {
  std::vector<Outcome<T>> out(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i].value = f(i);
      } catch (const std::exception& e) {
        out[i].error = e.what();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, n));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

/// Records of `task` with variant base; others are skipped with a note.
std::vector<bench::ObfuscationRecord> select_base(const std::vector<bench::ObfuscationRecord>& all,
                                                  bench::Task task, Context& ctx);

}  // namespace logobf::cli
