#include "common.hpp"

#include <cstdlib>
#include <ostream>

#include "logobf/common/rng.hpp"

namespace logobf::cli {

std::size_t default_jobs() {
  if (const char* env = std::getenv("LOGOBF_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1;
}

void check_distinct(const std::filesystem::path& in, const std::filesystem::path& out) {
  std::error_code ec;
  if (std::filesystem::exists(out, ec) && std::filesystem::equivalent(in, out, ec)) {
    throw UsageError("output " + out.string() + " would overwrite the input");
  }
  if (std::filesystem::weakly_canonical(in, ec) == std::filesystem::weakly_canonical(out, ec)) {
    throw UsageError("output " + out.string() + " would overwrite the input");
  }
}

std::uint64_t record_seed(std::uint64_t seed, const std::string& id) {
  return mix_seed(seed, fnv1a(id));
}

std::vector<bench::ObfuscationRecord> select_base(const std::vector<bench::ObfuscationRecord>& all,
                                                  bench::Task task, Context& ctx) {
  std::vector<bench::ObfuscationRecord> out;
  std::size_t skipped = 0;
  for (const auto& r : all) {
    if (r.task == task && r.variant == bench::Variant::Base) {
      out.push_back(r);
    } else {
      ++skipped;
    }
  }
  if (skipped) {
    ctx.err << "note: skipped " << skipped << " record(s) that are not "
            << bench::task_name(task) << " base records\n";
  }
  return out;
}

}  // namespace logobf::cli
