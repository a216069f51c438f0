#include "logobf_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "common.hpp"
#include "logobf/bench/scoring.hpp"
#include "tasks.hpp"

namespace logobf::cli {

namespace {

namespace fs = std::filesystem;
using bench::ObfuscationRecord;

int generate(Context& ctx, const fs::path& in, const fs::path& out, bench::Task task,
             const std::function<Generated(const ObfuscationRecord&)>& fn) {
  check_distinct(in, out);
  const auto base = select_base(bench::read_records(in), task, ctx);
  const auto results =
      parallel_map<Generated>(base.size(), ctx.jobs, [&](std::size_t i) { return fn(base[i]); });

  std::vector<ObfuscationRecord> records;
  bool failed = false;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& res = results[i];
    if (!res.value) {
      ctx.err << "error: record " << base[i].id << ": " << res.error << "\n";
      failed = true;
      continue;
    }
    if (res.value->failure) {
      ctx.err << "verification failed: " << base[i].id << ": " << *res.value->failure << "\n";
      failed = true;
    }
    records.push_back(res.value->record);
  }
  bench::write_records(out, records);
  ctx.out << "wrote " << records.size() << " record(s) to " << out.string() << "\n";
  return failed ? kExitFailure : kExitOk;
}

std::string safe_file_stem(const std::string& id) {
  std::string s;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '-' || c == '_' || c == '.';
    s.push_back(ok ? c : '_');
  }
  return s;
}

int export_prover9(Context& ctx, const fs::path& in, const fs::path& out_dir) {
  const auto records = bench::read_records(in);
  fs::create_directories(out_dir);
  std::size_t written = 0;
  bool failed = false;
  for (const auto& r : records) {
    if (r.task != bench::Task::Fol) continue;
    const fs::path file =
        out_dir / (safe_file_stem(r.id) + "." + std::string(bench::variant_name(r.variant)) + ".in");
    if (fs::exists(file) && fs::equivalent(file, in)) throw UsageError("output would overwrite the input");
    try {
      const std::string text = fol_prover9(r);
      std::ofstream f(file, std::ios::binary | std::ios::trunc);
      if (!f) throw Error("cannot write " + file.string());
      f << text;
      ++written;
    } catch (const Error& e) {
      ctx.err << "error: record " << r.id << ": " << e.what() << "\n";
      failed = true;
    }
  }
  ctx.out << "wrote " << written << " Prover9 file(s) to " << out_dir.string() << "\n";
  return failed ? kExitFailure : kExitOk;
}

int verify_records(Context& ctx, const fs::path& in, std::size_t max_domain) {
  const auto records = bench::read_records(in);
  bench::check_answer_invariance(records);
  const auto results = parallel_map<std::optional<std::string>>(
      records.size(), ctx.jobs, [&](std::size_t i) -> std::optional<std::string> {
        const auto& r = records[i];
        if (r.variant == bench::Variant::Base) return std::nullopt;
        switch (r.task) {
          case bench::Task::Fol: return verify_fol(r, max_domain);
          case bench::Task::BloodRelation: return verify_kinship_record(r);
          case bench::Task::NumberSeries: return verify_series(r);
          case bench::Task::Direction: return verify_direction(r);
        }
        return std::nullopt;
      });
  std::size_t checked = 0;
  std::vector<std::string> failures;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.variant == bench::Variant::Base) continue;
    ++checked;
    const auto& res = results[i];
    std::string reason;
    if (!res.value) {
      reason = res.error;
    } else if (*res.value) {
      reason = **res.value;
    } else {
      continue;
    }
    failures.push_back(r.id + "/" + std::string(bench::variant_name(r.variant)));
    ctx.err << "FAIL " << failures.back() << ": " << reason << "\n";
  }
  ctx.out << "verified " << checked - failures.size() << "/" << checked << " record(s)\n";
  if (!failures.empty()) {
    ctx.out << "failed:";
    for (const auto& f : failures) ctx.out << " " << f;
    ctx.out << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int score(Context& ctx, const fs::path& records_path, const fs::path& preds_path,
          const fs::path& report_path, const std::optional<fs::path>& table_path) {
  check_distinct(records_path, report_path);
  check_distinct(preds_path, report_path);
  const auto records = bench::read_records(records_path);
  const auto preds = bench::read_predictions(preds_path);
  const auto rep = bench::score_predictions(records, preds);
  {
    std::ofstream f(report_path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + report_path.string());
    f << rep.to_json().dump(2) << "\n";
  }
  const std::string table = rep.to_table();
  if (table_path) {
    std::ofstream f(*table_path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + table_path->string());
    f << table;
  }
  ctx.out << table;
  return kExitOk;
}

// Innermost subcommand selected on the command line.
// Usage lines show the full command path ("logobf fol obfuscate").
void set_usage(CLI::App& app, const std::string& path) {
  for (CLI::App* sub : app.get_subcommands({})) {
    const std::string full = path + " " + sub->get_name();
    sub->usage("Usage: " + full + (sub->get_subcommands({}).empty() ? " [OPTIONS]" : " SUBCOMMAND"));
    set_usage(*sub, full);
  }
}

const CLI::App* deepest(const CLI::App& app) {
  const CLI::App* cur = &app;
  while (!cur->get_subcommands().empty()) cur = cur->get_subcommands().front();
  return cur;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generate, verify and score logically obfuscated reasoning problems.", "logobf"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Context ctx{out, err, default_jobs()};
  std::function<int()> action;

  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", ctx.jobs, "Worker threads (default: LOGOBF_JOBS or 1)")
        ->check(CLI::PositiveNumber);
  };

  // fol
  auto* fol_cmd = app.add_subcommand("fol", "First-order logic entailment problems");
  fol_cmd->require_subcommand(1);

  fs::path in, out_path, out_dir, preds, report;
  std::optional<fs::path> table_out, table_in;
  FolParams fol;
  auto* fol_obf = fol_cmd->add_subcommand("obfuscate", "Rewrite premises with equivalence rules");
  fol_obf->add_option("--in", in, "Base records (JSONL)")->required()->check(CLI::ExistingFile);
  fol_obf->add_option("--out", out_path, "Output records (JSONL)")->required();
  fol_obf->add_option("--seed", fol.seed, "Generation seed")->required();
  fol_obf->add_option("--min-rules", fol.min_rules, "Rewrite steps per premise")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  fol_obf->add_flag("--verify,!--no-verify", fol.verify,
                    "Check each premise pair on finite models (default on)");
  fol_obf->add_option("--max-domain", fol.max_domain, "Largest domain size checked")
      ->capture_default_str()
      ->check(CLI::Range(1, 6));
  add_jobs(fol_obf);
  fol_obf->callback([&] {
    action = [&] {
      return generate(ctx, in, out_path, bench::Task::Fol,
                      [&](const ObfuscationRecord& r) { return obfuscate_fol(r, fol); });
    };
  });

  auto* fol_export = fol_cmd->add_subcommand("export-prover9", "Write Prover9 input files");
  fol_export->add_option("--in", in, "Records (JSONL)")->required()->check(CLI::ExistingFile);
  fol_export->add_option("--out-dir", out_dir, "Directory for .in files")->required();
  fol_export->callback([&] { action = [&] { return export_prover9(ctx, in, out_dir); }; });

  // kinship
  auto* kin_cmd = app.add_subcommand("kinship", "Blood-relation puzzles");
  kin_cmd->require_subcommand(1);
  KinshipParams kinship;
  std::string level = "l1";
  auto* kin_obf = kin_cmd->add_subcommand("obfuscate", "Substitute one relation word");
  kin_obf->add_option("--level", level, "Substitution table level")
      ->required()
      ->check(CLI::IsMember({"l1", "l2"}));
  kin_obf->add_option("--seed", kinship.seed, "Generation seed")->required();
  kin_obf->add_option("--in", in, "Base records (JSONL)")->required()->check(CLI::ExistingFile);
  kin_obf->add_option("--out", out_path, "Output records (JSONL)")->required();
  kin_obf->add_flag("--verify", kinship.verify, "Resolve both puzzles and compare (default off)");
  kin_obf->add_option("--table", table_in, "Substitution table JSON (default: built in)")
      ->check(CLI::ExistingFile);
  add_jobs(kin_obf);
  std::optional<kin::SubstitutionTable> custom_table;
  kin_obf->callback([&] {
    action = [&] {
      kinship.level = kin::parse_level(level);
      if (table_in) {
        std::ifstream f(*table_in, std::ios::binary);
        std::stringstream ss;
        ss << f.rdbuf();
        custom_table = kin::SubstitutionTable::from_json(ss.str());
        kinship.table = &*custom_table;
      }
      return generate(ctx, in, out_path, bench::Task::BloodRelation,
                      [&](const ObfuscationRecord& r) { return obfuscate_kinship(r, kinship); });
    };
  });

  // series
  auto* series_cmd = app.add_subcommand("series", "Number series");
  series_cmd->require_subcommand(1);
  SeriesParams series;
  auto* series_enc = series_cmd->add_subcommand("encode", "Encode series terms");
  series_enc->add_option("--type", series.type, "1 planet names, 2 code-point sums, 3 MD5")
      ->required()
      ->check(CLI::IsMember({1, 2, 3}));
  series_enc->add_option("--seed", series.seed, "Generation seed")->required();
  series_enc->add_option("--in", in, "Base records (JSONL)")->required()->check(CLI::ExistingFile);
  series_enc->add_option("--out", out_path, "Output records (JSONL)")->required();
  add_jobs(series_enc);
  series_enc->callback([&] {
    action = [&] {
      return generate(ctx, in, out_path, bench::Task::NumberSeries,
                      [&](const ObfuscationRecord& r) { return encode_series(r, series); });
    };
  });

  // direction
  auto* dir_cmd = app.add_subcommand("direction", "Direction-sense paths");
  dir_cmd->require_subcommand(1);
  DirectionParams direction;
  auto* dir_obf = dir_cmd->add_subcommand("obfuscate", "Insert detours and restate headings");
  dir_obf->add_option("--pairs", direction.pairs, "Self-cancelling detour pairs")
      ->required()
      ->check(CLI::PositiveNumber);
  dir_obf->add_option("--seed", direction.seed, "Generation seed")->required();
  dir_obf->add_option("--in", in, "Base records (JSONL)")->required()->check(CLI::ExistingFile);
  dir_obf->add_option("--out", out_path, "Output records (JSONL)")->required();
  dir_obf->add_option("--min-magnitude", direction.range.lo, "Smallest detour length")
      ->capture_default_str();
  dir_obf->add_option("--max-magnitude", direction.range.hi, "Largest detour length")
      ->capture_default_str();
  dir_obf->add_option("--distractors", direction.distractors, "Zero-distance remarks per path")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  dir_obf->add_flag("--verify,!--no-verify", direction.verify,
                    "Check net displacement (default on)");
  add_jobs(dir_obf);
  dir_obf->callback([&] {
    action = [&] {
      return generate(ctx, in, out_path, bench::Task::Direction,
                      [&](const ObfuscationRecord& r) { return obfuscate_direction(r, direction); });
    };
  });

  // verify
  std::size_t max_domain = 3;
  auto* verify_cmd = app.add_subcommand("verify", "Re-verify obfuscated records from provenance");
  verify_cmd->add_option("--in", in, "Records (JSONL)")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--max-domain", max_domain, "Largest domain size for fol checks")
      ->capture_default_str()
      ->check(CLI::Range(1, 6));
  add_jobs(verify_cmd);
  verify_cmd->callback([&] { action = [&] { return verify_records(ctx, in, max_domain); }; });

  // score
  auto* score_cmd = app.add_subcommand("score", "Exact-match accuracy and degradation");
  score_cmd->add_option("--records", in, "Records (JSONL)")->required()->check(CLI::ExistingFile);
  score_cmd->add_option("--preds", preds, "Predictions (JSONL of {id, variant, prediction})")
      ->required()
      ->check(CLI::ExistingFile);
  score_cmd->add_option("--report", report, "Report output (JSON)")->required();
  score_cmd->add_option("--table", table_out, "Also write the text table here");
  score_cmd->callback(
      [&] { action = [&] { return score(ctx, in, preds, report, table_out); }; });

  set_usage(app, "logobf");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << deepest(app)->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << deepest(app)->help();
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << deepest(app)->help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace logobf::cli
