#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sqdepth/errors.hpp"
#include "sqdepth/instance_format.hpp"
#include "sqdepth/instances.hpp"

namespace sqdepth::cli {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Options {
  std::string format = "json";
  bool no_timing = false;
  std::string file;
  std::string field = "q";
  std::optional<int> d;
  bool certificate = false;
  std::optional<int> at_least;
  bool profile = false;
  std::string claim = "ALL";
  int n = 4;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::string shape = "general";
  std::string corpus_out;
  std::vector<double> density;
  unsigned workers = 0;
  std::string directory;
};

std::vector<ClaimId> resolve_claims(const std::string& text) {
  if (text == "ALL") return {all_claims().begin(), all_claims().end()};
  std::vector<ClaimId> ids;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    auto id = parse_claim_id(item);
    if (!id) throw PreconditionError("unknown claim id '" + item + "'");
    ids.push_back(*id);
  }
  return ids;
}

InstanceShape resolve_shape(const std::string& text) {
  auto s = parse_instance_shape(text);
  if (!s) throw PreconditionError("unknown shape '" + text + "' (general, thm110, ideal)");
  return *s;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_boundary_corpus(const std::string& dir, const std::vector<IdealPair>& cases) {
  if (dir.empty()) return;
  fs::create_directories(dir);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "boundary_%05zu.ideal", i);
    std::ofstream(fs::path(dir) / name)
        << "# |B| = |C| + 1 and |E''| > |C \\ (x1, E')|\n" << format_ideal_pair(cases[i]);
  }
}

Report cmd_stats(const Options& o) {
  const IdealPair ip = read_ideal_pair(o.file);
  Report rp;
  rp.command = "stats";
  rp.instance = format_ideal_pair(ip);
  rp.n = ip.n();
  add_stats(rp, degree_stats(ip, o.d));
  return rp;
}

Report cmd_sdepth(const Options& o) {
  const IdealPair ip = read_ideal_pair(o.file);
  const Poset poset(ip);
  Report rp;
  rp.command = "sdepth";
  rp.instance = format_ideal_pair(ip);
  rp.n = ip.n();
  if (o.at_least) {
    if (*o.at_least < 0 || *o.at_least > ip.n()) {
      throw PreconditionError("--at-least must lie in [0, n]");
    }
    rp.at_least = *o.at_least;
    const auto cert = sdepth_at_least(poset, *o.at_least);
    rp.at_least_holds = cert.has_value();
    if (cert && o.certificate) {
      add_certificate(rp, *cert);
      rp.certificate_verified = verify_partition(poset, *cert).ok;
    }
    return rp;
  }
  const SdepthResult result = sdepth(poset);
  rp.sdepth = result.value;
  if (o.certificate) {
    add_certificate(rp, result.certificate);
    rp.certificate_verified = verify_partition(poset, result.certificate).ok;
  }
  return rp;
}

Report cmd_depth(const Options& o) {
  const IdealPair ip = read_ideal_pair(o.file);
  const FieldSpec field = FieldSpec::parse(o.field);
  const DepthResult result = depth(ip, field);
  Report rp;
  rp.command = "depth";
  rp.instance = format_ideal_pair(ip);
  rp.field = field.to_string();
  rp.n = ip.n();
  rp.depth = result.value;
  if (o.profile) add_profile(rp, result.profile);
  return rp;
}

Report cmd_check(const Options& o, bool& violation) {
  const IdealPair ip = read_ideal_pair(o.file);
  const FieldSpec field = FieldSpec::parse(o.field);
  InstanceAnalysis a(ip, field);
  Report rp;
  rp.command = "check";
  rp.instance = a.instance_text();
  rp.field = field.to_string();
  rp.n = ip.n();
  for (ClaimId id : resolve_claims(o.claim)) {
    const auto r = check_claim(a, id);
    violation = violation || r.verdict == Verdict::kViolation;
    rp.claims.push_back(claim_row(r));
  }
  return rp;
}

Report sweep_report(const std::string& command, const std::vector<IdealPair>& instances,
                    const Options& o, bool& violation) {
  const FieldSpec field = FieldSpec::parse(o.field);
  SweepOptions opts;
  opts.field = field;
  opts.workers = o.workers;
  opts.collect_boundary = !o.corpus_out.empty();
  const SweepResult sweep = run_sweep(instances, resolve_claims(o.claim), opts);
  violation = sweep.total_violations() > 0;
  write_boundary_corpus(o.corpus_out, sweep.boundary_cases);

  Report rp;
  rp.command = command;
  rp.field = field.to_string();
  rp.n = o.n;
  add_sweep(rp, sweep);
  for (const auto& ip : sweep.boundary_cases) rp.boundary_cases.push_back(format_ideal_pair(ip));
  return rp;
}

Report cmd_fuzz(const Options& o, bool& violation) {
  InstanceGenConfig cfg;
  cfg.n = o.n;
  cfg.seed = o.seed;
  cfg.shape = resolve_shape(o.shape);
  cfg.i_max_degree = std::min(o.n, 2);
  cfg.j_max_degree = std::min(o.n, 3);
  cfg.density = o.density;
  return sweep_report("fuzz", generate_instances(cfg, o.trials), o, violation);
}

Report cmd_enumerate(const Options& o, bool& violation) {
  return sweep_report("enumerate", enumerate_all(o.n, resolve_shape(o.shape)), o, violation);
}

Report cmd_corpus(const Options& o, bool record, bool& violation) {
  const FieldSpec field = FieldSpec::parse(o.field);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(o.directory)) {
    if (entry.path().extension() == ".ideal") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw PreconditionError("no .ideal files in " + o.directory);

  Report rp;
  rp.command = record ? "corpus record" : "corpus run";
  rp.field = field.to_string();
  for (const auto& path : files) {
    const IdealPair ip = read_ideal_pair(path.string());
    const nlohmann::json actual = to_json(corpus_report(ip, field));
    fs::path expected_path = path;
    expected_path.replace_extension(".expected.json");
    CorpusRow row{path.filename().string(), true, {}};
    if (record) {
      std::ofstream(expected_path) << actual.dump(2) << "\n";
      row.note = "recorded";
    } else if (!fs::exists(expected_path)) {
      row.match = false;
      row.note = "missing " + expected_path.filename().string();
    } else {
      const auto expected = nlohmann::json::parse(slurp(expected_path));
      row.match = without_timing(expected) == without_timing(actual);
      row.note = row.match ? "ok" : "differs from " + expected_path.filename().string();
    }
    violation = violation || !row.match;
    rp.corpus.push_back(std::move(row));
  }
  return rp;
}

}  // namespace

nlohmann::json without_timing(nlohmann::json doc) {
  doc.erase("timing_ms");
  return doc;
}

Report corpus_report(const IdealPair& ip, const FieldSpec& field) {
  InstanceAnalysis a(ip, field);
  Report rp;
  rp.command = "corpus-entry";
  rp.instance = a.instance_text();
  rp.field = field.to_string();
  rp.n = ip.n();
  add_stats(rp, a.stats());
  rp.depth = a.depth();
  add_profile(rp, a.depth_result().profile);
  rp.sdepth = a.sdepth();
  add_certificate(rp, a.sdepth_result().certificate);
  rp.certificate_verified = verify_partition(a.poset(), a.sdepth_result().certificate).ok;
  for (ClaimId id : all_claims()) rp.claims.push_back(claim_row(check_claim(a, id)));
  return rp;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Depth and Stanley depth of square-free monomial quotients I/J", "sqdepth"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--no-timing", o.no_timing, "Omit timing_ms from the output");

  auto* stats = app.add_subcommand("stats", "Degree statistics d, r, s, q, B, C (and E sets)");
  stats->add_option("file", o.file, "Instance file")->required();
  stats->add_option("--d", o.d, "Override the base degree d");

  auto* sd = app.add_subcommand("sdepth", "Stanley depth with optional certificate");
  sd->add_option("file", o.file, "Instance file")->required();
  sd->add_flag("--certificate", o.certificate, "Emit and verify the interval partition");
  sd->add_option("--at-least", o.at_least, "Only decide sdepth >= K");

  auto* dp = app.add_subcommand("depth", "Depth via Koszul homology");
  dp->add_option("file", o.file, "Instance file")->required();
  dp->add_option("--field", o.field, "q or fp:<prime>");
  dp->add_flag("--profile", o.profile, "Emit nonzero homology ranks per multidegree");

  auto* check = app.add_subcommand("check", "Evaluate claims on one instance");
  check->add_option("file", o.file, "Instance file")->required();
  check->add_option("--claim", o.claim, "Claim id, comma list, or ALL")->required();
  check->add_option("--field", o.field, "q or fp:<prime>");

  auto* fuzz = app.add_subcommand("fuzz", "Seeded random instances");
  fuzz->add_option("--n", o.n, "Variables")->required();
  fuzz->add_option("--seed", o.seed, "Seed")->required();
  fuzz->add_option("--trials", o.trials, "Instances")->required();
  fuzz->add_option("--claim", o.claim, "Claim id, comma list, or ALL")->required();
  fuzz->add_option("--shape", o.shape, "general, thm110 or ideal");
  fuzz->add_option("--density", o.density, "Generator density per degree 0..n")->delimiter(',');
  fuzz->add_option("--corpus-out", o.corpus_out, "Write boundary cases here");
  fuzz->add_option("--field", o.field, "q or fp:<prime>");
  fuzz->add_option("--workers", o.workers, "Worker threads (default SQDEPTH_WORKERS)");

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive small-n families");
  enumerate->add_option("--n", o.n, "Variables")->required();
  enumerate->add_option("--shape", o.shape, "general, thm110 or ideal");
  enumerate->add_option("--claim", o.claim, "Claim id, comma list, or ALL")->required();
  enumerate->add_option("--corpus-out", o.corpus_out, "Write boundary cases here");
  enumerate->add_option("--field", o.field, "q or fp:<prime>");
  enumerate->add_option("--workers", o.workers, "Worker threads (default SQDEPTH_WORKERS)");

  auto* corpus = app.add_subcommand("corpus", "Replay or record stored expected reports");
  corpus->require_subcommand(1);
  auto* corpus_run = corpus->add_subcommand("run", "Compare every DIR/*.ideal with its expected report");
  corpus_run->add_option("dir", o.directory, "Corpus directory")->required();
  corpus_run->add_option("--field", o.field, "q or fp:<prime>");
  auto* corpus_record = corpus->add_subcommand("record", "Write DIR/*.expected.json");
  corpus_record->add_option("dir", o.directory, "Corpus directory")->required();
  corpus_record->add_option("--field", o.field, "q or fp:<prime>");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const auto start = Clock::now();
  bool violation = false;
  Report rp;
  try {
    if (*stats) rp = cmd_stats(o);
    else if (*sd) rp = cmd_sdepth(o);
    else if (*dp) rp = cmd_depth(o);
    else if (*check) rp = cmd_check(o, violation);
    else if (*fuzz) rp = cmd_fuzz(o, violation);
    else if (*enumerate) rp = cmd_enumerate(o, violation);
    else if (*corpus_run) rp = cmd_corpus(o, false, violation);
    else if (*corpus_record) rp = cmd_corpus(o, true, violation);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!o.no_timing) {
    rp.timing_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }
  const nlohmann::json doc = to_json(rp);
  out << (o.format == "text" ? render_text(doc) : doc.dump(2) + "\n");
  return violation ? kExitViolation : kExitOk;
}

}  // namespace sqdepth::cli
