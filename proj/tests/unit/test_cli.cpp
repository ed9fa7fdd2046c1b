#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "helpers.hpp"
#include "report.hpp"
#include "sqdepth/instances.hpp"

using namespace sqdepth;
using nlohmann::json;

namespace {

const std::string kCorpus = SQDEPTH_CORPUS_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus_file(const std::string& stem) { return kCorpus + "/" + stem + ".ideal"; }

}  // namespace

TEST_CASE("depth command") {
  const auto r = invoke({"depth", corpus_file("two_variables")});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.doc()["depth"] == 3);
  CHECK(r.doc()["command"] == "depth");
  CHECK(r.doc().contains("timing_ms"));

  const auto f = invoke({"--no-timing", "depth", corpus_file("two_variables_killed"), "--field", "fp:2"});
  CHECK(f.doc()["depth"] == 1);
  CHECK(f.doc()["field"] == "fp:2");
  CHECK_FALSE(f.doc().contains("timing_ms"));
}

TEST_CASE("sdepth command with certificate") {
  const auto r = invoke({"--no-timing", "sdepth", corpus_file("single_variable"), "--certificate"});
  CHECK(r.code == cli::kExitOk);
  const json doc = r.doc();
  CHECK(doc["sdepth"] == 2);
  CHECK(doc["certificate_verified"] == true);

  // Rebuild the certificate from the document and verify it independently.
  const Poset p(testutil::single_var());
  PartitionCertificate cert;
  cert.claimed_sdepth = doc["claimed_sdepth"];
  for (const auto& row : doc["certificate"]) {
    cert.intervals.push_back({testutil::mono(row["bottom"]), testutil::mono(row["top"])});
  }
  CHECK(verify_partition(p, cert));

  const auto at = invoke({"sdepth", corpus_file("single_variable"), "--at-least", "3"});
  CHECK(at.doc()["at_least_holds"] == false);
}

TEST_CASE("stats and check commands") {
  const json st = invoke({"stats", corpus_file("three_variables")}).doc();
  CHECK(st["r"] == 3);
  CHECK(st["s"] == 5);
  CHECK(st["q"] == 2);
  CHECK(st["B"] == json({"x1*x2", "x2*x3", "x1*x4", "x2*x4", "x3*x4"}));

  const auto r = invoke({"check", corpus_file("three_variables"), "--claim", "P1.3"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.doc()["claims"][0]["verdict"] == "confirmed");

  const auto all = invoke({"check", corpus_file("single_variable"), "--claim", "ALL"});
  CHECK(all.doc()["claims"].size() == all_claims().size());
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK(invoke({"depth"}).code == cli::kExitUsage);
  CHECK(invoke({"depth", kCorpus + "/missing.ideal"}).code == cli::kExitUsage);
  CHECK(invoke({"check", corpus_file("three_variables"), "--claim", "X9"}).code == cli::kExitUsage);
  CHECK(invoke({"depth", corpus_file("three_variables"), "--field", "fp:4"}).code == cli::kExitUsage);

  const auto dir = std::filesystem::temp_directory_path() / "sqdepth_cli_test";
  std::filesystem::create_directories(dir);
  const auto bad = (dir / "bad.ideal").string();
  std::ofstream(bad) << "n = 3\nI: x1*x1\nJ: 0\n";
  const auto r = invoke({"depth", bad});
  CHECK(r.code == cli::kExitUsage);
  CHECK_FALSE(r.err.empty());
  std::ofstream(bad) << "n = 3\nI: x1\nJ: x1\n";
  CHECK(invoke({"depth", bad}).code == cli::kExitUsage);
}

TEST_CASE("output is reproducible without timing") {
  for (const std::string& fmt : {"json", "text"}) {
    const auto a = invoke({"--no-timing", "--format", fmt, "fuzz", "--n", "4", "--seed", "5",
                           "--trials", "30", "--claim", "ALL"});
    const auto b = invoke({"--no-timing", "--format", fmt, "fuzz", "--n", "4", "--seed", "5",
                           "--trials", "30", "--claim", "ALL", "--workers", "2"});
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("enumerate and corpus commands") {
  const auto e = invoke({"--no-timing", "enumerate", "--n", "3", "--shape", "thm110", "--claim",
                         "T1.10,P1.9"});
  CHECK(e.code == cli::kExitOk);
  // J ranges over the 9 antichains of {x1x2, x1x3, x2x3, x1x2x3}
  CHECK(e.doc()["instances"] == 9);
  CHECK(e.doc()["tallies"].size() == 2);

  const auto c = invoke({"corpus", "run", kCorpus});
  CHECK(c.code == cli::kExitOk);
  for (const auto& row : c.doc()["corpus"]) CHECK(row["match"] == true);
}

TEST_CASE("boundary corpus output") {
  const auto dir = std::filesystem::temp_directory_path() / "sqdepth_boundary_test";
  std::filesystem::remove_all(dir);
  const auto r = invoke({"enumerate", "--n", "4", "--shape", "thm110", "--claim", "T1.10",
                         "--corpus-out", dir.string()});
  CHECK(r.code == cli::kExitOk);
  const auto listed = r.doc().value("boundary_cases", json::array());
  std::size_t files = 0;
  if (std::filesystem::exists(dir)) {
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      CHECK(entry.path().extension() == ".ideal");
      CHECK_NOTHROW(read_ideal_pair(entry.path().string()));
      ++files;
    }
  }
  CHECK(files == listed.size());
}

TEST_CASE("report documents round trip") {
  InstanceGenConfig cfg;
  cfg.n = 4;
  cfg.seed = 77;
  for (const IdealPair& ip : generate_instances(cfg, 15)) {
    cli::Report rep = cli::corpus_report(ip, FieldSpec::rationals());
    rep.timing_ms = 1.5;
    const json doc = cli::to_json(rep);
    CHECK(cli::report_from_json(doc) == rep);
    CHECK(cli::to_json(cli::report_from_json(doc)) == doc);
    CHECK_FALSE(cli::without_timing(doc).contains("timing_ms"));
    CHECK_FALSE(cli::render_text(doc).empty());
  }
}
