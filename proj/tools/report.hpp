#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqdepth/claims.hpp"
#include "sqdepth/degree_stats.hpp"
#include "sqdepth/koszul.hpp"
#include "sqdepth/sdepth.hpp"
#include "sqdepth/sweep.hpp"

namespace sqdepth::cli {

struct CertificateRow {
  std::string bottom;
  std::string top;
  friend bool operator==(const CertificateRow&, const CertificateRow&) = default;
};

struct ProfileRow {
  std::string multidegree;
  int p = 0;
  std::size_t rank = 0;
  friend bool operator==(const ProfileRow&, const ProfileRow&) = default;
};

struct ClaimRow {
  std::string claim_id;
  std::string verdict;
  bool hypothesis = false;
  bool conclusion = false;
  std::string witness;
  nlohmann::json details = nlohmann::json::object();
  friend bool operator==(const ClaimRow&, const ClaimRow&) = default;
};

struct TallyRow {
  std::string claim_id;
  std::size_t confirmed = 0;
  std::size_t vacuous = 0;
  std::size_t violations = 0;
  friend bool operator==(const TallyRow&, const TallyRow&) = default;
};

struct CorpusRow {
  std::string file;
  bool match = false;
  std::string note;
  friend bool operator==(const CorpusRow&, const CorpusRow&) = default;
};

/// One structured document per invocation. Absent optionals and empty lists
/// are omitted from the JSON form.
struct Report {
  std::string command;
  std::optional<std::string> instance;
  std::optional<std::string> field;
  std::optional<int> n;
  std::optional<int> d;
  std::optional<std::size_t> r, s, q;
  std::vector<std::string> b, c;
  std::optional<int> distinguished;
  std::optional<std::vector<std::string>> e, e_prime, e_double_prime;
  std::optional<int> depth;
  std::optional<int> sdepth;
  std::optional<int> at_least;
  std::optional<bool> at_least_holds;
  std::optional<int> claimed_sdepth;
  std::optional<bool> certificate_verified;
  std::vector<CertificateRow> certificate;
  std::vector<ProfileRow> profile;
  std::vector<ClaimRow> claims;
  std::optional<std::size_t> instances;
  std::vector<TallyRow> tallies;
  std::vector<std::string> boundary_cases;
  std::vector<CorpusRow> corpus;
  std::optional<double> timing_ms;

  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& doc);

/// Renders the JSON document as indented text lines.
std::string render_text(const nlohmann::json& doc);

// Builders from library results.
void add_stats(Report& report, const DegreeStats& stats);
void add_certificate(Report& report, const PartitionCertificate& cert);
void add_profile(Report& report, const HomologyProfile& profile);
ClaimRow claim_row(const ImplicationReport& r);
void add_sweep(Report& report, const SweepResult& sweep);

std::vector<std::string> render_monomials(const std::vector<Monomial>& monos);

}  // namespace sqdepth::cli
