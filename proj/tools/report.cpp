#include "report.hpp"

#include <sstream>

namespace sqdepth::cli {

using nlohmann::json;

namespace {

template <typename T>
void put(json& doc, const char* key, const std::optional<T>& value) {
  if (value) doc[key] = *value;
}

template <typename T>
void get(const json& doc, const char* key, std::optional<T>& value) {
  if (auto it = doc.find(key); it != doc.end()) value = it->get<T>();
}

// Multi-line strings (instance documents) become an indented block.
void scalar(const json& value, const std::string& indent, std::ostringstream& out) {
  if (!value.is_string()) {
    out << ' ' << value.dump() << '\n';
    return;
  }
  const std::string text = value.get<std::string>();
  if (text.find('\n') == std::string::npos) {
    out << ' ' << text << '\n';
    return;
  }
  out << " |\n";
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) out << indent << "  " << line << '\n';
}

void render(const json& node, const std::string& indent, std::ostringstream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      if (value.is_structured()) {
        out << indent << key << ":\n";
        render(value, indent + "  ", out);
      } else {
        out << indent << key << ':';
        scalar(value, indent, out);
      }
    }
  } else if (node.is_array()) {
    for (const auto& value : node) {
      if (value.is_structured()) {
        out << indent << "-\n";
        render(value, indent + "  ", out);
      } else {
        out << indent << '-';
        scalar(value, indent, out);
      }
    }
  } else {
    out << indent << node.dump() << "\n";
  }
}

}  // namespace

json to_json(const Report& rp) {
  json doc;
  doc["command"] = rp.command;
  put(doc, "instance", rp.instance);
  put(doc, "field", rp.field);
  put(doc, "n", rp.n);
  put(doc, "d", rp.d);
  put(doc, "r", rp.r);
  put(doc, "s", rp.s);
  put(doc, "q", rp.q);
  if (!rp.b.empty()) doc["B"] = rp.b;
  if (!rp.c.empty()) doc["C"] = rp.c;
  put(doc, "x", rp.distinguished);
  put(doc, "E", rp.e);
  put(doc, "E_prime", rp.e_prime);
  put(doc, "E_double_prime", rp.e_double_prime);
  put(doc, "depth", rp.depth);
  put(doc, "sdepth", rp.sdepth);
  put(doc, "at_least", rp.at_least);
  put(doc, "at_least_holds", rp.at_least_holds);
  put(doc, "claimed_sdepth", rp.claimed_sdepth);
  put(doc, "certificate_verified", rp.certificate_verified);
  if (!rp.certificate.empty()) {
    json rows = json::array();
    for (const auto& row : rp.certificate) rows.push_back({{"bottom", row.bottom}, {"top", row.top}});
    doc["certificate"] = rows;
  }
  if (!rp.profile.empty()) {
    json rows = json::array();
    for (const auto& row : rp.profile) {
      rows.push_back({{"multidegree", row.multidegree}, {"p", row.p}, {"rank", row.rank}});
    }
    doc["profile"] = rows;
  }
  if (!rp.claims.empty()) {
    json rows = json::array();
    for (const auto& row : rp.claims) {
      rows.push_back({{"claim_id", row.claim_id},
                      {"verdict", row.verdict},
                      {"hypothesis", row.hypothesis},
                      {"conclusion", row.conclusion},
                      {"witness", row.witness},
                      {"details", row.details}});
    }
    doc["claims"] = rows;
  }
  put(doc, "instances", rp.instances);
  if (!rp.tallies.empty()) {
    json rows = json::array();
    for (const auto& row : rp.tallies) {
      rows.push_back({{"claim_id", row.claim_id},
                      {"confirmed", row.confirmed},
                      {"vacuous", row.vacuous},
                      {"violations", row.violations}});
    }
    doc["tallies"] = rows;
  }
  if (!rp.boundary_cases.empty()) doc["boundary_cases"] = rp.boundary_cases;
  if (!rp.corpus.empty()) {
    json rows = json::array();
    for (const auto& row : rp.corpus) {
      rows.push_back({{"file", row.file}, {"match", row.match}, {"note", row.note}});
    }
    doc["corpus"] = rows;
  }
  put(doc, "timing_ms", rp.timing_ms);
  return doc;
}

Report report_from_json(const json& doc) {
  Report rp;
  rp.command = doc.at("command").get<std::string>();
  get(doc, "instance", rp.instance);
  get(doc, "field", rp.field);
  get(doc, "n", rp.n);
  get(doc, "d", rp.d);
  get(doc, "r", rp.r);
  get(doc, "s", rp.s);
  get(doc, "q", rp.q);
  if (doc.contains("B")) rp.b = doc["B"].get<std::vector<std::string>>();
  if (doc.contains("C")) rp.c = doc["C"].get<std::vector<std::string>>();
  get(doc, "x", rp.distinguished);
  get(doc, "E", rp.e);
  get(doc, "E_prime", rp.e_prime);
  get(doc, "E_double_prime", rp.e_double_prime);
  get(doc, "depth", rp.depth);
  get(doc, "sdepth", rp.sdepth);
  get(doc, "at_least", rp.at_least);
  get(doc, "at_least_holds", rp.at_least_holds);
  get(doc, "claimed_sdepth", rp.claimed_sdepth);
  get(doc, "certificate_verified", rp.certificate_verified);
  if (doc.contains("certificate")) {
    for (const auto& row : doc["certificate"]) {
      rp.certificate.push_back({row.at("bottom").get<std::string>(), row.at("top").get<std::string>()});
    }
  }
  if (doc.contains("profile")) {
    for (const auto& row : doc["profile"]) {
      rp.profile.push_back({row.at("multidegree").get<std::string>(), row.at("p").get<int>(),
                            row.at("rank").get<std::size_t>()});
    }
  }
  if (doc.contains("claims")) {
    for (const auto& row : doc["claims"]) {
      rp.claims.push_back({row.at("claim_id").get<std::string>(), row.at("verdict").get<std::string>(),
                           row.at("hypothesis").get<bool>(), row.at("conclusion").get<bool>(),
                           row.at("witness").get<std::string>(), row.at("details")});
    }
  }
  get(doc, "instances", rp.instances);
  if (doc.contains("tallies")) {
    for (const auto& row : doc["tallies"]) {
      rp.tallies.push_back({row.at("claim_id").get<std::string>(), row.at("confirmed").get<std::size_t>(),
                            row.at("vacuous").get<std::size_t>(),
                            row.at("violations").get<std::size_t>()});
    }
  }
  if (doc.contains("boundary_cases")) {
    rp.boundary_cases = doc["boundary_cases"].get<std::vector<std::string>>();
  }
  if (doc.contains("corpus")) {
    for (const auto& row : doc["corpus"]) {
      rp.corpus.push_back({row.at("file").get<std::string>(), row.at("match").get<bool>(),
                           row.at("note").get<std::string>()});
    }
  }
  get(doc, "timing_ms", rp.timing_ms);
  return rp;
}

std::string render_text(const json& doc) {
  std::ostringstream out;
  render(doc, "", out);
  return out.str();
}

std::vector<std::string> render_monomials(const std::vector<Monomial>& monos) {
  std::vector<std::string> out;
  out.reserve(monos.size());
  for (Monomial m : monos) out.push_back(to_string(m));
  return out;
}

void add_stats(Report& report, const DegreeStats& stats) {
  report.d = stats.d;
  report.r = stats.r;
  report.s = stats.s;
  report.q = stats.q;
  report.b = render_monomials(stats.b);
  report.c = render_monomials(stats.c);
  if (stats.shape) {
    report.distinguished = stats.shape->distinguished;
    report.e = render_monomials(stats.shape->e);
    report.e_prime = render_monomials(stats.shape->e_prime);
    report.e_double_prime = render_monomials(stats.shape->e_double_prime);
  }
}

void add_certificate(Report& report, const PartitionCertificate& cert) {
  report.claimed_sdepth = cert.claimed_sdepth;
  report.certificate.clear();
  for (const Interval& iv : cert.intervals) {
    report.certificate.push_back({to_string(iv.bottom), to_string(iv.top)});
  }
}

void add_profile(Report& report, const HomologyProfile& profile) {
  report.profile.clear();
  for (const auto& slice : profile.slices) {
    for (std::size_t p = 0; p < slice.ranks.size(); ++p) {
      if (slice.ranks[p] != 0) {
        report.profile.push_back({to_string(slice.multidegree), static_cast<int>(p), slice.ranks[p]});
      }
    }
  }
}

ClaimRow claim_row(const ImplicationReport& r) {
  ClaimRow row;
  row.claim_id = std::string(to_string(r.claim));
  row.verdict = std::string(to_string(r.verdict));
  row.hypothesis = r.hypothesis_holds;
  row.conclusion = r.conclusion_holds;
  row.witness = r.instance;
  for (const auto& detail : r.details) {
    std::visit([&](const auto& v) { row.details[detail.key] = v; }, detail.value);
  }
  return row;
}

void add_sweep(Report& report, const SweepResult& sweep) {
  report.instances = sweep.instances;
  for (const auto& t : sweep.tallies) {
    report.tallies.push_back(
        {std::string(to_string(t.claim)), t.confirmed, t.vacuous, t.violations});
    for (const auto& w : t.witnesses) report.claims.push_back(claim_row(w));
  }
}

}  // namespace sqdepth::cli
