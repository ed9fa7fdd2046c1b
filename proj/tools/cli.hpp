#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "report.hpp"

namespace sqdepth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name) and writes a single
/// structured document to `out`. Returns 0 on success, 1 when a violation
/// or corpus mismatch was found, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The full analysis stored for corpus entries: stats, depth with profile,
/// Stanley depth with certificate, and every claim.
Report corpus_report(const IdealPair& ip, const FieldSpec& field);

/// Drops fields that legitimately differ between identical runs.
nlohmann::json without_timing(nlohmann::json doc);

}  // namespace sqdepth::cli
