#include "sqdepth/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

namespace sqdepth {
namespace {

struct InstanceOutcome {
  std::vector<ImplicationReport> reports;
  bool boundary = false;
};

InstanceOutcome evaluate(const IdealPair& ip, std::span<const ClaimId> claims,
                         const SweepOptions& options) {
  InstanceOutcome out;
  InstanceAnalysis a(ip, options.field);
  out.reports.reserve(claims.size());
  for (ClaimId id : claims) out.reports.push_back(check_claim(a, id));
  if (options.collect_boundary) out.boundary = is_theorem_boundary_case(a);
  return out;
}

}  // namespace

std::size_t SweepResult::total_violations() const {
  std::size_t total = 0;
  for (const auto& t : tallies) total += t.violations;
  return total;
}

const ClaimTally* SweepResult::find(ClaimId id) const {
  for (const auto& t : tallies) {
    if (t.claim == id) return &t;
  }
  return nullptr;
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("SQDEPTH_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

SweepResult run_sweep(std::span<const IdealPair> instances, std::span<const ClaimId> claims,
                      const SweepOptions& options) {
  const unsigned workers = std::max<unsigned>(
      1, std::min<std::size_t>(options.workers ? options.workers : default_worker_count(),
                               std::max<std::size_t>(instances.size(), 1)));

  std::vector<std::optional<InstanceOutcome>> outcomes(instances.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < instances.size(); i = next++) {
        outcomes[i] = evaluate(instances[i], claims, options);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = instances.size();
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);

  // Merge in instance order so the aggregate is independent of scheduling.
  SweepResult result;
  result.instances = instances.size();
  for (ClaimId id : claims) result.tallies.push_back({id, 0, 0, 0, {}});
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& out = *outcomes[i];
    for (std::size_t c = 0; c < claims.size(); ++c) {
      ClaimTally& tally = result.tallies[c];
      auto& report = out.reports[c];
      switch (report.verdict) {
        case Verdict::kConfirmed: ++tally.confirmed; break;
        case Verdict::kVacuous: ++tally.vacuous; break;
        case Verdict::kViolation:
          ++tally.violations;
          if (tally.witnesses.size() < options.max_witnesses) {
            tally.witnesses.push_back(std::move(report));
          }
          break;
      }
    }
    if (out.boundary) result.boundary_cases.push_back(instances[i]);
  }
  return result;
}

}  // namespace sqdepth
