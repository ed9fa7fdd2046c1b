#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sqdepth/claims.hpp"

namespace sqdepth {

struct ClaimTally {
  ClaimId claim{};
  std::size_t confirmed = 0;
  std::size_t vacuous = 0;
  std::size_t violations = 0;
  std::vector<ImplicationReport> witnesses;  ///< violating reports, first few
};

struct SweepResult {
  std::size_t instances = 0;
  std::vector<ClaimTally> tallies;  ///< same order as the requested claims
  std::vector<IdealPair> boundary_cases;

  std::size_t total_violations() const;
  const ClaimTally* find(ClaimId id) const;
};

struct SweepOptions {
  FieldSpec field = FieldSpec::rationals();
  unsigned workers = 0;           ///< 0 = default_worker_count()
  std::size_t max_witnesses = 8;
  bool collect_boundary = false;
};

/// Worker count from SQDEPTH_WORKERS, else hardware concurrency.
unsigned default_worker_count();

/// Evaluates every claim on every instance. Aggregates are independent of
/// the worker count.
SweepResult run_sweep(std::span<const IdealPair> instances, std::span<const ClaimId> claims,
                      const SweepOptions& options = {});

}  // namespace sqdepth
