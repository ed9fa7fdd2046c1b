#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "sqdepth/ideal_pair.hpp"

namespace sqdepth {

enum class InstanceShape {
  kGeneral,      ///< any J ⊆ I
  kThm110,       ///< I = (x1) + E, E nonempty degree-2 in x2..xn, J in degree >= 2
  kIdealOnly,    ///< J = 0, I ≠ 0
};

std::string_view to_string(InstanceShape s);
std::optional<InstanceShape> parse_instance_shape(std::string_view text);

inline constexpr int kMaxGeneratedVariables = 12;
inline constexpr int kMaxEnumeratedVariables = 5;

struct InstanceGenConfig {
  int n = 4;
  int i_min_degree = 1;
  int i_max_degree = 2;
  int j_min_degree = 2;
  int j_max_degree = 3;
  /// Inclusion probability of a candidate generator, indexed by degree.
  /// Missing entries count as 0.5.
  std::vector<double> density;
  std::uint64_t seed = 1;
  InstanceShape shape = InstanceShape::kGeneral;
};

/// Reproducible stream of nonzero ideal pairs. Throws PreconditionError for
/// infeasible configurations.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(InstanceGenConfig cfg);

  IdealPair next();

 private:
  bool coin(double p);
  double density(int degree) const;
  Generators sample(const std::vector<Monomial>& candidates);

  InstanceGenConfig cfg_;
  std::mt19937_64 rng_;
};

std::vector<IdealPair> generate_instances(const InstanceGenConfig& cfg, std::size_t count);

/// Every antichain of `allowed` (taken in canonical order), in a fixed order.
void for_each_antichain(const std::vector<Monomial>& allowed,
                        const std::function<void(const Generators&)>& visit);

/// Visits each valid pair with I ≠ J of the given shape exactly once, in
/// canonical order. Throws PreconditionError for n > kMaxEnumeratedVariables
/// (kGeneral is limited to n <= 4).
void enumerate_all(int n, InstanceShape shape,
                   const std::function<void(const IdealPair&)>& visit);
std::vector<IdealPair> enumerate_all(int n, InstanceShape shape);

}  // namespace sqdepth
