#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sqdepth/ideal_pair.hpp"
#include "sqdepth/poset.hpp"

namespace sqdepth {

/// I is generated by one variable (the distinguished one, playing the role
/// of x_1) together with a nonempty set E of degree-2 monomials avoiding it.
struct SingleVariableShape {
  int distinguished = 0;
  Generators e;
  Generators e_prime;         ///< a in E with x·a in C
  Generators e_double_prime;  ///< E \ E'
};

/// Counts and sets of P_{I\J} at degrees d, d+1, d+2.
struct DegreeStats {
  int d = 0;
  std::size_t r = 0;
  std::vector<Monomial> b;
  std::vector<Monomial> c;
  std::size_t s = 0;
  std::size_t q = 0;
  std::optional<SingleVariableShape> shape;
};

/// Index of the distinguished variable when gens(I) = {x_i} ∪ E with E a
/// nonempty set of degree-2 monomials; nullopt otherwise.
std::optional<int> detect_single_variable_shape(const IdealPair& ip);

/// Throws ZeroModuleError for I = J. `d` defaults to the smallest degree of
/// a minimal generator of I.
DegreeStats degree_stats(const IdealPair& ip, std::optional<int> d = std::nullopt);
DegreeStats degree_stats(const IdealPair& ip, const Poset& poset,
                         std::optional<int> d = std::nullopt);

}  // namespace sqdepth
