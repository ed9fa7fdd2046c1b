#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sqdepth/ideal_pair.hpp"

namespace sqdepth {

/// The finite divisibility poset of square-free monomials in I \ J.
///
/// Elements are stored in canonical (degree, mask) order; membership is a
/// table lookup over all 2^n masks.
class Poset {
 public:
  /// Throws ZeroModuleError when I = J.
  explicit Poset(const IdealPair& ip);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::span<const Monomial> elements() const noexcept { return elements_; }

  bool contains(Monomial m) const noexcept {
    return m.mask < member_.size() && member_[m.mask] != 0;
  }

  /// Elements of exactly the given degree, canonical order.
  std::span<const Monomial> of_degree(int degree) const;

  int min_degree() const noexcept { return elements_.front().degree(); }
  int max_degree() const noexcept { return elements_.back().degree(); }

 private:
  int n_;
  std::vector<Monomial> elements_;
  std::vector<unsigned char> member_;
  std::vector<std::size_t> degree_start_;  // n + 2 offsets into elements_
};

}  // namespace sqdepth
