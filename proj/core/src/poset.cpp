#include "sqdepth/poset.hpp"

#include <algorithm>

#include "sqdepth/errors.hpp"

namespace sqdepth {

Poset::Poset(const IdealPair& ip) : n_(ip.n()) {
  if (ip.is_zero_module()) throw ZeroModuleError();
  const std::size_t total = std::size_t{1} << n_;
  member_.assign(total, 0);
  for (std::size_t m = 0; m < total; ++m) {
    Monomial mono{static_cast<Mask>(m)};
    if (ip.in_module(mono)) {
      member_[m] = 1;
      elements_.push_back(mono);
    }
  }
  std::sort(elements_.begin(), elements_.end());
  degree_start_.assign(n_ + 2, 0);
  for (int deg = 0; deg <= n_ + 1; ++deg) {
    degree_start_[deg] = static_cast<std::size_t>(
        std::lower_bound(elements_.begin(), elements_.end(), deg,
                         [](Monomial m, int d) { return m.degree() < d; }) -
        elements_.begin());
  }
}

std::span<const Monomial> Poset::of_degree(int degree) const {
  if (degree < 0 || degree > n_) return {};
  return std::span<const Monomial>(elements_).subspan(
      degree_start_[degree], degree_start_[degree + 1] - degree_start_[degree]);
}

}  // namespace sqdepth
