#include "sqdepth/monomial.hpp"

#include <algorithm>

namespace sqdepth {

std::string to_string(Monomial m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (int i = 1; i <= kMaxVariables; ++i) {
    if (!m.has_variable(i)) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i);
  }
  return out;
}

std::vector<int> variables_of(Monomial m) {
  std::vector<int> vars;
  for (Mask rest = m.mask; rest != 0; rest &= rest - 1) {
    vars.push_back(std::countr_zero(rest) + 1);
  }
  return vars;
}

std::vector<Monomial> monomials_of_degree(int n, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || degree > n) return out;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    if (std::popcount(m) == degree) out.push_back(Monomial{m});
    if (m == full_mask(n)) break;
  }
  return out;
}

Monomial relabel(Monomial m, const std::vector<int>& perm) {
  Monomial out;
  for (int i : variables_of(m)) out = out.times(Monomial::variable(perm[i - 1]));
  return out;
}

}  // namespace sqdepth
