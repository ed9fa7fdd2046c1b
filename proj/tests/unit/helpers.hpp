#pragma once

#include <string>
#include <vector>

#include "sqdepth/instance_format.hpp"

namespace testutil {

inline sqdepth::Monomial mono(const std::string& text, int n = sqdepth::kMaxVariables) {
  return sqdepth::parse_monomial(text, n);
}

inline std::vector<sqdepth::Monomial> monos(std::initializer_list<const char*> texts) {
  std::vector<sqdepth::Monomial> out;
  for (const char* t : texts) out.push_back(mono(t));
  return out;
}

inline sqdepth::IdealPair pair(const std::string& doc) { return sqdepth::parse_ideal_pair(doc); }

inline sqdepth::IdealPair two_var() { return pair("n = 4\nI: x1, x2\nJ: x1*x2\n"); }
inline sqdepth::IdealPair two_var_killed() { return pair("n = 4\nI: x1, x2\nJ: x1*x2, x1*x3, x1*x4\n"); }
inline sqdepth::IdealPair three_var() { return pair("n = 4\nI: x1, x2, x3\nJ: x1*x3\n"); }
inline sqdepth::IdealPair single_var() { return pair("n=3\nI: x1, x2*x3\nJ: 0"); }

}  // namespace testutil
