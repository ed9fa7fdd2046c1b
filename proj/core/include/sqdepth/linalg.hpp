#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sqdepth {

/// Row-major dense integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Exact rank over Q by fraction-free (Bareiss) elimination. Runs on 64-bit
/// integers and reruns with arbitrary precision if an intermediate overflows.
std::size_t rank_over_rationals(const IntMatrix& m);

/// Same elimination forced onto arbitrary-precision integers.
std::size_t rank_over_rationals_bigint(const IntMatrix& m);

/// Rank over F_p. p must be prime and below 2^31.
std::size_t rank_mod_prime(const IntMatrix& m, std::uint32_t p);

bool is_prime(std::uint64_t p);

}  // namespace sqdepth
