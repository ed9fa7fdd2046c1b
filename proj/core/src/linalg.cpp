#include "sqdepth/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <utility>

namespace sqdepth {
namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

// Checked arithmetic on int64; throws Overflow.
struct Checked {
  std::int64_t v;

  friend Checked operator*(Checked a, Checked b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a.v, b.v, &out)) throw Overflow{};
    return {out};
  }
  friend Checked operator-(Checked a, Checked b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a.v, b.v, &out)) throw Overflow{};
    return {out};
  }
  friend Checked operator/(Checked a, Checked b) { return {a.v / b.v}; }
  friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
  explicit operator bool() const { return v != 0; }
};

template <typename T>
bool is_zero(const T& x) {
  return x == T(0);
}
template <>
bool is_zero<Checked>(const Checked& x) {
  return x.v == 0;
}

// Fraction-free echelon form; every stored entry is a minor of the input,
// so the division by the previous pivot is exact.
template <typename T>
std::size_t bareiss_rank(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<T> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = T(m(r, c));
  }
  auto at = [&](std::size_t r, std::size_t c) -> T& { return a[r * cols + c]; };

  T prev = T(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && is_zero(at(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = col; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
    }
    const T p = at(rank, col);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const T f = at(r, col);
      for (std::size_t c = col + 1; c < cols; ++c) {
        at(r, c) = (p * at(r, c) - f * at(rank, c)) / prev;
      }
      at(r, col) = T(0);
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1;
  std::int64_t base = a % p;
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

}  // namespace

std::size_t rank_over_rationals(const IntMatrix& m) {
  try {
    return bareiss_rank<Checked>(m);
  } catch (const Overflow&) {
    return bareiss_rank<BigInt>(m);
  }
}

std::size_t rank_over_rationals_bigint(const IntMatrix& m) { return bareiss_rank<BigInt>(m); }

std::size_t rank_mod_prime(const IntMatrix& m, std::uint32_t p) {
  if (!is_prime(p) || p >= (1U << 31)) throw std::invalid_argument("rank_mod_prime: bad modulus");
  const std::int64_t mod = p;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::int64_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = ((m(r, c) % mod) + mod) % mod;
  }
  auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a[r * cols + c]; };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = col; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
    }
    const std::int64_t inv = inverse_mod(at(rank, col), mod);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::int64_t f = at(r, col) * inv % mod;
      if (f == 0) continue;
      for (std::size_t c = col; c < cols; ++c) {
        at(r, c) = ((at(r, c) - f * at(rank, c)) % mod + mod) % mod;
      }
    }
    ++rank;
  }
  return rank;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace sqdepth
