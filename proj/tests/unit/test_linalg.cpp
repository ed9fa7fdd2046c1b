#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "sqdepth/linalg.hpp"

using namespace sqdepth;

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (std::int64_t v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Gaussian elimination over doubles, fine for small well-conditioned integer inputs.
std::size_t float_rank(const IntMatrix& m) {
  std::vector<std::vector<double>> a(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = static_cast<double>(m(i, j));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    for (std::size_t i = rank; i < m.rows(); ++i)
      if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
    if (std::abs(a[piv][col]) < 1e-9) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      const double f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("known ranks") {
  CHECK(rank_over_rationals(IntMatrix()) == 0);
  CHECK(rank_over_rationals(IntMatrix(3, 0)) == 0);
  CHECK(rank_over_rationals(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank_over_rationals(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
  CHECK(rank_over_rationals(from_rows({{0, 0}, {0, 0}})) == 0);
  CHECK(rank_over_rationals(from_rows({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}})) == 2);
}

TEST_CASE("characteristic matters") {
  const IntMatrix m = from_rows({{2, 0}, {0, 2}});
  CHECK(rank_over_rationals(m) == 2);
  CHECK(rank_mod_prime(m, 2) == 0);
  CHECK(rank_mod_prime(m, 3) == 2);
  const IntMatrix twist = from_rows({{1, 1}, {1, -1}});
  CHECK(rank_mod_prime(twist, 2) == 1);
  CHECK(rank_mod_prime(from_rows({{-1, 4}}), 5) == 1);
}

TEST_CASE("overflow falls back to big integers") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 3;
  const IntMatrix m = from_rows({{big, big - 1, 7}, {big - 5, big, 3}, {2 * big - 5, 2 * big - 1, 10}});
  CHECK(rank_over_rationals(m) == 2);
  CHECK(rank_over_rationals_bigint(m) == 2);
}

TEST_CASE("bareiss matches floating elimination on small matrices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = rng() % 6 + 1, c = rng() % 6 + 1;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<std::int64_t>(rng() % 3) - 1;
    const std::size_t expected = float_rank(m);
    CHECK(rank_over_rationals(m) == expected);
    CHECK(rank_over_rationals_bigint(m) == expected);
    CHECK(rank_mod_prime(m, 1000003) == expected);
  }
}

TEST_CASE("prime test") {
  CHECK(is_prime(2));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}
