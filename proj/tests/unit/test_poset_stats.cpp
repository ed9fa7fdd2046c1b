#include <doctest.h>

#include "helpers.hpp"
#include "sqdepth/degree_stats.hpp"
#include "sqdepth/errors.hpp"
#include "sqdepth/instances.hpp"
#include "sqdepth/poset.hpp"

using namespace sqdepth;
using testutil::mono;
using testutil::monos;

TEST_CASE("poset of the single-variable example") {
  const Poset p(testutil::single_var());
  CHECK(p.size() == 5);
  const std::vector<Monomial> expected = monos({"x1", "x1*x2", "x1*x3", "x2*x3", "x1*x2*x3"});
  CHECK(std::vector<Monomial>(p.elements().begin(), p.elements().end()) == expected);
  CHECK(p.of_degree(2).size() == 3);
  CHECK(p.of_degree(0).empty());
  CHECK(p.min_degree() == 1);
  CHECK(p.max_degree() == 3);
}

TEST_CASE("poset excludes J") {
  const Poset p(testutil::three_var());
  CHECK(p.size() == 10);
  for (const char* gone : {"x1*x2*x3", "x1*x3", "x1*x3*x4", "x1*x2*x3*x4", "x4"}) {
    CHECK_FALSE(p.contains(mono(gone)));
  }
  CHECK(p.contains(mono("x2*x3*x4")));
}

TEST_CASE("zero module is rejected") {
  const IdealPair zero(3, monos({"x1"}), monos({"x1"}));
  CHECK_THROWS_AS(Poset{zero}, ZeroModuleError);
}

TEST_CASE("posets are convex") {
  // u <= w <= v with u, v in P forces w in P.
  for (const IdealPair& ip : enumerate_all(3, InstanceShape::kGeneral)) {
    const Poset p(ip);
    for (Monomial u : p.elements()) {
      for (Monomial v : p.elements()) {
        if (!u.divides(v)) continue;
        for (Mask w = 0; w < 8; ++w) {
          const Monomial m{w};
          if (u.divides(m) && m.divides(v)) CHECK(p.contains(m));
        }
      }
    }
  }
}

TEST_CASE("degree statistics of the four-variable example") {
  const DegreeStats st = degree_stats(testutil::three_var());
  CHECK(st.d == 1);
  CHECK(st.r == 3);
  CHECK(st.s == 5);
  CHECK(st.q == 2);
  CHECK(st.b == monos({"x1*x2", "x2*x3", "x1*x4", "x2*x4", "x3*x4"}));
  CHECK(st.c == monos({"x1*x2*x4", "x2*x3*x4"}));
  CHECK_FALSE(st.shape.has_value());
}

TEST_CASE("degree statistics with the single-variable shape") {
  const DegreeStats st = degree_stats(testutil::single_var());
  CHECK(st.r == 1);
  CHECK(st.b == monos({"x1*x2", "x1*x3", "x2*x3"}));
  CHECK(st.c == monos({"x1*x2*x3"}));
  REQUIRE(st.shape.has_value());
  CHECK(st.shape->distinguished == 1);
  CHECK(st.shape->e == monos({"x2*x3"}));
  CHECK(st.shape->e_prime == monos({"x2*x3"}));
  CHECK(st.shape->e_double_prime.empty());
}

TEST_CASE("shape detection") {
  CHECK(detect_single_variable_shape(testutil::single_var()) == 1);
  CHECK_FALSE(detect_single_variable_shape(testutil::three_var()));
  CHECK_FALSE(detect_single_variable_shape(testutil::pair("n=3\nI: x1\nJ: 0\n")));
  CHECK(detect_single_variable_shape(testutil::pair("n=3\nI: x2, x1*x3\nJ: 0\n")) == 2);
}

TEST_CASE("explicit d shifts the window") {
  const DegreeStats st = degree_stats(testutil::three_var(), 2);
  CHECK(st.d == 2);
  CHECK(st.r == 5);
  CHECK(st.s == 2);
  CHECK(st.q == 0);
}

TEST_CASE("stats agree with a direct count") {
  for (const IdealPair& ip : enumerate_all(4, InstanceShape::kThm110)) {
    const Poset p(ip);
    const DegreeStats st = degree_stats(ip, p);
    std::size_t count[6] = {};
    for (Mask m = 0; m < 16; ++m) {
      if (ip.in_module(Monomial{m})) ++count[std::popcount(m)];
    }
    CHECK(st.r == count[st.d]);
    CHECK(st.s == count[st.d + 1]);
    CHECK(st.q == count[st.d + 2]);
    CHECK(st.b.size() == st.s);
    CHECK(st.c.size() == st.q);
  }
}
