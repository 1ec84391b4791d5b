#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ssred/error.hpp"
#include "ssred/fp_poly.hpp"

using namespace ssred;

namespace {

oracle::Poly2 to_oracle(const HPoly& f) {
  oracle::Poly2 out{f.prime(), {}};
  for (std::int64_t j = 0; j <= f.degree(); ++j) out.add(j, f.degree() - j, f.coeff(j));
  return out;
}

HPoly random_poly(std::mt19937_64& rng, std::int64_t p, std::int64_t degree) {
  std::uniform_int_distribution<std::int64_t> d(0, p - 1);
  std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = d(rng);
  return HPoly(p, c);
}

}  // namespace

TEST_CASE("theta") {
  const HPoly t = theta(5);
  CHECK(t.degree() == 6);
  CHECK(t.coeff(5) == 1);
  CHECK(t.coeff(1) == 4);
  CHECK(*t.min_x_degree() == 1);
  CHECK(*t.max_x_degree() == 5);
  CHECK(t.evaluate(1, 1) == 0);
}

TEST_CASE("degree bookkeeping") {
  const HPoly zero(5, 3);
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.min_x_degree().has_value());
  const HPoly m = HPoly::monomial(5, 2, 1, 3);
  CHECK(*m.min_x_degree() == 2);
  CHECK(m.divide_by_x() == HPoly::monomial(5, 1, 1, 3));
  CHECK(m.divide_by_y() == HPoly::monomial(5, 2, 0, 3));
  CHECK_THROWS_AS(HPoly::monomial(5, 0, 3).divide_by_x(), Error);
}

TEST_CASE("act matches direct substitution") {
  std::mt19937_64 rng(7);
  for (std::int64_t p : {5, 7}) {
    std::uniform_int_distribution<std::int64_t> d(0, p - 1);
    for (int k = 0; k < 60; ++k) {
      const HPoly f = random_poly(rng, p, 1 + k % 13);
      const Mat2 m{d(rng), d(rng), d(rng), d(rng)};
      const HPoly got = act(m, f);
      const auto expect = to_oracle(f).substitute(m.a, m.b, m.c, m.d);
      REQUIRE(to_oracle(got).c == expect.c);
    }
  }
}

TEST_CASE("act is a right action") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> d(0, 4);
  for (int k = 0; k < 200; ++k) {
    const HPoly f = random_poly(rng, 5, 1 + k % 17);
    const Mat2 m1{d(rng), d(rng), d(rng), d(rng)};
    const Mat2 m2{d(rng), d(rng), d(rng), d(rng)};
    REQUIRE(act(m1 * m2, f) == act(m2, act(m1, f)));
  }
  const HPoly f = random_poly(rng, 5, 9);
  CHECK(act(Mat2{}, f) == f);
}

TEST_CASE("theta transforms by the determinant over GL2(F_5)") {
  const HPoly t = theta(5);
  int count = 0;
  for (std::int64_t a = 0; a < 5; ++a)
    for (std::int64_t b = 0; b < 5; ++b)
      for (std::int64_t c = 0; c < 5; ++c)
        for (std::int64_t d = 0; d < 5; ++d) {
          const Mat2 m{a, b, c, d};
          if (((m.det() % 5) + 5) % 5 == 0) continue;
          ++count;
          REQUIRE(act(m, t) == t.scaled(m.det()));
        }
  CHECK(count == 480);
}

TEST_CASE("displayed computation for the first shallow polynomial") {
  for (std::int64_t r : {8, 9, 13}) {
    for (std::int64_t lambda = 0; lambda < 5; ++lambda) {
      const HPoly moved = act({0, 1, 1, -lambda}, first_shallow_poly(5, r));
      const HPoly shifted = HPoly::linear(5, 1, -lambda);
      CHECK(moved == HPoly::monomial(5, 0, 4) * shifted.pow(r - 4) - shifted.pow(r));
      CHECK(moved.coeff(0) == 0);
      CHECK(pure_y_coefficient(5, r, lambda) == 0);
    }
  }
}

TEST_CASE("r = p - 1 leaves the pure Y^r term at lambda = 0") {
  for (std::int64_t p : {5, 7, 11}) {
    CHECK(pure_y_coefficient(p, p - 1, 0) != 0);
    for (std::int64_t lambda = 1; lambda < p; ++lambda) CHECK(pure_y_coefficient(p, p - 1, lambda) == 0);
  }
}

TEST_CASE("shallow summands") {
  for (std::int64_t lambda = 0; lambda < 5; ++lambda) {
    const HPoly s = shallow_summand(5, 8, 1, lambda);
    const HPoly expect = HPoly::linear(5, 1, -lambda).pow(3) * (HPoly::monomial(5, 5, 0) - HPoly::monomial(5, 1, 4));
    CHECK(s == expect);
    CHECK(*s.min_x_degree() >= 1);
  }
  const HPoly s2 = shallow_summand(5, 14, 2, 0);
  CHECK(s2 == (HPoly::monomial(5, 3, 0) * theta(5).pow(2)).divide_by_y());
  CHECK(*s2.min_x_degree() >= 2);
  CHECK_THROWS_AS(shallow_summand(5, 4, 1, 0), Error);
}

TEST_CASE("shallow kill check examples") {
  const ShallowReport a = shallow_kill_check(5, 8, 1);
  CHECK(a.passed);
  CHECK(shallow_generator(5, 8, 1) == HPoly::monomial(5, 0, 8) - HPoly::monomial(5, 4, 4));
  CHECK(a.generator_coefficient == 1);
  CHECK(a.generator_min_x_degree == 0);
  CHECK(a.pure_y_cancels == true);
  CHECK(a.action_convention == kActionConvention);

  const ShallowReport b = shallow_kill_check(5, 14, 2);
  CHECK(b.passed);
  CHECK(b.summand_min_x_degree.size() == 5);
  CHECK_FALSE(b.pure_y_cancels.has_value());

  try {
    shallow_kill_check(5, 10, 2);
    FAIL("expected invalid-range");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_range);
  }
}

TEST_CASE("shallow kill check over the full range for p = 5, 7") {
  for (std::int64_t p : {5, 7}) {
    for (std::int64_t r = p; r <= p * p - p - 1; ++r) {
      for (std::int64_t i = 1; i <= r / p && i * (p + 1) - 1 <= r; ++i) REQUIRE(shallow_kill_check(p, r, i).passed);
    }
  }
}
