#include <doctest.h>

#include "oracles.hpp"
#include "ssred/error.hpp"
#include "ssred/lambda_solver.hpp"

using namespace ssred;

namespace {

/// lambda_0..lambda_n from the (n+1) x (n+1) system sum_i lambda_i i^j = top^j.
std::vector<Rational> gauss_lambda(std::int64_t p, std::int64_t b, std::int64_t n) {
  const std::int64_t top = (b + 1) * p;
  std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(n + 1));
  std::vector<Rational> rhs(n + 1);
  for (std::int64_t j = 0; j <= n; ++j) {
    Integer pw = 1;
    for (std::int64_t e = 0; e < j; ++e) pw *= top;
    rhs[j] = Rational(pw);
    for (std::int64_t i = 0; i <= n; ++i) {
      Integer v = 1;
      for (std::int64_t e = 0; e < j; ++e) v *= i;
      a[j][i] = Rational(v);
    }
  }
  return oracle::gauss_solve(a, rhs);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("worked lambda vectors") {
  const LambdaVector v = solve_lambda(5, 0, 3);
  CHECK(v.at(0) == -4);
  CHECK(v.at(1) == 15);
  CHECK(v.at(2) == -20);
  CHECK(v.at(3) == 10);
  CHECK(v.at(5) == -1);
  CHECK(v.index_set() == std::vector<std::int64_t>{0, 1, 2, 3, 5});

  const LambdaVector w = solve_lambda(5, 1, 6);
  CHECK(w.at(0) == 84);
  CHECK(w.at(5) == -1008);
  CHECK(w.at(10) == -1);
  CHECK(w.at(1) + w.at(6) == -350);
  CHECK(oracle::mod(Rational(w.at(1) + w.at(6)).get_num(), 25) == 0);
}

TEST_CASE("closed form") {
  CHECK(lambda_closed(5, 0, 3, 2) == -20);
  CHECK(lambda_closed(5, 1, 6, 0) == 84);
  CHECK(lambda_closed(5, 1, 6, 0) == oracle::pascal(9)[9][6]);
  CHECK(lambda_closed(5, 0, 3, 0) == solve_lambda(5, 0, 3).at(0));
}

TEST_CASE("solve agrees with Gaussian elimination on small systems") {
  for (std::int64_t p : {5, 7}) {
    for (std::int64_t b = 0; b <= 2; ++b) {
      for (std::int64_t n = b * p; n <= (b + 1) * p - 1; ++n) {
        const auto expect = gauss_lambda(p, b, n);
        const LambdaVector v = solve_lambda(p, b, n);
        for (std::int64_t i = 0; i <= n; ++i) REQUIRE(v.at(i) == expect[i]);
      }
    }
  }
}

TEST_CASE("bullets recomputed directly") {
  for (std::int64_t p : {5, 7}) {
    for (std::int64_t b = 0; b <= p - 2; ++b) {
      for (std::int64_t n = b * p; n <= (b + 1) * p - 1; ++n) {
        const LambdaVector v = solve_lambda(p, b, n);
        const std::int64_t top = (b + 1) * p;
        const auto idx = v.index_set();
        for (auto i : idx) REQUIRE(v.at(i).get_den() == 1);
        // Bullet one.
        for (std::int64_t j = 0; j <= n; ++j) {
          Integer sum = 0;
          for (auto i : idx) {
            Integer pw = 1;
            for (std::int64_t e = 0; e < j; ++e) pw *= i;
            sum += v.at(i).get_num() * pw;
          }
          REQUIRE(sum == 0);
        }
        // Bullets three and four.
        const auto rows = oracle::pascal(b + 1);
        for (auto i : idx) {
          const std::int64_t lam = oracle::mod(v.at(i).get_num(), p);
          if (i % p == 0) {
            const std::int64_t q = i / p;
            Integer expect = rows[b + 1][q];
            if ((b - q) % 2 != 0) expect = -expect;
            REQUIRE(lam == oracle::mod(expect, p));
          } else {
            REQUIRE(lam == 0);
          }
        }
        const BulletReport rep = verify_lambda(v);
        CHECK(rep.passed());
        CHECK(rep.top_is_minus_one);
        CHECK(rep.bullet_three_forms_agree);
        if (b >= 1) CHECK(rep.class_sums_mod_p2 == BulletStatus::pass);
        (void)top;
      }
    }
  }
}

TEST_CASE("bullet two at b = 0 is observed, not asserted") {
  const LambdaVector v = solve_lambda(5, 0, 3);
  const BulletReport rep = verify_lambda(v);
  CHECK(rep.class_sums_mod_p2 == BulletStatus::observed_fail);
  CHECK(rep.passed());
  bool found = false;
  for (const auto& w : rep.class_sum_failures) {
    if (w.a == 1 && w.j == 0) {
      found = true;
      CHECK(w.residue == 15);
    }
  }
  CHECK(found);
  CHECK(to_string(BulletStatus::observed_fail) == "observed-fail");
}

TEST_CASE("lambda domain errors") {
  CHECK(code_of([] { solve_lambda(5, 4, 20); }) == ErrorCode::unsupported_digit);
  CHECK(code_of([] { solve_lambda(5, 1, 4); }) == ErrorCode::invalid_window);
  CHECK(code_of([] { solve_lambda(6, 0, 3); }) == ErrorCode::invalid_prime);
  CHECK(code_of([] { solve_lambda(3, 0, 1); }) == ErrorCode::invalid_prime);
  CHECK(code_of([] { lambda_closed(5, 0, 3, 5); }) == ErrorCode::invalid_argument);
}

TEST_CASE("Vandermonde solver") {
  const std::vector<std::int64_t> nodes = {0, 1, 3};
  const std::vector<Rational> rhs = {Rational(1), Rational(4), Rational(16)};
  const auto x = solve_vandermonde(nodes, rhs);
  // sum_i x_i nodes_i^j = rhs_j
  for (std::size_t j = 0; j < 3; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      Rational pw = 1;
      for (std::size_t e = 0; e < j; ++e) pw *= nodes[i];
      s += x[i] * pw;
    }
    CHECK(s == rhs[j]);
  }
  const std::vector<std::int64_t> repeated = {1, 1};
  const std::vector<Rational> two = {Rational(1), Rational(1)};
  CHECK_THROWS_AS(solve_vandermonde(repeated, two), Error);
}
