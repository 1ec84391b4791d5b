#pragma once

// Homogeneous bivariate polynomials over F_p and the GL_2(F_p) substitution
// action, used to certify the shallow sub-quotient kills.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ssred {

/// Homogeneous polynomial of degree d over F_p; coefficient c_j multiplies X^j Y^{d-j}.
class HPoly {
 public:
  HPoly(std::int64_t p, std::int64_t degree);  // zero polynomial
  HPoly(std::int64_t p, std::vector<std::int64_t> coeffs);

  static HPoly monomial(std::int64_t p, std::int64_t x_power, std::int64_t y_power, std::int64_t coeff = 1);
  /// aX + bY.
  static HPoly linear(std::int64_t p, std::int64_t a, std::int64_t b);

  std::int64_t prime() const noexcept { return p_; }
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }
  std::int64_t coeff(std::int64_t x_power) const;

  bool is_zero() const noexcept;
  /// Least / greatest j with c_j != 0; nullopt on the zero polynomial.
  std::optional<std::int64_t> min_x_degree() const;
  std::optional<std::int64_t> max_x_degree() const;

  HPoly operator+(const HPoly& o) const;
  HPoly operator-(const HPoly& o) const;
  HPoly operator-() const;
  HPoly operator*(const HPoly& o) const;
  HPoly scaled(std::int64_t k) const;
  HPoly pow(std::int64_t e) const;

  /// Exact division by X (resp. Y); throws not_polynomial on a nonzero remainder.
  HPoly divide_by_x() const;
  HPoly divide_by_y() const;

  std::int64_t evaluate(std::int64_t x, std::int64_t y) const;

  std::string str() const;

  friend bool operator==(const HPoly&, const HPoly&) = default;

 private:
  void check_compatible(const HPoly& o) const;

  std::int64_t p_;
  std::vector<std::int64_t> c_;
};

/// 2x2 matrix over F_p, rows (a b) and (c d).
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  std::int64_t det() const { return a * d - b * c; }
  Mat2 reduced(std::int64_t p) const;
};

/// Human-readable statement of the action convention used by act().
inline constexpr const char* kActionConvention = "(a b; c d) . f(X, Y) = f(aX + bY, cX + dY)";

/// Substitution action. (0 1; 1 -lambda) sends f(X, Y) to f(Y, X - lambda Y).
/// It is a right action: act(m1 * m2, f) == act(m2, act(m1, f)).
HPoly act(const Mat2& m, const HPoly& f);

/// Dickson polynomial X^p Y - X Y^p.
HPoly theta(std::int64_t p);

/// (X - lambda Y)^{r - i(p+1) + 1} theta^i / Y. Throws not_polynomial when
/// r < i(p+1) - 1.
HPoly shallow_summand(std::int64_t p, std::int64_t r, std::int64_t i, std::int64_t lambda);

/// Y^{r - i(p+1) + 1} (-theta)^i / X, whose image projects to a generator of
/// the (i-1)-th shallow sub-quotient.
HPoly shallow_generator(std::int64_t p, std::int64_t r, std::int64_t i);

/// X^{p-1} Y^{r-p+1} - Y^r.
HPoly first_shallow_poly(std::int64_t p, std::int64_t r);

/// Coefficient of Y^r in act((0 1; 1 -lambda), X^{p-1} Y^{r-p+1} - Y^r).
/// Zero for every lambda when r >= p; nonzero at lambda = 0 when r = p - 1.
std::int64_t pure_y_coefficient(std::int64_t p, std::int64_t r, std::int64_t lambda);

struct ShallowReport {
  std::int64_t p = 0, r = 0, i = 0;
  std::string action_convention = kActionConvention;
  std::int64_t generator_coefficient = 0;  ///< coefficient of X^{i-1} Y^{r-i+1} in f_i
  bool generator_is_unit = false;
  std::int64_t generator_min_x_degree = -1;
  /// min X-degree of the summand for lambda = 0..p-1 (-1 for the zero polynomial).
  std::vector<std::int64_t> summand_min_x_degree;
  /// act((0 1; 1 -lambda), f_i) agreed with the displayed summand for every lambda.
  bool action_matches_summand = false;
  /// i = 1, r >= p only: the Y^r coefficient cancels for every lambda.
  std::optional<bool> pure_y_cancels;
  bool passed = false;

  friend bool operator==(const ShallowReport&, const ShallowReport&) = default;
};

/// Certifies that the (i-1)-th shallow sub-quotient vanishes. Requires p >= 5,
/// i >= 1 and i(p+1) - 1 <= r <= p^2 - p - 1 (invalid_range otherwise).
ShallowReport shallow_kill_check(std::int64_t p, std::int64_t r, std::int64_t i);

}  // namespace ssred
