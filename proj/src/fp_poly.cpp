#include "ssred/fp_poly.hpp"

#include <sstream>

#include "ssred/error.hpp"
#include "ssred/exactnum.hpp"

namespace ssred {

HPoly::HPoly(std::int64_t p, std::int64_t degree) : p_(p) {
  if (degree < 0) throw Error(ErrorCode::not_polynomial, "negative degree");
  c_.assign(static_cast<std::size_t>(degree) + 1, 0);
}

HPoly::HPoly(std::int64_t p, std::vector<std::int64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (c_.empty()) throw Error(ErrorCode::not_polynomial, "empty coefficient sequence");
  for (auto& v : c_) v = mod_floor(v, p_);
}

HPoly HPoly::monomial(std::int64_t p, std::int64_t x_power, std::int64_t y_power, std::int64_t coeff) {
  if (x_power < 0 || y_power < 0) throw Error(ErrorCode::not_polynomial, "negative exponent");
  HPoly out(p, x_power + y_power);
  out.c_[x_power] = mod_floor(coeff, p);
  return out;
}

HPoly HPoly::linear(std::int64_t p, std::int64_t a, std::int64_t b) { return HPoly(p, {b, a}); }

std::int64_t HPoly::coeff(std::int64_t x_power) const {
  if (x_power < 0 || x_power > degree()) return 0;
  return c_[x_power];
}

bool HPoly::is_zero() const noexcept {
  for (auto v : c_) {
    if (v != 0) return false;
  }
  return true;
}

std::optional<std::int64_t> HPoly::min_x_degree() const {
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] != 0) return static_cast<std::int64_t>(j);
  }
  return std::nullopt;
}

std::optional<std::int64_t> HPoly::max_x_degree() const {
  for (std::size_t j = c_.size(); j-- > 0;) {
    if (c_[j] != 0) return static_cast<std::int64_t>(j);
  }
  return std::nullopt;
}

void HPoly::check_compatible(const HPoly& o) const {
  if (p_ != o.p_) throw Error(ErrorCode::invalid_argument, "polynomials over different primes");
}

HPoly HPoly::operator+(const HPoly& o) const {
  check_compatible(o);
  if (degree() != o.degree()) throw Error(ErrorCode::not_polynomial, "sum of polynomials of different degrees");
  HPoly out = *this;
  for (std::size_t j = 0; j < c_.size(); ++j) out.c_[j] = (out.c_[j] + o.c_[j]) % p_;
  return out;
}

HPoly HPoly::operator-() const { return scaled(-1); }

HPoly HPoly::operator-(const HPoly& o) const { return *this + (-o); }

HPoly HPoly::operator*(const HPoly& o) const {
  check_compatible(o);
  HPoly out(p_, degree() + o.degree());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      out.c_[i + j] = (out.c_[i + j] + c_[i] * o.c_[j]) % p_;
    }
  }
  return out;
}

HPoly HPoly::scaled(std::int64_t k) const {
  HPoly out = *this;
  k = mod_floor(k, p_);
  for (auto& v : out.c_) v = v * k % p_;
  return out;
}

HPoly HPoly::pow(std::int64_t e) const {
  if (e < 0) throw Error(ErrorCode::not_polynomial, "negative power");
  HPoly out = monomial(p_, 0, 0, 1);
  HPoly base = *this;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

HPoly HPoly::divide_by_x() const {
  if (c_[0] != 0 || degree() == 0) throw Error(ErrorCode::not_polynomial, "not divisible by X: " + str());
  return HPoly(p_, std::vector<std::int64_t>(c_.begin() + 1, c_.end()));
}

HPoly HPoly::divide_by_y() const {
  if (c_.back() != 0 || degree() == 0) throw Error(ErrorCode::not_polynomial, "not divisible by Y: " + str());
  return HPoly(p_, std::vector<std::int64_t>(c_.begin(), c_.end() - 1));
}

std::int64_t HPoly::evaluate(std::int64_t x, std::int64_t y) const {
  x = mod_floor(x, p_);
  y = mod_floor(y, p_);
  const std::int64_t d = degree();
  std::int64_t total = 0;
  for (std::int64_t j = 0; j <= d; ++j) {
    std::int64_t term = c_[j];
    for (std::int64_t k = 0; k < j; ++k) term = term * x % p_;
    for (std::int64_t k = 0; k < d - j; ++k) term = term * y % p_;
    total = (total + term) % p_;
  }
  return total;
}

std::string HPoly::str() const {
  std::ostringstream os;
  bool first = true;
  const std::int64_t d = degree();
  for (std::int64_t j = d; j >= 0; --j) {
    if (c_[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[j];
    if (j > 0) os << "*X^" << j;
    if (d - j > 0) os << "*Y^" << (d - j);
  }
  if (first) os << "0";
  return os.str();
}

Mat2 Mat2::reduced(std::int64_t p) const {
  return {mod_floor(a, p), mod_floor(b, p), mod_floor(c, p), mod_floor(d, p)};
}

HPoly act(const Mat2& m0, const HPoly& f) {
  const std::int64_t p = f.prime();
  const std::int64_t d = f.degree();
  const Mat2 m = m0.reduced(p);
  const HPoly new_x = HPoly::linear(p, m.a, m.b);
  const HPoly new_y = HPoly::linear(p, m.c, m.d);

  std::vector<HPoly> x_pows{HPoly::monomial(p, 0, 0)};
  std::vector<HPoly> y_pows{HPoly::monomial(p, 0, 0)};
  for (std::int64_t k = 1; k <= d; ++k) {
    x_pows.push_back(x_pows.back() * new_x);
    y_pows.push_back(y_pows.back() * new_y);
  }
  HPoly out(p, d);
  for (std::int64_t j = 0; j <= d; ++j) {
    if (f.coeff(j) == 0) continue;
    out = out + (x_pows[j] * y_pows[d - j]).scaled(f.coeff(j));
  }
  return out;
}

HPoly theta(std::int64_t p) {
  if (p < 2) throw Error(ErrorCode::invalid_prime, "theta needs p >= 2");
  return HPoly::monomial(p, p, 1) - HPoly::monomial(p, 1, p);
}

HPoly shallow_summand(std::int64_t p, std::int64_t r, std::int64_t i, std::int64_t lambda) {
  const std::int64_t e = r - i * (p + 1) + 1;
  if (i < 1 || e < 0) {
    throw Error(ErrorCode::not_polynomial,
                "r = " + std::to_string(r) + " below i(p+1) - 1 = " + std::to_string(i * (p + 1) - 1));
  }
  return (HPoly::linear(p, 1, -lambda).pow(e) * theta(p).pow(i)).divide_by_y();
}

HPoly shallow_generator(std::int64_t p, std::int64_t r, std::int64_t i) {
  const std::int64_t e = r - i * (p + 1) + 1;
  if (i < 1 || e < 0) {
    throw Error(ErrorCode::not_polynomial,
                "r = " + std::to_string(r) + " below i(p+1) - 1 = " + std::to_string(i * (p + 1) - 1));
  }
  return (HPoly::monomial(p, 0, e) * (-theta(p)).pow(i)).divide_by_x();
}

HPoly first_shallow_poly(std::int64_t p, std::int64_t r) {
  if (r < p - 1) throw Error(ErrorCode::not_polynomial, "X^{p-1} Y^{r-p+1} needs r >= p - 1");
  return HPoly::monomial(p, p - 1, r - p + 1) - HPoly::monomial(p, 0, r);
}

namespace {

Mat2 lambda_matrix(std::int64_t lambda) { return {0, 1, 1, -lambda}; }

}  // namespace

std::int64_t pure_y_coefficient(std::int64_t p, std::int64_t r, std::int64_t lambda) {
  return act(lambda_matrix(lambda), first_shallow_poly(p, r)).coeff(0);
}

ShallowReport shallow_kill_check(std::int64_t p, std::int64_t r, std::int64_t i) {
  require_prime(p, 5);
  if (i < 1 || r < i * (p + 1) - 1 || r > p * p - p - 1) {
    throw Error(ErrorCode::invalid_range, "shallow check needs i >= 1 and i(p+1)-1 <= r <= p^2-p-1 (p=" +
                                              std::to_string(p) + ", r=" + std::to_string(r) +
                                              ", i=" + std::to_string(i) + ")");
  }
  ShallowReport rep;
  rep.p = p;
  rep.r = r;
  rep.i = i;

  const HPoly f = shallow_generator(p, r, i);
  rep.generator_coefficient = f.coeff(i - 1);
  rep.generator_is_unit = rep.generator_coefficient != 0;
  rep.generator_min_x_degree = f.min_x_degree().value_or(-1);

  bool summands_deep = true;
  rep.action_matches_summand = true;
  for (std::int64_t lambda = 0; lambda < p; ++lambda) {
    const HPoly via_action = act(lambda_matrix(lambda), f);
    const HPoly displayed = shallow_summand(p, r, i, lambda);
    rep.action_matches_summand = rep.action_matches_summand && via_action == displayed;
    const std::int64_t lowest = displayed.min_x_degree().value_or(-1);
    rep.summand_min_x_degree.push_back(lowest);
    summands_deep = summands_deep && (lowest == -1 || lowest >= i);
  }

  if (i == 1 && r >= p) {
    bool cancels = true;
    const HPoly base = first_shallow_poly(p, r);
    for (std::int64_t lambda = 0; lambda < p; ++lambda) {
      const HPoly moved = act(lambda_matrix(lambda), base);
      const HPoly y_pow = HPoly::monomial(p, 0, p - 1);
      const HPoly shifted = HPoly::linear(p, 1, -lambda);
      const HPoly displayed = y_pow * shifted.pow(r - p + 1) - shifted.pow(r);
      cancels = cancels && moved == displayed && moved.coeff(0) == 0;
    }
    rep.pure_y_cancels = cancels;
  }

  rep.passed = rep.generator_is_unit && rep.generator_min_x_degree == i - 1 && summands_deep &&
               rep.action_matches_summand && rep.pure_y_cancels.value_or(true);
  return rep;
}

}  // namespace ssred
