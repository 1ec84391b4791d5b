#include "ssred/lambda_solver.hpp"

#include <string>

#include "ssred/error.hpp"

namespace ssred {

namespace {

void check_lambda_domain(std::int64_t p, std::int64_t b, std::int64_t n) {
  require_prime(p, 5);
  if (b < 0 || b > p - 2) {
    throw Error(ErrorCode::unsupported_digit, "b = " + std::to_string(b) + " outside [0, p-2]");
  }
  if (n < b * p || n > (b + 1) * p - 1) {
    throw Error(ErrorCode::invalid_window,
                "n = " + std::to_string(n) + " outside [bp, (b+1)p-1] = [" + std::to_string(b * p) + ", " +
                    std::to_string((b + 1) * p - 1) + "]");
  }
}

}  // namespace

std::vector<std::int64_t> LambdaVector::index_set() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(n) + 2);
  for (std::int64_t i = 0; i <= n; ++i) out.push_back(i);
  out.push_back(top_node());
  return out;
}

Rational LambdaVector::at(std::int64_t i) const {
  if (i == top_node()) return Rational(-1);
  if (i < 0 || i > n) throw Error(ErrorCode::invalid_argument, "index " + std::to_string(i) + " not in I");
  return entries[static_cast<std::size_t>(i)];
}

std::vector<Rational> solve_vandermonde(std::span<const std::int64_t> nodes, std::span<const Rational> rhs) {
  if (nodes.size() != rhs.size() || nodes.empty()) {
    throw Error(ErrorCode::invalid_argument, "Vandermonde system must be square and nonempty");
  }
  const std::size_t n = nodes.size() - 1;
  std::vector<Rational> x(rhs.begin(), rhs.end());
  // Forward sweep: divided differences of the right-hand side.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = n; i > k; --i) x[i] -= nodes[k] * x[i - 1];
  }
  // Backward sweep: undo the bidiagonal factors of the inverse.
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t i = k + 1; i <= n; ++i) {
      const std::int64_t gap = nodes[i] - nodes[i - k - 1];
      if (gap == 0) throw Error(ErrorCode::invalid_argument, "Vandermonde nodes are not distinct");
      x[i] /= gap;
    }
    for (std::size_t i = k; i < n; ++i) x[i] -= x[i + 1];
  }
  for (auto& v : x) v.canonicalize();
  return x;
}

LambdaVector solve_lambda(std::int64_t p, std::int64_t b, std::int64_t n) {
  check_lambda_domain(p, b, n);
  const std::int64_t top = (b + 1) * p;
  std::vector<std::int64_t> nodes;
  std::vector<Rational> rhs;
  Integer power = 1;
  for (std::int64_t j = 0; j <= n; ++j) {
    nodes.push_back(j);
    rhs.emplace_back(power);
    power *= top;
  }
  LambdaVector v{p, b, n, solve_vandermonde(nodes, rhs)};

  BulletReport report = verify_lambda(v);
  if (!report.integral || report.exact_vanishing != BulletStatus::pass) {
    throw Error(ErrorCode::invalid_argument, "lambda solve failed exact verification");
  }
  return v;
}

Rational lambda_closed(std::int64_t p, std::int64_t b, std::int64_t n, std::int64_t i) {
  check_lambda_domain(p, b, n);
  if (i < 0 || i > n) throw Error(ErrorCode::invalid_argument, "closed form needs 0 <= i <= n");
  const std::int64_t top = (b + 1) * p;
  Rational out = make_rational(top * binom(top - 1, n) * binom(n, i), top - i);
  if ((n - i) % 2 != 0) out = -out;
  return out;
}

std::string_view to_string(BulletStatus s) noexcept {
  switch (s) {
    case BulletStatus::pass: return "pass";
    case BulletStatus::fail: return "fail";
    case BulletStatus::observed_pass: return "observed-pass";
    case BulletStatus::observed_fail: return "observed-fail";
  }
  return "unknown";
}

bool BulletReport::passed() const {
  auto ok = [](BulletStatus s) { return s != BulletStatus::fail; };
  return integral && top_is_minus_one && ok(exact_vanishing) && ok(class_sums_mod_p2) && ok(multiples_of_p) &&
         ok(non_multiples) && bullet_three_forms_agree;
}

BulletReport verify_lambda(const LambdaVector& v) {
  BulletReport rep;
  rep.p = v.p;
  rep.b = v.b;
  rep.n = v.n;
  const std::int64_t p = v.p;
  const std::int64_t p2 = p * p;
  const auto nodes = v.index_set();

  rep.top_is_minus_one = v.at(v.top_node()) == -1;
  rep.integral = v.entries.size() == static_cast<std::size_t>(v.n) + 1;
  for (const auto& l : v.entries) rep.integral = rep.integral && l.get_den() == 1;
  if (!rep.integral) return rep;

  // Bullet one: exact vanishing of every power sum up to degree n.
  std::vector<Integer> weighted;  // lambda_i * i^j, advanced one j at a time
  for (auto i : nodes) weighted.push_back(v.at(i).get_num());
  bool vanish = true;
  for (std::int64_t j = 0; j <= v.n && vanish; ++j) {
    Integer sum = 0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      sum += weighted[k];
      weighted[k] *= nodes[k];
    }
    vanish = sum == 0;
  }
  rep.exact_vanishing = vanish ? BulletStatus::pass : BulletStatus::fail;

  // Bullet two: residue-class sums vanish mod p^2.
  std::vector<std::int64_t> lam_mod;
  for (auto i : nodes) lam_mod.push_back(residue(v.at(i), p2));
  bool classes_ok = true;
  for (std::int64_t a = 0; a < p; ++a) {
    std::vector<std::int64_t> term;  // lambda_i * i^j mod p^2 for i = a mod p
    std::vector<std::int64_t> node_mod;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (nodes[k] % p == a) {
        term.push_back(lam_mod[k]);
        node_mod.push_back(nodes[k] % p2);
      }
    }
    for (std::int64_t j = 0; j <= v.n; ++j) {
      std::int64_t sum = 0;
      for (std::size_t k = 0; k < term.size(); ++k) {
        sum = (sum + term[k]) % p2;
        term[k] = term[k] * node_mod[k] % p2;
      }
      if (sum != 0) {
        classes_ok = false;
        rep.class_sum_failures.push_back({a, j, sum});
      }
    }
  }
  // The cancellation behind this bullet needs b >= 1; at b = 0 it is only observed.
  if (v.b >= 1) {
    rep.class_sums_mod_p2 = classes_ok ? BulletStatus::pass : BulletStatus::fail;
  } else {
    rep.class_sums_mod_p2 = classes_ok ? BulletStatus::observed_pass : BulletStatus::observed_fail;
  }

  // Bullets three and four: values mod p.
  bool three = true;
  bool four = true;
  bool forms_agree = true;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const std::int64_t i = nodes[k];
    const std::int64_t lam = lam_mod[k] % p;
    const std::int64_t alt = residue(Integer(Integer((v.b * p - i) % 2 == 0 ? 1 : -1) * binom(v.top_node(), i)), p);
    if (i % p == 0) {
      const std::int64_t q = i / p;
      const std::int64_t expect = residue(Integer(Integer((v.b - q) % 2 == 0 ? 1 : -1) * binom(v.b + 1, q)), p);
      three = three && lam == expect;
      forms_agree = forms_agree && expect == alt;
    } else {
      four = four && lam == 0;
      forms_agree = forms_agree && alt == 0;
    }
  }
  rep.multiples_of_p = three ? BulletStatus::pass : BulletStatus::fail;
  rep.non_multiples = four ? BulletStatus::pass : BulletStatus::fail;
  rep.bullet_three_forms_agree = forms_agree;
  return rep;
}

}  // namespace ssred
