#include "convextest/params.hpp"

namespace convextest {

namespace {

// 2k (s - ell)^ell >= (n - ell)^ell over exact integers; this is the
// ceiling predicate behind s = ceil(s0).
bool sample_size_sufficient(std::uint64_t n, std::uint64_t k, std::uint64_t ell,
                            std::uint64_t s) {
  if (s <= ell) return false;
  const BigInt lhs = 2 * BigInt(k) * pow_bigint(BigInt(s - ell), ell);
  const BigInt rhs = pow_bigint(BigInt(n - ell), ell);
  return lhs >= rhs;
}

}  // namespace

std::uint64_t minimal_far_sample_size(std::uint64_t n, std::uint64_t k,
                                      std::uint64_t ell) {
  if (k == 0 || n <= ell) throw ConstraintError("k >= 1 and n > ell", "");
  // Float estimate of s0 = ell + (n-ell)/(2k)^(1/ell), then walk to the
  // exact ceiling with the integer predicate.
  const BigFloat root =
      boost::multiprecision::pow(BigFloat(2) * BigFloat(k), BigFloat(1) / BigFloat(ell));
  const BigFloat estimate = BigFloat(ell) + BigFloat(n - ell) / root;
  std::uint64_t s = estimate.convert_to<std::uint64_t>();
  if (s <= ell) s = ell + 1;
  while (!sample_size_sufficient(n, k, ell, s)) ++s;
  while (s > ell + 1 && sample_size_sufficient(n, k, ell, s - 1)) --s;
  return s;
}

bool s0_at_least(std::uint64_t n, std::uint64_t k, std::uint64_t ell,
                 const Rational& bound) {
  const Rational excess = bound - Rational(ell);
  if (excess <= 0) return true;
  // s0 >= bound  <=>  (n-ell)^ell >= (bound-ell)^ell * 2k   (all positive).
  if (n <= ell) return false;
  const Rational lhs(pow_bigint(BigInt(n - ell), ell));
  const Rational rhs = pow_rational(excess, ell) * 2 * BigInt(k);
  return lhs >= rhs;
}

FarParams derive_far_params(std::uint64_t n, int d, const Rational& epsilon,
                            int repetitions) {
  if (d < 1) throw ConstraintError("d >= 1", "d = " + std::to_string(d));
  if (epsilon <= 0)
    throw ConstraintError("epsilon > 0", rational_to_string(epsilon));
  if (repetitions < 1) throw ConstraintError("repetitions >= 1", "");
  if (n < 1024)
    throw ConstraintError("n >= 2^10", "n = " + std::to_string(n));
  const std::uint64_t ell = static_cast<std::uint64_t>(d) + 1;
  if (n < 32 * ell)
    throw ConstraintError("n >= 32(d+1)", "n = " + std::to_string(n));
  if (epsilon < Rational(10 * BigInt(ell), BigInt(n)))
    throw ConstraintError("epsilon >= 10(d+1)/n",
                          "epsilon = " + rational_to_string(epsilon));
  if (epsilon > Rational(BigInt(d) - 1, 2 * BigInt(d)))
    throw ConstraintError("epsilon <= (d-1)/(2d)",
                          "epsilon = " + rational_to_string(epsilon));

  FarParams params;
  params.n = n;
  params.d = d;
  params.epsilon = epsilon;
  params.ell = ell;
  params.k = floor_rational(epsilon * BigInt(n) / BigInt(ell))
                 .convert_to<std::uint64_t>();
  params.s = minimal_far_sample_size(n, params.k, ell);
  if (params.s > n)
    throw ConstraintError("s <= n", "s = " + std::to_string(params.s));
  const BigFloat root = boost::multiprecision::pow(
      BigFloat(2) * BigFloat(params.k), BigFloat(1) / BigFloat(ell));
  params.s0 = BigFloat(ell) + BigFloat(n - ell) / root;
  params.repetitions = repetitions;
  return params;
}

CloseParams derive_close_params(std::uint64_t n, int d, const Rational& epsilon,
                                const Rational& delta) {
  if (d < 2) throw ConstraintError("d >= 2", "d = " + std::to_string(d));
  if (delta <= 0 || delta > Rational(1, 2))
    throw ConstraintError("0 < delta <= 1/2", rational_to_string(delta));
  if (n < 1500)
    throw ConstraintError("n >= 1500", "n = " + std::to_string(n));
  if (epsilon < Rational(1, BigInt(n)))
    throw ConstraintError("epsilon >= 1/n",
                          "epsilon = " + rational_to_string(epsilon));
  // epsilon <= n^(delta-1)  <=>  epsilon^q * n^(q-p) <= 1 for delta = p/q.
  const auto p = numerator(delta).convert_to<unsigned long>();
  const auto q = denominator(delta).convert_to<unsigned long>();
  const Rational lhs = pow_rational(epsilon, q) * pow_bigint(BigInt(n), q - p);
  if (lhs > 1)
    throw ConstraintError("epsilon <= n^(delta-1)",
                          "epsilon = " + rational_to_string(epsilon));

  CloseParams params;
  params.n = n;
  params.d = d;
  params.epsilon = epsilon;
  params.delta = delta;
  params.s = ceil_rational(Rational(1) / (6 * epsilon)).convert_to<std::uint64_t>();
  if (params.s > n)
    throw ConstraintError("s <= n", "s = " + std::to_string(params.s));
  return params;
}

}  // namespace convextest
