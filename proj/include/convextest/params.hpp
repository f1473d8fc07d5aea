#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "convextest/rational.hpp"

namespace convextest {

// Violation of a documented precondition. `constraint` is the exact text of
// the inequality (e.g. "epsilon <= (d-1)/(2d)"); the CLI surfaces it and
// exits with code 2.
class ConstraintError : public std::runtime_error {
 public:
  ConstraintError(std::string constraint, const std::string& detail)
      : std::runtime_error("constraint violated: " + constraint +
                           (detail.empty() ? "" : " (" + detail + ")")),
        constraint_(std::move(constraint)) {}

  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

// Sample-size schedule of the far-rejection tester.
//   k  = floor(eps * n / (d+1))          (disjoint witness count)
//   ell = d + 1                          (witness size)
//   s0 = ell + (n - ell) / (2k)^(1/ell)  (real-valued threshold)
//   s  = ceil(s0), certified exactly: s is the least integer with
//        2k (s - ell)^ell >= (n - ell)^ell, equivalently
//        k ((s-ell)/(n-ell))^ell >= 1/2.
struct FarParams {
  std::uint64_t n = 0;
  int d = 0;
  Rational epsilon;
  std::uint64_t k = 0;
  std::uint64_t ell = 0;
  std::uint64_t s = 0;
  BigFloat s0;          // high-precision value of the real threshold
  int repetitions = 22;
};

// Preconditions (each throws ConstraintError with the quoted name):
//   "n >= 2^10", "n >= 32(d+1)", "epsilon >= 10(d+1)/n",
//   "epsilon <= (d-1)/(2d)", "s <= n".
FarParams derive_far_params(std::uint64_t n, int d, const Rational& epsilon,
                            int repetitions = 22);

// Certificate-size schedule of the close-acceptance procedure:
//   s = ceil(1 / (6 eps)), one sample, certificate is the sample itself.
struct CloseParams {
  std::uint64_t n = 0;
  int d = 0;
  Rational epsilon;
  Rational delta;       // approximation exponent, default 1/10
  std::uint64_t s = 0;
};

// Preconditions: "n >= 1500", "epsilon >= 1/n", "epsilon <= n^(delta-1)",
// "0 < delta <= 1/2", "s <= n".
CloseParams derive_close_params(std::uint64_t n, int d, const Rational& epsilon,
                                const Rational& delta = Rational(1, 10));

// Least integer s in (ell, n] with 2k (s - ell)^ell >= (n - ell)^ell.
// Exposed for the lemma-3 oracles, which accept any s at or above it.
std::uint64_t minimal_far_sample_size(std::uint64_t n, std::uint64_t k,
                                      std::uint64_t ell);

// Exact test of s0 >= bound for rational `bound` (used to certify the
// s0 >= 3 ell log2 k property without floating point).
bool s0_at_least(std::uint64_t n, std::uint64_t k, std::uint64_t ell,
                 const Rational& bound);

}  // namespace convextest
