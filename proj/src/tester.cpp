#include "convextest/tester.hpp"

#include <algorithm>

namespace convextest {

namespace {

// Lift a witness found inside a sampled sub-set back to the ids of the
// original point set. The sample indices are ascending, so the remap
// preserves the witness ordering invariants.
NegativeWitness remap_witness(const NegativeWitness& w,
                              const std::vector<Index>& sample_ids) {
  NegativeWitness out;
  out.interior_id = sample_ids[w.interior_id];
  out.ids.reserve(w.ids.size());
  for (Index id : w.ids) out.ids.push_back(sample_ids[id]);
  for (const auto& [id, coeff] : w.coefficients)
    out.coefficients.emplace_back(sample_ids[id], coeff);
  return out;
}

}  // namespace

Verdict convex_minus(const PointSet& ps, const Rational& epsilon, Seed seed,
                     int repetitions) {
  const FarParams params =
      derive_far_params(ps.size(), ps.dim(), epsilon, repetitions);

  Verdict verdict;
  for (int t = 0; t < params.repetitions; ++t) {
    TrialRecord trial;
    trial.index = t;
    trial.seed = split_seed(seed, static_cast<std::uint64_t>(t));
    trial.sample = random_subset(ps.size(), static_cast<std::uint32_t>(params.s),
                                 trial.seed);
    const PointSet sample_points = ps.subset(trial.sample.indices);
    const ConvexityResult result = convex_position_test(sample_points);
    trial.sample_convex = result.in_convex_position;
    verdict.trials.push_back(trial);
    if (!result.in_convex_position) {
      verdict.accept = false;
      verdict.witness = remap_witness(*result.witness,
                                      verdict.trials.back().sample.indices);
      return verdict;
    }
  }
  verdict.accept = true;
  return verdict;
}

Verdict convex_plus(const PointSet& ps, const Rational& epsilon, Seed seed,
                    const Rational& delta) {
  const CloseParams params =
      derive_close_params(ps.size(), ps.dim(), epsilon, delta);

  Verdict verdict;
  TrialRecord trial;
  trial.index = 0;
  trial.seed = split_seed(seed, 0);
  trial.sample = random_subset(ps.size(), static_cast<std::uint32_t>(params.s),
                               trial.seed);
  const PointSet sample_points = ps.subset(trial.sample.indices);
  const ConvexityResult result = convex_position_test(sample_points);
  trial.sample_convex = result.in_convex_position;
  verdict.trials.push_back(trial);

  if (result.in_convex_position) {
    verdict.accept = true;
    verdict.positive_certificate = verdict.trials.back().sample.indices;
  } else {
    verdict.accept = false;
    verdict.witness =
        remap_witness(*result.witness, verdict.trials.back().sample.indices);
  }
  return verdict;
}

Rational approximation_ratio(std::uint64_t cert_size, std::uint64_t opt) {
  if (opt < 1) throw ConstraintError("opt >= 1", "opt = 0");
  if (cert_size < 1 || cert_size > opt)
    throw ConstraintError("1 <= cert_size <= opt",
                          "cert_size = " + std::to_string(cert_size) +
                              ", opt = " + std::to_string(opt));
  return Rational(BigInt(cert_size), BigInt(opt));
}

bool ratio_meets_guarantee(std::uint64_t cert_size, std::uint64_t opt,
                           std::uint64_t n, const Rational& delta) {
  // cert/opt >= 1/(6 n^delta)  <=>  (6 cert)^q n^p >= opt^q for delta = p/q.
  const auto p = numerator(delta).convert_to<unsigned long>();
  const auto q = denominator(delta).convert_to<unsigned long>();
  const BigInt lhs = pow_bigint(6 * BigInt(cert_size), q) * pow_bigint(BigInt(n), p);
  const BigInt rhs = pow_bigint(BigInt(opt), q);
  return lhs >= rhs;
}

}  // namespace convextest
