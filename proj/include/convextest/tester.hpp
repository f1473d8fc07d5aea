#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "convextest/convexity.hpp"
#include "convextest/params.hpp"
#include "convextest/point_set.hpp"
#include "convextest/sampler.hpp"

namespace convextest {

struct TrialRecord {
  int index = 0;
  Seed seed;
  SampleRecord sample;
  bool sample_convex = false;
};

struct Verdict {
  bool accept = false;
  // Reject => negative witness with ids in the original point set.
  std::optional<NegativeWitness> witness;
  // Convex+ accept => the certified subset (original ids, ascending).
  std::vector<Index> positive_certificate;
  std::vector<TrialRecord> trials;
};

// Far-rejection tester: `repetitions` independent s-samples, each tested
// exactly for convex position; any non-convex sample rejects with its
// witness mapped back to original ids. Guarantees: convex input is always
// accepted; epsilon-far input is rejected with probability >= 2/3.
Verdict convex_minus(const PointSet& ps, const Rational& epsilon, Seed seed,
                     int repetitions = 22);

// Close-acceptance procedure: one sample of size ceil(1/(6 eps)); accepts
// iff the sample is in convex position, in which case the sample is a
// certified convex subset. Guarantees: epsilon-close input (epsilon <=
// n^(delta-1)) is accepted with probability >= 2/3, and any accepted
// certificate has size >= OPT / (6 n^delta).
Verdict convex_plus(const PointSet& ps, const Rational& epsilon, Seed seed,
                    const Rational& delta = Rational(1, 10));

// cert_size / opt as an exact rational. Requires 1 <= cert_size <= opt;
// throws ConstraintError("opt >= 1" / "1 <= cert_size <= opt") otherwise.
Rational approximation_ratio(std::uint64_t cert_size, std::uint64_t opt);

// Exact test of cert/opt >= 1/(6 n^delta) for rational delta = p/q:
// equivalent to (6 cert)^q * n^p >= opt^q over big integers.
bool ratio_meets_guarantee(std::uint64_t cert_size, std::uint64_t opt,
                           std::uint64_t n, const Rational& delta);

}  // namespace convextest
