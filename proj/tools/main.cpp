// convextest: property testing of convex position with exact certificates.
//
// Exit codes are the decision channel: 0 = accept / property holds,
// 1 = reject / property fails, 2 = usage or constraint error (the message
// on stderr names the violated constraint). With --batch N, one JSON record
// is printed per line; the exit code is 0 when every run accepted, 1 when
// any run rejected.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "convextest/generators.hpp"
#include "convextest/io.hpp"
#include "convextest/oracles.hpp"
#include "convextest/params.hpp"
#include "convextest/tester.hpp"

namespace {

using namespace convextest;

std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t seed_flag) {
  if (seed_opt->count() > 0) return seed_flag;
  if (const char* env = std::getenv("CONVEXTEST_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ConstraintError("CONVEXTEST_SEED is a 64-bit unsigned integer",
                            std::string("value '") + env + "'");
    }
  }
  return 0;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

// Runs `count` independent tester invocations with seeds split from the
// master seed, printing one record per line in order. Workers only read the
// shared point set. Returns 0 when every run accepted, 1 otherwise.
int run_batch(std::uint64_t master, std::uint64_t count, int jobs,
              const std::function<ResultRecord(Seed)>& one_run) {
  std::vector<ResultRecord> records(count);
  if (jobs < 2 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i)
      records[i] = one_run(split_seed(Seed{master}, i));
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> workers;
    const int active = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), count));
    for (int w = 0; w < active; ++w)
      workers.emplace_back([&] {
        while (true) {
          const std::uint64_t i = next.fetch_add(1);
          if (i >= count) return;
          records[i] = one_run(split_seed(Seed{master}, i));
        }
      });
    for (auto& t : workers) t.join();
  }
  bool any_reject = false;
  for (const ResultRecord& r : records) {
    std::cout << result_record_to_json(r) << "\n";
    any_reject = any_reject || !r.verdict.accept;
  }
  return any_reject ? 1 : 0;
}

int cmd_test_far(const std::string& path, const Rational& epsilon,
                 std::uint64_t seed, int reps, std::uint64_t batch, int jobs) {
  const PointSet ps = read_point_set_file(path);
  const FarParams params = derive_far_params(ps.size(), ps.dim(), epsilon, reps);

  const auto one_run = [&](Seed s) {
    const auto start = std::chrono::steady_clock::now();
    ResultRecord r;
    r.command = "test-far";
    r.n = params.n;
    r.d = params.d;
    r.epsilon = epsilon;
    r.k = params.k;
    r.ell = params.ell;
    r.s = params.s;
    r.repetitions = params.repetitions;
    r.seed = s.value;
    r.verdict = convex_minus(ps, epsilon, s, reps);
    r.wall_ms = elapsed_ms(start);
    return r;
  };

  if (batch > 0) return run_batch(seed, batch, jobs, one_run);

  const ResultRecord r = one_run(Seed{seed});
  std::cout << result_record_to_json(r) << "\n";
  return r.verdict.accept ? 0 : 1;
}

int cmd_test_close(const std::string& path, const Rational& epsilon,
                   const Rational& delta, std::uint64_t seed,
                   std::uint64_t batch, int jobs) {
  const PointSet ps = read_point_set_file(path);
  const CloseParams params = derive_close_params(ps.size(), ps.dim(), epsilon, delta);

  const auto one_run = [&](Seed s) {
    const auto start = std::chrono::steady_clock::now();
    ResultRecord r;
    r.command = "test-close";
    r.n = params.n;
    r.d = params.d;
    r.epsilon = epsilon;
    r.delta = delta;
    r.k = 0;
    r.ell = 0;
    r.s = params.s;
    r.repetitions = 1;
    r.seed = s.value;
    r.verdict = convex_plus(ps, epsilon, s, delta);
    r.wall_ms = elapsed_ms(start);
    return r;
  };

  if (batch > 0) return run_batch(seed, batch, jobs, one_run);

  const ResultRecord r = one_run(Seed{seed});
  std::cout << result_record_to_json(r) << "\n";
  return r.verdict.accept ? 0 : 1;
}

int cmd_gen(const std::string& kind, std::uint64_t n, int d,
            const Rational& epsilon, std::uint64_t seed,
            const std::string& out_path) {
  GenSpec spec;
  spec.n = n;
  spec.d = d;
  spec.epsilon = epsilon;
  spec.seed = Seed{seed};
  if (kind == "convex")
    spec.kind = GenKind::kConvex;
  else if (kind == "sawtooth")
    spec.kind = GenKind::kSawtooth;
  else if (kind == "close")
    spec.kind = GenKind::kClose;
  else if (kind == "triangle-centroid")
    spec.kind = GenKind::kTriangleCentroid;
  else
    throw ConstraintError("kind in {convex, sawtooth, close, triangle-centroid}",
                          "kind = " + kind);

  const GeneratedInstance inst = generate(spec);
  const std::string comment =
      kind + " n=" + std::to_string(inst.points.size()) +
      " d=" + std::to_string(inst.points.dim()) + " seed=" + std::to_string(seed);
  if (out_path == "-")
    write_point_set(std::cout, inst.points, comment);
  else
    write_point_set_file(out_path, inst.points, comment);

  std::cout << "{\"kind\":\"" << kind << "\",\"n\":" << inst.points.size()
            << ",\"d\":" << inst.points.dim() << ",\"tag\":\"" << inst.tag
            << "\",\"out\":\"" << (out_path == "-" ? "stdout" : out_path)
            << "\"}\n";
  return 0;
}

int cmd_oracle(const std::string& path, const std::string& mode, Index budget) {
  const PointSet ps = read_point_set_file(path);
  if (mode == "convex") {
    const ConvexityResult res = convex_position_test(ps);
    std::cout << "{\"mode\":\"convex\",\"in_convex_position\":"
              << (res.in_convex_position ? "true" : "false");
    if (res.witness) {
      std::cout << ",\"interior_id\":" << res.witness->interior_id << ",\"ids\":[";
      for (std::size_t i = 0; i < res.witness->ids.size(); ++i)
        std::cout << (i ? "," : "") << res.witness->ids[i];
      std::cout << "]";
    }
    std::cout << "}\n";
    return res.in_convex_position ? 0 : 1;
  }
  if (mode == "min-removal") {
    const FarnessCertificate cert = min_removal_to_convex(ps, budget);
    std::cout << "{\"mode\":\"min-removal\",\"min_removal\":" << cert.min_removal
              << ",\"removed_ids\":[";
    for (std::size_t i = 0; i < cert.removed_ids.size(); ++i)
      std::cout << (i ? "," : "") << cert.removed_ids[i];
    std::cout << "]}\n";
    return 0;
  }
  if (mode == "max-subset-2d") {
    const MaxConvexSubset best = max_convex_subset_2d(ps);
    std::cout << "{\"mode\":\"max-subset-2d\",\"size\":" << best.size
              << ",\"ids\":[";
    for (std::size_t i = 0; i < best.ids.size(); ++i)
      std::cout << (i ? "," : "") << best.ids[i];
    std::cout << "]}\n";
    return 0;
  }
  throw ConstraintError("mode in {convex, min-removal, max-subset-2d}",
                        "mode = " + mode);
}

int cmd_verify_lemma3(std::uint64_t n, std::uint64_t k, std::uint64_t ell,
                      std::uint64_t s, std::uint64_t trials, std::uint64_t seed,
                      bool appendix) {
  if (appendix) {
    const OldBoundReport rep = old_lemma34_counterexample();
    std::cout << "{\"n\":" << rep.n << ",\"k\":" << rep.k << ",\"ell\":" << rep.ell
              << ",\"s_old\":" << rep.s_old << ",\"s_old_exceeds_n\":"
              << (rep.s_old_exceeds_n ? "true" : "false")
              << ",\"s_fixed\":" << rep.s_fixed << ",\"factor1\":\""
              << rational_to_string(rep.factor1) << "\",\"factor1_approx\":"
              << rational_to_double(rep.factor1) << ",\"factor2_old\":\""
              << rational_to_string(rep.factor2_old) << "\",\"factor2_old_approx\":"
              << rational_to_double(rep.factor2_old)
              << ",\"product_below_quarter\":"
              << (rep.product_below_quarter ? "true" : "false") << "}\n";
    return 0;
  }
  if (s == 0) s = minimal_far_sample_size(n, k, ell);
  const LemmaScenario scenario = make_lemma_scenario(n, k, ell, s);
  const BoundFactors factors = lemma3_factors(scenario);
  const MonteCarloEstimate est = lemma3_monte_carlo(scenario, trials, Seed{seed});
  const Rational bound = factors.factor1 * factors.factor2;
  std::cout << "{\"n\":" << n << ",\"k\":" << k << ",\"ell\":" << ell
            << ",\"s\":" << s << ",\"factor1\":\""
            << rational_to_string(factors.factor1) << "\",\"factor1_approx\":"
            << rational_to_double(factors.factor1) << ",\"factor2\":\""
            << rational_to_string(factors.factor2) << "\",\"factor2_approx\":"
            << rational_to_double(factors.factor2) << ",\"bound_approx\":"
            << rational_to_double(bound) << ",\"trials\":" << est.trials
            << ",\"hits\":" << est.hits << ",\"empirical\":" << est.fraction
            << "}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized property testing of convex position in R^d"};
  app.require_subcommand(1);

  std::string file, out_path = "-", kind, mode = "convex";
  std::string epsilon_text, delta_text = "1/10";
  std::uint64_t seed = 0, batch = 0, n = 0, k = 0, ell = 0, s = 0, trials = 10000;
  int reps = 22, jobs = 1, d = 2;
  Index budget = 24;
  bool appendix = false;

  auto* far = app.add_subcommand("test-far",
                                 "Reject epsilon-far sets w.p. >= 2/3 (Convex-)");
  far->add_option("file", file, "PointSetFile input")->required();
  far->add_option("--epsilon", epsilon_text, "distance parameter (rational)")
      ->required();
  auto* far_seed = far->add_option("--seed", seed, "master seed (64-bit)");
  far->add_option("--reps", reps, "independent sample repetitions")
      ->default_val(22);
  far->add_option("--batch", batch, "run N times with split seeds, JSONL out");
  far->add_option("--jobs", jobs, "worker threads for --batch")->default_val(1);

  auto* close = app.add_subcommand(
      "test-close", "Accept epsilon-close sets w.p. >= 2/3 (Convex+)");
  close->add_option("file", file, "PointSetFile input")->required();
  close->add_option("--epsilon", epsilon_text, "distance parameter (rational)")
      ->required();
  close->add_option("--delta", delta_text, "approximation exponent (rational)")
      ->default_val("1/10");
  auto* close_seed = close->add_option("--seed", seed, "master seed (64-bit)");
  close->add_option("--batch", batch, "run N times with split seeds, JSONL out");
  close->add_option("--jobs", jobs, "worker threads for --batch")->default_val(1);

  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  gen->add_option("kind", kind,
                  "convex | sawtooth | close | triangle-centroid")
      ->required();
  gen->add_option("--n", n, "number of points");
  gen->add_option("--d", d, "dimension")->default_val(2);
  gen->add_option("--epsilon", epsilon_text, "closeness (kind=close)");
  auto* gen_seed = gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--out", out_path, "output path ('-' = stdout)")
      ->default_val("-");

  auto* oracle = app.add_subcommand("oracle", "Exact ground-truth oracles");
  oracle->add_option("file", file, "PointSetFile input")->required();
  oracle->add_option("--mode", mode, "convex | min-removal | max-subset-2d")
      ->default_val("convex");
  oracle->add_option("--budget", budget, "max n for min-removal")
      ->default_val(24);

  auto* lemma = app.add_subcommand("verify-lemma3",
                                   "Exact factors and Monte Carlo for lemma 3");
  lemma->add_option("--n", n, "universe size");
  lemma->add_option("--k", k, "witness count");
  lemma->add_option("--ell", ell, "witness size");
  lemma->add_option("--s", s, "sample size (0: minimal certified)");
  lemma->add_option("--trials", trials, "Monte Carlo trials")->default_val(10000);
  auto* lemma_seed = lemma->add_option("--seed", seed, "Monte Carlo seed");
  lemma->add_flag("--appendix", appendix,
                  "report the (256, 8, 8) counterexample instead");

  CLI11_PARSE(app, argc, argv);

  try {
    if (far->parsed()) {
      return cmd_test_far(file, parse_rational(epsilon_text),
                          resolve_seed(far_seed, seed), reps, batch, jobs);
    }
    if (close->parsed()) {
      return cmd_test_close(file, parse_rational(epsilon_text),
                            parse_rational(delta_text),
                            resolve_seed(close_seed, seed), batch, jobs);
    }
    if (gen->parsed()) {
      const Rational eps =
          epsilon_text.empty() ? Rational(0) : parse_rational(epsilon_text);
      return cmd_gen(kind, n, d, eps, resolve_seed(gen_seed, seed), out_path);
    }
    if (oracle->parsed()) return cmd_oracle(file, mode, budget);
    if (lemma->parsed()) {
      if (!appendix && (n == 0 || k == 0 || ell == 0))
        throw ConstraintError("--n, --k, --ell required", "");
      return cmd_verify_lemma3(n, k, ell, s, trials,
                               resolve_seed(lemma_seed, seed), appendix);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConstraintError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
