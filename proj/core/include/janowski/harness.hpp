#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "janowski/bounds.hpp"
#include "janowski/inversion.hpp"
#include "janowski/serialize.hpp"
#include "janowski/starlike.hpp"

namespace janowski {

enum class Backend { exact, floating };
enum class Corpus { sampled, extremal };

struct CampaignConfig {
  int trials = 200;
  int order = 12;
  std::vector<Rational> lambda_grid = {Rational(1, 2), Rational(1),
                                       Rational(3, 2), Rational(2),
                                       Rational(3), Rational(7, 2)};
  int index_max = 8;
  std::uint64_t seed = 1;
  Backend backend = Backend::exact;
  Corpus corpus = Corpus::sampled;
  std::vector<JanowskiParams> parameter_grid = {
      {Rational(1), Rational(-1)}, {Rational(1), Rational(0)},
      {Rational(1, 2), Rational(-1, 2)}, {Rational(3, 4), Rational(-1, 4)},
      {Rational(1), Rational(-1, 3)}, {Rational(1, 3), Rational(-2, 3)}};

  void validate() const {
    if (trials < 0) throw InvalidParams("trials must be >= 0");
    if (index_max < 1) throw InvalidIndex("index_max must be >= 1");
    if (order < index_max + 2)
      throw InvalidParams("order must be >= index_max + 2");
    if (parameter_grid.empty())
      throw InvalidParams("parameter grid must be nonempty");
  }
};

/// One sampled trial against one bound; margin = bound - |coefficient|.
struct VerificationRecord {
  int trial_id = 0;
  std::uint64_t seed = 0;
  std::string A, B;
  std::string schwarz;
  std::string lambda_or_index;
  long coefficient_index = 0;
  std::string abs_coeff;
  std::string bound;
  std::string margin;
  double margin_value = 0.0;
  std::string case_fired;
  bool pass = false;
};

inline json record_to_json(const VerificationRecord& r) {
  return {{"trial", r.trial_id},
          {"seed", r.seed},
          {"A", r.A},
          {"B", r.B},
          {"schwarz", r.schwarz},
          {"lambda_or_index", r.lambda_or_index},
          {"l", r.coefficient_index},
          {"abs_coeff", r.abs_coeff},
          {"bound", r.bound},
          {"margin", r.margin},
          {"case", r.case_fired},
          {"pass", r.pass}};
}

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

inline std::string float_string(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

constexpr double kFloatTolerance = 1e-9;

template <class T>
StarlikeFunction<T> draw_member(const CampaignConfig& cfg,
                                const JanowskiParams& p, int trial) {
  if (cfg.corpus == Corpus::extremal) return extremal<T>(p, cfg.order);
  return sample<T>(p, mix_seed(cfg.seed, static_cast<std::uint64_t>(trial)),
                   cfg.order);
}

inline void fill_margin(VerificationRecord& r, const Rational& abs_coeff,
                        const Rational& bound) {
  const Rational margin = bound - abs_coeff;
  r.abs_coeff = format_rational(abs_coeff);
  r.bound = format_rational(bound);
  r.margin = format_rational(margin);
  r.margin_value = to_double(margin);
  r.pass = margin >= 0;
}

inline void fill_margin(VerificationRecord& r, double abs_coeff,
                        const Rational& bound) {
  const double margin = to_double(bound) - abs_coeff;
  r.abs_coeff = float_string(abs_coeff);
  r.bound = format_rational(bound);
  r.margin = float_string(margin);
  r.margin_value = margin;
  r.pass = margin >= -kFloatTolerance;
}

inline int thread_budget() {
  if (const char* env = std::getenv("JANOWSKI_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs one body per trial, possibly concurrently, and concatenates the
/// per-trial records in trial order so output is independent of scheduling.
template <class Body>
std::vector<VerificationRecord> per_trial(const CampaignConfig& cfg,
                                          Body&& body) {
  std::vector<std::vector<VerificationRecord>> buckets(
      static_cast<std::size_t>(cfg.trials));
  const int workers =
      std::min(thread_budget(), std::max(cfg.trials, 1));
  std::atomic<int> cursor{0};
  auto run = [&] {
    for (;;) {
      const int t = cursor.fetch_add(1);
      if (t >= cfg.trials) break;
      buckets[static_cast<std::size_t>(t)] = body(t);
    }
  };
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }
  std::vector<VerificationRecord> records;
  for (auto& b : buckets)
    records.insert(records.end(), b.begin(), b.end());
  return records;
}

template <class T>
std::vector<VerificationRecord> negpow_trial(const CampaignConfig& cfg,
                                             int trial) {
  const JanowskiParams& p =
      cfg.parameter_grid[static_cast<std::size_t>(trial) %
                         cfg.parameter_grid.size()];
  const StarlikeFunction<T> f = draw_member<T>(cfg, p, trial);
  std::vector<VerificationRecord> out;
  for (const Rational& lambda : cfg.lambda_grid) {
    const Series<T> a = neg_power_coeffs(f, lambda, cfg.index_max);
    for (long l = 1; l <= cfg.index_max; ++l) {
      const BoundValue b = bound_neg_power(p, lambda, l);
      VerificationRecord r;
      r.trial_id = trial;
      r.seed = cfg.seed;
      r.A = format_rational(p.A());
      r.B = format_rational(p.B());
      r.schwarz = f.provenance;
      r.lambda_or_index = format_rational(lambda);
      r.coefficient_index = l;
      r.case_fired = b.case_fired;
      fill_margin(r, scalar_traits<T>::abs(a[static_cast<int>(l)]), b.value);
      out.push_back(std::move(r));
    }
  }
  return out;
}

template <class T>
std::vector<VerificationRecord> inverse_trial(const CampaignConfig& cfg,
                                              int trial) {
  const JanowskiParams& p =
      cfg.parameter_grid[static_cast<std::size_t>(trial) %
                         cfg.parameter_grid.size()];
  const StarlikeFunction<T> f = draw_member<T>(cfg, p, trial);
  const Series<T> F = revert(f.series);
  std::vector<VerificationRecord> out;
  for (long n = 2; n <= cfg.index_max; ++n) {
    const BoundValue b = bound_inverse(p, n);
    VerificationRecord r;
    r.trial_id = trial;
    r.seed = cfg.seed;
    r.A = format_rational(p.A());
    r.B = format_rational(p.B());
    r.schwarz = f.provenance;
    r.lambda_or_index = "n=" + std::to_string(n);
    r.coefficient_index = n;
    r.case_fired = b.case_fired;
    fill_margin(r, scalar_traits<T>::abs(F[static_cast<int>(n)]), b.value);
    out.push_back(std::move(r));
  }
  return out;
}

template <class T>
std::vector<VerificationRecord> mero_trial(const CampaignConfig& cfg,
                                           int trial) {
  const JanowskiParams& p =
      cfg.parameter_grid[static_cast<std::size_t>(trial) %
                         cfg.parameter_grid.size()];
  const StarlikeFunction<T> f = draw_member<T>(cfg, p, trial);
  const MeroInverseExpansion<T> mero =
      mero_inverse(f, cfg.index_max);
  std::vector<VerificationRecord> out;
  for (long n = 1; n <= cfg.index_max; ++n) {
    const BoundValue b = bound_mero_inverse(p, n);
    VerificationRecord r;
    r.trial_id = trial;
    r.seed = cfg.seed;
    r.A = format_rational(p.A());
    r.B = format_rational(p.B());
    r.schwarz = f.provenance;
    r.lambda_or_index = "n=" + std::to_string(n);
    r.coefficient_index = n;
    r.case_fired = b.case_fired;
    fill_margin(r, scalar_traits<T>::abs(mero.B[static_cast<std::size_t>(n - 1)]),
                b.value);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

inline std::vector<VerificationRecord> run_negpow_campaign(
    const CampaignConfig& cfg) {
  cfg.validate();
  if (cfg.backend == Backend::exact)
    return detail::per_trial(
        cfg, [&](int t) { return detail::negpow_trial<Rational>(cfg, t); });
  return detail::per_trial(
      cfg, [&](int t) { return detail::negpow_trial<Complex>(cfg, t); });
}

inline std::vector<VerificationRecord> run_inverse_campaign(
    const CampaignConfig& cfg) {
  cfg.validate();
  if (cfg.backend == Backend::exact)
    return detail::per_trial(
        cfg, [&](int t) { return detail::inverse_trial<Rational>(cfg, t); });
  return detail::per_trial(
      cfg, [&](int t) { return detail::inverse_trial<Complex>(cfg, t); });
}

inline std::vector<VerificationRecord> run_mero_campaign(
    const CampaignConfig& cfg) {
  cfg.validate();
  if (cfg.backend == Backend::exact)
    return detail::per_trial(
        cfg, [&](int t) { return detail::mero_trial<Rational>(cfg, t); });
  return detail::per_trial(
      cfg, [&](int t) { return detail::mero_trial<Complex>(cfg, t); });
}

/// Aggregation by theorem case: counts, failures, and the worst observed
/// margin with its attaining witness.
struct CaseSummary {
  long count = 0;
  long failures = 0;
  double worst_margin = 0.0;
  std::string worst_witness;
};

struct CampaignSummary {
  long total = 0;
  long failures = 0;
  std::map<std::string, CaseSummary> by_case;
};

inline CampaignSummary report(const std::vector<VerificationRecord>& records) {
  CampaignSummary s;
  for (const auto& r : records) {
    ++s.total;
    if (!r.pass) ++s.failures;
    auto [it, inserted] = s.by_case.try_emplace(r.case_fired);
    CaseSummary& c = it->second;
    if (inserted || r.margin_value < c.worst_margin) {
      c.worst_margin = r.margin_value;
      c.worst_witness = "trial " + std::to_string(r.trial_id) + " " +
                        r.schwarz + " l=" + std::to_string(r.coefficient_index);
    }
    ++c.count;
    if (!r.pass) ++c.failures;
  }
  return s;
}

inline json summary_to_json(const CampaignSummary& s) {
  json cases = json::object();
  for (const auto& [tag, c] : s.by_case)
    cases[tag] = {{"count", c.count},
                  {"failures", c.failures},
                  {"worst_margin", c.worst_margin},
                  {"worst_witness", c.worst_witness}};
  return {{"total", s.total}, {"failures", s.failures}, {"cases", cases}};
}

}  // namespace janowski
