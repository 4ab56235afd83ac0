#pragma once

// Differential check of the engine against the pointwise oracle.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dtl/eval.hpp"
#include "dtl/oracle.hpp"

namespace dtl {

struct AgreementSample {
  Rational t;
  bool engine = false;
  bool oracle = false;
};

struct AgreementReport {
  std::vector<AgreementSample> samples;

  std::size_t agreeing() const {
    return static_cast<std::size_t>(
        std::count_if(samples.begin(), samples.end(), [](const auto& s) { return s.engine == s.oracle; }));
  }
  bool all_agree() const { return agreeing() == samples.size(); }

  std::string to_string() const {
    std::string out;
    for (const auto& s : samples)
      out += "t=" + s.t.to_string() + " engine=" + (s.engine ? "1" : "0") + " oracle=" + (s.oracle ? "1" : "0") + "\n";
    out += "agreement " + std::to_string(agreeing()) + "/" + std::to_string(samples.size()) + "\n";
    return out;
  }
};

/// Sample times for a check over [lo, hi]: every critical point, then
/// midpoints between them, then random rationals with small denominators,
/// until `count` times are collected. Critical points are never dropped.
inline std::vector<Rational> agreement_times(std::vector<Rational> critical, const Rational& lo, const Rational& hi,
                                             std::size_t count, std::uint64_t seed) {
  std::set<Rational> chosen;
  std::erase_if(critical, [&](const Rational& c) { return c < lo || hi < c; });
  critical.push_back(lo);
  critical.push_back(hi);
  std::sort(critical.begin(), critical.end());
  critical.erase(std::unique(critical.begin(), critical.end()), critical.end());
  for (const auto& c : critical) chosen.insert(c);
  for (std::size_t i = 0; i + 1 < critical.size() && chosen.size() < count; ++i)
    chosen.insert((critical[i] + critical[i + 1]) / Rational(2));
  std::mt19937_64 rng(seed);
  Rational span = hi - lo;
  std::size_t attempts = 0;
  while (chosen.size() < count && attempts++ < 100 * count + 100) {
    long long den = std::uniform_int_distribution<long long>(1, 24)(rng);
    Rational lim = (span * Rational(den)).floor();
    long long top = lim.to_int64();
    long long num = std::uniform_int_distribution<long long>(0, top)(rng);
    chosen.insert(lo + Rational(num, den));
  }
  return {chosen.begin(), chosen.end()};
}

/// Compares evaluate() and pointwise_eval() on a two-period window.
inline AgreementReport agreement_check(const Formula& f, const Env& env, std::size_t samples, std::uint64_t seed) {
  AgreementReport report;
  if (samples == 0) return report;
  Signal truth = evaluate(f, env);
  Rational period = truth.period();
  Rational transient = truth.transient();
  std::vector<Rational> critical;
  for (const auto& name : metrics(f).atoms) {
    const Signal& s = env.lookup(name);
    period = lcm(period, s.period());
    transient = max(transient, s.transient());
  }
  Rational lo = 0;
  Rational hi = transient + Rational(2) * period;
  for (const auto& e : truth.window(lo, hi).endpoints()) critical.push_back(e);
  for (const auto& name : metrics(f).atoms)
    for (const auto& e : env.lookup(name).window(lo, hi).endpoints()) critical.push_back(e);
  Oracle oracle(f, env);
  for (const auto& t : agreement_times(std::move(critical), lo, hi, samples, seed))
    report.samples.push_back({t, truth.contains(t), oracle.at(t)});
  return report;
}

}  // namespace dtl
