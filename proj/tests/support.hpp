#pragma once

// Random generators shared by the unit and acceptance suites.

#include <random>
#include <string>
#include <vector>

#include "dtl/eval.hpp"
#include "dtl/formula.hpp"
#include "dtl/signal.hpp"

namespace dtl::gen {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// Up to `max_components` intervals with endpoints on the grid (1/12)Z inside [0, len).
inline IntervalSet random_set(Rng& rng, const Rational& len, int max_components) {
  long long slots = (len * Rational(12)).to_int64();
  std::vector<Interval> raw;
  int n = static_cast<int>(uniform(rng, 0, max_components));
  for (int i = 0; i < n; ++i) {
    long long a = uniform(rng, 0, slots - 1);
    long long b = uniform(rng, a, slots);
    Rational lo(a, 12), hi(b, 12);
    if (a == b) {
      raw.push_back(Interval::point(lo));
      continue;
    }
    bool lc = uniform(rng, 0, 1) == 1;
    bool hc = b < slots && uniform(rng, 0, 1) == 1;
    raw.push_back(Interval::make(lo, lc, hi, hc));
  }
  return IntervalSet::normalize(std::move(raw));
}

/// Period k/b with k <= 3, b | 12; at most four pattern components; half-line
/// signals get a transient that is a multiple of 1/12 up to 2.
inline Signal random_signal(Rng& rng, TimeDomain domain, int max_components = 4) {
  static const long long bases[] = {1, 2, 3, 4, 6, 12};
  Rational period(uniform(rng, 1, 3), bases[uniform(rng, 0, 5)]);
  IntervalSet pattern = random_set(rng, period, max_components);
  if (domain == TimeDomain::FullLine) return Signal::make(domain, period, pattern);
  Rational transient(uniform(rng, 0, 24), 12);
  IntervalSet prefix = transient.sign() > 0 ? random_set(rng, transient, max_components) : IntervalSet{};
  return Signal::make(domain, period, pattern, transient, prefix);
}

inline TimeDomain random_domain(Rng& rng) {
  return uniform(rng, 0, 1) ? TimeDomain::HalfLine : TimeDomain::FullLine;
}

struct FormulaShape {
  std::vector<std::string> atoms{"P", "Q"};
  unsigned max_arity = 3;
  bool metric = true;  // F1, O1, Cn, Pnn
};

/// Random formula of modal depth at most `depth`.
inline Formula random_formula(Rng& rng, unsigned depth, const FormulaShape& shape = {}, unsigned size = 4) {
  auto leaf = [&]() -> Formula {
    long long r = uniform(rng, 0, 9);
    if (r == 0) return fml::top();
    if (r == 1) return fml::bottom();
    return fml::atom(shape.atoms[uniform(rng, 0, static_cast<long long>(shape.atoms.size()) - 1)]);
  };
  if (size == 0) return leaf();
  long long choice = uniform(rng, 0, depth > 0 ? 12 : 5);
  auto sub = [&](unsigned d) { return random_formula(rng, d, shape, size - 1); };
  switch (choice) {
    case 0:
    case 1: return leaf();
    case 2: return fml::neg(sub(depth));
    case 3: return fml::conj(sub(depth), sub(depth));
    case 4: return fml::disj(sub(depth), sub(depth));
    case 5: return fml::implies(sub(depth), sub(depth));
    case 6:
    case 7: return fml::until(sub(depth - 1), sub(depth - 1));
    case 8: return fml::since(sub(depth - 1), sub(depth - 1));
    default: break;
  }
  if (!shape.metric) return fml::until(sub(depth - 1), sub(depth - 1));
  switch (choice) {
    case 9: return fml::future1(sub(depth - 1));
    case 10: return fml::past1(sub(depth - 1));
    case 11: return fml::count(static_cast<unsigned>(uniform(rng, 1, shape.max_arity)), sub(depth - 1));
    default: {
      std::vector<Formula> args;
      long long n = uniform(rng, 1, shape.max_arity);
      for (long long i = 0; i < n; ++i) args.push_back(sub(depth - 1));
      return fml::pnueli(std::move(args));
    }
  }
}

}  // namespace dtl::gen
