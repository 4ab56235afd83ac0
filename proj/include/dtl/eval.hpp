#pragma once

// Modalities as exact signal transformers, and the structural evaluator.
//
// Every operator follows the same sweep: take the operands' common transient
// T and period p, cut the output window at the points where the operator's
// view of its operands can change (operand endpoints, shifted by -1 or +1 for
// the unit-window modalities), decide the operator at each cut point and at
// one midpoint per gap, and assemble the result. Between two consecutive cuts
// the operands look the same from every time in the gap, so the decision at
// the midpoint holds for the whole gap.
//
// Output windows, with H = T + 2p:
//   F1, Cn, Pnn  [0, T+p)   operands on [0, T+p+1]    result periodic from T
//   O1           [0, T+1+p) operands on [-1, T+1+p]   from T+1 (half-line)
//   U            [0, T+p)   operands on [0, H]        from T
//   S            [0, T+2p)  operands on [-2p, H]      from T+p (half-line)
// On the full line T = 0 and the output window is [0, p). On the half-line,
// operand windows that reach below 0 see nothing there, which is exactly
// "quantifiers range over [0, inf)".

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "dtl/env.hpp"
#include "dtl/formula.hpp"
#include "dtl/signal.hpp"

namespace dtl {

namespace detail {

/// Evaluates `holds` at every cut in [lo, hi) and at one midpoint per gap.
template <class Pred>
IntervalSet sweep(std::vector<Rational> cuts, const Rational& lo, const Rational& hi, Pred&& holds) {
  std::erase_if(cuts, [&](const Rational& c) { return c < lo || c >= hi; });
  cuts.push_back(lo);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Interval> raw;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const Rational& c = cuts[i];
    const Rational& next = i + 1 < cuts.size() ? cuts[i + 1] : hi;
    if (holds(c)) raw.push_back(Interval::point(c));
    if (holds((c + next) / Rational(2))) raw.push_back(Interval::open(c, next));
  }
  return IntervalSet::normalize(std::move(raw));
}

/// Packs a truth set computed on [0, transient + period) into a canonical signal.
inline Signal assemble(TimeDomain domain, const IntervalSet& truth, const Rational& transient, const Rational& period) {
  IntervalSet prefix = transient.sign() > 0 ? truth.clip(Interval::closed_open(0, transient)) : IntervalSet{};
  IntervalSet pattern = shift(truth.clip(Interval::closed_open(transient, transient + period)), -transient);
  return canonicalize(Signal::make(domain, period, std::move(pattern), transient, std::move(prefix)));
}

inline void add_cuts(std::vector<Rational>& cuts, const IntervalSet& s, const Rational& offset) {
  for (const auto& e : s.endpoints()) cuts.push_back(e + offset);
}

// Component of s containing some (t, t+eps); nullptr if s fails right after t.
inline const Interval* reaching_right(const IntervalSet& s, const Rational& t) {
  const auto& cs = s.components();
  auto it = std::upper_bound(cs.begin(), cs.end(), t, [](const Rational& v, const Interval& iv) {
    return iv.lo && v < *iv.lo;
  });
  if (it == cs.begin()) return nullptr;
  --it;
  return (!it->hi || t < *it->hi) ? &*it : nullptr;
}

// Component of s containing some (t-eps, t); nullptr if s fails right before t.
inline const Interval* reaching_left(const IntervalSet& s, const Rational& t) {
  const auto& cs = s.components();
  auto it = std::lower_bound(cs.begin(), cs.end(), t, [](const Interval& iv, const Rational& v) {
    return !iv.lo || *iv.lo < v;
  });
  if (it == cs.begin()) return nullptr;
  --it;
  return (!it->hi || t <= *it->hi) ? &*it : nullptr;
}

/// Shared driver for the future unit-window modalities (F1, Cn, Pnn).
template <class Decide>
Signal future_window_op(const std::vector<const Signal*>& xs, Decide&& decide) {
  auto [transient, period] = common_frame(xs);
  Rational hi = transient + period;
  std::vector<IntervalSet> slices;
  std::vector<Rational> cuts;
  for (const Signal* x : xs) {
    slices.push_back(x->window(0, hi + 1));
    add_cuts(cuts, slices.back(), 0);
    add_cuts(cuts, slices.back(), -1);
  }
  IntervalSet truth = sweep(std::move(cuts), 0, hi, [&](const Rational& t) { return decide(t, slices); });
  return assemble(xs.front()->domain(), truth, transient, period);
}

// Greedy earliest placement of strictly increasing witnesses in (t, t+1):
// a point region takes at most one witness, an open region any run of
// consecutive indices whose operands all hold there.
inline bool pnueli_at(const Rational& t, const std::vector<IntervalSet>& slices) {
  Rational end = t + 1;
  Interval window = Interval::open(t, end);
  std::vector<Rational> pts;
  for (const auto& s : slices)
    for (const auto& e : s.endpoints())
      if (window.contains(e)) pts.push_back(e);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::size_t j = 0;
  const std::size_t n = slices.size();
  Rational left = t;
  auto open_region = [&](const Rational& a, const Rational& b) {
    Rational mid = (a + b) / Rational(2);
    while (j < n && slices[j].contains(mid)) ++j;
  };
  for (const auto& c : pts) {
    open_region(left, c);
    if (j < n && slices[j].contains(c)) ++j;
    if (j == n) return true;
    left = c;
  }
  open_region(left, end);
  return j == n;
}

}  // namespace detail

/// {t : x meets (t, t+1)}
inline Signal diamond_unit_future(const Signal& x) {
  return detail::future_window_op({&x}, [](const Rational& t, const std::vector<IntervalSet>& s) {
    return s[0].cardinality_at_least(Interval::open(t, t + 1), 1);
  });
}

/// {t : x meets (t-1, t)}; on the half-line only times >= 0 can witness.
inline Signal diamond_unit_past(const Signal& x) {
  const Rational& period = x.period();
  Rational transient = x.domain() == TimeDomain::HalfLine ? x.transient() + 1 : Rational(0);
  Rational hi = transient + period;
  IntervalSet slice = x.window(-1, hi);
  std::vector<Rational> cuts;
  detail::add_cuts(cuts, slice, 0);
  detail::add_cuts(cuts, slice, 1);
  IntervalSet truth = detail::sweep(std::move(cuts), 0, hi, [&](const Rational& t) {
    return slice.cardinality_at_least(Interval::open(t - 1, t), 1);
  });
  return detail::assemble(x.domain(), truth, transient, period);
}

/// {t : |x ∩ (t, t+1)| >= n}; a stretch of positive length holds infinitely many points.
inline Signal count_unit(const Signal& x, unsigned n) {
  if (n == 0) throw eval_error("counting modality needs n >= 1");
  return detail::future_window_op({&x}, [n](const Rational& t, const std::vector<IntervalSet>& s) {
    return s[0].cardinality_at_least(Interval::open(t, t + 1), n);
  });
}

/// {t : exists t < t1 < ... < tn < t+1 with ti in xs[i]}
inline Signal pnueli_unit(const std::vector<Signal>& xs) {
  if (xs.empty()) throw eval_error("Pnueli modality needs n >= 1");
  std::vector<const Signal*> ptrs;
  for (const auto& x : xs) ptrs.push_back(&x);
  return detail::future_window_op(ptrs, detail::pnueli_at);
}

/// x U y: a strictly later y-witness with x on the open stretch before it.
inline Signal until(const Signal& x, const Signal& y) {
  auto [transient, period] = common_frame({&x, &y});
  TimeDomain domain = x.domain();
  if (domain == TimeDomain::FullLine) transient = 0;
  Rational hi = transient + period;
  Rational horizon = hi + period;
  IntervalSet xs = x.window(0, horizon);
  IntervalSet ys = y.window(0, horizon);
  std::vector<Rational> cuts;
  detail::add_cuts(cuts, xs, 0);
  detail::add_cuts(cuts, ys, 0);
  IntervalSet truth = detail::sweep(std::move(cuts), 0, hi, [&](const Rational& t) {
    const Interval* run = detail::reaching_right(xs, t);
    if (!run) return false;
    // x holds on (t, end); a run reaching the horizon covers a whole period of
    // the tail and therefore never ends, and then y within (t, horizon] decides.
    return ys.cardinality_at_least(Interval::open_closed(t, *run->hi), 1);
  });
  return detail::assemble(domain, truth, transient, period);
}

/// x S y: a strictly earlier y-witness with x on the open stretch after it.
inline Signal since(const Signal& x, const Signal& y) {
  auto [transient, period] = common_frame({&x, &y});
  TimeDomain domain = x.domain();
  Rational out_transient = domain == TimeDomain::HalfLine ? transient + period : Rational(0);
  Rational hi = out_transient + period;
  Rational from = domain == TimeDomain::HalfLine ? Rational(0) : -(period + period);
  IntervalSet xs = x.window(from, hi);
  IntervalSet ys = y.window(from, hi);
  std::vector<Rational> cuts;
  detail::add_cuts(cuts, xs, 0);
  detail::add_cuts(cuts, ys, 0);
  IntervalSet truth = detail::sweep(std::move(cuts), 0, hi, [&](const Rational& t) {
    const Interval* run = detail::reaching_left(xs, t);
    if (!run) return false;
    return ys.cardinality_at_least(Interval::closed_open(*run->lo, t), 1);
  });
  return detail::assemble(domain, truth, out_transient, period);
}

namespace detail {

inline Signal evaluate_node(const Formula& f, const Env& env, std::unordered_map<const Node*, Signal>& memo) {
  if (auto it = memo.find(f.get()); it != memo.end()) return it->second;
  auto arg = [&](std::size_t i) { return evaluate_node(f->args[i], env, memo); };
  Signal out = [&]() -> Signal {
    switch (f->kind) {
      case Kind::True: return Signal::constant(env.domain, true);
      case Kind::False: return Signal::constant(env.domain, false);
      case Kind::Atom: return canonicalize(env.lookup(f->name));
      case Kind::Not: return negate(arg(0));
      case Kind::And: return conjoin(arg(0), arg(1));
      case Kind::Or: return disjoin(arg(0), arg(1));
      case Kind::Implies: return disjoin(negate(arg(0)), arg(1));
      case Kind::Until: return until(arg(0), arg(1));
      case Kind::Since: return since(arg(0), arg(1));
      case Kind::Future1: return diamond_unit_future(arg(0));
      case Kind::Past1: return diamond_unit_past(arg(0));
      case Kind::Count: return count_unit(arg(0), f->arity);
      case Kind::Pnueli: {
        std::vector<Signal> xs;
        for (std::size_t i = 0; i < f->args.size(); ++i) xs.push_back(arg(i));
        return pnueli_unit(xs);
      }
    }
    throw eval_error("unknown formula node");
  }();
  memo.emplace(f.get(), out);
  return out;
}

}  // namespace detail

/// Truth signal of f over env, in canonical form.
inline Signal evaluate(const Formula& f, const Env& env) {
  std::unordered_map<const Node*, Signal> memo;
  return detail::evaluate_node(f, env, memo);
}

}  // namespace dtl
