#pragma once

// Boolean signals over dense time that are periodic (full line) or eventually
// periodic (half-line). A signal is stored as a transient prefix on [0, T)
// followed by a pattern on [0, p) that repeats from T on.

#include <string>
#include <utility>
#include <vector>

#include "dtl/interval_set.hpp"
#include "dtl/rational.hpp"

namespace dtl {

enum class TimeDomain { FullLine, HalfLine };

inline const char* to_string(TimeDomain d) { return d == TimeDomain::FullLine ? "line" : "halfline"; }

class signal_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Signal {
 public:
  /// Validating constructor; the pattern must lie in [0, period) and the prefix in [0, transient).
  static Signal make(TimeDomain domain, Rational period, IntervalSet pattern, Rational transient = 0,
                     IntervalSet prefix = {}) {
    if (period.sign() <= 0) throw signal_error("signal period must be positive");
    if (transient.sign() < 0) throw signal_error("signal transient must be non-negative");
    if (domain == TimeDomain::FullLine && (transient.sign() != 0 || !prefix.empty()))
      throw signal_error("full-line signals are purely periodic");
    if (!pattern.empty() && pattern != pattern.clip(Interval::closed_open(0, period)))
      throw signal_error("pattern " + pattern.to_string() + " is not inside [0," + period.to_string() + ")");
    if (!prefix.empty() && (transient.sign() == 0 || prefix != prefix.clip(Interval::closed_open(0, transient))))
      throw signal_error("prefix " + prefix.to_string() + " is not inside [0," + transient.to_string() + ")");
    Signal s;
    s.domain_ = domain;
    s.period_ = std::move(period);
    s.pattern_ = std::move(pattern);
    s.transient_ = std::move(transient);
    s.prefix_ = std::move(prefix);
    return s;
  }

  static Signal constant(TimeDomain domain, bool value) {
    return make(domain, 1, value ? IntervalSet::of(Interval::closed_open(0, 1)) : IntervalSet{});
  }

  /// True exactly at the integer multiples of `spacing` (non-negative ones on the half-line).
  static Signal multiples_of(TimeDomain domain, const Rational& spacing) {
    return make(domain, spacing, IntervalSet::of(Interval::point(0)));
  }

  TimeDomain domain() const { return domain_; }
  const Rational& period() const { return period_; }
  const IntervalSet& pattern() const { return pattern_; }
  const Rational& transient() const { return transient_; }
  const IntervalSet& prefix() const { return prefix_; }

  bool in_domain(const Rational& x) const { return domain_ == TimeDomain::FullLine || x.sign() >= 0; }

  bool contains(const Rational& x) const {
    if (!in_domain(x)) throw signal_error("time " + x.to_string() + " is outside the half-line");
    if (domain_ == TimeDomain::HalfLine && x < transient_) return prefix_.contains(x);
    return pattern_.contains(mod(x - transient_, period_));
  }

  /// The point set of the signal within [a, b]. Times before 0 on the half-line
  /// are treated as outside the set, so windows may reach below the domain.
  IntervalSet window(const Rational& a, const Rational& b) const {
    std::vector<Interval> raw;
    Interval w = Interval::closed(a, b);
    if (domain_ == TimeDomain::HalfLine && a < transient_) {
      IntervalSet head = prefix_.clip(w);
      raw = head.components();
    }
    Rational start = domain_ == TimeDomain::HalfLine ? max(a, transient_) : a;
    if (start <= b && !pattern_.empty()) {
      Rational k = ((start - transient_) / period_).floor();
      Rational k_end = ((b - transient_) / period_).floor();
      for (; k <= k_end; k += 1) {
        Rational base = transient_ + k * period_;
        for (const auto& c : pattern_.components()) {
          Interval moved{*c.lo + base, *c.hi + base, c.lo_closed, c.hi_closed};
          if (auto m = detail::meet(moved, w)) raw.push_back(*m);
        }
      }
    }
    return IntervalSet::normalize(std::move(raw));
  }

  /// Same as window(), but rejects windows that leave the domain.
  IntervalSet slice(const Rational& a, const Rational& b) const {
    if (b < a) throw signal_error("slice window is reversed");
    if (!in_domain(a)) throw signal_error("slice window leaves the half-line");
    return window(a, b);
  }

  /// Equivalent representation with the given transient and period; the period
  /// must be a multiple of the current one and the transient no smaller.
  Signal reexpress(const Rational& transient, const Rational& period) const {
    if (transient == transient_ && period == period_) return *this;
    if (transient < transient_) throw signal_error("cannot shrink a transient by re-expression");
    if (!(period / period_).is_integer()) throw signal_error("re-expression period is not a multiple");
    if (domain_ == TimeDomain::FullLine && transient.sign() != 0) throw signal_error("full-line transient");
    IntervalSet pre = transient.sign() > 0 ? window(0, transient).clip(Interval::closed_open(0, transient))
                                           : IntervalSet{};
    IntervalSet pat =
        shift(window(transient, transient + period).clip(Interval::closed_open(transient, transient + period)),
              -transient);
    return make(domain_, period, std::move(pat), transient, std::move(pre));
  }

  bool is_constant(bool value) const {
    IntervalSet full = IntervalSet::of(Interval::closed_open(0, period_));
    if (value) return pattern_ == full && (transient_.sign() == 0 || prefix_ == IntervalSet::of(Interval::closed_open(0, transient_)));
    return pattern_.empty() && prefix_.empty();
  }

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  Signal() = default;

  TimeDomain domain_ = TimeDomain::FullLine;
  Rational period_ = 1;
  IntervalSet pattern_;
  Rational transient_ = 0;
  IntervalSet prefix_;
};

inline void require_same_domain(const Signal& a, const Signal& b) {
  if (a.domain() != b.domain()) throw signal_error("signals live on different time domains");
}

/// Common transient (maximum) and period (least common multiple) of a group of signals.
inline std::pair<Rational, Rational> common_frame(const std::vector<const Signal*>& signals) {
  Rational transient = 0;
  Rational period = signals.front()->period();
  for (const Signal* s : signals) {
    require_same_domain(*signals.front(), *s);
    transient = max(transient, s->transient());
    period = lcm(period, s->period());
  }
  return {transient, period};
}

inline std::pair<Signal, Signal> align(const Signal& a, const Signal& b) {
  auto [t, p] = common_frame({&a, &b});
  return {a.reexpress(t, p), b.reexpress(t, p)};
}

namespace detail {

// Number of components of the pattern seen on a circle of circumference `period`.
inline std::size_t cyclic_components(const IntervalSet& pattern, const Rational& period) {
  const auto& cs = pattern.components();
  std::size_t n = cs.size();
  if (n >= 2 && *cs.back().hi == period && *cs.front().lo == 0 && cs.front().lo_closed) --n;
  return n;
}

inline bool rotation_invariant(const IntervalSet& pattern, const Rational& period, const Rational& step) {
  IntervalSet moved = shift(pattern, step);
  IntervalSet wrapped = unite(moved.clip(Interval::closed_open(0, period)),
                              shift(moved.clip(Interval::closed_open(period, period + step)), -period));
  return wrapped == pattern;
}

}  // namespace detail

/// Canonical representation: smallest period of the repeating part (constants
/// use period 1), then the smallest transient among multiples of that period.
inline Signal canonicalize(const Signal& s) {
  Rational p = s.period();
  IntervalSet pat = s.pattern();
  IntervalSet full = IntervalSet::of(Interval::closed_open(0, p));
  if (pat.empty() || pat == full) {
    bool value = !pat.empty();
    p = 1;
    pat = value ? IntervalSet::of(Interval::closed_open(0, 1)) : IntervalSet{};
  } else {
    std::size_t c = detail::cyclic_components(pat, p);
    for (std::size_t m = c; m >= 2; --m) {
      if (c % m != 0) continue;
      Rational step = p / Rational(static_cast<long long>(m));
      if (detail::rotation_invariant(pat, p, step)) {
        p = step;
        pat = pat.clip(Interval::closed_open(0, step));
        break;
      }
    }
  }
  if (s.domain() == TimeDomain::FullLine) return Signal::make(TimeDomain::FullLine, p, std::move(pat));

  auto block = [&](const Rational& k) {
    Rational from = k * p;
    return shift(s.window(from, from + p).clip(Interval::closed_open(from, from + p)), -from);
  };
  Rational k = (s.transient() / p).ceil();
  IntervalSet tail = block(k);
  while (k.sign() > 0 && block(k - 1) == tail) k -= 1;
  Rational t = k * p;
  IntervalSet prefix = t.sign() > 0 ? s.window(0, t).clip(Interval::closed_open(0, t)) : IntervalSet{};
  return Signal::make(TimeDomain::HalfLine, p, std::move(tail), t, std::move(prefix));
}

enum class BoolOp { Not, And, Or };

/// Pointwise boolean combination; `b` is ignored for Not.
inline Signal combine(BoolOp op, const Signal& a, const Signal* b = nullptr) {
  if (op == BoolOp::Not) {
    IntervalSet pre = a.transient().sign() > 0
                          ? difference(IntervalSet::of(Interval::closed_open(0, a.transient())), a.prefix())
                          : IntervalSet{};
    IntervalSet pat = difference(IntervalSet::of(Interval::closed_open(0, a.period())), a.pattern());
    return canonicalize(Signal::make(a.domain(), a.period(), std::move(pat), a.transient(), std::move(pre)));
  }
  if (!b) throw signal_error("binary combination needs two operands");
  auto [x, y] = align(a, *b);
  auto merge = [op](const IntervalSet& u, const IntervalSet& v) {
    return op == BoolOp::And ? intersect(u, v) : unite(u, v);
  };
  return canonicalize(Signal::make(x.domain(), x.period(), merge(x.pattern(), y.pattern()), x.transient(),
                                   merge(x.prefix(), y.prefix())));
}

inline Signal negate(const Signal& a) { return combine(BoolOp::Not, a); }
inline Signal conjoin(const Signal& a, const Signal& b) { return combine(BoolOp::And, a, &b); }
inline Signal disjoin(const Signal& a, const Signal& b) { return combine(BoolOp::Or, a, &b); }

/// Exact set equality, or with `eventually` equality from some time on.
inline bool equal(const Signal& a, const Signal& b, bool eventually = false) {
  auto [x, y] = align(a, b);
  if (x.pattern() != y.pattern()) return false;
  return eventually || x.prefix() == y.prefix();
}

/// Translation by d on the full line.
inline Signal shift(const Signal& s, const Rational& d) {
  if (s.domain() != TimeDomain::FullLine) throw signal_error("only full-line signals can be translated");
  const Rational& p = s.period();
  Rational r = mod(d, p);
  IntervalSet moved = shift(s.pattern(), r);
  IntervalSet wrapped =
      unite(moved.clip(Interval::closed_open(0, p)), shift(moved.clip(Interval::closed_open(p, p + p)), -p));
  return canonicalize(Signal::make(TimeDomain::FullLine, p, std::move(wrapped)));
}

/// s ⊆ t as point sets.
inline bool subset(const Signal& s, const Signal& t) { return equal(conjoin(s, t), s); }

enum class Trivial { True, False, P, NotP, None };

inline const char* to_string(Trivial t) {
  switch (t) {
    case Trivial::True: return "True";
    case Trivial::False: return "False";
    case Trivial::P: return "P";
    case Trivial::NotP: return "NotP";
    case Trivial::None: return "None";
  }
  return "None";
}

/// Which of True, False, P, not P the signal equals (or eventually equals).
inline Trivial classify_trivial(const Signal& s, const Signal& p_atom, bool eventually = false) {
  require_same_domain(s, p_atom);
  if (equal(s, Signal::constant(s.domain(), true), eventually)) return Trivial::True;
  if (equal(s, Signal::constant(s.domain(), false), eventually)) return Trivial::False;
  if (equal(s, p_atom, eventually)) return Trivial::P;
  if (equal(s, negate(p_atom), eventually)) return Trivial::NotP;
  return Trivial::None;
}

}  // namespace dtl
