#pragma once

// A deliberately literal pointwise evaluator, independent of the signal
// transformers in eval.hpp. Quantifiers over time are decided by visiting one
// representative per region, where the regions come from cutting the time
// line at every atom endpoint translated by -d..d (d = modal depth). No
// subformula can change truth value inside such a region: a unit-window
// modality moves its operands' change points by at most one unit, and
// Until/Since introduce none.

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

#include "dtl/env.hpp"
#include "dtl/formula.hpp"
#include "dtl/signal.hpp"

namespace dtl {

struct Region {
  bool is_point = false;
  Rational lo, hi;           // equal for points
  std::vector<bool> truth;   // one entry per decomposed signal

  Rational representative() const { return is_point ? lo : (lo + hi) / Rational(2); }
};

struct RegionDecomposition {
  Interval window;
  std::vector<Region> regions;
};

/// Joint refinement of the closed window [a, b] by the endpoints of every signal.
inline RegionDecomposition region_decomposition(const std::vector<Signal>& signals, const Rational& a,
                                                const Rational& b) {
  if (!(a < b)) throw signal_error("region window must satisfy a < b");
  std::vector<IntervalSet> slices;
  std::vector<Rational> cuts{a, b};
  for (const auto& s : signals) {
    slices.push_back(s.slice(a, b));
    for (const auto& e : slices.back().endpoints()) cuts.push_back(e);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  RegionDecomposition out{Interval::closed(a, b), {}};
  auto tag = [&](Region r) {
    Rational x = r.representative();
    for (const auto& s : slices) r.truth.push_back(s.contains(x));
    out.regions.push_back(std::move(r));
  };
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    tag(Region{true, cuts[i], cuts[i], {}});
    if (i + 1 < cuts.size()) tag(Region{false, cuts[i], cuts[i + 1], {}});
  }
  return out;
}

class Oracle {
 public:
  Oracle(Formula f, const Env& env) : formula_(std::move(f)), env_(env) {
    Metrics m = metrics(formula_);
    depth_ = m.modal_depth;
    for (const auto& name : m.atoms) atoms_.push_back(&env_.lookup(name));
    half_ = env_.domain == TimeDomain::HalfLine;
    period_ = 1;
    Rational transient = 0;
    for (const Signal* s : atoms_) {
      period_ = lcm(period_, s->period());
      transient = max(transient, s->transient());
    }
    Rational d(static_cast<long long>(depth_));
    // Every subformula is periodic with period_ from cap_ on.
    cap_ = half_ ? transient + d * (period_ + 1) : Rational(0);
    Rational lo = half_ ? Rational(0) : -(Rational(2) * period_) - 3;
    Rational hi = cap_ + Rational(3) * period_ + 3;
    build_grid(lo, hi);
  }

  bool at(const Rational& t) { return eval(formula_.get(), t); }

  const Formula& formula() const { return formula_; }

 private:
  struct Key {
    const Node* node;
    Rational t;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return std::hash<const void*>{}(k.node) * 31u ^ k.t.hash(); }
  };
  struct Piece {
    bool is_point;
    Rational rep;
  };

  void build_grid(const Rational& lo, const Rational& hi) {
    Rational d(static_cast<long long>(depth_));
    std::vector<Rational> pts{lo, hi};
    for (const Signal* s : atoms_) {
      for (const auto& e : s->window(lo - d - 1, hi + d + 1).endpoints()) {
        for (long long j = -static_cast<long long>(depth_); j <= static_cast<long long>(depth_); ++j) {
          Rational x = e + Rational(j);
          if (lo <= x && x <= hi) pts.push_back(x);
        }
      }
    }
    if (half_)
      for (long long j = 0; j <= static_cast<long long>(depth_) + 1; ++j) pts.push_back(Rational(j));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    grid_ = std::move(pts);
  }

  // Representative of the grid gap that contains the open piece starting at u.
  Rational gap_rep(const Rational& u) const {
    auto it = std::upper_bound(grid_.begin(), grid_.end(), u);
    if (it == grid_.begin() || it == grid_.end()) throw eval_error("oracle grid too small at " + u.to_string());
    return (*std::prev(it) + *it) / Rational(2);
  }

  // Pieces covering the interval between a and b, in increasing order.
  std::vector<Piece> pieces(const Rational& a, bool a_closed, const Rational& b, bool b_closed) const {
    std::vector<Piece> out;
    if (b < a || (a == b && !(a_closed && b_closed))) return out;
    if (a_closed) out.push_back({true, a});
    if (a == b) return out;
    auto it = std::upper_bound(grid_.begin(), grid_.end(), a);
    Rational left = a;
    for (; it != grid_.end() && *it < b; ++it) {
      out.push_back({false, gap_rep(left)});
      out.push_back({true, *it});
      left = *it;
    }
    out.push_back({false, gap_rep(left)});
    if (b_closed) out.push_back({true, b});
    return out;
  }

  Rational reduce(const Rational& t) const {
    if (!half_) return mod(t, period_);
    Rational top = cap_ + period_;
    if (t < top) return t;
    return t - ((t - cap_) / period_).floor() * period_;
  }

  bool eval(const Node* f, const Rational& raw_t) {
    Rational t = reduce(raw_t);
    Key key{f, t};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool v = decide(f, t);
    memo_.emplace(std::move(key), v);
    return v;
  }

  bool decide(const Node* f, const Rational& t) {
    auto sub = [&](std::size_t i, const Rational& u) { return eval(f->args[i].get(), u); };
    switch (f->kind) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Atom: return env_.lookup(f->name).contains(t);
      case Kind::Not: return !sub(0, t);
      case Kind::And: return sub(0, t) && sub(1, t);
      case Kind::Or: return sub(0, t) || sub(1, t);
      case Kind::Implies: return !sub(0, t) || sub(1, t);
      case Kind::Future1:
        // exists u: t < u < t+1 and X(u)
        for (const auto& p : pieces(t, false, t + 1, false))
          if (sub(0, p.rep)) return true;
        return false;
      case Kind::Past1: {
        // exists u: u < t < u+1 and X(u), u in the domain
        Rational lo = t - 1;
        bool closed = false;
        if (half_ && lo.sign() < 0) {
          lo = 0;
          closed = true;
        }
        for (const auto& p : pieces(lo, closed, t, false))
          if (sub(0, p.rep)) return true;
        return false;
      }
      case Kind::Count: {
        std::size_t seen = 0;
        for (const auto& p : pieces(t, false, t + 1, false)) {
          if (!sub(0, p.rep)) continue;
          if (!p.is_point || ++seen >= f->arity) return true;
        }
        return false;
      }
      case Kind::Pnueli: return pnueli(f, t);
      case Kind::Until: {
        // exists t1 > t: Y(t1) and X on (t, t1)
        Rational horizon = max(t, cap_) + Rational(2) * period_;
        for (const auto& p : pieces(t, false, horizon, true)) {
          bool x = sub(0, p.rep);
          bool y = sub(1, p.rep);
          if (y && (p.is_point || x)) return true;
          if (!x) return false;
        }
        return false;
      }
      case Kind::Since: {
        // exists t1 < t: Y(t1) and X on (t1, t)
        Rational floor_t = half_ ? Rational(0) : t - Rational(2) * period_;
        if (half_ && t.sign() == 0) return false;
        auto ps = pieces(floor_t, true, t, false);
        for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
          bool x = sub(0, it->rep);
          bool y = sub(1, it->rep);
          if (y && (it->is_point || x)) return true;
          if (!x) return false;
        }
        return false;
      }
    }
    throw eval_error("unknown formula node");
  }

  // Exhaustive search for strictly increasing witnesses over the pieces of
  // (t, t+1). An open piece can host any number of witnesses, a point one.
  bool pnueli(const Node* f, const Rational& t) {
    auto ps = pieces(t, false, t + 1, false);
    const std::size_t n = f->args.size();
    const std::size_t m = ps.size();
    std::vector<std::vector<char>> holds(n, std::vector<char>(m));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < m; ++r) holds[i][r] = eval(f->args[i].get(), ps[r].rep) ? 1 : 0;
    // state (i, r, used): witnesses 0..i-1 placed, the last in piece r; used = piece r is a spent point.
    std::map<std::tuple<std::size_t, std::size_t, bool>, bool> seen;
    auto place = [&](auto&& self, std::size_t i, std::size_t r, bool used) -> bool {
      if (i == n) return true;
      auto key = std::make_tuple(i, r, used);
      if (auto it = seen.find(key); it != seen.end()) return it->second;
      bool ok = false;
      for (std::size_t q = r; q < m && !ok; ++q) {
        if (q == r && used) continue;
        if (holds[i][q]) ok = self(self, i + 1, q, ps[q].is_point);
      }
      seen[key] = ok;
      return ok;
    };
    return place(place, 0, 0, false);
  }

  Formula formula_;
  const Env& env_;
  std::vector<const Signal*> atoms_;
  unsigned depth_ = 0;
  bool half_ = false;
  Rational period_;
  Rational cap_;
  std::vector<Rational> grid_;
  std::unordered_map<Key, bool, KeyHash> memo_;
};

/// Truth value of f at time t, decided directly from the first-order truth tables.
inline bool pointwise_eval(const Formula& f, const Env& env, const Rational& t) {
  if (env.domain == TimeDomain::HalfLine && t.sign() < 0) throw signal_error("time outside the half-line");
  return Oracle(f, env).at(t);
}

}  // namespace dtl
