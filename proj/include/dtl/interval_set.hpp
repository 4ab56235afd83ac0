#pragma once

// Normalized finite unions of rational-endpoint intervals. Point intervals
// [a,a] are ordinary components, and the normal form is unique per point set:
// components are sorted, pairwise disjoint and never adjacent.

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtl/rational.hpp"

namespace dtl {

/// Raised when an interval violates lower <= upper or a point has an open end.
class interval_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A nonempty interval. A missing lower (upper) endpoint stands for -inf (+inf).
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval make(std::optional<Rational> lo, bool lo_closed, std::optional<Rational> hi, bool hi_closed) {
    if (!lo && lo_closed) throw interval_error("infinite lower endpoint must be open");
    if (!hi && hi_closed) throw interval_error("infinite upper endpoint must be open");
    if (lo && hi) {
      if (*hi < *lo) throw interval_error("interval lower endpoint exceeds upper endpoint");
      if (*lo == *hi && !(lo_closed && hi_closed)) throw interval_error("degenerate interval must be closed");
    }
    return Interval{std::move(lo), std::move(hi), lo_closed, hi_closed};
  }

  static Interval point(const Rational& a) { return make(a, true, a, true); }
  static Interval closed(const Rational& a, const Rational& b) { return make(a, true, b, true); }
  static Interval open(const Rational& a, const Rational& b) { return make(a, false, b, false); }
  static Interval closed_open(const Rational& a, const Rational& b) { return make(a, true, b, false); }
  static Interval open_closed(const Rational& a, const Rational& b) { return make(a, false, b, true); }
  static Interval all() { return make(std::nullopt, false, std::nullopt, false); }
  static Interval above(const Rational& a, bool closed) { return make(a, closed, std::nullopt, false); }
  static Interval below(const Rational& b, bool closed) { return make(std::nullopt, false, b, closed); }

  bool is_point() const { return lo && hi && *lo == *hi; }

  bool contains(const Rational& x) const {
    if (lo && (x < *lo || (x == *lo && !lo_closed))) return false;
    if (hi && (*hi < x || (x == *hi && !hi_closed))) return false;
    return true;
  }

  std::string to_string() const {
    std::string s;
    s += lo_closed ? '[' : '(';
    s += lo ? lo->to_string() : "-inf";
    s += ',';
    s += hi ? hi->to_string() : "inf";
    s += hi_closed ? ']' : ')';
    return s;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

namespace detail {

// Orders lower bounds: -inf first, and a closed bound before an open one at the same value.
inline bool lower_before(const Interval& a, const Interval& b) {
  if (!a.lo || !b.lo) return !a.lo && b.lo;
  if (*a.lo != *b.lo) return *a.lo < *b.lo;
  return a.lo_closed && !b.lo_closed;
}

// True when upper bound of a extends strictly beyond upper bound of b.
inline bool upper_beyond(const Interval& a, const Interval& b) {
  if (!a.hi || !b.hi) return !a.hi && b.hi;
  if (*a.hi != *b.hi) return *b.hi < *a.hi;
  return a.hi_closed && !b.hi_closed;
}

// Whether `next` (which does not start before `cur`) overlaps or touches `cur`.
inline bool joins(const Interval& cur, const Interval& next) {
  if (!cur.hi || !next.lo) return true;
  if (*next.lo < *cur.hi) return true;
  return *next.lo == *cur.hi && (cur.hi_closed || next.lo_closed);
}

inline std::optional<Interval> meet(const Interval& a, const Interval& b) {
  Interval r;
  if (lower_before(a, b)) {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  } else {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  }
  if (upper_beyond(a, b)) {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
  } else {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
  }
  if (r.lo && r.hi) {
    if (*r.hi < *r.lo) return std::nullopt;
    if (*r.lo == *r.hi && !(r.lo_closed && r.hi_closed)) return std::nullopt;
  }
  return r;
}

}  // namespace detail

class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(std::initializer_list<Interval> raw) : IntervalSet(normalize(std::vector<Interval>(raw))) {}

  /// Unique normal form of the union of `raw`.
  static IntervalSet normalize(std::vector<Interval> raw) {
    for (const auto& iv : raw) Interval::make(iv.lo, iv.lo_closed, iv.hi, iv.hi_closed);
    std::sort(raw.begin(), raw.end(), detail::lower_before);
    IntervalSet out;
    for (auto& iv : raw) {
      if (!out.parts_.empty() && detail::joins(out.parts_.back(), iv)) {
        Interval& cur = out.parts_.back();
        if (detail::upper_beyond(iv, cur)) {
          cur.hi = std::move(iv.hi);
          cur.hi_closed = iv.hi_closed;
        }
      } else {
        out.parts_.push_back(std::move(iv));
      }
    }
    return out;
  }

  static IntervalSet of(const Interval& iv) {
    IntervalSet s;
    s.parts_.push_back(iv);
    return s;
  }

  const std::vector<Interval>& components() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }

  bool contains(const Rational& x) const {
    // First component whose lower bound lies strictly after x.
    auto it = std::upper_bound(parts_.begin(), parts_.end(), x, [](const Rational& v, const Interval& iv) {
      return iv.lo && v < *iv.lo;
    });
    if (it == parts_.begin()) return false;
    return std::prev(it)->contains(x);
  }

  friend IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<Interval> raw;
    raw.reserve(a.size() + b.size());
    std::merge(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(), std::back_inserter(raw),
               detail::lower_before);
    return normalize(std::move(raw));
  }

  friend IntervalSet complement(const IntervalSet& a) {
    IntervalSet out;
    bool from_neg_inf = true;
    std::optional<Rational> from;
    bool from_closed = false;
    for (const auto& c : a.parts_) {
      if (c.lo) {
        Interval gap{from_neg_inf ? std::nullopt : from, c.lo, !from_neg_inf && from_closed, !c.lo_closed};
        if (!gap.lo || *gap.lo != *gap.hi || (gap.lo_closed && gap.hi_closed)) out.parts_.push_back(gap);
      }
      if (!c.hi) return out;
      from_neg_inf = false;
      from = c.hi;
      from_closed = !c.hi_closed;
    }
    out.parts_.push_back(Interval{from_neg_inf ? std::nullopt : from, std::nullopt, !from_neg_inf && from_closed, false});
    return out;
  }

  /// Intersection, defined through complement and union.
  friend IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    if (a.empty() || b.empty()) return {};
    return complement(unite(complement(a), complement(b)));
  }

  friend IntervalSet difference(const IntervalSet& a, const IntervalSet& b) { return intersect(a, complement(b)); }

  /// a ∩ window, computed component-wise; equals intersect(a, {window}).
  IntervalSet clip(const Interval& window) const {
    IntervalSet out;
    for (const auto& c : parts_) {
      if (window.hi && c.lo && (*window.hi < *c.lo)) break;
      if (auto m = detail::meet(c, window)) out.parts_.push_back(*m);
    }
    return out;
  }

  friend IntervalSet shift(const IntervalSet& a, const Rational& d) {
    IntervalSet out = a;
    if (d.sign() == 0) return out;
    for (auto& c : out.parts_) {
      if (c.lo) c.lo = *c.lo + d;
      if (c.hi) c.hi = *c.hi + d;
    }
    return out;
  }

  /// |a ∩ window| >= n, where a component of positive length counts as infinitely many points.
  bool cardinality_at_least(const Interval& window, std::size_t n) const {
    if (n == 0) return true;
    auto it = parts_.begin();
    if (window.lo) {
      it = std::lower_bound(parts_.begin(), parts_.end(), *window.lo, [](const Interval& iv, const Rational& v) {
        return iv.hi && *iv.hi < v;
      });
    }
    std::size_t count = 0;
    for (; it != parts_.end(); ++it) {
      if (window.hi && it->lo && *window.hi < *it->lo) break;
      auto m = detail::meet(*it, window);
      if (!m) continue;
      if (!m->is_point()) return true;
      if (++count >= n) return true;
    }
    return false;
  }

  /// All finite endpoint values in increasing order, without duplicates.
  std::vector<Rational> endpoints() const {
    std::vector<Rational> out;
    out.reserve(2 * parts_.size());
    for (const auto& c : parts_) {
      if (c.lo && (out.empty() || out.back() != *c.lo)) out.push_back(*c.lo);
      if (c.hi && (out.empty() || out.back() != *c.hi)) out.push_back(*c.hi);
    }
    return out;
  }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

  /// Comma-separated intervals, or `{}` for the empty set.
  std::string to_string() const {
    if (parts_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ", ";
      s += parts_[i].to_string();
    }
    return s;
  }

  /// Accepts `{}`, or a comma-separated interval list optionally wrapped in braces.
  static IntervalSet parse(std::string_view text);

 private:
  std::vector<Interval> parts_;
};

inline IntervalSet IntervalSet::parse(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    return std::invalid_argument("interval list, offset " + std::to_string(i) + ": " + what);
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  // Returns nullopt for an infinite bound; `want_neg` selects which infinity is legal.
  auto read_bound = [&](bool want_neg) -> std::optional<Rational> {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && text[i] != ',' && text[i] != ']' && text[i] != ')' &&
           !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::string_view tok = text.substr(start, i - start);
    if (want_neg && tok == "-inf") return std::nullopt;
    if (!want_neg && (tok == "inf" || tok == "+inf")) return std::nullopt;
    try {
      return Rational::parse(tok);
    } catch (const std::exception& e) {
      throw fail(e.what());
    }
  };

  std::vector<Interval> raw;
  skip_ws();
  bool braced = i < text.size() && text[i] == '{';
  if (braced) ++i;
  skip_ws();
  bool expect_more = false;
  while (i < text.size() && text[i] != '}') {
    char open = text[i];
    if (open != '[' && open != '(') throw fail("expected '[' or '('");
    ++i;
    auto lo = read_bound(true);
    skip_ws();
    if (i >= text.size() || text[i] != ',') throw fail("expected ','");
    ++i;
    auto hi = read_bound(false);
    skip_ws();
    if (i >= text.size() || (text[i] != ']' && text[i] != ')')) throw fail("expected ']' or ')'");
    char close = text[i++];
    try {
      raw.push_back(Interval::make(lo, open == '[', hi, close == ']'));
    } catch (const interval_error& e) {
      throw fail(e.what());
    }
    skip_ws();
    expect_more = false;
    if (i < text.size() && text[i] == ',') {
      ++i;
      skip_ws();
      expect_more = true;
    }
  }
  if (expect_more) throw fail("trailing ','");
  if (braced) {
    if (i >= text.size() || text[i] != '}') throw fail("expected '}'");
    ++i;
  } else if (i < text.size()) {
    throw fail("unexpected '}'");
  }
  skip_ws();
  if (i != text.size()) throw fail("trailing characters");
  return normalize(std::move(raw));
}

}  // namespace dtl
