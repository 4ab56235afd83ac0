#pragma once

// Exact rational numbers. Values that fit in a pair of 64-bit integers are
// kept inline; anything larger is promoted to a GMP rational and demoted
// again as soon as it fits. The representation is canonical, so structural
// equality is value equality.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dtl {

class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d) { assign(static_cast<i128>(n), static_cast<i128>(d)); }

  static Rational from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    r.set_big(std::move(q));
    return r;
  }

  /// Parses `p`, `-p`, `p/q` or `-p/q` with decimal digits of any length.
  static Rational parse(std::string_view text) {
    auto bad = [&] { return std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    std::size_t i = 0;
    if (text[0] == '-') i = 1;
    auto digits = [&](std::size_t from) {
      std::size_t j = from;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      return j;
    };
    std::size_t slash = digits(i);
    if (slash == i) throw bad();
    std::string num(text.substr(0, slash));
    std::string den = "1";
    if (slash != text.size()) {
      if (text[slash] != '/') throw bad();
      std::size_t end = digits(slash + 1);
      if (end == slash + 1 || end != text.size()) throw bad();
      den = std::string(text.substr(slash + 1));
    }
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::domain_error("rational with zero denominator");
    return from_mpq(mpq_class(n, d));
  }

  bool is_small() const { return !big_; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q(to_mpz(num_), to_mpz(den_));
    return q;
  }

  mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : to_mpz(num_); }
  mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : to_mpz(den_); }

  /// Integer value; throws if not an integer or out of range.
  long long to_int64() const {
    if (!is_integer()) throw std::domain_error("rational is not an integer");
    if (big_) {
      mpz_class n = big_->get_num();
      if (!n.fits_slong_p()) throw std::overflow_error("integer out of range");
      return n.get_si();
    }
    return num_;
  }

  double to_double() const { return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_); }

  std::string to_string() const {
    if (big_) return big_->get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      Rational r;
      r.assign(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
               static_cast<i128>(a.den_) * b.den_);
      return r;
    }
    return from_mpq(a.to_mpq() + b.to_mpq());
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      Rational r;
      r.assign(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
               static_cast<i128>(a.den_) * b.den_);
      return r;
    }
    return from_mpq(a.to_mpq() - b.to_mpq());
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      Rational r;
      r.assign(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
      return r;
    }
    return from_mpq(a.to_mpq() * b.to_mpq());
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign() == 0) throw std::domain_error("division by zero");
    if (a.is_small() && b.is_small()) {
      Rational r;
      r.assign(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
      return r;
    }
    return from_mpq(a.to_mpq() / b.to_mpq());
  }
  Rational operator-() const {
    if (big_ || num_ == INT64_MIN) return from_mpq(-to_mpq());
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.is_small() != b.is_small()) return false;  // canonical storage
    if (a.is_small()) return a.num_ == b.num_ && a.den_ == b.den_;
    return *a.big_ == *b.big_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      i128 l = static_cast<i128>(a.num_) * b.den_;
      i128 r = static_cast<i128>(b.num_) * a.den_;
      return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
  }

  /// Largest integer not above the value.
  Rational floor() const {
    if (big_) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
      return from_mpq(mpq_class(q));
    }
    long long q = num_ / den_;
    if ((num_ % den_ != 0) && (num_ < 0)) --q;
    return Rational(q);
  }
  Rational ceil() const { return -((-*this).floor()); }

  std::size_t hash() const {
    if (!big_) return std::hash<long long>{}(num_) * 1000003u ^ std::hash<long long>{}(den_);
    return std::hash<std::string>{}(big_->get_str(16));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  using i128 = __int128;
  using u128 = unsigned __int128;

  static u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
      u128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    u128 m = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
    mpz_class z;
    auto hi = static_cast<std::uint64_t>(m >> 64);
    auto lo = static_cast<std::uint64_t>(m);
    mpz_class h, l;
    mpz_import(h.get_mpz_t(), 1, 1, sizeof(hi), 0, 0, &hi);
    mpz_import(l.get_mpz_t(), 1, 1, sizeof(lo), 0, 0, &lo);
    z = (h << 64) + l;
    return neg ? mpz_class(-z) : z;
  }

  void assign(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      // Negating INT128_MIN is impossible; products of int64 never reach it.
      n = -n;
      d = -d;
    }
    u128 un = n < 0 ? -static_cast<u128>(n) : static_cast<u128>(n);
    u128 g = gcd128(un, static_cast<u128>(d));
    if (g > 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    if (n == 0) d = 1;
    if (n >= INT64_MIN && n <= INT64_MAX && d <= INT64_MAX) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
    } else {
      set_big(mpq_class(to_mpz(n), to_mpz(d)));
    }
  }

  void set_big(mpq_class q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
      num_ = q.get_num().get_si();
      den_ = q.get_den().get_si();
      big_.reset();
    } else {
      big_ = std::make_shared<const mpq_class>(std::move(q));
      num_ = 0;
      den_ = 1;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// x - floor(x / m) * m, always in [0, m) for m > 0.
inline Rational mod(const Rational& x, const Rational& m) { return x - (x / m).floor() * m; }

/// Least positive rational that is an integer multiple of both arguments.
inline Rational lcm(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0) throw std::domain_error("lcm of non-positive rationals");
  mpz_class num, den;
  mpz_class an = a.numerator(), bn = b.numerator();
  mpz_class ad = a.denominator(), bd = b.denominator();
  mpz_lcm(num.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
  mpz_gcd(den.get_mpz_t(), ad.get_mpz_t(), bd.get_mpz_t());
  return Rational::from_mpq(mpq_class(num, den));
}

}  // namespace dtl

template <>
struct std::hash<dtl::Rational> {
  std::size_t operator()(const dtl::Rational& r) const { return r.hash(); }
};
