#pragma once

// Exact nonnegative rationals over arbitrary-precision integers, plus the
// small amount of number theory the monoid code needs (valuations, primes).

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "pmonoid/error.hpp"

namespace pmonoid {

using integer = boost::multiprecision::cpp_int;

inline integer gcd(integer a, integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline integer lcm(const integer& a, const integer& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

/// Inverse of a modulo m (m >= 1, gcd(a, m) = 1), in [0, m).
inline integer mod_inverse(const integer& a, const integer& m) {
  integer old_r = a % m, r = m;
  if (old_r < 0) old_r += m;
  integer old_s = 1, s = 0;
  while (r != 0) {
    integer q = old_r / r;
    integer t = old_r - q * r;
    old_r = std::move(r);
    r = std::move(t);
    t = old_s - q * s;
    old_s = std::move(s);
    s = std::move(t);
  }
  if (old_r != 1) throw monoid_error(error_kind::invalid_input, "mod_inverse: arguments not coprime");
  integer inv = old_s % m;
  if (inv < 0) inv += m;
  return inv;
}

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int v) : Rational(integer(v)) {}  // NOLINT: literals read naturally in tests
  Rational(long v) : Rational(integer(v)) {}  // NOLINT
  Rational(long long v) : Rational(integer(v)) {}  // NOLINT
  Rational(unsigned long v) : Rational(integer(v)) {}  // NOLINT
  Rational(unsigned long long v) : Rational(integer(v)) {}  // NOLINT
  explicit Rational(integer v) : num_(std::move(v)), den_(1) {
    if (num_ < 0) throw monoid_error(error_kind::invalid_input, "negative rational");
  }

  /// Canonical reduced form of num/den.
  static Rational reduce(integer num, integer den) {
    if (den <= 0) throw monoid_error(error_kind::invalid_input, "denominator must be positive");
    if (num < 0) throw monoid_error(error_kind::invalid_input, "negative rational");
    Rational q;
    integer g = gcd(num, den);
    if (g == 0) g = 1;
    q.num_ = num / g;
    q.den_ = den / g;
    if (q.num_ == 0) q.den_ = 1;
    return q;
  }

  const integer& num() const noexcept { return num_; }
  const integer& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  /// Floor of the value.
  integer floor() const { return num_ / den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return reduce(a.num_ + b.num_, a.den_);
    return reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return reduce(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw monoid_error(error_kind::invalid_input, "division by zero");
    return reduce(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  /// a - b when a >= b, nothing otherwise. Subtraction in Q>=0 is partial.
  friend std::optional<Rational> minus(const Rational& a, const Rational& b) {
    if (a < b) return std::nullopt;
    if (a.den_ == b.den_) return reduce(a.num_ - b.num_, a.den_);
    return reduce(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }

  /// a - b, throwing would_go_negative when b > a.
  friend Rational sub(const Rational& a, const Rational& b) {
    auto r = minus(a, b);
    if (!r) throw monoid_error(error_kind::would_go_negative, a.str() + " - " + b.str());
    return *std::move(r);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return cmp(a.num_, b.num_);
    return cmp(a.num_ * b.den_, b.num_ * a.den_);
  }

  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  static std::strong_ordering cmp(const integer& x, const integer& y) {
    int c = x.compare(y);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  integer num_;
  integer den_;
};

std::optional<Rational> minus(const Rational& a, const Rational& b);
Rational sub(const Rational& a, const Rational& b);

inline Rational power(const Rational& base, unsigned exponent) {
  Rational r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

inline integer parse_natural(std::string_view s, std::string_view context) {
  s = trim(s);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw monoid_error(error_kind::invalid_input, "malformed rational '" + std::string(context) + "'");
  return integer(std::string(s));
}

}  // namespace detail

/// Accepts "a" or "a/b" (b > 0, not necessarily reduced).
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_natural(text, text));
  return Rational::reduce(detail::parse_natural(text.substr(0, slash), text),
                          detail::parse_natural(text.substr(slash + 1), text));
}

// ---------------------------------------------------------------------------
// Primes and valuations

namespace detail {

inline bool trial_division_prime(const integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (integer d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Miller-Rabin with the first 13 prime bases is exact below this bound.
inline const integer& miller_rabin_exact_bound() {
  static const integer bound("3317044064679887385961981");
  return bound;
}

inline bool miller_rabin(const integer& n) {
  static constexpr unsigned bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned b : bases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  integer d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (unsigned b : bases) {
    integer x = boost::multiprecision::powm(integer(b), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

/// Deterministic primality. Small inputs use trial division, mid-size inputs
/// use Miller-Rabin with a base set proven exact for the range, and anything
/// beyond falls back to trial division.
inline bool is_prime(const integer& n) {
  if (n < 2) return false;
  if (n < 1'000'000) return detail::trial_division_prime(n);
  if (n < detail::miller_rabin_exact_bound()) return detail::miller_rabin(n);
  return detail::trial_division_prime(n);
}

inline integer next_prime_above(const integer& bound) {
  integer c = bound < 0 ? integer(0) : bound;
  for (c += 1;; c += 1)
    if (is_prime(c)) return c;
}

inline integer next_prime_above(const Rational& bound) { return next_prime_above(bound.floor()); }

/// Exponent of p in n (n != 0). p is assumed prime.
inline long long valuation(integer n, const integer& p) {
  if (n == 0) throw monoid_error(error_kind::undefined_valuation, "valuation of zero");
  if (n < 0) n = -n;
  long long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// p-adic valuation of a positive rational: v_p(n(q)) - v_p(d(q)).
inline long long valuation(const Rational& q, const integer& p) {
  if (q.is_zero()) throw monoid_error(error_kind::undefined_valuation, "valuation of zero");
  if (!is_prime(p)) throw monoid_error(error_kind::invalid_input, p.str() + " is not prime");
  return valuation(q.num(), p) - valuation(q.den(), p);
}

}  // namespace pmonoid
