#pragma once

// Exact scalar arithmetic for the unit interval: dyadic rationals
// (numerator over a power of two), general rationals for radii and
// stream values, formal center-radius balls with their refinement
// order, and finite unions of subintervals of [-1,1] in canonical form.
//
// No floating point anywhere; integers are arbitrary precision.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ivo/words.hpp"

namespace ivo {

using Int = boost::multiprecision::cpp_int;

/// value = num / 2^exp, normalized so num is odd or exp is 0.
class Dyadic {
public:
  Dyadic() : num_(0), exp_(0) {}
  Dyadic(Int num, unsigned exp) : num_(std::move(num)), exp_(exp) {
    normalize();
  }
  static Dyadic from_int(long n) { return Dyadic(Int(n), 0); }

  /// 2^k (k may be negative).
  static Dyadic pow2(int k);

  /// Accepts "n", "a/2^k", or "p/q" with q a positive power of two.
  static Dyadic parse(std::string_view text);

  const Int& num() const { return num_; }
  unsigned exp() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Dyadic operator-() const { return Dyadic(-num_, exp_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);

  Dyadic halved() const { return Dyadic(num_, exp_ + 1); }
  Dyadic doubled() const { return Dyadic(num_ * 2, exp_); }

  friend Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
    return (a + b).halved();
  }

  friend int cmp(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return cmp(a, b) == 0;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) {
    return cmp(a, b) != 0;
  }
  friend bool operator<(const Dyadic& a, const Dyadic& b) {
    return cmp(a, b) < 0;
  }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) {
    return cmp(a, b) <= 0;
  }
  friend bool operator>(const Dyadic& a, const Dyadic& b) {
    return cmp(a, b) > 0;
  }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) {
    return cmp(a, b) >= 0;
  }

  Dyadic abs() const { return num_ < 0 ? -*this : *this; }

  /// "a/2^k"; k = 0 prints the bare integer.
  std::string str() const;

  /// Reduced fraction "p/q" (q a power of two); integers print bare.
  std::string str_plain() const;

private:
  void normalize();

  Int num_;
  unsigned exp_;
};

/// Reduced fraction with positive denominator.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(Int num, Int den);
  static Rational from_int(long n) { return Rational(Int(n), Int(1)); }
  explicit Rational(const Dyadic& d);

  /// Accepts "p/q" or "p".
  static Rational parse(std::string_view text);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }
  bool is_positive() const { return num_ > 0; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational halved() const;
  friend Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b).halved();
  }

  friend int cmp(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return cmp(a, b) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return cmp(a, b) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return cmp(a, b) > 0;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return cmp(a, b) >= 0;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  bool is_dyadic() const;
  /// Requires is_dyadic().
  Dyadic to_dyadic() const;

  /// "p/q"; denominator 1 prints the bare integer.
  std::string str() const;

private:
  Int num_;
  Int den_;  // > 0, gcd(num, den) = 1
};

/// Center-radius pair with strictly positive radius. Balls used as
/// approximations of points of [-1,1] keep their center in (-1,1).
struct FormalBall {
  Dyadic center;
  Rational radius;

  FormalBall(Dyadic c, Rational r) : center(std::move(c)), radius(std::move(r)) {
    if (!radius.is_positive())
      throw std::invalid_argument("FormalBall: radius must be positive");
  }

  friend bool operator==(const FormalBall& a, const FormalBall& b) {
    return a.center == b.center && a.radius == b.radius;
  }

  /// "center ± radius" with the center in a/2^k form.
  std::string str() const;
};

/// a sits strictly inside b: |b.center - a.center| + a.radius < b.radius.
bool refines(const FormalBall& a, const FormalBall& b);

/// Non-strict containment of the closed extents.
bool nested_in(const FormalBall& a, const FormalBall& b);

/// Given refines(a, b), a ball c with refines(a, c) and refines(c, b).
FormalBall interpolate(const FormalBall& a, const FormalBall& b);

/// c'(s) = sum of s_i * 2^-i; the empty word maps to 0. Bijective from
/// words onto the dyadics in (-1,1).
Dyadic cprime(const SignWord& s);

/// Inverse of cprime; requires -1 < d < 1, throws std::domain_error
/// otherwise.
SignWord cprime_inv(const Dyadic& d);

/// An open of [-1,1]: a finite union of intervals in canonical form
/// (sorted, pairwise disjoint, non-adjacent as opens, no empty piece).
/// Each piece is closed at an endpoint exactly when that endpoint is
/// -1 or 1 and belongs to the set; every other bound is an excluded
/// dyadic. (a,b) u (b,c) stays split: b is not a member.
class IntervalOpen {
public:
  struct Segment {
    std::optional<Dyadic> lo;  // nullopt: closed at -1; else open above lo
    std::optional<Dyadic> hi;  // nullopt: closed at 1; else open below hi
  };

  IntervalOpen() = default;  // empty
  static IntervalOpen empty() { return IntervalOpen(); }
  static IntervalOpen whole();

  /// Single piece; clips and discards empty input.
  static IntervalOpen segment(std::optional<Dyadic> lo, std::optional<Dyadic> hi);

  /// The trace of the ball on [-1,1]. An endpoint that lands strictly
  /// outside becomes a closed -1/1 end; one that lands inside (or
  /// exactly on -1/1) stays excluded and must be dyadic, else
  /// std::domain_error.
  static IntervalOpen from_ball(const FormalBall& b);

  const std::vector<Segment>& segments() const { return segs_; }
  bool is_empty() const { return segs_.empty(); }
  bool is_whole() const;

  friend IntervalOpen join(const IntervalOpen& a, const IntervalOpen& b);
  friend IntervalOpen meet(const IntervalOpen& a, const IntervalOpen& b);
  friend bool leq(const IntervalOpen& a, const IntervalOpen& b);
  friend bool operator==(const IntervalOpen& a, const IntervalOpen& b);
  friend bool operator!=(const IntervalOpen& a, const IntervalOpen& b) {
    return !(a == b);
  }

  bool contains(const Rational& x) const;

  /// "{}", "[-1,1]", or segments joined by " u ", e.g. "[-1,-1/4) u (1/4,1]".
  std::string str() const;
  static IntervalOpen parse(std::string_view text);

private:
  static IntervalOpen from_segments(std::vector<Segment> segs);
  void canonicalize();

  std::vector<Segment> segs_;
};

}  // namespace ivo
