#pragma once

// Infinite digit streams over {-, +} and {-, 0, +}, the points of the
// two stream spaces. Two backings: an eventually periodic closed form
// `prefix(period)`, which supports exact rational evaluation, and an
// arbitrary producer rule with an internal digit cache. Closed-form
// streams are immutable values and freely shared; producer-backed
// streams memoize and should be treated as single-owner values (the
// cache is a pure one: the same digit is returned on every call).
//
// Evaluation sends a stream s to sum_i s_i 2^-i in [-1,1]; a trit
// stream may carry 0 digits (value 0), which is what makes the
// digitwise midpoint causal.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "ivo/dyadic.hpp"
#include "ivo/words.hpp"

namespace ivo {

enum class Trit : std::uint8_t { minus, zero, plus };

inline char to_char(Trit d) {
  return d == Trit::plus ? '+' : (d == Trit::minus ? '-' : '0');
}
inline Trit to_trit(Sign d) {
  return d == Sign::plus ? Trit::plus : Trit::minus;
}
inline int digit_value(Trit d) {
  return d == Trit::plus ? 1 : (d == Trit::minus ? -1 : 0);
}
inline int digit_value(Sign d) { return d == Sign::plus ? 1 : -1; }

/// Finite word over {-, 0, +}.
class TritWord {
public:
  TritWord() = default;
  static TritWord parse(std::string_view text);
  static TritWord from_signs(const SignWord& w);

  std::size_t length() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  Trit at(std::size_t i) const { return char_trit(digits_[i - 1]); }
  Trit last() const { return char_trit(digits_.back()); }

  TritWord append(Trit d) const { return TritWord(digits_ + to_char(d)); }
  TritWord take(std::size_t n) const { return TritWord(digits_.substr(0, n)); }
  TritWord drop(std::size_t n) const {
    return n >= digits_.size() ? TritWord() : TritWord(digits_.substr(n));
  }

  std::string str() const { return digits_; }

  friend bool operator==(const TritWord& a, const TritWord& b) {
    return a.digits_ == b.digits_;
  }
  friend bool operator!=(const TritWord& a, const TritWord& b) {
    return !(a == b);
  }

private:
  static Trit char_trit(char c) {
    return c == '+' ? Trit::plus : (c == '-' ? Trit::minus : Trit::zero);
  }
  explicit TritWord(std::string digits) : digits_(std::move(digits)) {}

  std::string digits_;
};

class SignStream {
public:
  /// Eventually periodic stream prefix(period); period must be nonempty.
  /// The representation is canonicalized: the prefix is shortened where
  /// it only repeats the period, and the period is made primitive.
  static SignStream periodic(SignWord prefix, SignWord period);

  /// Producer rule, 1-indexed; must return in finite time for every n.
  static SignStream from_producer(std::function<Sign(std::size_t)> produce);

  /// Text form `prefix(period)`, e.g. "+-(-+)"; bare "(p)" is purely
  /// periodic.
  static SignStream parse(std::string_view text);

  Sign digit(std::size_t n) const;
  SignWord take(std::size_t n) const;

  bool has_closed_form() const { return closed_.has_value(); }
  const SignWord& prefix() const { return require_closed().first; }
  const SignWord& period() const { return require_closed().second; }

  /// Requires a closed form.
  std::string str() const;

private:
  SignStream() = default;
  const std::pair<SignWord, SignWord>& require_closed() const;

  struct Memo {
    std::function<Sign(std::size_t)> produce;
    std::vector<Sign> cache;
  };

  std::optional<std::pair<SignWord, SignWord>> closed_;
  std::shared_ptr<Memo> memo_;
};

class TritStream {
public:
  static TritStream periodic(TritWord prefix, TritWord period);
  static TritStream from_producer(std::function<Trit(std::size_t)> produce);
  static TritStream parse(std::string_view text);

  Trit digit(std::size_t n) const;
  TritWord take(std::size_t n) const;

  bool has_closed_form() const { return closed_.has_value(); }
  const TritWord& prefix() const { return require_closed().first; }
  const TritWord& period() const { return require_closed().second; }

  std::string str() const;

private:
  TritStream() = default;
  const std::pair<TritWord, TritWord>& require_closed() const;

  struct Memo {
    std::function<Trit(std::size_t)> produce;
    std::vector<Trit> cache;
  };

  std::optional<std::pair<TritWord, TritWord>> closed_;
  std::shared_ptr<Memo> memo_;
};

SignStream cons(Sign d, const SignStream& s);
SignStream tail(const SignStream& s);

/// Ball (c'(first n digits), 2^-n); the stream's value lies inside.
FormalBall approximant(const SignStream& s, unsigned n);

/// Exact value of an eventually periodic stream; throws
/// std::domain_error on a producer-backed stream.
Rational exact_value(const SignStream& s);
Rational exact_value(const TritStream& s);

/// half(d s) = d (flip d) s; halves the value exactly.
SignStream half(const SignStream& s);

/// u-(s) = s +(-)^w and u+(s) = s -(+)^w: the two canonical expansions
/// of c'(s).
SignStream u_minus(const SignWord& s);
SignStream u_plus(const SignWord& s);

/// Digitwise inclusion of sign streams into trit streams.
TritStream embed(const SignStream& s);

/// Sequence midpoint: digit n of the output is the common sign when the
/// inputs agree at n and 0 when they differ. Causal: n output digits
/// consume exactly n digits of each input.
TritStream sequence_midpoint(const SignStream& a, const SignStream& b);

/// Ball (sum of the first n digit values over 2^i, 2^-n).
FormalBall trit_approximant(const TritStream& s, unsigned n);

/// Finite-depth semi-decision of the strict stream order: scans the
/// first `depth` digits and reports the verdict at the first
/// difference, or nullopt when the streams agree that far.
std::optional<bool> stream_lt(const SignStream& a, const SignStream& b,
                              std::size_t depth);

}  // namespace ivo
