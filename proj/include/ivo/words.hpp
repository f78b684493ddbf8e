#pragma once

// Finite words over the two-sign alphabet {-, +} and the decidable
// combinatorics on them: the prefix order, the two lexicographic orders,
// bristles, and the overlap / strict-midpoint relations that drive the
// open-set calculus on stream space.
//
// Conventions. Digit positions are 1-indexed (position i carries weight
// 2^-i under evaluation). `lt(s, t)` holds when at the first position
// where s and t differ, s carries '-' and t carries '+'; two words that
// differ in this sense are exactly the prefix-incomparable pairs.
//
//   lexl: s <=_l t  iff  lt(s,t) or s prefix of t   (lex order, - < +)
//   lexu: s <=_u t  iff  lt(s,t) or t prefix of s   (dual lex, + < -)
//
// A right bristle of s is a minimal word strictly above s in lt; these
// are the words t+ with t- a prefix of s. Left bristles are dual.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ivo {

enum class Sign : std::uint8_t { minus, plus };

inline Sign flip(Sign d) { return d == Sign::plus ? Sign::minus : Sign::plus; }
inline char to_char(Sign d) { return d == Sign::plus ? '+' : '-'; }

/// Immutable finite sign word; the empty word is the default value.
class SignWord {
public:
  SignWord() = default;

  /// Parses a word from text over '+' and '-'; empty text is the empty
  /// word. Throws std::invalid_argument on any other character.
  static SignWord parse(std::string_view text);

  static SignWord repeated(Sign d, std::size_t n);

  std::size_t length() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }

  /// Digit at 1-indexed position i (1 <= i <= length()).
  Sign at(std::size_t i) const { return char_sign(digits_[i - 1]); }

  Sign last() const { return char_sign(digits_.back()); }

  SignWord append(Sign d) const;
  SignWord concat(const SignWord& t) const;

  /// The first n digits (n <= length()).
  SignWord take(std::size_t n) const;

  /// Digits from 1-indexed position i to the end.
  SignWord drop(std::size_t n) const;

  bool contains(Sign d) const;

  std::string str() const { return digits_; }

  friend bool operator==(const SignWord& a, const SignWord& b) {
    return a.digits_ == b.digits_;
  }
  friend bool operator!=(const SignWord& a, const SignWord& b) {
    return !(a == b);
  }

private:
  static Sign char_sign(char c) {
    return c == '+' ? Sign::plus : Sign::minus;
  }
  explicit SignWord(std::string digits) : digits_(std::move(digits)) {}

  std::string digits_;  // each char '+' or '-'
};

/// Flips every digit.
SignWord swap_signs(const SignWord& s);

/// True iff s is an initial segment of t.
bool is_prefix(const SignWord& s, const SignWord& t);

/// s < t: at the first differing position, s has '-' and t has '+'.
/// False whenever one word is a prefix of the other.
bool lt(const SignWord& s, const SignWord& t);

/// s <=_l t: lt(s,t) or s prefix of t.
bool lexl(const SignWord& s, const SignWord& t);

/// s <=_u t: lt(s,t) or t prefix of s.
bool lexu(const SignWord& s, const SignWord& t);

/// Right bristles of s: { t+ : t- prefix of s }, sorted by length.
/// Every word strictly above s in lt extends exactly one of these.
std::vector<SignWord> right_bristles(const SignWord& s);

/// Left bristles of s: { t- : t+ prefix of s }, sorted by length.
std::vector<SignWord> left_bristles(const SignWord& s);

/// Overlap: t < s, or one is a prefix of the other, or s = u-+^k and
/// t = u+-^l for some common prefix u.
bool overlap(const SignWord& s, const SignWord& t);

/// s before t: lt(s,t), or t extends s+ and has a further '+' after it
/// (i.e. s+-^k+ is a prefix of t for some k >= 0).
bool lmid(const SignWord& s, const SignWord& t);

/// t after s: lt(t,s), or s-+^k- is a prefix of t for some k >= 0.
/// Equals lmid under a global sign swap of both arguments.
bool midl(const SignWord& t, const SignWord& s);

/// Strict total order used for canonical generator listings: a before b
/// iff a != b and lexl(a, b). A proper prefix sorts before its extensions.
bool word_less(const SignWord& a, const SignWord& b);

/// Member of S_right or S_left: a word, or an adjoined bottom.
class SElement {
public:
  SElement() = default;  // bottom
  static SElement bottom() { return SElement{}; }
  static SElement of(SignWord w) {
    SElement e;
    e.word_ = std::move(w);
    return e;
  }

  bool is_bottom() const { return !word_.has_value(); }
  const SignWord& word() const {
    if (!word_) throw std::logic_error("SElement: bottom has no word");
    return *word_;
  }

  friend bool operator==(const SElement& a, const SElement& b) {
    return a.word_ == b.word_;
  }
  friend bool operator!=(const SElement& a, const SElement& b) {
    return !(a == b);
  }

private:
  std::optional<SignWord> word_;
};

// Two totally ordered lattices on words plus bottom. S_right orders words
// by the *reverse* of lexl (so the empty word is top and longer right
// neighbours sit lower); S_left orders words by lexu. Bottom is below
// everything in both.
enum class SLattice { S_right, S_left };

bool s_le(const SElement& a, const SElement& b, SLattice which);
SElement s_meet(const SElement& a, const SElement& b, SLattice which);
SElement s_join(const SElement& a, const SElement& b, SLattice which);

/// All words of length <= max_len, in word_less order.
std::vector<SignWord> all_words_up_to(std::size_t max_len);

}  // namespace ivo
