#include "ivo/words.hpp"

#include <algorithm>

namespace ivo {

SignWord SignWord::parse(std::string_view text) {
  for (char c : text) {
    if (c != '+' && c != '-')
      throw std::invalid_argument("SignWord::parse: bad character '" +
                                  std::string(1, c) + "'");
  }
  return SignWord(std::string(text));
}

SignWord SignWord::repeated(Sign d, std::size_t n) {
  return SignWord(std::string(n, to_char(d)));
}

SignWord SignWord::append(Sign d) const {
  return SignWord(digits_ + to_char(d));
}

SignWord SignWord::concat(const SignWord& t) const {
  return SignWord(digits_ + t.digits_);
}

SignWord SignWord::take(std::size_t n) const {
  return SignWord(digits_.substr(0, n));
}

SignWord SignWord::drop(std::size_t n) const {
  return n >= digits_.size() ? SignWord() : SignWord(digits_.substr(n));
}

bool SignWord::contains(Sign d) const {
  return digits_.find(to_char(d)) != std::string::npos;
}

SignWord swap_signs(const SignWord& s) {
  SignWord out;
  for (std::size_t i = 1; i <= s.length(); ++i)
    out = out.append(flip(s.at(i)));
  return out;
}

bool is_prefix(const SignWord& s, const SignWord& t) {
  if (s.length() > t.length()) return false;
  for (std::size_t i = 1; i <= s.length(); ++i)
    if (s.at(i) != t.at(i)) return false;
  return true;
}

bool lt(const SignWord& s, const SignWord& t) {
  const std::size_t n = std::min(s.length(), t.length());
  for (std::size_t i = 1; i <= n; ++i) {
    if (s.at(i) != t.at(i))
      return s.at(i) == Sign::minus;  // and t.at(i) == plus
  }
  return false;  // one is a prefix of the other
}

bool lexl(const SignWord& s, const SignWord& t) {
  const std::size_t n = std::min(s.length(), t.length());
  for (std::size_t i = 1; i <= n; ++i) {
    if (s.at(i) != t.at(i)) return s.at(i) == Sign::minus;
  }
  return s.length() <= t.length();  // s prefix of t
}

bool lexu(const SignWord& s, const SignWord& t) {
  const std::size_t n = std::min(s.length(), t.length());
  for (std::size_t i = 1; i <= n; ++i) {
    if (s.at(i) != t.at(i)) return s.at(i) == Sign::minus;
  }
  return t.length() <= s.length();  // t prefix of s
}

std::vector<SignWord> right_bristles(const SignWord& s) {
  std::vector<SignWord> out;
  for (std::size_t i = 1; i <= s.length(); ++i)
    if (s.at(i) == Sign::minus) out.push_back(s.take(i - 1).append(Sign::plus));
  return out;  // already sorted by length: positions scanned left to right
}

std::vector<SignWord> left_bristles(const SignWord& s) {
  std::vector<SignWord> out;
  for (std::size_t i = 1; i <= s.length(); ++i)
    if (s.at(i) == Sign::plus) out.push_back(s.take(i - 1).append(Sign::minus));
  return out;
}

bool overlap(const SignWord& s, const SignWord& t) {
  if (lt(t, s) || is_prefix(t, s) || is_prefix(s, t)) return true;
  // Remaining possibility: s < t with s = u-+^k, t = u+-^l.
  const std::size_t n = std::min(s.length(), t.length());
  std::size_t d = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (s.at(i) != t.at(i)) {
      d = i;
      break;
    }
  }
  // d > 0 here: prefix cases were handled above.
  if (s.at(d) != Sign::minus) return false;
  for (std::size_t i = d + 1; i <= s.length(); ++i)
    if (s.at(i) != Sign::plus) return false;
  for (std::size_t i = d + 1; i <= t.length(); ++i)
    if (t.at(i) != Sign::minus) return false;
  return true;
}

bool lmid(const SignWord& s, const SignWord& t) {
  if (lt(s, t)) return true;
  // s+-^k+ prefix of t: t extends s, continues with '+', and has another
  // '+' later (the first one after any run of '-').
  if (t.length() < s.length() + 2) return false;
  if (!is_prefix(s, t)) return false;
  if (t.at(s.length() + 1) != Sign::plus) return false;
  for (std::size_t i = s.length() + 2; i <= t.length(); ++i)
    if (t.at(i) == Sign::plus) return true;
  return false;
}

bool midl(const SignWord& t, const SignWord& s) {
  if (lt(t, s)) return true;
  if (t.length() < s.length() + 2) return false;
  if (!is_prefix(s, t)) return false;
  if (t.at(s.length() + 1) != Sign::minus) return false;
  for (std::size_t i = s.length() + 2; i <= t.length(); ++i)
    if (t.at(i) == Sign::minus) return true;
  return false;
}

bool word_less(const SignWord& a, const SignWord& b) {
  return a != b && lexl(a, b);
}

bool s_le(const SElement& a, const SElement& b, SLattice which) {
  if (a.is_bottom()) return true;
  if (b.is_bottom()) return false;
  if (which == SLattice::S_right) return lexl(b.word(), a.word());
  return lexu(a.word(), b.word());
}

SElement s_meet(const SElement& a, const SElement& b, SLattice which) {
  return s_le(a, b, which) ? a : b;
}

SElement s_join(const SElement& a, const SElement& b, SLattice which) {
  return s_le(a, b, which) ? b : a;
}

std::vector<SignWord> all_words_up_to(std::size_t max_len) {
  std::vector<SignWord> out;
  out.emplace_back();
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      out.push_back(out[i].append(Sign::minus));
      out.push_back(out[i].append(Sign::plus));
    }
    begin = end;
  }
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

}  // namespace ivo
