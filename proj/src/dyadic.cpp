#include "ivo/dyadic.hpp"

#include <algorithm>

namespace ivo {

namespace {

Int parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("number: empty");
  std::size_t i = (text[0] == '-') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("number: missing digits");
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9')
      throw std::invalid_argument("number: bad character in '" +
                                  std::string(text) + "'");
  return Int(std::string(text));
}

bool is_power_of_two(const Int& v) {
  return v > 0 && (v & (v - 1)) == 0;
}

}  // namespace

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && num_ % 2 == 0) {
    num_ >>= 1;
    --exp_;
  }
}

Dyadic Dyadic::pow2(int k) {
  if (k >= 0) return Dyadic(Int(1) << k, 0);
  return Dyadic(Int(1), static_cast<unsigned>(-k));
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const unsigned e = std::max(a.exp_, b.exp_);
  Int n = (a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_));
  return Dyadic(std::move(n), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

int cmp(const Dyadic& a, const Dyadic& b) {
  const unsigned e = std::max(a.exp_, b.exp_);
  const Int x = a.num_ << (e - a.exp_);
  const Int y = b.num_ << (e - b.exp_);
  return x == y ? 0 : (x < y ? -1 : 1);
}

std::string Dyadic::str() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/2^" + std::to_string(exp_);
}

std::string Dyadic::str_plain() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/" + (Int(1) << exp_).str();
}

Dyadic Dyadic::parse(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_integer(text), 0);
  Int num = parse_integer(text.substr(0, slash));
  std::string_view den = text.substr(slash + 1);
  if (den.rfind("2^", 0) == 0) {
    const Int k = parse_integer(den.substr(2));
    if (k < 0 || k > 1000000)
      throw std::invalid_argument("dyadic: exponent out of range");
    return Dyadic(std::move(num), k.convert_to<unsigned>());
  }
  const Int q = parse_integer(den);
  if (!is_power_of_two(q))
    throw std::invalid_argument("dyadic: denominator not a power of two in '" +
                                std::string(text) + "'");
  return Dyadic(std::move(num), boost::multiprecision::msb(q));
}

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational::Rational(const Dyadic& d) : Rational(d.num(), Int(1) << d.exp()) {}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::halved() const { return Rational(num_, den_ * 2); }

int cmp(const Rational& a, const Rational& b) {
  const Int x = a.num_ * b.den_;
  const Int y = b.num_ * a.den_;
  return x == y ? 0 : (x < y ? -1 : 1);
}

bool Rational::is_dyadic() const { return is_power_of_two(den_); }

Dyadic Rational::to_dyadic() const {
  if (!is_dyadic()) throw std::domain_error("Rational: not dyadic: " + str());
  return Dyadic(num_, boost::multiprecision::msb(den_));
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::parse(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text), 1);
  return Rational(parse_integer(text.substr(0, slash)),
                  parse_integer(text.substr(slash + 1)));
}

std::string FormalBall::str() const {
  return center.str() + " ± " + radius.str();
}

bool refines(const FormalBall& a, const FormalBall& b) {
  const Rational gap = (Rational(b.center) - Rational(a.center)).abs();
  return gap + a.radius < b.radius;
}

bool nested_in(const FormalBall& a, const FormalBall& b) {
  const Rational gap = (Rational(b.center) - Rational(a.center)).abs();
  return gap + a.radius <= b.radius;
}

FormalBall interpolate(const FormalBall& a, const FormalBall& b) {
  if (!refines(a, b))
    throw std::invalid_argument("interpolate: balls do not refine");
  const Rational gap = (Rational(b.center) - Rational(a.center)).abs();
  return FormalBall(a.center, midpoint(a.radius, b.radius - gap));
}

Dyadic cprime(const SignWord& s) {
  Int num = 0;
  for (std::size_t i = 1; i <= s.length(); ++i)
    num = num * 2 + (s.at(i) == Sign::plus ? 1 : -1);
  return Dyadic(std::move(num), static_cast<unsigned>(s.length()));
}

SignWord cprime_inv(const Dyadic& d) {
  const Dyadic one = Dyadic::from_int(1);
  if (d <= -one || d >= one)
    throw std::domain_error("cprime_inv: value out of (-1,1): " + d.str());
  SignWord w;
  Dyadic x = d;
  while (!x.is_zero()) {
    const Sign digit = x.sign() > 0 ? Sign::plus : Sign::minus;
    w = w.append(digit);
    x = x.doubled() - (digit == Sign::plus ? one : -one);
  }
  return w;
}

// ---------------------------------------------------------------------------
// IntervalOpen

namespace {

using Segment = IntervalOpen::Segment;

// Bound keys: lower bounds ordered by where the piece starts (closed -1
// first), upper bounds by where it ends (closed 1 last).
int cmp_lower(const std::optional<Dyadic>& a, const std::optional<Dyadic>& b) {
  if (!a && !b) return 0;
  if (!a) return cmp(Dyadic::from_int(-1), *b) <= 0 ? -1 : 1;
  if (!b) return cmp(*a, Dyadic::from_int(-1)) >= 0 ? 1 : -1;
  return cmp(*a, *b);
}

int cmp_upper(const std::optional<Dyadic>& a, const std::optional<Dyadic>& b) {
  if (!a && !b) return 0;
  if (!a) return cmp(Dyadic::from_int(1), *b) >= 0 ? 1 : -1;
  if (!b) return cmp(*a, Dyadic::from_int(1)) <= 0 ? -1 : 1;
  return cmp(*a, *b);
}

std::optional<Dyadic> max_lower(const std::optional<Dyadic>& a,
                                const std::optional<Dyadic>& b) {
  return cmp_lower(a, b) >= 0 ? a : b;
}

std::optional<Dyadic> min_lower(const std::optional<Dyadic>& a,
                                const std::optional<Dyadic>& b) {
  return cmp_lower(a, b) <= 0 ? a : b;
}

std::optional<Dyadic> min_upper(const std::optional<Dyadic>& a,
                                const std::optional<Dyadic>& b) {
  return cmp_upper(a, b) <= 0 ? a : b;
}

std::optional<Dyadic> max_upper(const std::optional<Dyadic>& a,
                                const std::optional<Dyadic>& b) {
  return cmp_upper(a, b) >= 0 ? a : b;
}

bool segment_nonempty(const Segment& s) {
  const Dyadic lo_edge = Dyadic::from_int(-1);
  const Dyadic hi_edge = Dyadic::from_int(1);
  if (!s.lo && !s.hi) return true;
  if (!s.lo) return *s.hi > lo_edge;
  if (!s.hi) return *s.lo < hi_edge;
  return *s.lo < *s.hi;
}

Segment clip(Segment s) {
  const Dyadic lo_edge = Dyadic::from_int(-1);
  const Dyadic hi_edge = Dyadic::from_int(1);
  if (s.lo && *s.lo < lo_edge) s.lo.reset();
  if (s.hi && *s.hi > hi_edge) s.hi.reset();
  return s;
}

}  // namespace

IntervalOpen IntervalOpen::whole() {
  return segment(std::nullopt, std::nullopt);
}

IntervalOpen IntervalOpen::segment(std::optional<Dyadic> lo,
                                   std::optional<Dyadic> hi) {
  return from_segments({Segment{std::move(lo), std::move(hi)}});
}

IntervalOpen IntervalOpen::from_segments(std::vector<Segment> segs) {
  IntervalOpen out;
  out.segs_ = std::move(segs);
  out.canonicalize();
  return out;
}

void IntervalOpen::canonicalize() {
  std::vector<Segment> clipped;
  for (Segment& s : segs_) {
    Segment c = clip(std::move(s));
    if (segment_nonempty(c)) clipped.push_back(std::move(c));
  }
  std::sort(clipped.begin(), clipped.end(),
            [](const Segment& a, const Segment& b) {
              const int c = cmp_lower(a.lo, b.lo);
              if (c != 0) return c < 0;
              return cmp_upper(a.hi, b.hi) < 0;
            });
  segs_.clear();
  for (Segment& next : clipped) {
    if (!segs_.empty()) {
      Segment& cur = segs_.back();
      // Merge only when the two pieces genuinely overlap as opens.
      const Segment common{max_lower(cur.lo, next.lo),
                           min_upper(cur.hi, next.hi)};
      if (segment_nonempty(common)) {
        cur.lo = min_lower(cur.lo, next.lo);
        cur.hi = max_upper(cur.hi, next.hi);
        continue;
      }
    }
    segs_.push_back(std::move(next));
  }
}

IntervalOpen IntervalOpen::from_ball(const FormalBall& b) {
  const Rational lo_r = Rational(b.center) - b.radius;
  const Rational hi_r = Rational(b.center) + b.radius;
  const Rational lo_edge = Rational::from_int(-1);
  const Rational hi_edge = Rational::from_int(1);
  if (lo_r >= hi_edge || hi_r <= lo_edge) return empty();
  Segment s;
  if (lo_r >= lo_edge) {
    if (!lo_r.is_dyadic())
      throw std::domain_error("from_ball: non-dyadic endpoint " + lo_r.str());
    s.lo = lo_r.to_dyadic();
  }
  if (hi_r <= hi_edge) {
    if (!hi_r.is_dyadic())
      throw std::domain_error("from_ball: non-dyadic endpoint " + hi_r.str());
    s.hi = hi_r.to_dyadic();
  }
  return from_segments({std::move(s)});
}

bool IntervalOpen::is_whole() const {
  return segs_.size() == 1 && !segs_[0].lo && !segs_[0].hi;
}

IntervalOpen join(const IntervalOpen& a, const IntervalOpen& b) {
  std::vector<Segment> all = a.segs_;
  all.insert(all.end(), b.segs_.begin(), b.segs_.end());
  return IntervalOpen::from_segments(std::move(all));
}

IntervalOpen meet(const IntervalOpen& a, const IntervalOpen& b) {
  std::vector<Segment> out;
  for (const Segment& x : a.segs_) {
    for (const Segment& y : b.segs_) {
      Segment common{max_lower(x.lo, y.lo), min_upper(x.hi, y.hi)};
      if (segment_nonempty(common)) out.push_back(std::move(common));
    }
  }
  return IntervalOpen::from_segments(std::move(out));
}

bool leq(const IntervalOpen& a, const IntervalOpen& b) {
  return meet(a, b) == a;
}

bool operator==(const IntervalOpen& a, const IntervalOpen& b) {
  if (a.segs_.size() != b.segs_.size()) return false;
  for (std::size_t i = 0; i < a.segs_.size(); ++i) {
    if (a.segs_[i].lo.has_value() != b.segs_[i].lo.has_value()) return false;
    if (a.segs_[i].hi.has_value() != b.segs_[i].hi.has_value()) return false;
    if (a.segs_[i].lo && *a.segs_[i].lo != *b.segs_[i].lo) return false;
    if (a.segs_[i].hi && *a.segs_[i].hi != *b.segs_[i].hi) return false;
  }
  return true;
}

bool IntervalOpen::contains(const Rational& x) const {
  for (const Segment& s : segs_) {
    const bool above = s.lo ? x > Rational(*s.lo) : x >= Rational::from_int(-1);
    const bool below = s.hi ? x < Rational(*s.hi) : x <= Rational::from_int(1);
    if (above && below) return true;
  }
  return false;
}

std::string IntervalOpen::str() const {
  if (segs_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    if (i > 0) out += " u ";
    const Segment& s = segs_[i];
    out += s.lo ? "(" + s.lo->str_plain() + "," : "[-1,";
    out += s.hi ? s.hi->str_plain() + ")" : "1]";
  }
  return out;
}

IntervalOpen IntervalOpen::parse(std::string_view text) {
  if (text == "{}") return empty();
  std::vector<Segment> segs;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(" u ", pos);
    std::string_view piece =
        text.substr(pos, end == std::string_view::npos ? end : end - pos);
    if (piece.size() < 4 || (piece.front() != '[' && piece.front() != '('))
      throw std::invalid_argument("interval: bad segment '" +
                                  std::string(piece) + "'");
    const std::size_t comma = piece.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("interval: missing comma");
    std::string_view lo_text = piece.substr(1, comma - 1);
    std::string_view hi_text = piece.substr(comma + 1, piece.size() - comma - 2);
    Segment s;
    if (piece.front() == '[') {
      if (lo_text != "-1")
        throw std::invalid_argument("interval: closed end must be -1");
    } else {
      s.lo = Dyadic::parse(lo_text);
    }
    if (piece.back() == ']') {
      if (hi_text != "1")
        throw std::invalid_argument("interval: closed end must be 1");
    } else if (piece.back() == ')') {
      s.hi = Dyadic::parse(hi_text);
    } else {
      throw std::invalid_argument("interval: bad segment end");
    }
    segs.push_back(std::move(s));
    if (end == std::string_view::npos) break;
    pos = end + 3;
  }
  return from_segments(std::move(segs));
}

}  // namespace ivo
