#include "lag2/surd.hpp"

#include <cctype>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lag2/errors.hpp"

namespace lag2 {

namespace {

constexpr unsigned long kTrialDivisionBound = 1UL << 15;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialDivisionBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool is_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BigInt isqrt(const BigInt& n) {
  BigInt out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

struct RadicandSplit {
  BigInt root;  // radicand = root^2 * core
  BigInt core;
  bool certified;
};

RadicandSplit split_radicand(const BigInt& radicand) {
  BigInt rest = radicand;
  BigInt root{1};
  BigInt core{1};
  bool exhausted = true;
  for (const unsigned long p : small_primes()) {
    if (BigInt(p) * p > rest) {
      exhausted = false;
      break;
    }
    const unsigned long p2 = p * p;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p2)) {
      rest /= p2;
      root *= p;
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      core *= p;
    }
  }
  bool certified = true;
  if (is_square(rest)) {
    root *= isqrt(rest);
  } else {
    core *= rest;
    // All prime factors of `rest` exceed the bound B; below B^3 it has at most
    // two of them, and the square case was just excluded.
    if (exhausted) {
      const BigInt bound{kTrialDivisionBound};
      certified = rest < bound * bound * bound;
    }
  }
  return {root, core, certified};
}

// sign(a + b*sqrt(e)) for e >= 0 with sqrt(e) irrational or b == 0.
int sign_of(const BigInt& a, const BigInt& b, const BigInt& e) {
  const int sa = sgn(a);
  const int sb = (e == 0) ? 0 : sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const int c = cmp(BigInt(a * a), BigInt(b * b * e));
  if (c > 0) return sa;
  if (c < 0) return sb;
  return 0;
}

// Both operands rewritten over one radicand.
struct Aligned {
  BigInt p1, q1, r1, p2, q2, r2, d;
  bool squarefree;
};

Aligned align(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand()) {
    const bool use_x = !x.is_rational();
    return {x.p(), x.q(), x.r(), y.p(), y.q(), y.r(), use_x ? x.radicand() : y.radicand(),
            use_x ? x.radicand_squarefree() : y.radicand_squarefree()};
  }
  const BigInt prod = x.radicand() * y.radicand();
  if (!is_square(prod)) throw CrossFieldError();
  // sqrt(D2) = s * sqrt(D1) / D1 with s = sqrt(D1 * D2).
  const BigInt s = isqrt(prod);
  const BigInt& d1 = x.radicand();
  return {x.p(), x.q(), x.r(), y.p() * d1, y.q() * s, y.r() * d1, d1, x.radicand_squarefree()};
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r{num, den};
  r.canonicalize();
  return r;
}

// Round-half-even of x to an integer.
BigInt round_half_even(const Rational& x) {
  const BigInt n = floor_div(x.get_num(), x.get_den());
  const Rational frac = x - Rational(n);
  const int c = cmp(frac, Rational(1, 2));
  if (c < 0) return n;
  if (c > 0) return n + 1;
  return mpz_even_p(n.get_mpz_t()) ? n : BigInt(n + 1);
}

BigInt pow10(unsigned e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

std::string format_scaled(const BigInt& scaled, unsigned digits) {
  const bool negative = scaled < 0;
  const BigInt mag = abs(scaled);
  const BigInt unit = pow10(digits);
  const BigInt int_part = mag / unit;
  std::string frac = BigInt(mag % unit).get_str();
  frac.insert(0, digits - frac.size(), '0');
  std::string out = (negative ? "-" : "") + int_part.get_str();
  if (digits) out += "." + frac;
  return out;
}

}  // namespace

QuadraticSurd::QuadraticSurd(const Rational& x) : p_(x.get_num()), r_(x.get_den()) {}

QuadraticSurd::QuadraticSurd(Reduced, BigInt p, BigInt q, BigInt radicand, BigInt r, bool squarefree)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(radicand)), r_(std::move(r)), squarefree_(squarefree) {
  if (r_ == 0) throw DomainError("division by zero");
  if (q_ == 0 || d_ == 0) {
    q_ = 0;
    d_ = 0;
    squarefree_ = true;
  }
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  BigInt g = gcd(gcd(p_, q_), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

QuadraticSurd QuadraticSurd::make(BigInt p, BigInt q, BigInt radicand, BigInt r) {
  if (radicand < 0) throw DomainError("negative radicand");
  if (q == 0 || radicand == 0) return QuadraticSurd(Reduced{}, std::move(p), 0, 0, std::move(r), true);
  RadicandSplit split = split_radicand(radicand);
  q *= split.root;
  if (split.core == 1) return QuadraticSurd(Reduced{}, p + q, 0, 0, std::move(r), true);
  return QuadraticSurd(Reduced{}, std::move(p), std::move(q), std::move(split.core), std::move(r), split.certified);
}

Rational QuadraticSurd::rational_value() const {
  if (!is_rational()) throw DomainError("value is irrational");
  return make_rational(p_, r_);
}

int QuadraticSurd::sign() const { return sign_of(p_, q_, d_); }

QuadraticSurd QuadraticSurd::conjugate() const { return QuadraticSurd(Reduced{}, p_, -q_, d_, r_, squarefree_); }

QuadraticSurd QuadraticSurd::operator-() const { return QuadraticSurd(Reduced{}, -p_, -q_, d_, r_, squarefree_); }

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& y) {
  Aligned a = align(*this, y);
  *this = QuadraticSurd(Reduced{}, a.p1 * a.r2 + a.p2 * a.r1, a.q1 * a.r2 + a.q2 * a.r1, a.d, a.r1 * a.r2,
                        a.squarefree);
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& y) { return *this += -y; }

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& y) {
  Aligned a = align(*this, y);
  *this = QuadraticSurd(Reduced{}, a.p1 * a.p2 + a.q1 * a.q2 * a.d, a.p1 * a.q2 + a.p2 * a.q1, a.d, a.r1 * a.r2,
                        a.squarefree);
  return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& y) { return *this *= invert(y); }

QuadraticSurd invert(const QuadraticSurd& x) {
  // r / (p + q sqrt D) = r (p - q sqrt D) / (p^2 - q^2 D)
  const BigInt norm = x.p() * x.p() - x.q() * x.q() * x.radicand();
  if (norm == 0) throw DomainError("division by zero");
  return QuadraticSurd::make(x.r() * x.p(), -x.r() * x.q(), x.radicand(), norm);
}

std::strong_ordering compare(const QuadraticSurd& x, const QuadraticSurd& y) {
  // sign of (x - y) * r1 * r2 = A + B1 sqrt(D1) + B2 sqrt(D2)
  const BigInt a = x.p() * y.r() - y.p() * x.r();
  BigInt b1 = x.q() * y.r();
  BigInt b2 = -y.q() * x.r();
  const BigInt& d1 = x.radicand();
  const BigInt& d2 = y.radicand();
  int s;
  if (b1 == 0 || d1 == 0) {
    s = sign_of(a, b2, d2);
  } else if (b2 == 0 || d2 == 0) {
    s = sign_of(a, b1, d1);
  } else if (d1 == d2) {
    s = sign_of(a, b1 + b2, d1);
  } else if (const BigInt prod = d1 * d2; is_square(prod)) {
    const BigInt root = isqrt(prod);
    s = sign_of(a * d1, b1 * d1 + b2 * root, d1);
  } else {
    // Sign of the radical part, then of A against it via squaring.
    int t;
    if (sgn(b1) == sgn(b2)) {
      t = sgn(b1);
    } else {
      t = cmp(BigInt(b1 * b1 * d1), BigInt(b2 * b2 * d2)) > 0 ? sgn(b1) : sgn(b2);
    }
    if (a == 0 || sgn(a) == t) {
      s = (a == 0) ? t : sgn(a);
    } else {
      const int dominance = sign_of(a * a - b1 * b1 * d1 - b2 * b2 * d2, BigInt(-2 * b1 * b2), prod);
      s = dominance > 0 ? sgn(a) : t;
    }
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y) { return compare(x, y); }

bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.same_tuple(y)) return true;
  return compare(x, y) == std::strong_ordering::equal;
}

namespace {

// Enclosure of x * scale for an integer scale > 0.
RationalEnclosure enclose_scaled(const QuadraticSurd& x, const BigInt& scale) {
  if (x.is_rational()) {
    const Rational v = x.rational_value() * Rational(scale);
    return {v, v};
  }
  // q sqrt(D) scale lies strictly between t and t + 1 (q > 0) or -t-1 and -t.
  const BigInt t = isqrt(BigInt(x.q() * x.q() * x.radicand() * scale * scale));
  BigInt lo_num = x.p() * scale;
  BigInt hi_num = lo_num;
  if (x.q() > 0) {
    lo_num += t;
    hi_num += t + 1;
  } else {
    lo_num -= t + 1;
    hi_num -= t;
  }
  return {make_rational(lo_num, x.r()), make_rational(hi_num, x.r())};
}

}  // namespace

RationalEnclosure enclose(const QuadraticSurd& x, unsigned bits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  RationalEnclosure e = enclose_scaled(x, scale);
  e.lo /= scale;
  e.hi /= scale;
  return e;
}

std::string decimal(const Rational& x, unsigned digits) {
  return format_scaled(round_half_even(x * Rational(pow10(digits))), digits);
}

std::string decimal(const QuadraticSurd& x, unsigned digits, unsigned max_refinements) {
  if (x.is_rational()) return decimal(x.rational_value(), digits);
  unsigned guard = 3;
  for (unsigned round = 0; round <= max_refinements; ++round, guard *= 2) {
    const BigInt guard_scale = pow10(guard);
    const RationalEnclosure e = enclose_scaled(x, BigInt(pow10(digits) * guard_scale));
    const BigInt lo = round_half_even(e.lo / Rational(guard_scale));
    const BigInt hi = round_half_even(e.hi / Rational(guard_scale));
    if (lo == hi) return format_scaled(lo, digits);
  }
  throw PrecisionLimitError("decimal: refinement limit reached");
}

std::string to_string(const QuadraticSurd& x, SurdStyle style) {
  if (x.is_rational()) {
    if (x.r() == 1) return x.p().get_str();
    return x.p().get_str() + "/" + x.r().get_str();
  }
  const BigInt mag = abs(x.q());
  std::string radical = style == SurdStyle::ascii ? "sqrt(" + x.radicand().get_str() + ")"
                                                  : "√" + x.radicand().get_str();
  if (mag != 1) radical = mag.get_str() + (style == SurdStyle::ascii ? "*" : "") + radical;
  std::string body;
  if (x.p() == 0) {
    body = (x.q() < 0 ? "-" : "") + radical;
    return x.r() == 1 ? body : body + "/" + x.r().get_str();
  }
  body = x.p().get_str() + (x.q() < 0 ? " - " : " + ") + radical;
  return x.r() == 1 ? body : "(" + body + ")/" + x.r().get_str();
}

namespace {

class SurdParser {
 public:
  explicit SurdParser(std::string_view text) : text_(text) {}

  QuadraticSurd parse() {
    bool grouped = false;
    if (peek() == '(') {
      ++pos_;
      grouped = true;
    }
    parse_sum();
    if (grouped) expect(')');
    BigInt r{1};
    if (peek() == '/') {
      ++pos_;
      r = parse_unsigned();
      if (r == 0) fail("zero denominator");
    }
    if (peek() != '\0') fail("trailing characters");
    return QuadraticSurd::make(p_, q_, radicand_.value_or(0), r);
  }

 private:
  void parse_sum() {
    bool first = true;
    for (;;) {
      int sign = 1;
      const char c = peek();
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        return;
      }
      parse_term(sign);
      first = false;
      const char n = peek();
      if (n != '+' && n != '-') return;
    }
  }

  void parse_term(int sign) {
    BigInt coeff{1};
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_unsigned();
      have_coeff = true;
      if (peek() == '*') ++pos_;
    }
    if (starts_with("sqrt")) {
      pos_ += 4;
      expect('(');
      add_radical(sign * coeff, parse_unsigned());
      expect(')');
    } else if (starts_with("√")) {
      pos_ += std::string_view("√").size();
      add_radical(sign * coeff, parse_unsigned());
    } else if (have_coeff) {
      p_ += sign * coeff;
    } else {
      fail("expected integer or square root");
    }
  }

  void add_radical(const BigInt& coeff, const BigInt& radicand) {
    if (radicand_ && *radicand_ != radicand) fail("terms use different radicands");
    radicand_ = radicand;
    q_ += coeff;
  }

  bool starts_with(std::string_view s) {
    skip_space();
    return text_.substr(pos_, s.size()) == s;
  }

  BigInt parse_unsigned() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  BigInt p_{0};
  BigInt q_{0};
  std::optional<BigInt> radicand_;
};

}  // namespace

QuadraticSurd parse_surd(std::string_view text) { return SurdParser(text).parse(); }

QuadraticSurd apply(const Mobius& m, const QuadraticSurd& x) {
  return (QuadraticSurd(m.a) * x + QuadraticSurd(m.b)) / (QuadraticSurd(m.c) * x + QuadraticSurd(m.d));
}

QuadraticSurd periodic_value(const Word& period) {
  if (period.empty()) throw std::invalid_argument("period must be nonempty");
  // y = (A y + B) / (C y + D)  =>  C y^2 + (D - A) y - B = 0, positive root.
  const Mobius m = prefix_map(BigInt(period[0]), period.entries().subspan(1));
  const BigInt diff = m.a - m.d;
  return QuadraticSurd::make(diff, 1, diff * diff + 4 * m.b * m.c, 2 * m.c);
}

QuadraticSurd cf_to_surd(const PeriodicCF& cf) {
  return apply(prefix_map(cf.a0(), cf.preperiod().entries()), periodic_value(cf.period()));
}

PeriodicCF surd_to_cf(const QuadraticSurd& x) {
  if (x.is_rational()) throw DomainError("not eventually periodic: rational input");
  // x = (P + sqrt(N)) / Q with Q | N - P^2.
  BigInt big_p = x.p();
  BigInt big_q = x.r();
  BigInt n = x.q() * x.q() * x.radicand();
  if (x.q() < 0) {
    big_p = -big_p;
    big_q = -big_q;
  }
  if (BigInt(n - big_p * big_p) % big_q != 0) {
    const BigInt s = abs(big_q);
    big_p *= s;
    n *= s * s;
    big_q *= s;
  }
  const BigInt root = isqrt(n);
  auto next_quotient = [&] {
    return big_q > 0 ? floor_div(big_p + root, big_q) : floor_div(big_p + root + 1, big_q);
  };
  auto advance = [&](const BigInt& a) {
    big_p = a * big_q - big_p;
    big_q = BigInt(n - big_p * big_p) / big_q;
  };

  const BigInt a0 = next_quotient();
  advance(a0);
  std::vector<Quotient> quotients;
  std::unordered_map<std::string, std::size_t> seen;
  for (;;) {
    std::string key = big_p.get_str(16) + ":" + big_q.get_str(16);
    if (auto it = seen.find(key); it != seen.end()) {
      const std::size_t start = it->second;
      std::vector<Quotient> pre(quotients.begin(), quotients.begin() + static_cast<std::ptrdiff_t>(start));
      std::vector<Quotient> per(quotients.begin() + static_cast<std::ptrdiff_t>(start), quotients.end());
      return PeriodicCF(a0, Word(std::move(pre)), Word(std::move(per)));
    }
    seen.emplace(std::move(key), quotients.size());
    const BigInt a = next_quotient();
    if (a <= 0 || !a.fits_ulong_p()) throw ConsistencyError("surd_to_cf: partial quotient out of range");
    quotients.push_back(a.get_ui());
    advance(a);
  }
}

QuadraticSurd tail(const PeriodicCF& cf, std::size_t n) {
  if (n == 0) return cf_to_surd(cf);
  const std::size_t pre = cf.preperiod().size();
  if (n > pre) return periodic_value(cf.period().rotated(cf.period_position(n)));
  const Word rest = cf.preperiod().slice(n, pre - n);
  return apply(prefix_map(BigInt(cf.quotient(n)), rest.entries()), periodic_value(cf.period()));
}

QuadraticSurd reversed_period_limit(const Word& period, std::size_t j) {
  return invert(periodic_value(period.rotated(j + 1).reversed()));
}

}  // namespace lag2
