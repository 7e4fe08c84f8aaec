#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include "lag2/continued_fraction.hpp"

namespace lag2 {

// Default cap on enclosure refinement rounds for decimal output.
inline constexpr unsigned kDefaultRefinementLimit = 48;

// Exact real (p + q*sqrt(D)) / r with D >= 2 square-free when q != 0,
// q = D = 0 for rationals, r >= 1 and gcd(p, q, r) = 1.
//
// Square parts of D are removed by trial division plus a perfect-square test
// on the cofactor. When that cannot prove the remaining radicand square-free
// the value is still exact; radicand_squarefree() reports false and equality
// falls back on compare(), which never relies on the tuple being canonical.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(long n) : p_(n) {}  // NOLINT(google-explicit-constructor)
  QuadraticSurd(const BigInt& n) : p_(n) {}  // NOLINT(google-explicit-constructor)
  QuadraticSurd(const Rational& x);  // NOLINT(google-explicit-constructor)

  static QuadraticSurd make(BigInt p, BigInt q, BigInt radicand, BigInt r);
  static QuadraticSurd sqrt(const BigInt& radicand) { return make(0, 1, radicand, 1); }

  const BigInt& p() const noexcept { return p_; }
  const BigInt& q() const noexcept { return q_; }
  const BigInt& radicand() const noexcept { return d_; }
  const BigInt& r() const noexcept { return r_; }

  bool is_rational() const noexcept { return q_ == 0; }
  bool radicand_squarefree() const noexcept { return squarefree_; }
  Rational rational_value() const;
  int sign() const;

  QuadraticSurd conjugate() const;
  QuadraticSurd operator-() const;

  QuadraticSurd& operator+=(const QuadraticSurd& y);
  QuadraticSurd& operator-=(const QuadraticSurd& y);
  QuadraticSurd& operator*=(const QuadraticSurd& y);
  QuadraticSurd& operator/=(const QuadraticSurd& y);

  friend QuadraticSurd operator+(QuadraticSurd x, const QuadraticSurd& y) { return x += y; }
  friend QuadraticSurd operator-(QuadraticSurd x, const QuadraticSurd& y) { return x -= y; }
  friend QuadraticSurd operator*(QuadraticSurd x, const QuadraticSurd& y) { return x *= y; }
  friend QuadraticSurd operator/(QuadraticSurd x, const QuadraticSurd& y) { return x /= y; }

  friend std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y);
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y);

  // Same numbers, syntactically: identical (p, q, D, r).
  bool same_tuple(const QuadraticSurd& y) const {
    return p_ == y.p_ && q_ == y.q_ && d_ == y.d_ && r_ == y.r_;
  }

 private:
  struct Reduced {};
  QuadraticSurd(Reduced, BigInt p, BigInt q, BigInt radicand, BigInt r, bool squarefree);

  BigInt p_{0};
  BigInt q_{0};
  BigInt d_{0};
  BigInt r_{1};
  bool squarefree_ = true;
};

QuadraticSurd invert(const QuadraticSurd& x);
std::strong_ordering compare(const QuadraticSurd& x, const QuadraticSurd& y);

// Enclosure of width at most 1 / (r * 2^bits).
RationalEnclosure enclose(const QuadraticSurd& x, unsigned bits);

// Correctly rounded (half-even) with `digits` fractional digits. The result
// is read off an enclosure narrower than 10^-(digits + 2); refinement doubles
// the guard digits and throws PrecisionLimitError after `max_refinements`.
std::string decimal(const QuadraticSurd& x, unsigned digits,
                    unsigned max_refinements = kDefaultRefinementLimit);
std::string decimal(const Rational& x, unsigned digits);

enum class SurdStyle { ascii, unicode };

// "(1 + sqrt(5))/2", "sqrt(17)/4", "3/4"; unicode style writes √.
std::string to_string(const QuadraticSurd& x, SurdStyle style = SurdStyle::ascii);

// Accepts the forms printed by to_string in either style, e.g.
// "(21 + 3*sqrt(17))/32", "13√173/164", "-7/2". Throws ParseError.
QuadraticSurd parse_surd(std::string_view text);

// (a*x + b) / (c*x + d).
QuadraticSurd apply(const Mobius& m, const QuadraticSurd& x);

// [(w)*] = [w_1; w_2, ..., w_k, w_1, ...]; w nonempty.
QuadraticSurd periodic_value(const Word& period);

QuadraticSurd cf_to_surd(const PeriodicCF& cf);

// Throws DomainError for rational input.
PeriodicCF surd_to_cf(const QuadraticSurd& x);

// alpha_n = [a_n; a_{n+1}, ...]; tail(cf, 0) is the value itself.
QuadraticSurd tail(const PeriodicCF& cf, std::size_t n);

// Limit of alpha*_n = [0; a_n, a_{n-1}, ...] as n runs through indices with
// a_n at period position j: [0; (p_j, p_{j-1}, ..., p_{j+1})*].
QuadraticSurd reversed_period_limit(const Word& period, std::size_t j);

}  // namespace lag2
