#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lag2 {

using BigInt = mpz_class;
using Rational = mpq_class;
using Quotient = unsigned long;

// Finite sequence of partial quotients, every entry >= 1.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Quotient> entries);
  explicit Word(std::vector<Quotient> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Quotient operator[](std::size_t i) const { return entries_[i]; }
  Quotient back() const { return entries_.back(); }
  std::span<const Quotient> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  Word reversed() const;
  // Left rotation: rotated(1) of (a,b,c) is (b,c,a).
  Word rotated(std::size_t shift) const;
  Word repeated(std::size_t times) const;
  Word slice(std::size_t first, std::size_t count) const;

  Word& operator+=(const Word& other);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Quotient> entries_;
};

std::string to_string(const Word& word);

// Smallest word u with word == u^k.
Word primitive_root(const Word& word);
bool is_primitive(const Word& word);
Word least_rotation(const Word& word);

// <a_1,...,a_t>; the empty continuant is 1.
BigInt continuant(std::span<const Quotient> word);
inline BigInt continuant(const Word& word) { return continuant(word.entries()); }

// x -> (a*x + b) / (c*x + d)
struct Mobius {
  BigInt a{1}, b{0}, c{0}, d{1};

  // Composes with the map t -> q + 1/t on the right.
  void push(const BigInt& quotient);
  friend bool operator==(const Mobius&, const Mobius&) = default;
};

// Map t -> [a0; w_1, ..., w_k, t].
Mobius prefix_map(const BigInt& a0, std::span<const Quotient> word);

// Value of the finite continued fraction [a0; w_1, ..., w_k].
Rational evaluate(const BigInt& a0, std::span<const Quotient> word);

struct RationalEnclosure {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool strictly_contains(const Rational& x) const { return lo < x && x < hi; }
};

// Closed interval of every real whose expansion starts with [a0; w].
RationalEnclosure cylinder(const BigInt& a0, std::span<const Quotient> word);

// Eventually periodic continued fraction [a0; preperiod, (period)*], always
// held in canonical form: primitive period, shortest preperiod.
class PeriodicCF {
 public:
  PeriodicCF(BigInt a0, Word preperiod, Word period);

  const BigInt& a0() const noexcept { return a0_; }
  const Word& preperiod() const noexcept { return preperiod_; }
  const Word& period() const noexcept { return period_; }
  bool purely_periodic() const noexcept { return preperiod_.empty(); }

  // a_n for n >= 1.
  Quotient quotient(std::size_t n) const;
  // Index into period() of a_n, for n past the preperiod.
  std::size_t period_position(std::size_t n) const;
  // a_first, ..., a_{first+count-1}; first >= 1.
  Word quotients(std::size_t first, std::size_t count) const;

  bool operator==(const PeriodicCF&) const = default;

 private:
  BigInt a0_;
  Word preperiod_;
  Word period_;
};

PeriodicCF canonicalize(BigInt a0, Word preperiod, Word period);

// Two quadratic irrationals share a tail iff their periods are rotations.
bool equivalent(const PeriodicCF& x, const PeriodicCF& y);

struct Convergent {
  BigInt p;
  BigInt q;
};

// p_n, q_n of [a0; a_1, ..., a_n].
Convergent convergent_terms(const PeriodicCF& cf, std::size_t n);
Rational convergent(const PeriodicCF& cf, std::size_t n);

// alpha*_n = [0; a_n, ..., a_1]; n >= 1.
Rational reversed_tail(const PeriodicCF& cf, std::size_t n);

// Bracket formed by the convergents of index depth and depth + 1.
RationalEnclosure enclosure(const PeriodicCF& cf, std::size_t depth);

// Bracket at depth preperiod + periods * period_length, so each step
// appends one whole period.
RationalEnclosure enclosure_by_periods(const PeriodicCF& cf, std::size_t periods);

}  // namespace lag2
