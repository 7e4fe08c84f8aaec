#include "lag2/continued_fraction.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lag2 {

namespace {

void check_entries(const std::vector<Quotient>& entries) {
  if (std::find(entries.begin(), entries.end(), Quotient{0}) != entries.end()) {
    throw std::invalid_argument("partial quotients must be positive");
  }
}

}  // namespace

Word::Word(std::initializer_list<Quotient> entries) : entries_(entries) { check_entries(entries_); }

Word::Word(std::vector<Quotient> entries) : entries_(std::move(entries)) { check_entries(entries_); }

Word Word::reversed() const {
  Word out;
  out.entries_.assign(entries_.rbegin(), entries_.rend());
  return out;
}

Word Word::rotated(std::size_t shift) const {
  Word out = *this;
  if (!entries_.empty()) {
    std::rotate(out.entries_.begin(), out.entries_.begin() + static_cast<std::ptrdiff_t>(shift % size()),
                out.entries_.end());
  }
  return out;
}

Word Word::repeated(std::size_t times) const {
  Word out;
  out.entries_.reserve(entries_.size() * times);
  for (std::size_t i = 0; i < times; ++i) out.entries_.insert(out.entries_.end(), entries_.begin(), entries_.end());
  return out;
}

Word Word::slice(std::size_t first, std::size_t count) const {
  if (first + count > size()) throw std::out_of_range("Word::slice out of range");
  Word out;
  out.entries_.assign(entries_.begin() + static_cast<std::ptrdiff_t>(first),
                      entries_.begin() + static_cast<std::ptrdiff_t>(first + count));
  return out;
}

Word& Word::operator+=(const Word& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  return *this;
}

std::string to_string(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

Word primitive_root(const Word& word) {
  const std::size_t n = word.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = word[i] == word[i - d];
    if (periodic) return word.slice(0, d);
  }
  return word;
}

bool is_primitive(const Word& word) { return primitive_root(word).size() == word.size(); }

Word least_rotation(const Word& word) {
  Word best = word;
  for (std::size_t s = 1; s < word.size(); ++s) best = std::min(best, word.rotated(s));
  return best;
}

BigInt continuant(std::span<const Quotient> word) {
  BigInt prev{1};  // continuant of the empty word
  BigInt prev2{0};
  for (const Quotient a : word) {
    BigInt next = prev * a + prev2;
    prev2 = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

void Mobius::push(const BigInt& quotient) {
  BigInt na = a * quotient + b;
  BigInt nc = c * quotient + d;
  b = std::move(a);
  d = std::move(c);
  a = std::move(na);
  c = std::move(nc);
}

Mobius prefix_map(const BigInt& a0, std::span<const Quotient> word) {
  Mobius m;
  m.push(a0);
  for (const Quotient a : word) m.push(BigInt{a});
  return m;
}

Rational evaluate(const BigInt& a0, std::span<const Quotient> word) {
  const Mobius m = prefix_map(a0, word);
  Rational r{m.a, m.c};
  r.canonicalize();
  return r;
}

RationalEnclosure cylinder(const BigInt& a0, std::span<const Quotient> word) {
  const Mobius m = prefix_map(a0, word);
  Rational at_infinity{m.a, m.c};
  Rational at_one{m.a + m.b, m.c + m.d};
  at_infinity.canonicalize();
  at_one.canonicalize();
  if (at_one < at_infinity) return {at_one, at_infinity};
  return {at_infinity, at_one};
}

PeriodicCF::PeriodicCF(BigInt a0, Word preperiod, Word period)
    : a0_(std::move(a0)), preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("period must be nonempty");
  period_ = primitive_root(period_);
  // Absorb preperiod entries that repeat the period's last entry.
  std::vector<Quotient> pre(preperiod_.begin(), preperiod_.end());
  while (!pre.empty() && pre.back() == period_.back()) {
    pre.pop_back();
    period_ = period_.rotated(period_.size() - 1);
  }
  preperiod_ = Word(std::move(pre));
}

Quotient PeriodicCF::quotient(std::size_t n) const {
  if (n == 0) throw std::out_of_range("a_0 is not a positive partial quotient");
  if (n <= preperiod_.size()) return preperiod_[n - 1];
  return period_[period_position(n)];
}

std::size_t PeriodicCF::period_position(std::size_t n) const {
  if (n <= preperiod_.size()) throw std::out_of_range("index lies in the preperiod");
  return (n - preperiod_.size() - 1) % period_.size();
}

Word PeriodicCF::quotients(std::size_t first, std::size_t count) const {
  std::vector<Quotient> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(quotient(first + i));
  return Word(std::move(out));
}

PeriodicCF canonicalize(BigInt a0, Word preperiod, Word period) {
  return PeriodicCF(std::move(a0), std::move(preperiod), std::move(period));
}

bool equivalent(const PeriodicCF& x, const PeriodicCF& y) {
  return x.period().size() == y.period().size() && least_rotation(x.period()) == least_rotation(y.period());
}

Convergent convergent_terms(const PeriodicCF& cf, std::size_t n) {
  const Mobius m = prefix_map(cf.a0(), n ? cf.quotients(1, n).entries() : std::span<const Quotient>{});
  return {m.a, m.c};
}

Rational convergent(const PeriodicCF& cf, std::size_t n) {
  auto [p, q] = convergent_terms(cf, n);
  Rational r{p, q};
  r.canonicalize();
  return r;
}

Rational reversed_tail(const PeriodicCF& cf, std::size_t n) {
  if (n == 0) throw std::out_of_range("reversed tail is defined for n >= 1 only");
  const Word w = cf.quotients(1, n);
  Rational r{continuant(w.slice(0, n - 1)), continuant(w)};
  r.canonicalize();
  return r;
}

RationalEnclosure enclosure(const PeriodicCF& cf, std::size_t depth) {
  if (depth == 0) throw std::out_of_range("enclosure depth must be >= 1");
  const Mobius m = prefix_map(cf.a0(), cf.quotients(1, depth + 1).entries());
  Rational next{m.a, m.c};
  Rational here{m.b, m.d};
  next.canonicalize();
  here.canonicalize();
  if (next < here) return {next, here};
  return {here, next};
}

RationalEnclosure enclosure_by_periods(const PeriodicCF& cf, std::size_t periods) {
  const std::size_t depth = cf.preperiod().size() + std::max<std::size_t>(periods, 1) * cf.period().size();
  return enclosure(cf, depth);
}

}  // namespace lag2
