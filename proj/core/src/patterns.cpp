#include "lag2/patterns.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "lag2/errors.hpp"

namespace lag2 {

namespace {

// Free quotients beyond the fixed word that the perturbation check visits on
// each side.
constexpr std::size_t kPerturbationHorizon = 12;

const QuadraticSurd& lambda_inf() {
  static const QuadraticSurd value = lambda_infinity();
  return value;
}

std::vector<Quotient> reversed_prefix(const Word& word, std::size_t count) {
  std::vector<Quotient> out(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(count));
  std::reverse(out.begin(), out.end());
  return out;
}

std::string short_decimal(const Rational& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x.get_d());
  return buf;
}

bool occurs_through(std::span<const Quotient> seq, const Word& pattern, std::size_t index) {
  const std::size_t len = pattern.size();
  if (len == 0 || len > seq.size()) return false;
  const std::size_t first = index + 1 >= len ? index + 1 - len : 0;
  for (std::size_t i = first; i <= index && i + len <= seq.size(); ++i) {
    if (std::equal(pattern.begin(), pattern.end(), seq.begin() + static_cast<std::ptrdiff_t>(i))) return true;
  }
  return false;
}

QuadraticSurd kappa_value(KappaKind kind, const QuadraticSurd& alpha, const QuadraticSurd& alpha_star) {
  switch (kind) {
    case KappaKind::kappa1: return kappa1(alpha, alpha_star);
    case KappaKind::kappa2: return kappa2(alpha, alpha_star);
    case KappaKind::kappa4: return kappa4(alpha, alpha_star);
    case KappaKind::golden: break;
  }
  throw std::invalid_argument("certify needs kappa1, kappa2 or kappa4");
}

// Quotients of one side: the right side starts with a0, the left side
// (a0 = 0) with its first head entry. Periodic sides are unrolled by whole
// periods until `length` entries are present.
std::vector<Quotient> side_sequence(const ExtremalCF& cf, bool include_a0, std::size_t length) {
  std::vector<Quotient> out;
  if (include_a0) out.push_back(cf.a0.get_ui());
  out.insert(out.end(), cf.head.begin(), cf.head.end());
  while (!cf.finite() && out.size() < length) out.insert(out.end(), cf.period.begin(), cf.period.end());
  return out;
}

ExtremalCF with_sequence(const ExtremalCF& cf, bool include_a0, const std::vector<Quotient>& seq) {
  ExtremalCF out;
  out.period = cf.period;
  if (include_a0) {
    out.a0 = BigInt(seq.front());
    out.head = Word(std::vector<Quotient>(seq.begin() + 1, seq.end()));
  } else {
    out.a0 = 0;
    out.head = Word(seq);
  }
  return out;
}

RationalEnclosure unit_interval() { return {Rational(0), Rational(1)}; }

}  // namespace

MarkedPattern::MarkedPattern(Word w, std::size_t m, Quotient cap)
    : word(std::move(w)), mark(m), alphabet_cap(cap) {
  if (mark >= word.size()) throw std::invalid_argument("mark outside the pattern");
  if (word[mark] < 2) throw std::invalid_argument("marked quotient must be >= 2");
  if (alphabet_cap < 1) throw std::invalid_argument("alphabet cap must be >= 1");
}

std::string to_string(const MarkedPattern& pattern) {
  std::string out;
  for (std::size_t i = 0; i < pattern.word.size(); ++i) {
    const std::string digit = std::to_string(pattern.word[i]);
    if (i == pattern.mark) {
      out += "[" + digit + "]";
    } else {
      if (digit.size() > 1 && !out.empty()) out += ",";
      out += digit;
    }
  }
  return out;
}

QuadraticSurd ExtremalCF::value() const {
  if (finite()) return QuadraticSurd(evaluate(a0, head.entries()));
  return apply(prefix_map(a0, head.entries()), periodic_value(period));
}

std::vector<Quotient> ExtremalCF::sequence(std::size_t count) const {
  std::vector<Quotient> out{a0.get_ui()};
  for (std::size_t i = 0; out.size() <= count && i < head.size(); ++i) out.push_back(head[i]);
  for (std::size_t i = 0; !finite() && out.size() <= count; ++i) out.push_back(period[i % period.size()]);
  return out;
}

std::string to_string(const ExtremalCF& cf) {
  std::string body = to_string(cf.head);
  if (!cf.finite()) {
    if (!body.empty()) body += ",";
    body += "(" + to_string(cf.period) + ")*";
  }
  if (body.empty()) return "[" + cf.a0.get_str() + "]";
  return "[" + cf.a0.get_str() + ";" + body + "]";
}

ProhibitionCertificate certify(const MarkedPattern& pattern, KappaKind kappa, const ExtremalCF& extremal_left,
                               const ExtremalCF& extremal_right, std::span<const Word> forbidden) {
  const Word& w = pattern.word;
  const std::size_t m = pattern.mark;
  // The right side begins at a_n for kappa1 and kappa4, at a_{n+1} for kappa2;
  // the left side begins one index before it and runs backwards.
  const std::size_t split = kappa == KappaKind::kappa2 ? m + 1 : m;
  const std::vector<Quotient> fixed_right(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
  const std::vector<Quotient> fixed_left = reversed_prefix(w, split);

  if (extremal_left.a0 != 0) throw DomainError("left extension must be of the form [0; ...]");
  if (extremal_right.a0 < 1) throw DomainError("right extension must be >= 1");
  if (extremal_left.finite() && extremal_left.head.empty() && !fixed_left.empty())
    throw DomainError("extension inconsistent with pattern");

  const std::vector<Quotient> right = side_sequence(extremal_right, true, fixed_right.size() + kPerturbationHorizon);
  const std::vector<Quotient> left = side_sequence(extremal_left, false, fixed_left.size() + kPerturbationHorizon);
  if (right.size() < fixed_right.size() || !std::equal(fixed_right.begin(), fixed_right.end(), right.begin()) ||
      left.size() < fixed_left.size() || !std::equal(fixed_left.begin(), fixed_left.end(), left.begin()))
    throw DomainError("extension inconsistent with pattern");

  std::vector<Quotient> alphabet;
  for (Quotient a = 1; a <= pattern.alphabet_cap; ++a) {
    const bool banned = std::any_of(forbidden.begin(), forbidden.end(),
                                    [a](const Word& f) { return f.size() == 1 && f[0] == a; });
    if (!banned) alphabet.push_back(a);
  }

  ProhibitionCertificate cert{pattern, kappa, extremal_left, extremal_right, {}, false, 0};
  cert.bound = kappa_value(kappa, extremal_right.value(), extremal_left.value());

  for (const bool right_side : {true, false}) {
    const std::vector<Quotient>& seq = right_side ? right : left;
    const std::size_t fixed = right_side ? fixed_right.size() : fixed_left.size();
    for (std::size_t i = fixed; i < seq.size(); ++i) {
      const auto at = std::find(alphabet.begin(), alphabet.end(), seq[i]);
      if (at == alphabet.end()) throw DomainError("extension uses a quotient outside the alphabet");
      const std::size_t ix = static_cast<std::size_t>(at - alphabet.begin());
      for (const std::size_t j : {ix - 1, ix + 1}) {
        if (j >= alphabet.size()) continue;  // ix - 1 wraps for ix = 0
        std::vector<Quotient> changed = seq;
        changed[i] = alphabet[j];
        const std::vector<Quotient>& r = right_side ? changed : right;
        const std::vector<Quotient>& l = right_side ? left : changed;
        std::vector<Quotient> window(l.rbegin(), l.rend());
        window.insert(window.end(), r.begin(), r.end());
        const std::size_t index = right_side ? l.size() + i : l.size() - 1 - i;
        if (std::any_of(forbidden.begin(), forbidden.end(),
                        [&](const Word& f) { return occurs_through(window, f, index); }))
          continue;
        ++cert.perturbations_checked;
        const ExtremalCF right_cf = right_side ? with_sequence(extremal_right, true, changed) : extremal_right;
        const ExtremalCF left_cf = right_side ? extremal_left : with_sequence(extremal_left, false, changed);
        if (kappa_value(kappa, right_cf.value(), left_cf.value()) < cert.bound)
          throw DomainError("extremal direction violated");
      }
    }
  }
  cert.exceeds_lambda_inf = cert.bound > lambda_inf();
  return cert;
}

std::vector<ProhibitionCertificate> lemma2_table() {
  const auto right = [](Word pre, Word period) {
    const Quotient a0 = pre[0];
    return ExtremalCF{BigInt(a0), pre.slice(1, pre.size() - 1), std::move(period)};
  };
  const auto left = [](Word head, Word period) { return ExtremalCF{BigInt(0), std::move(head), std::move(period)}; };

  std::vector<Word> forbidden;
  std::vector<ProhibitionCertificate> rows;
  rows.push_back(certify(MarkedPattern({5}, 0, 5), KappaKind::kappa4, ExtremalCF{BigInt(0), {}, {}},
                         ExtremalCF{BigInt(5), {}, {}}));
  rows.push_back(certify(MarkedPattern({4}, 0, 4), KappaKind::kappa4, left({}, {4, 1}), right({4}, {4, 1})));
  rows.push_back(certify(MarkedPattern({2}, 0, 3), KappaKind::kappa2, left({2}, {1, 3}), right({1}, {3, 1})));
  forbidden.push_back({2});
  rows.push_back(
      certify(MarkedPattern({3, 3}, 1), KappaKind::kappa1, left({3}, {3, 1}), right({3}, {1, 3}), forbidden));
  forbidden.push_back({3, 3});
  rows.push_back(certify(MarkedPattern({3, 1, 3}, 0), KappaKind::kappa4, left({1}, {1, 3}),
                         right({3, 1, 3}, {3, 1}), forbidden));
  forbidden.push_back({3, 1, 3});
  rows.push_back(certify(MarkedPattern({3, 1, 1, 1, 3}, 0), KappaKind::kappa4, left({1, 1}, {3, 1, 1, 1}),
                         right({3, 1, 1, 1, 3, 1, 1}, {3, 1, 1, 1}), forbidden));
  forbidden.push_back({3, 1, 1, 1, 3});
  rows.push_back(certify(MarkedPattern({3, 1, 1, 1, 1, 1}, 0), KappaKind::kappa4, left({1, 1}, {3, 1, 1, 1}),
                         right({3, 1, 1, 1, 1, 1, 1}, {3, 1, 1, 1}), forbidden));
  forbidden.push_back({3, 1, 1, 1, 1, 1});
  rows.push_back(certify(MarkedPattern({1, 1, 1, 3, 1, 1, 1}, 3), KappaKind::kappa4,
                         left({1, 1, 1, 1}, {3, 1, 1, 1}), right({3, 1, 1, 1, 1}, {3, 1, 1, 1}), forbidden));
  return rows;
}

std::optional<std::size_t> locate_bound(std::span<const ProhibitionCertificate> rows, const Rational& target,
                                        const Rational& tolerance) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const RationalEnclosure e = enclose(rows[i].bound, 96);
    if (abs(e.lo - target) <= tolerance || abs(e.hi - target) <= tolerance) return i;
  }
  return std::nullopt;
}

KappaBounds kappa_bounds(const RationalEnclosure& alpha_n, const RationalEnclosure& alpha_star_prev,
                         const RationalEnclosure& alpha_next, const RationalEnclosure& alpha_star_n,
                         bool next_unbounded) {
  KappaBounds b{alpha_n, alpha_star_prev, alpha_next, alpha_star_n, next_unbounded, {}, {}, {}};
  b.kappa1 = {kappa1(alpha_n.hi, alpha_star_prev.hi), kappa1(alpha_n.lo, alpha_star_prev.lo)};
  b.kappa4 = {kappa4(alpha_n.lo, alpha_star_prev.lo), kappa4(alpha_n.hi, alpha_star_prev.hi)};
  b.kappa2.lo = kappa2(alpha_next.lo, alpha_star_n.lo);
  if (next_unbounded) {
    if (alpha_star_n.hi >= 1) throw DomainError("kappa2 pole: alpha*_n = 1");
    b.kappa2.hi = Rational(1) / (Rational(1) - alpha_star_n.hi);
  } else {
    b.kappa2.hi = kappa2(alpha_next.hi, alpha_star_n.hi);
  }
  return b;
}

KappaBounds kappa_bounds(const MarkedPattern& pattern) {
  const Word& w = pattern.word;
  const std::size_t m = pattern.mark;
  const auto after = [&](std::size_t i) {
    return std::span<const Quotient>(w.entries()).subspan(i);
  };
  const RationalEnclosure alpha_n = cylinder(BigInt(w[m]), after(m + 1));
  const RationalEnclosure star_prev = m == 0 ? unit_interval() : cylinder(0, reversed_prefix(w, m));
  const RationalEnclosure star_n = cylinder(0, reversed_prefix(w, m + 1));
  if (m + 1 < w.size()) return kappa_bounds(alpha_n, star_prev, cylinder(BigInt(w[m + 1]), after(m + 2)), star_n);
  return kappa_bounds(alpha_n, star_prev, {Rational(1), Rational(1)}, star_n, true);
}

namespace {

Word block311(std::size_t times) { return Word{3, 1, 1}.repeated(times); }

// alpha_n + alpha*_{n-1} compared with 4 lambda_inf, the value of the sum on
// the limiting configuration [(3,1,1)*] + [0; 1,1,1,1,(3,1,1)*].
Check direct_sum_check(std::string name, const Word& right_after_a_n, const Word& left) {
  const Rational lo = cylinder(3, right_after_a_n.entries()).lo + cylinder(0, left.entries()).lo;
  const QuadraticSurd margin = QuadraticSurd(lo) - QuadraticSurd(4) * lambda_inf();
  const bool ok = margin.sign() > 0;
  const unsigned bits = static_cast<unsigned>(128 + 8 * (right_after_a_n.size() + left.size()));
  const RationalEnclosure e = enclose(margin, bits);
  return {std::move(name), ok, "alpha_n + alpha*_{n-1} - 4 lambda_inf >= " + short_decimal(e.lo)};
}

}  // namespace

VerificationReport verify_lemma4(int k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  VerificationReport report{"pattern 111(311)^(2k+2)3111 is prohibited", {}};
  const bool base_ok = continuant(Word{1, 1, 1, 1, 3, 1, 1}) == 41;
  for (int k = 0; k <= k_max; ++k) {
    const std::size_t kk = static_cast<std::size_t>(k);
    const BigInt a = continuant(Word{1, 1, 1, 1} + block311(2 * kk + 3));
    const BigInt b = continuant(Word{1, 1} + block311(2 * kk + 2));
    const BigInt c = continuant(block311(2 * kk + 2));
    const bool ratio = 3 * a * a > 8 * b * b;
    const bool upper = a > 41 * c;
    const bool lower = b < 3 * c;
    Check direct = direct_sum_check("", Word{1, 1} + block311(2 * kk + 1) + Word{3, 1, 1, 1},
                                    Word{1, 1, 1, 1} + block311(2 * kk + 2) + Word{3, 1, 1, 1, 1});
    Check check{"k=" + std::to_string(k), base_ok && ratio && upper && lower && direct.passed, {}};
    check.detail = std::string(ratio ? "" : "3A^2 > 8B^2 fails; ") + (upper ? "" : "A > 41C fails; ") +
                   (lower ? "" : "B < 3C fails; ") + (base_ok ? "" : "<1,1,1,1,3,1,1> != 41; ") +
                   "A has " + std::to_string(mpz_sizeinbase(a.get_mpz_t(), 2)) + " bits; " + direct.detail;
    report.checks.push_back(std::move(check));
  }
  return report;
}

VerificationReport verify_lemma5(int m_max) {
  if (m_max < 0) throw std::invalid_argument("m_max must be >= 0");
  VerificationReport report{"pattern 31111(311)^(2m+1)31111(311)^(2k+1)31111 is prohibited for k > m", {}};
  const bool base_ok = continuant(Word{3, 1, 1}) == 7;
  for (int m = 0; m <= m_max; ++m) {
    const std::size_t mm = static_cast<std::size_t>(m);
    const BigInt b = continuant(Word{1, 1} + block311(2 * mm + 3));
    const BigInt a = continuant(Word{1, 1, 1, 1} + block311(2 * mm + 2));
    const BigInt d = continuant(Word{1, 1} + block311(2 * mm + 2));
    const bool ratio = 3 * b * b > 8 * a * a;
    const bool upper = b >= 7 * d;
    const bool lower = a <= 3 * d;
    bool direct_ok = true;
    std::string detail;
    for (std::size_t k = mm + 1; k <= mm + 3; ++k) {
      Check direct = direct_sum_check("", Word{1, 1} + block311(2 * k) + Word{3, 1, 1, 1, 1},
                                      Word{1, 1, 1, 1} + block311(2 * mm + 1) + Word{3, 1, 1, 1, 1, 3});
      direct_ok = direct_ok && direct.passed;
      detail += "k=" + std::to_string(k) + ": " + direct.detail + "; ";
    }
    Check check{"m=" + std::to_string(m), base_ok && ratio && upper && lower && direct_ok, {}};
    check.detail = std::string(ratio ? "" : "3B^2 > 8A^2 fails; ") + (upper ? "" : "B >= 7D fails; ") +
                   (lower ? "" : "A <= 3D fails; ") + (base_ok ? "" : "<3,1,1> != 7; ") + detail;
    check.detail.resize(check.detail.size() - 2);
    report.checks.push_back(std::move(check));
  }
  return report;
}

namespace {

QuadraticSurd right_value(Word pre, const Word& period) {
  return ExtremalCF{BigInt(pre[0]), pre.slice(1, pre.size() - 1), period}.value();
}

QuadraticSurd left_value(Word head, const Word& period) { return ExtremalCF{BigInt(0), std::move(head), period}.value(); }

Check below(std::string name, const QuadraticSurd& value, const Rational& limit) {
  const bool ok = value < QuadraticSurd(limit);
  return {std::move(name), ok, decimal(value, 6) + (ok ? " < " : " >= ") + decimal(limit, 2)};
}

}  // namespace

VerificationReport verify_lemma6() {
  const Word tail{3, 1, 1, 1};
  const Rational limit(104, 100);
  VerificationReport report{"max kappa < 1.04 at the middle 3 of 311[3]113", {}};

  report.checks.push_back(below("kappa1 <= kappa1([3;1,1,(3,1,1,1)*], [0;1,1,(3,1,1,1)*])",
                                kappa1(right_value({3, 1, 1}, tail), left_value({1, 1}, tail)), limit));
  report.checks.push_back(below("kappa2 <= kappa2([1;1,(3,1,1,1)*], [0;3,1,1,(3,1,1,1)*])",
                                kappa2(right_value({1, 1}, tail), left_value({3, 1, 1}, tail)), limit));
  report.checks.push_back(below("kappa4 <= kappa4([3;1,1,3,1,1,(3,1,1,1)*], [0;1,1,3,1,1,(3,1,1,1)*])",
                                kappa4(right_value({3, 1, 1, 3, 1, 1}, tail), left_value({1, 1, 3, 1, 1}, tail)),
                                limit));

  const KappaBounds b = kappa_bounds(MarkedPattern({3, 1, 1, 3, 1, 1, 3}, 3));
  const Rational hi = std::max({b.kappa1.hi, b.kappa2.hi, b.kappa4.hi});
  report.checks.push_back({"cylinder enclosure of 311[3]113", hi < limit,
                           "max kappa <= " + decimal(hi, 6) + (hi < limit ? " < 1.04" : " >= 1.04")});
  return report;
}

VerificationReport verify_lemma7() {
  const Word tail{3, 1, 1, 1};
  VerificationReport report{"kappa4 > max(kappa1, kappa2) at 31111[3]113 and 311[3]11113", {}};

  const QuadraticSurd alpha_n = right_value({3, 1, 1}, tail);
  const QuadraticSurd star_prev = left_value({1, 1, 1, 1}, tail);
  const QuadraticSurd product = (QuadraticSurd(1) + star_prev) * (alpha_n - QuadraticSurd(1));
  report.checks.push_back({"(1 + alpha*_{n-1})(alpha_n - 1) > 4", product > QuadraticSurd(4),
                           "lower bound " + decimal(product, 6)});

  const QuadraticSurd next = right_value({1, 1}, tail);
  const QuadraticSurd gap = next * star_prev + star_prev - QuadraticSurd(2) * next + QuadraticSurd(2);
  report.checks.push_back({"alpha_{n+1} alpha*_{n-1} + alpha*_{n-1} - 2 alpha_{n+1} + 2 > 0", gap.sign() > 0,
                           "at the stated substitution " + decimal(gap, 6)});

  for (const MarkedPattern& p : {MarkedPattern({3, 1, 1, 1, 1, 3, 1, 1, 3}, 5),
                                 MarkedPattern({3, 1, 1, 3, 1, 1, 1, 1, 3}, 3)}) {
    const KappaBounds b = kappa_bounds(p);
    const bool ok = b.kappa4.lo > b.kappa1.hi && b.kappa4.lo > b.kappa2.hi;
    report.checks.push_back({"cylinder enclosure of " + to_string(p), ok,
                             "kappa4 >= " + decimal(b.kappa4.lo, 6) + ", kappa1 <= " + decimal(b.kappa1.hi, 6) +
                                 ", kappa2 <= " + decimal(b.kappa2.hi, 6)});
  }
  return report;
}

VerificationReport verify_lemma6_7() {
  VerificationReport six = verify_lemma6();
  VerificationReport seven = verify_lemma7();
  six.title = "kappa bounds around 311[3]113 and 31111[3]113";
  six.checks.insert(six.checks.end(), seven.checks.begin(), seven.checks.end());
  return six;
}

std::vector<Word> lyndon_words(int max_length, int max_quotient) {
  if (max_length < 1 || max_quotient < 1) throw std::invalid_argument("bounds must be >= 1");
  const auto n = static_cast<std::size_t>(max_length);
  const auto q = static_cast<Quotient>(max_quotient);
  std::vector<Word> out;
  std::vector<Quotient> w{1};
  while (!w.empty()) {
    out.emplace_back(w);
    const std::size_t period = w.size();
    while (w.size() < n) w.push_back(w[w.size() - period]);
    while (!w.empty() && w.back() == q) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::vector<ScanRow> scan(int max_period, int max_quotient, const std::optional<QuadraticSurd>& threshold) {
  if (max_period < 1 || max_period > 12) throw std::invalid_argument("max_period must be in 1..12");
  if (max_quotient < 1 || max_quotient > 4) throw std::invalid_argument("max_quotient must be in 1..4");
  const std::vector<Word> words = lyndon_words(max_period, max_quotient);
  const QuadraticSurd& limit = lambda_inf();

  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, words.size() / 64));
  std::vector<std::vector<ScanRow>> parts(workers);
  const auto work = [&](std::size_t t) {
    for (std::size_t i = t; i < words.size(); i += workers) {
      SpectrumValue v = lambda2(PeriodicCF(0, {}, words[i]));
      if (threshold && !(v.value < *threshold)) continue;
      const bool below_limit = v.value < limit;
      parts[t].push_back({words[i], std::move(v), below_limit});
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t);
  }

  std::vector<ScanRow> rows;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(rows));
  std::sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) {
    const auto c = compare(a.value.value, b.value.value);
    if (c != 0) return c < 0;
    return a.period < b.period;
  });
  return rows;
}

void write_scan_csv(std::ostream& out, std::span<const ScanRow> rows) {
  out << "period_word,value_exact,value_decimal_10,witness_position,dominant_kappa,below_lambda_inf\n";
  for (const ScanRow& row : rows) {
    out << '"' << to_string(row.period) << "\"," << to_string(row.value.value) << ','
        << decimal(row.value.value, 10) << ',' << row.value.witness_position << ','
        << to_string(row.value.witness_kappa.value_or(KappaKind::golden)) << ',' << (row.below_lambda_inf ? 1 : 0)
        << '\n';
  }
}

FamilyReport continuum_family(std::span<const int> ns) {
  if (ns.empty()) throw std::invalid_argument("n sequence must be nonempty");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 1) throw std::invalid_argument("n sequence entries must be >= 1");
    if (i > 0 && ns[i] < ns[i - 1]) throw std::invalid_argument("n sequence must be nondecreasing");
  }
  FamilyReport report;
  for (const int n : ns) report.prefix += block311(2 * static_cast<std::size_t>(n) + 1) + Word{3, 1, 1, 1, 1};

  // a_i is report.prefix[i - 1]. A 3 is reported once eight quotients of
  // right context are available; the trailing 3s only serve as context.
  constexpr std::size_t kContext = 8;
  const std::span<const Quotient> a = report.prefix.entries();
  const std::size_t len = a.size();
  const RationalEnclosure limit = enclose(lambda_inf(), 128);
  const auto ones = [&](std::size_t first, std::size_t count) {
    if (first < 1 || first + count - 1 > len) return false;
    return std::all_of(a.begin() + static_cast<std::ptrdiff_t>(first - 1),
                       a.begin() + static_cast<std::ptrdiff_t>(first - 1 + count),
                       [](Quotient q) { return q == 1; });
  };

  bool any_junction = false;
  bool any_interior = false;
  for (std::size_t n = 2; n + kContext <= len; ++n) {
    if (a[n - 1] != 3) continue;
    std::vector<Quotient> before(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n - 1));
    std::reverse(before.begin(), before.end());
    const Rational star_prev = evaluate(0, before);
    before.insert(before.begin(), a[n - 1]);
    const Rational star_n = evaluate(0, before);
    const KappaBounds b = kappa_bounds(cylinder(BigInt(a[n - 1]), a.subspan(n)), {star_prev, star_prev},
                                       cylinder(BigInt(a[n]), a.subspan(n + 1)), {star_n, star_n});
    const bool junction = (n >= 5 && ones(n - 4, 4)) || ones(n + 1, 4);
    const Rational lo = std::max({b.kappa1.lo, b.kappa2.lo, b.kappa4.lo});
    const Rational hi = std::max({b.kappa1.hi, b.kappa2.hi, b.kappa4.hi});
    if (junction) {
      const Rational deviation = std::max(hi - limit.lo, limit.hi - lo);
      if (!any_junction || deviation > report.max_junction_deviation) report.max_junction_deviation = deviation;
      any_junction = true;
    } else {
      if (!any_interior || hi > report.interior_max_kappa) report.interior_max_kappa = hi;
      any_interior = true;
    }
    report.marks.push_back({n, junction, b});
  }
  return report;
}

}  // namespace lag2
