#include "lag2/identities.hpp"

#include <stdexcept>
#include <vector>

#include "lag2/cf_text.hpp"
#include "lag2/surd.hpp"

namespace lag2 {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); }

std::vector<Quotient> random_quotients(std::mt19937_64& rng, std::size_t count, Quotient max_quotient) {
  std::vector<Quotient> out(count);
  for (auto& a : out) a = draw(rng, 1, max_quotient);
  return out;
}

void require_cases(int cases) {
  if (cases < 0) throw std::invalid_argument("case count must be >= 0");
}

QuadraticSurd abs_value(const QuadraticSurd& x) { return x.sign() < 0 ? -x : x; }

}  // namespace

PeriodicCF random_periodic_cf(std::mt19937_64& rng, std::size_t max_preperiod, std::size_t max_period,
                              Quotient max_quotient) {
  if (max_period < 1 || max_quotient < 1) throw std::invalid_argument("period length and quotient bound must be >= 1");
  const BigInt a0{static_cast<unsigned long>(draw(rng, 0, 5))};
  Word pre(random_quotients(rng, draw(rng, 0, max_preperiod), max_quotient));
  Word period(random_quotients(rng, draw(rng, 1, max_period), max_quotient));
  return PeriodicCF(a0, std::move(pre), std::move(period));
}

VerificationReport verify_perron(int cases, std::uint64_t seed) {
  require_cases(cases);
  std::mt19937_64 rng(seed);
  VerificationReport report{"||q_n x|| = 1 / (q_n (alpha_{n+1} + alpha*_n))", {}};
  for (int i = 0; i < cases; ++i) {
    const PeriodicCF cf = random_periodic_cf(rng);
    const auto n = static_cast<std::size_t>(draw(rng, 1, 12));
    const Convergent c = convergent_terms(cf, n);
    const QuadraticSurd x = cf_to_surd(cf);
    const QuadraticSurd distance = abs_value(QuadraticSurd(c.q) * x - QuadraticSurd(c.p));
    const QuadraticSurd formula =
        invert(QuadraticSurd(c.q) * (tail(cf, n + 1) + QuadraticSurd(reversed_tail(cf, n))));
    const bool ok = distance == formula;
    report.checks.push_back({"case " + std::to_string(i), ok,
                             ok ? "" : format_cf(cf) + " n=" + std::to_string(n) + ": " + to_string(distance) +
                                           " vs " + to_string(formula)});
  }
  return report;
}

VerificationReport verify_difference_formula(int cases, std::uint64_t seed) {
  require_cases(cases);
  std::mt19937_64 rng(seed);
  VerificationReport report{"difference of two expansions with a common prefix", {}};
  for (int i = 0; i < cases; ++i) {
    const BigInt a0{static_cast<unsigned long>(draw(rng, 0, 5))};
    const std::vector<Quotient> prefix = random_quotients(rng, draw(rng, 1, 10), 4);
    const Word period(random_quotients(rng, draw(rng, 1, 6), 4));
    // Two tails >= 1 over the same period, hence in the same field.
    const auto random_tail = [&] {
      const Word head(random_quotients(rng, draw(rng, 0, 3), 4));
      return apply(prefix_map(BigInt(static_cast<unsigned long>(draw(rng, 1, 4))), head.entries()),
                   periodic_value(period));
    };
    const QuadraticSurd alpha_tail = random_tail();
    const QuadraticSurd beta_tail = random_tail();
    const Mobius m = prefix_map(a0, prefix);
    const QuadraticSurd alpha = apply(m, alpha_tail);
    const QuadraticSurd beta = apply(m, beta_tail);

    const std::vector<Quotient> back(prefix.rbegin(), prefix.rend());
    const QuadraticSurd star(evaluate(0, back));
    const QuadraticSurd q(continuant(prefix));
    QuadraticSurd rhs = (beta_tail - alpha_tail) / (q * q * (alpha_tail + star) * (beta_tail + star));
    if (prefix.size() % 2 == 0) rhs = -rhs;  // (-1)^(n+1)
    const bool ok = beta - alpha == rhs;
    report.checks.push_back({"case " + std::to_string(i), ok,
                             ok ? "" : "prefix " + to_string(Word(prefix)) + ", tails " + to_string(alpha_tail) +
                                           " and " + to_string(beta_tail)});
  }
  return report;
}

VerificationReport verify_continuant_split(int cases, std::uint64_t seed) {
  require_cases(cases);
  std::mt19937_64 rng(seed);
  VerificationReport report{"continuant split at every index", {}};
  for (int i = 0; i < cases; ++i) {
    const std::vector<Quotient> w = random_quotients(rng, draw(rng, 2, 16), 9);
    const std::span<const Quotient> all(w);
    const BigInt whole = continuant(all);
    bool ok = true;
    std::size_t bad = 0;
    for (std::size_t t = 1; t < w.size() && ok; ++t) {
      const BigInt left = continuant(all.first(t));
      const BigInt right = continuant(all.subspan(t));
      const BigInt sum = left * right + continuant(all.first(t - 1)) * continuant(all.subspan(t + 1));
      const std::vector<Quotient> back(w.rbegin() + static_cast<std::ptrdiff_t>(w.size() - t), w.rend());
      const Rational product =
          Rational(left * right) * (Rational(1) + evaluate(0, back) * evaluate(0, all.subspan(t)));
      ok = sum == whole && product == Rational(whole);
      if (!ok) bad = t;
    }
    report.checks.push_back({"case " + std::to_string(i), ok,
                             ok ? "" : to_string(Word(w)) + " split at " + std::to_string(bad)});
  }
  return report;
}

VerificationReport verify_round_trip(int cases, std::uint64_t seed) {
  require_cases(cases);
  std::mt19937_64 rng(seed);
  VerificationReport report{"continued fraction -> surd -> continued fraction", {}};
  for (int i = 0; i < cases; ++i) {
    const PeriodicCF cf = random_periodic_cf(rng);
    const PeriodicCF back = surd_to_cf(cf_to_surd(cf));
    const bool ok = back == cf;
    report.checks.push_back(
        {"case " + std::to_string(i), ok, ok ? "" : format_cf(cf) + " came back as " + format_cf(back)});
  }
  return report;
}

}  // namespace lag2
