#include "lag2/spectra.hpp"

#include <stdexcept>

namespace lag2 {

std::string_view to_string(KappaKind kind) {
  switch (kind) {
    case KappaKind::kappa1: return "kappa1";
    case KappaKind::kappa2: return "kappa2";
    case KappaKind::kappa4: return "kappa4";
    case KappaKind::golden: return "golden";
  }
  return "?";
}

KappaProfile kappa_profile(const QuadraticSurd& alpha_n, const QuadraticSurd& alpha_star_prev,
                           const QuadraticSurd& alpha_next, const QuadraticSurd& alpha_star_n,
                           std::size_t period_position) {
  KappaProfile out;
  out.period_position = period_position;
  out.kappa1 = kappa1(alpha_n, alpha_star_prev);
  out.kappa2 = kappa2(alpha_next, alpha_star_n);
  out.kappa4 = kappa4(alpha_n, alpha_star_prev);
  out.max_kappa = out.kappa4;
  out.dominant = KappaKind::kappa4;
  if (out.kappa1 > out.max_kappa) {
    out.max_kappa = out.kappa1;
    out.dominant = KappaKind::kappa1;
  }
  if (out.kappa2 > out.max_kappa) {
    out.max_kappa = out.kappa2;
    out.dominant = KappaKind::kappa2;
  }
  return out;
}

namespace {

// Tails y_j = [(p_j, p_{j+1}, ..., p_{j-1})*] of a purely periodic expansion.
// The reversed tail in front of position j is -conj(y_j).
std::vector<QuadraticSurd> orbit(const Word& period) {
  std::vector<QuadraticSurd> y;
  y.reserve(period.size());
  y.push_back(periodic_value(period));
  for (std::size_t j = 0; j + 1 < period.size(); ++j) y.push_back(invert(y[j] - QuadraticSurd(BigInt(period[j]))));
  return y;
}

}  // namespace

std::vector<KappaProfile> limiting_profiles(const Word& period) {
  const std::vector<QuadraticSurd> y = orbit(period);
  const std::size_t k = period.size();
  std::vector<KappaProfile> out;
  for (std::size_t j = 0; j < k; ++j) {
    if (period[j] < 2) continue;
    const QuadraticSurd& here = y[j];
    const QuadraticSurd& next = y[(j + 1) % k];
    out.push_back(kappa_profile(here, -here.conjugate(), next, -next.conjugate(), j));
  }
  return out;
}

SpectrumValue lambda2(const PeriodicCF& cf) {
  if (cf.period() == Word{1}) return {QuadraticSurd::make(0, 1, 5, 4), 0, KappaKind::golden, cf};
  const std::vector<KappaProfile> profiles = limiting_profiles(cf.period());
  const KappaProfile* best = &profiles.front();
  for (const KappaProfile& p : profiles) {
    if (p.max_kappa > best->max_kappa) best = &p;
  }
  return {best->max_kappa, best->period_position, best->dominant, cf};
}

SpectrumValue lambda_classic(const PeriodicCF& cf) {
  const std::vector<QuadraticSurd> y = orbit(cf.period());
  const std::size_t k = y.size();
  std::optional<SpectrumValue> best;
  for (std::size_t j = 0; j < k; ++j) {
    const QuadraticSurd& next = y[(j + 1) % k];
    QuadraticSurd v = next - next.conjugate();
    if (!best || v > best->value) best = SpectrumValue{std::move(v), j, std::nullopt, cf};
  }
  return *best;
}

QuadraticSurd dirichlet_value(const PeriodicCF& cf) {
  const std::vector<QuadraticSurd> y = orbit(cf.period());
  const std::size_t k = y.size();
  std::optional<QuadraticSurd> best;
  for (std::size_t j = 0; j < k; ++j) {
    const QuadraticSurd& next = y[(j + 1) % k];
    QuadraticSurd v = next / -next.conjugate();
    if (!best || v > *best) best = std::move(v);
  }
  return *best;
}

PeriodicCF xi(int n) {
  if (n < 3) throw std::invalid_argument("xi(n) requires n >= 3");
  const auto blocks = static_cast<std::size_t>(2 * n - 5);
  return PeriodicCF(0, {}, Word{1, 1, 1, 1, 3} + Word{1, 1, 3}.repeated(blocks));
}

QuadraticSurd lambda_n(int n) {
  if (n < 3) throw std::invalid_argument("lambda_n(n) requires n >= 3");
  const auto blocks = static_cast<std::size_t>(2 * n - 5);
  const PeriodicCF forward(3, {}, Word{1, 1, 3}.repeated(blocks) + Word{1, 1, 1, 1, 3});
  // Reading xi(n) backwards from the 1,1,1,1 in front of the marked 3.
  const PeriodicCF backward(0, {}, Word{1, 1, 1, 1} + Word{3, 1, 1}.repeated(blocks) + Word{3});
  return (cf_to_surd(forward) + cf_to_surd(backward)) / QuadraticSurd(4);
}

QuadraticSurd lambda_infinity() {
  const QuadraticSurd closed = QuadraticSurd::make(21, 3, 17, 32);
  const QuadraticSurd from_cf =
      (cf_to_surd(PeriodicCF(3, {}, Word{1, 1, 3})) + cf_to_surd(PeriodicCF(0, Word{1, 1, 1, 1}, Word{3, 1, 1}))) /
      QuadraticSurd(4);
  if (!(from_cf == closed)) throw ConsistencyError("lambda_infinity: continued-fraction form disagrees with closed form");
  return closed;
}

}  // namespace lag2
