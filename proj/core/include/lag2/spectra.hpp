#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lag2/continued_fraction.hpp"
#include "lag2/errors.hpp"
#include "lag2/surd.hpp"

namespace lag2 {

enum class KappaKind { kappa1, kappa2, kappa4, golden };

std::string_view to_string(KappaKind kind);

// The three quantities whose limsup over a_n >= 2 gives the second Lagrange
// constant. Generic over QuadraticSurd and Rational so the same formulas serve
// exact limits and interval endpoints.
//
//   kappa1 = (a_n + s_{n-1}) / ((1 + s_{n-1}) (a_n - 1))
//   kappa2 = (a_{n+1} + s_n) / ((1 - s_n) (a_{n+1} + 1))
//   kappa4 = (a_n + s_{n-1}) / 4
//
// where a_n = alpha_n and s_n = alpha*_n.
template <class T>
T kappa1(const T& alpha_n, const T& alpha_star_prev) {
  if (alpha_n == T(1)) throw DomainError("kappa1 pole: alpha_n = 1");
  return T(alpha_n + alpha_star_prev) / T(T(T(1) + alpha_star_prev) * T(alpha_n - T(1)));
}

template <class T>
T kappa2(const T& alpha_next, const T& alpha_star_n) {
  if (alpha_star_n == T(1)) throw DomainError("kappa2 pole: alpha*_n = 1");
  return T(alpha_next + alpha_star_n) / T(T(T(1) - alpha_star_n) * T(alpha_next + T(1)));
}

template <class T>
T kappa4(const T& alpha_n, const T& alpha_star_prev) {
  return T(alpha_n + alpha_star_prev) / T(4);
}

struct KappaProfile {
  std::size_t period_position = 0;
  QuadraticSurd kappa1;
  QuadraticSurd kappa2;
  QuadraticSurd kappa4;
  QuadraticSurd max_kappa;
  // Ties resolve to kappa4, then kappa1.
  KappaKind dominant = KappaKind::kappa4;
};

KappaProfile kappa_profile(const QuadraticSurd& alpha_n, const QuadraticSurd& alpha_star_prev,
                           const QuadraticSurd& alpha_next, const QuadraticSurd& alpha_star_n,
                           std::size_t period_position = 0);

// Limiting kappa profiles at every period position whose entry is >= 2.
// Along such a residue class alpha_n is exactly periodic and alpha*_{n-1}
// converges to the reversed-period value, so these limits carry the limsup.
std::vector<KappaProfile> limiting_profiles(const Word& period);

struct SpectrumValue {
  QuadraticSurd value;
  std::size_t witness_position = 0;  // index into source.period()
  std::optional<KappaKind> witness_kappa;
  PeriodicCF source;
};

// Second Lagrange constant. The golden-ratio class, which the kappa formula
// does not cover, returns sqrt(5)/4.
SpectrumValue lambda2(const PeriodicCF& cf);

// Classical Lagrange constant limsup (alpha_{t+1} + alpha*_t).
SpectrumValue lambda_classic(const PeriodicCF& cf);

// limsup [a_n; a_{n-1}, ..., a_1] * [a_{n+1}; a_{n+2}, ...].
QuadraticSurd dirichlet_value(const PeriodicCF& cf);

// [0; (1,1,1,1,3,(1,1,3)^(2n-5))*], n >= 3.
PeriodicCF xi(int n);

// Quarter-sum of the tail at the 3 that follows 1,1,1,1 in xi(n) and the
// reversed tail in front of it; n >= 3.
QuadraticSurd lambda_n(int n);

// (21 + 3 sqrt(17)) / 32, cross-checked against its continued-fraction
// definition. Throws ConsistencyError if the two disagree.
QuadraticSurd lambda_infinity();

}  // namespace lag2
