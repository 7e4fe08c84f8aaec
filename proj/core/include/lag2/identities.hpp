#pragma once

#include <cstdint>
#include <random>

#include "lag2/continued_fraction.hpp"
#include "lag2/report.hpp"

namespace lag2 {

// Uniformly drawn canonical expansion: a0 in [0, 5], preperiod length in
// [0, max_preperiod], period length in [1, max_period], quotients in
// [1, max_quotient]. Draws use plain modulo so a seed gives the same numbers
// on every standard library.
PeriodicCF random_periodic_cf(std::mt19937_64& rng, std::size_t max_preperiod = 3, std::size_t max_period = 8,
                              Quotient max_quotient = 4);

// Randomized exact checks, one Check per case. A failing case keeps its
// input in the detail string.

// ||q_n x|| = |q_n x - p_n| = 1 / (q_n (alpha_{n+1} + alpha*_n)), 1 <= n <= 12.
VerificationReport verify_perron(int cases, std::uint64_t seed);

// Two numbers sharing [a0; a_1, ..., a_n] with tails alpha_{n+1}, beta_{n+1}
// from one quadratic field:
// beta - alpha = (-1)^(n+1) (beta_{n+1} - alpha_{n+1})
//                / (q_n^2 (alpha_{n+1} + alpha*_n) (beta_{n+1} + alpha*_n)).
VerificationReport verify_difference_formula(int cases, std::uint64_t seed);

// <a_1..a_s> = <a_1..a_t><a_{t+1}..a_s> + <a_1..a_{t-1}><a_{t+2}..a_s>
//            = <a_1..a_t><a_{t+1}..a_s>(1 + [0;a_t..a_1][0;a_{t+1}..a_s])
// for every split point of a random word of length <= 16.
VerificationReport verify_continuant_split(int cases, std::uint64_t seed);

// surd_to_cf(cf_to_surd(cf)) == cf.
VerificationReport verify_round_trip(int cases, std::uint64_t seed);

}  // namespace lag2
