#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lag2/continued_fraction.hpp"
#include "lag2/surd.hpp"

namespace lag2 {

// One jump of the piecewise-constant function psi(t): from t = q on the
// minimum equals ||q alpha||, enclosed by `distance`.
struct PsiStep {
  std::uint64_t q = 0;
  RationalEnclosure distance;
};

struct PsiTable {
  std::uint64_t t_max = 0;
  std::vector<PsiStep> steps;
  // Denominators left out of the minimum (convergent denominators for psi2).
  std::vector<std::uint64_t> excluded;
  // For psi only: whether the jumps fall exactly on 1 and the convergent
  // denominators q_n <= t_max.
  std::optional<bool> convergent_structure;
  // Number of precision escalations that were needed.
  unsigned refinements = 0;
};

// Brute-force min over 1 <= q <= t of ||q alpha||. Every comparison is decided
// on enclosures of alpha; undecided comparisons double the number of appended
// periods, up to `max_refinements` times (then PrecisionLimitError).
PsiTable psi_oracle(const PeriodicCF& cf, std::uint64_t t_max,
                    unsigned max_refinements = kDefaultRefinementLimit);

// Same minimum with the convergent denominators q_1, q_2, ... removed.
PsiTable psi2_oracle(const PeriodicCF& cf, std::uint64_t t_max,
                     unsigned max_refinements = kDefaultRefinementLimit);

// psi(t) for 1 <= t <= t_max; empty where the feasible set is empty.
std::optional<RationalEnclosure> value_at(const PsiTable& table, std::uint64_t t);

struct EmpiricalConstant {
  RationalEnclosure value;  // encloses max (t * psi(t))^-1
  std::uint64_t q = 0;      // step attaining the lower end
};

// max over t in [t_min, t_max] of (t psi(t))^-1. On each constant piece the
// maximum sits at the left end, so only jumps (and t_min itself) matter.
EmpiricalConstant empirical_constant(const PsiTable& table, std::uint64_t t_min = 1);

}  // namespace lag2
