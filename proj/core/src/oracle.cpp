#include "lag2/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "lag2/errors.hpp"

namespace lag2 {

namespace {

constexpr std::uint64_t kMaxTerms = 100'000'000;

std::vector<std::uint64_t> convergent_denominators(const PeriodicCF& cf, std::uint64_t t_max) {
  std::vector<std::uint64_t> out;
  BigInt prev{0};
  BigInt q{1};
  for (std::size_t n = 1;; ++n) {
    BigInt next = q * cf.quotient(n) + prev;
    prev = std::move(q);
    q = std::move(next);
    if (q > t_max) break;
    out.push_back(q.get_ui());
  }
  return out;
}

// ||x|| for x in [u, v] / 2^bits, or nullopt if the interval straddles an
// integer or a half-integer.
struct Scaled {
  BigInt lo, hi;
};

class DistanceKernel {
 public:
  DistanceKernel(const RationalEnclosure& alpha, unsigned bits) : bits_(bits) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    const Rational lo = alpha.lo * Rational(scale);
    const Rational hi = alpha.hi * Rational(scale);
    mpz_fdiv_q(lo_.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    mpz_cdiv_q(hi_.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    mpz_ui_pow_ui(half_.get_mpz_t(), 2, bits - 1);
    mpz_ui_pow_ui(unit_.get_mpz_t(), 2, bits);
  }

  bool distance(std::uint64_t q, Scaled& out) {
    mpz_mul_ui(u_.get_mpz_t(), lo_.get_mpz_t(), q);
    mpz_mul_ui(v_.get_mpz_t(), hi_.get_mpz_t(), q);
    mpz_fdiv_q_2exp(iu_.get_mpz_t(), u_.get_mpz_t(), bits_);
    mpz_fdiv_q_2exp(iv_.get_mpz_t(), v_.get_mpz_t(), bits_);
    if (iu_ != iv_) return false;
    mpz_fdiv_r_2exp(fu_.get_mpz_t(), u_.get_mpz_t(), bits_);
    mpz_fdiv_r_2exp(fv_.get_mpz_t(), v_.get_mpz_t(), bits_);
    const bool lower_u = fu_ < half_;
    if (lower_u != (fv_ < half_)) return false;
    if (lower_u) {
      out.lo = fu_;
      out.hi = fv_;
    } else {
      out.lo = unit_ - fv_;
      out.hi = unit_ - fu_;
    }
    return true;
  }

  Rational to_rational(const BigInt& scaled) const {
    Rational r{scaled, unit_};
    r.canonicalize();
    return r;
  }

 private:
  unsigned bits_;
  BigInt lo_, hi_, half_, unit_;
  BigInt u_, v_, iu_, iv_, fu_, fv_;
};

enum class Outcome { done, undecided };

Outcome scan_minimum(DistanceKernel& kernel, std::uint64_t t_max, const std::vector<std::uint64_t>& excluded,
                     std::vector<PsiStep>& steps) {
  steps.clear();
  Scaled current;
  Scaled candidate;
  bool have_current = false;
  auto skip = excluded.begin();
  for (std::uint64_t q = 1; q <= t_max; ++q) {
    if (skip != excluded.end() && *skip == q) {
      while (skip != excluded.end() && *skip == q) ++skip;
      continue;
    }
    if (!kernel.distance(q, candidate)) return Outcome::undecided;
    if (!have_current || candidate.hi < current.lo) {
      current = candidate;
      have_current = true;
      steps.push_back({q, {kernel.to_rational(candidate.lo), kernel.to_rational(candidate.hi)}});
    } else if (!(candidate.lo > current.hi)) {
      return Outcome::undecided;
    }
  }
  return Outcome::done;
}

PsiTable run_oracle(const PeriodicCF& cf, std::uint64_t t_max, bool second, unsigned max_refinements) {
  if (t_max < 1 || t_max > kMaxTerms) throw std::invalid_argument("t_max out of range");
  PsiTable table;
  table.t_max = t_max;
  const std::vector<std::uint64_t> denominators = convergent_denominators(cf, t_max);
  if (second) table.excluded = denominators;

  // Start where q_depth^2 comfortably exceeds t_max^2 * 2^32.
  BigInt target{t_max};
  target = target * target * (BigInt(1) << 32);
  std::size_t periods = 1;
  while (convergent_terms(cf, cf.preperiod().size() + periods * cf.period().size()).q < target) periods *= 2;

  for (unsigned round = 0; round <= max_refinements; ++round, periods *= 2) {
    const std::size_t depth = cf.preperiod().size() + periods * cf.period().size();
    const BigInt qd = convergent_terms(cf, depth).q;
    const auto bits = static_cast<unsigned>(2 * mpz_sizeinbase(qd.get_mpz_t(), 2) + 16);
    DistanceKernel kernel(enclosure(cf, depth), bits);
    if (scan_minimum(kernel, t_max, table.excluded, table.steps) == Outcome::done) {
      table.refinements = round;
      if (!second) {
        std::vector<std::uint64_t> expected{1};
        for (const std::uint64_t q : denominators) {
          if (q != expected.back()) expected.push_back(q);
        }
        std::vector<std::uint64_t> jumps;
        for (const PsiStep& s : table.steps) jumps.push_back(s.q);
        table.convergent_structure = jumps == expected;
      }
      return table;
    }
  }
  throw PrecisionLimitError("psi oracle: refinement limit reached");
}

}  // namespace

PsiTable psi_oracle(const PeriodicCF& cf, std::uint64_t t_max, unsigned max_refinements) {
  return run_oracle(cf, t_max, false, max_refinements);
}

PsiTable psi2_oracle(const PeriodicCF& cf, std::uint64_t t_max, unsigned max_refinements) {
  return run_oracle(cf, t_max, true, max_refinements);
}

std::optional<RationalEnclosure> value_at(const PsiTable& table, std::uint64_t t) {
  if (t < 1 || t > table.t_max) throw std::out_of_range("t outside [1, t_max]");
  auto it = std::upper_bound(table.steps.begin(), table.steps.end(), t,
                             [](std::uint64_t v, const PsiStep& s) { return v < s.q; });
  if (it == table.steps.begin()) return std::nullopt;
  return std::prev(it)->distance;
}

EmpiricalConstant empirical_constant(const PsiTable& table, std::uint64_t t_min) {
  std::optional<EmpiricalConstant> best;
  auto consider = [&](std::uint64_t t, const RationalEnclosure& d) {
    const Rational tq{static_cast<unsigned long>(t)};
    RationalEnclosure v{1 / (tq * d.hi), 1 / (tq * d.lo)};
    if (!best) {
      best = EmpiricalConstant{v, t};
      return;
    }
    if (v.lo > best->value.lo) {
      best->value.lo = v.lo;
      best->q = t;
    }
    if (v.hi > best->value.hi) best->value.hi = v.hi;
  };
  if (t_min < 1) t_min = 1;
  if (t_min <= table.t_max) {
    if (auto start = value_at(table, t_min)) consider(t_min, *start);
  }
  for (const PsiStep& s : table.steps) {
    if (s.q > t_min) consider(s.q, s.distance);
  }
  if (!best) throw DomainError("psi table has no feasible denominators in range");
  return *best;
}

}  // namespace lag2
