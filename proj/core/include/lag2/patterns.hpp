#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lag2/continued_fraction.hpp"
#include "lag2/report.hpp"
#include "lag2/spectra.hpp"
#include "lag2/surd.hpp"

namespace lag2 {

// Word of partial quotients with one marked index n (the a_n that the kappa
// formulas are evaluated at). `alphabet_cap` bounds the quotients an
// unconstrained extension may use.
struct MarkedPattern {
  MarkedPattern(Word word, std::size_t mark, Quotient alphabet_cap = 3);

  Word word;
  std::size_t mark;
  Quotient alphabet_cap;
};

// e.g. "111[3]111"
std::string to_string(const MarkedPattern& pattern);

// [a0; head, (period)*], or the finite [a0; head] when period is empty.
// Used for the one-sided extremal substitutions; unlike PeriodicCF it is kept
// exactly as written and may be finite.
struct ExtremalCF {
  BigInt a0;
  Word head;
  Word period;

  bool finite() const { return period.empty(); }
  QuadraticSurd value() const;
  // a0 followed by the next `count` quotients (fewer when finite).
  std::vector<Quotient> sequence(std::size_t count) const;
};

std::string to_string(const ExtremalCF& cf);

struct ProhibitionCertificate {
  MarkedPattern pattern;
  KappaKind kappa_used;
  ExtremalCF extremal_left;   // alpha*-side: alpha*_{n-1} (kappa1, kappa4) or alpha*_n (kappa2)
  ExtremalCF extremal_right;  // alpha-side: alpha_n (kappa1, kappa4) or alpha_{n+1} (kappa2)
  QuadraticSurd bound;
  bool exceeds_lambda_inf = false;
  std::size_t perturbations_checked = 0;
};

// Lower bound for the chosen kappa at every occurrence of `pattern`, obtained
// by substituting the extremal extensions. Throws DomainError when an
// extension does not continue the fixed word, or when a one-letter change of
// a free quotient (within the alphabet, skipping changes that create a
// `forbidden` factor through the changed letter) gives a smaller kappa.
ProhibitionCertificate certify(const MarkedPattern& pattern, KappaKind kappa, const ExtremalCF& extremal_left,
                               const ExtremalCF& extremal_right, std::span<const Word> forbidden = {});

// The eight prohibited-pattern rows: a_n >= 5, 4, 2, 33, 313, 31113, 311111,
// 1113111. Each row treats the earlier rows as already prohibited.
std::vector<ProhibitionCertificate> lemma2_table();

// Row whose bound rounds (6 digits) to within `tolerance` of `target`.
std::optional<std::size_t> locate_bound(std::span<const ProhibitionCertificate> rows, const Rational& target,
                                        const Rational& tolerance);

// Rigorous kappa enclosures valid at every occurrence of a marked pattern,
// from the cylinder sets of its two sides and kappa monotonicity (kappa1
// decreasing, kappa2 and kappa4 increasing in both arguments).
struct KappaBounds {
  RationalEnclosure alpha_n;
  RationalEnclosure alpha_star_prev;
  RationalEnclosure alpha_next;  // hi is meaningless when next_unbounded
  RationalEnclosure alpha_star_n;
  bool next_unbounded = false;
  RationalEnclosure kappa1;
  RationalEnclosure kappa2;
  RationalEnclosure kappa4;
};

KappaBounds kappa_bounds(const MarkedPattern& pattern);
KappaBounds kappa_bounds(const RationalEnclosure& alpha_n, const RationalEnclosure& alpha_star_prev,
                         const RationalEnclosure& alpha_next, const RationalEnclosure& alpha_star_n,
                         bool next_unbounded = false);

// Continuant-ratio inequality, its two auxiliary bounds and the direct
// inequality alpha_n - alpha_inf > alpha*_inf - alpha*_{n-1} for the pattern
// 111(311)^(2k+2)3111, one check per k in [0, k_max].
VerificationReport verify_lemma4(int k_max);

// Companion for 31111(311)^(2m+1)31111(311)^(2k+1)31111, one check per m in
// [0, m_max], each covering k = m+1 .. m+3.
VerificationReport verify_lemma5(int m_max);

// max(kappa) < 1.04 at the middle 3 of 311[3]113.
VerificationReport verify_lemma6();
// kappa4 > max(kappa1, kappa2) at 31111[3]113 and its mirror 311[3]11113.
VerificationReport verify_lemma7();
VerificationReport verify_lemma6_7();

// Every rotation class of primitive periods with length <= max_period and
// quotients <= max_quotient, represented by its least rotation.
struct ScanRow {
  Word period;
  SpectrumValue value;
  bool below_lambda_inf = false;
};

// Rows sorted by value, then period. With a threshold only rows strictly
// below it are kept. Throws std::invalid_argument past 12 / 4.
std::vector<ScanRow> scan(int max_period, int max_quotient,
                          const std::optional<QuadraticSurd>& threshold = std::nullopt);

// period_word,value_exact,value_decimal_10,witness_position,dominant_kappa,below_lambda_inf
void write_scan_csv(std::ostream& out, std::span<const ScanRow> rows);

// Lyndon words (primitive least rotations) in lexicographic order.
std::vector<Word> lyndon_words(int max_length, int max_quotient);

struct FamilyMark {
  std::size_t index = 0;  // n, 1-based
  bool junction = false;  // the 3 right after 1,1,1,1
  KappaBounds kappas;
};

struct FamilyReport {
  Word prefix;  // quotients a_1, a_2, ... after a0 = 0
  std::vector<FamilyMark> marks;
  // Upper bound on |max kappa - lambda_inf| over junctions.
  Rational max_junction_deviation;
  // Upper bound on max kappa over the other 3s.
  Rational interior_max_kappa;
};

// Prefix [0; (3,1,1)^(2n_1+1), 3,1,1,1,1, (3,1,1)^(2n_2+1), 3,1,1,1,1, ...]
// with kappa enclosures at each 3 from the finite data alone. `ns` must be
// nonempty, positive and nondecreasing.
FamilyReport continuum_family(std::span<const int> ns);

}  // namespace lag2
