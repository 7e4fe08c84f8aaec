#include <doctest.h>

#include <random>
#include <sstream>

#include "lag2/cf_text.hpp"
#include "lag2/errors.hpp"
#include "lag2/patterns.hpp"
#include "oracles.hpp"

using namespace lag2;

namespace {

QuadraticSurd S(long p, long q, long d, long r) { return QuadraticSurd::make(p, q, d, r); }

bool near(const QuadraticSurd& x, const char* printed, double tol) {
  return oracle::close(oracle::numeric(x), mpf_class(printed, oracle::kBits), tol);
}

mpf_class float_value(long a0, std::vector<unsigned long> head, const std::vector<unsigned long>& period) {
  for (int i = 0; i < 80; ++i) head.insert(head.end(), period.begin(), period.end());
  return oracle::evaluate(a0, head);
}

long moebius(long n) {
  long result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

std::size_t lyndon_count(int max_length, int q) {
  std::size_t total = 0;
  for (long n = 1; n <= max_length; ++n) {
    long sum = 0;
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0) {
        long power = 1;
        for (long i = 0; i < n / d; ++i) power *= q;
        sum += moebius(d) * power;
      }
    }
    total += static_cast<std::size_t>(sum / n);
  }
  return total;
}

}  // namespace

TEST_CASE("prohibited pattern table") {
  const std::vector<ProhibitionCertificate> rows = lemma2_table();
  REQUIRE(rows.size() == 8);
  const char* printed[] = {"1.25", "1.103553", "1.116515", "1.123722", "1.080930", "1.050188", "1.044287", "1.054716"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(i);
    CHECK(near(rows[i].bound, printed[i], 2e-6));
    CHECK(rows[i].exceeds_lambda_inf);
    CHECK(rows[i].bound > lambda_infinity());
    if (i > 0) CHECK(rows[i].perturbations_checked > 0);
  }
  CHECK(rows[0].bound == QuadraticSurd(Rational(5, 4)));
  // [0;(4,1)*] = y with 4y^2 + 4y - 1 = 0
  CHECK(rows[1].bound == S(3, 1, 2, 4));
  CHECK(to_string(rows[3].pattern) == "3[3]");
  CHECK(rows[3].kappa_used == KappaKind::kappa1);
  CHECK(rows[2].kappa_used == KappaKind::kappa2);
}

TEST_CASE("table bounds match floating substitution") {
  for (const ProhibitionCertificate& row : lemma2_table()) {
    if (row.extremal_right.finite()) continue;
    const auto side = [](const ExtremalCF& cf) {
      return float_value(cf.a0.get_si(), std::vector<unsigned long>(cf.head.begin(), cf.head.end()),
                         std::vector<unsigned long>(cf.period.begin(), cf.period.end()));
    };
    const mpf_class a = side(row.extremal_right), s = side(row.extremal_left);
    mpf_class k(0, oracle::kBits);
    if (row.kappa_used == KappaKind::kappa1) k = (a + s) / ((1 + s) * (a - 1));
    if (row.kappa_used == KappaKind::kappa2) k = (a + s) / ((1 - s) * (a + 1));
    if (row.kappa_used == KappaKind::kappa4) k = (a + s) / 4;
    INFO(to_string(row.pattern), " ", oracle::numeric(row.bound).get_d(), " ", k.get_d());
    CHECK(oracle::close(oracle::numeric(row.bound), k, 1e-60));
  }
}

TEST_CASE("locating a printed value in the table") {
  const std::vector<ProhibitionCertificate> rows = lemma2_table();
  const auto at = locate_bound(rows, Rational(1123722, 1000000), Rational(2, 1000000));
  REQUIRE(at);
  CHECK(to_string(rows[*at].pattern) == "3[3]");
  CHECK(locate_bound(rows, Rational(1116515, 1000000), Rational(2, 1000000)) == std::optional<std::size_t>(2));
  CHECK_FALSE(locate_bound(rows, Rational(2), Rational(1, 1000)));
}

TEST_CASE("certify rejects inconsistent or non-extremal extensions") {
  const MarkedPattern four({4}, 0, 4);
  const ExtremalCF left{0, {}, {4, 1}};
  CHECK_THROWS_WITH_AS(certify(four, KappaKind::kappa4, left, ExtremalCF{3, {}, {4, 1}}),
                       "extension inconsistent with pattern", DomainError);
  CHECK_THROWS_AS(certify(four, KappaKind::kappa4, ExtremalCF{1, {}, {4, 1}}, ExtremalCF{4, {}, {4, 1}}), DomainError);
  // kappa4 grows with alpha_n, so the largest admissible tail is not a lower bound
  CHECK_THROWS_WITH_AS(certify(four, KappaKind::kappa4, left, ExtremalCF{4, {}, {1, 4}}),
                       "extremal direction violated", DomainError);
  CHECK_THROWS_AS(certify(four, KappaKind::golden, left, ExtremalCF{4, {}, {4, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(MarkedPattern({1, 3}, 0), std::invalid_argument);
  CHECK_THROWS_AS(MarkedPattern({3}, 1), std::invalid_argument);
}

TEST_CASE("forbidden factors restrict the perturbations") {
  const MarkedPattern p({3, 1, 3}, 0);
  const ExtremalCF left{0, {1}, {1, 3}};
  const ExtremalCF right{3, {1, 3}, {3, 1}};
  const std::vector<Word> none;
  const std::vector<Word> some{{2}, {3, 3}};
  // without forbidden factors the 33 perturbation is admissible and lowers kappa
  CHECK_THROWS_WITH(certify(p, KappaKind::kappa4, left, right, none), "extremal direction violated");
  CHECK(certify(p, KappaKind::kappa4, left, right, some).perturbations_checked > 0);
}

TEST_CASE("continuant instance checks") {
  const VerificationReport four = verify_lemma4(12);
  CHECK(four.checks.size() == 13);
  CHECK(four.ok());
  const VerificationReport five = verify_lemma5(12);
  CHECK(five.checks.size() == 13);
  CHECK(five.ok());
  CHECK_THROWS_AS(verify_lemma4(-1), std::invalid_argument);
  CHECK_THROWS_AS(verify_lemma5(-1), std::invalid_argument);
  CHECK(verify_lemma4(20).ok());
}

TEST_CASE("kappa estimates around 311[3]113 and 31111[3]113") {
  const VerificationReport six = verify_lemma6();
  CHECK(six.ok());
  REQUIRE(six.checks.size() == 4);
  CHECK(six.checks[0].detail.rfind("1.031440", 0) == 0);
  CHECK(six.checks[1].detail.rfind("1.031440", 0) == 0);
  CHECK(six.checks[2].detail.rfind("1.030785", 0) == 0);
  const VerificationReport seven = verify_lemma7();
  CHECK(seven.ok());
  REQUIRE(seven.checks.size() == 4);
  CHECK(verify_lemma6_7().checks.size() == 8);
}

TEST_CASE("kappa estimates agree with floating substitution") {
  const std::vector<unsigned long> tail{3, 1, 1, 1};
  const mpf_class a = float_value(3, {1, 1}, tail), s = float_value(0, {1, 1}, tail);
  CHECK(oracle::close((a + s) / ((1 + s) * (a - 1)), mpf_class("1.031440", oracle::kBits), 1e-6));
  const mpf_class an1 = float_value(1, {1}, tail), sn = float_value(0, {3, 1, 1}, tail);
  CHECK(oracle::close((an1 + sn) / ((1 - sn) * (an1 + 1)), mpf_class("1.031440", oracle::kBits), 1e-6));
  const mpf_class a4 = float_value(3, {1, 1, 3, 1, 1}, tail), s4 = float_value(0, {1, 1, 3, 1, 1}, tail);
  CHECK(oracle::close((a4 + s4) / 4, mpf_class("1.030785", oracle::kBits), 1e-6));
  const mpf_class s7 = float_value(0, {1, 1, 1, 1}, tail);
  CHECK(oracle::close((1 + s7) * (a - 1), mpf_class("4.120747", oracle::kBits), 1e-6));
}

TEST_CASE("kappa bounds contain every completion of the pattern") {
  const MarkedPattern p({3, 1, 1, 3, 1, 1, 3}, 3);
  const KappaBounds b = kappa_bounds(p);
  std::mt19937_64 rng(51);
  for (int i = 0; i < 200; ++i) {
    std::vector<unsigned long> right{1, 1, 3}, left{1, 1, 3};
    for (int j = 0; j < 30; ++j) right.push_back(1 + rng() % 3), left.push_back(1 + rng() % 3);
    const mpf_class an = oracle::evaluate(3, right);
    const mpf_class sp = oracle::evaluate(0, left);
    const mpf_class anext = oracle::evaluate(1, std::vector<unsigned long>(right.begin() + 1, right.end()));
    std::vector<unsigned long> left_n{3};
    left_n.insert(left_n.end(), left.begin(), left.end());
    const mpf_class sn = oracle::evaluate(0, left_n);
    const mpf_class k1 = (an + sp) / ((1 + sp) * (an - 1));
    const mpf_class k2 = (anext + sn) / ((1 - sn) * (anext + 1));
    const mpf_class k4 = (an + sp) / 4;
    CHECK(k1 >= oracle::numeric(b.kappa1.lo));
    CHECK(k1 <= oracle::numeric(b.kappa1.hi));
    CHECK(k2 >= oracle::numeric(b.kappa2.lo));
    CHECK(k2 <= oracle::numeric(b.kappa2.hi));
    CHECK(k4 >= oracle::numeric(b.kappa4.lo));
    CHECK(k4 <= oracle::numeric(b.kappa4.hi));
  }
}

TEST_CASE("kappa bounds with nothing to the right of the mark") {
  const KappaBounds b = kappa_bounds(MarkedPattern({1, 3}, 1));
  CHECK(b.next_unbounded);
  // alpha*_n = [0;3,1,t] lies in [1/4, 2/7]; kappa2 < 1/(1 - alpha*_n)
  CHECK(b.alpha_star_n.hi == Rational(2, 7));
  CHECK(b.kappa2.hi == Rational(7, 5));
}

TEST_CASE("lyndon words") {
  for (int n = 1; n <= 8; ++n) {
    for (int q = 1; q <= 4; ++q) {
      const std::vector<Word> words = lyndon_words(n, q);
      CHECK(words.size() == lyndon_count(n, q));
      for (std::size_t i = 0; i < words.size(); ++i) {
        CHECK(is_primitive(words[i]));
        CHECK(least_rotation(words[i]) == words[i]);
        if (i > 0) CHECK(words[i - 1] < words[i]);
      }
    }
  }
}

TEST_CASE("scan below the limit constant") {
  const std::vector<ScanRow> rows = scan(8, 3, lambda_infinity());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].period == Word{1});
  CHECK(rows[0].value.value == QuadraticSurd::sqrt(5) / 4);
  CHECK(rows[1].period == Word{1, 1, 3});
  CHECK(rows[1].value.value == QuadraticSurd::sqrt(17) / 4);
  CHECK(rows[2].period == Word{1, 1, 1, 1, 3, 1, 1, 3});
  CHECK(rows[2].value.value == lambda_n(3));
}

TEST_CASE("scan gap and ordering") {
  const std::vector<ScanRow> rows = scan(3, 3);
  CHECK(rows.size() == lyndon_count(3, 3));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const QuadraticSurd& v = rows[i].value.value;
    CHECK_FALSE((v > QuadraticSurd::sqrt(5) / 4 && v < QuadraticSurd::sqrt(17) / 4));
    if (i > 0) CHECK(rows[i - 1].value.value <= v);
    CHECK(rows[i].below_lambda_inf == (v < lambda_infinity()));
  }
}

TEST_CASE("scan values below the limit belong to the ladder") {
  std::vector<QuadraticSurd> ladder{QuadraticSurd::sqrt(5) / 4, QuadraticSurd::sqrt(17) / 4};
  for (int n = 3; n <= 10; ++n) ladder.push_back(lambda_n(n));
  for (const ScanRow& row : scan(8, 4)) {
    if (!row.below_lambda_inf) continue;
    CHECK(std::find(ladder.begin(), ladder.end(), row.value.value) != ladder.end());
  }
}

TEST_CASE("scan is rotation invariant and deterministic") {
  const std::vector<ScanRow> rows = scan(6, 3);
  for (const ScanRow& row : rows) {
    for (std::size_t r = 1; r < row.period.size(); ++r) {
      CHECK(lambda2(PeriodicCF(0, {}, row.period.rotated(r))).value == row.value.value);
    }
  }
  std::ostringstream a, b;
  write_scan_csv(a, rows);
  write_scan_csv(b, scan(6, 3));
  CHECK(a.str() == b.str());
}

TEST_CASE("scan guards and CSV layout") {
  CHECK_THROWS_AS(scan(13, 3), std::invalid_argument);
  CHECK_THROWS_AS(scan(8, 5), std::invalid_argument);
  std::ostringstream out;
  write_scan_csv(out, scan(3, 3, QuadraticSurd::sqrt(17) / 4 + QuadraticSurd(Rational(1, 1000))));
  CHECK(out.str() ==
        "period_word,value_exact,value_decimal_10,witness_position,dominant_kappa,below_lambda_inf\n"
        "\"1\",sqrt(5)/4,0.5590169944,0,golden,1\n"
        "\"1,1,3\",sqrt(17)/4,1.0307764064,2,kappa4,1\n");
}

TEST_CASE("continuum family") {
  const int deep[] = {5, 6, 7};
  const FamilyReport report = continuum_family(deep);
  CHECK(report.max_junction_deviation < Rational(1, 1000));
  CHECK(report.interior_max_kappa < Rational(104, 100));
  CHECK(std::any_of(report.marks.begin(), report.marks.end(), [](const FamilyMark& m) { return m.junction; }));
  const int shallow[] = {1, 2, 3};
  const FamilyReport coarse = continuum_family(shallow);
  CHECK(coarse.prefix.size() == 60);
  CHECK(report.max_junction_deviation < coarse.max_junction_deviation);
  const int deeper[] = {6, 7, 8};
  CHECK(continuum_family(deeper).max_junction_deviation < report.max_junction_deviation);
  CHECK_THROWS_AS(continuum_family({}), std::invalid_argument);
  const int decreasing[] = {3, 2};
  CHECK_THROWS_AS(continuum_family(decreasing), std::invalid_argument);
  const int zero[] = {0};
  CHECK_THROWS_AS(continuum_family(zero), std::invalid_argument);
}

TEST_CASE("extremal continued fraction helpers") {
  const ExtremalCF cf{3, {1, 3}, {3, 1}};
  CHECK(to_string(cf) == "[3;1,3,(3,1)*]");
  CHECK(cf.sequence(6) == std::vector<Quotient>{3, 1, 3, 3, 1, 3, 1});
  CHECK(to_string(ExtremalCF{5, {}, {}}) == "[5]");
  CHECK(ExtremalCF{5, {}, {}}.value() == 5);
  CHECK(cf.value() == cf_to_surd(parse_cf("[3;1,3,(3,1)*]")));
}
