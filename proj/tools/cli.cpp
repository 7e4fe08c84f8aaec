#include "cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lag2/cf_text.hpp"
#include "lag2/errors.hpp"
#include "lag2/identities.hpp"
#include "lag2/oracle.hpp"
#include "lag2/patterns.hpp"
#include "lag2/spectra.hpp"
#include "lag2/surd.hpp"

namespace lag2::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, csv, jsonl };

struct Options {
  unsigned digits = 6;
  Format format = Format::text;
  bool quiet = false;
  unsigned refinement_limit = kDefaultRefinementLimit;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

unsigned refinement_limit_from_env() {
  const char* raw = std::getenv("LAG2_PRECISION_LIMIT");
  if (raw == nullptr || *raw == '\0') return kDefaultRefinementLimit;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0' || v == 0 || v > 4096) throw UsageError("LAG2_PRECISION_LIMIT must be an integer in 1..4096");
  return static_cast<unsigned>(v);
}

// A value printed in every format: text "exact ≈ decimal", csv and jsonl
// carry the input too.
void emit_value(std::ostream& out, const Options& opt, const std::string& input, const QuadraticSurd& value,
                bool exact_in_text = true) {
  const std::string exact = to_string(value);
  const std::string dec = decimal(value, opt.digits, opt.refinement_limit);
  switch (opt.format) {
    case Format::text:
      if (exact_in_text) out << exact << " ≈ ";
      out << dec << '\n';
      break;
    case Format::csv:
      out << "input,value_exact,value_decimal\n\"" << input << "\"," << exact << ',' << dec << '\n';
      break;
    case Format::jsonl:
      out << json{{"input", input}, {"value_exact", exact}, {"value_decimal", dec}}.dump() << '\n';
      break;
  }
}

void emit_cf(std::ostream& out, const Options& opt, const std::string& input, const PeriodicCF& cf) {
  const std::string text = format_cf(cf);
  switch (opt.format) {
    case Format::text: out << text << '\n'; break;
    case Format::csv: out << "input,continued_fraction\n\"" << input << "\",\"" << text << "\"\n"; break;
    case Format::jsonl: out << json{{"input", input}, {"continued_fraction", text}}.dump() << '\n'; break;
  }
}

// Text: one line per check (failures only when `failures_only`), then
// "PASS n/m <unit>". Returns the exit code.
int emit_report(std::ostream& out, const Options& opt, const VerificationReport& report, const std::string& unit,
                bool failures_only) {
  const bool ok = report.ok();
  const std::string summary = std::string(ok ? "PASS " : "FAIL ") + std::to_string(report.passed()) + "/" +
                              std::to_string(report.checks.size()) + " " + unit;
  switch (opt.format) {
    case Format::text:
      if (!opt.quiet) {
        out << report.title << '\n';
        for (const Check& c : report.checks) {
          if (failures_only && c.passed) continue;
          out << (c.passed ? "  ok   " : "  FAIL ") << c.name;
          if (!c.detail.empty()) out << ": " << c.detail;
          out << '\n';
        }
      }
      out << summary << '\n';
      break;
    case Format::csv:
      out << "check,passed,detail\n";
      for (const Check& c : report.checks) out << '"' << c.name << "\"," << (c.passed ? 1 : 0) << ",\"" << c.detail << "\"\n";
      break;
    case Format::jsonl:
      for (const Check& c : report.checks)
        out << json{{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}}.dump() << '\n';
      out << json{{"title", report.title}, {"passed", report.passed()}, {"total", report.checks.size()}}.dump()
          << '\n';
      break;
  }
  return ok ? 0 : 3;
}

std::string pad(std::string s, std::size_t width) {
  // Column widths count code points so the table stays aligned.
  std::size_t cps = 0;
  for (const unsigned char c : s) cps += (c & 0xC0) != 0x80;
  if (cps < width) s.append(width - cps, ' ');
  return s;
}

void emit_table(std::ostream& out, const Options& opt, const std::vector<ProhibitionCertificate>& rows) {
  const auto kappa_name = [](KappaKind k) { return std::string(to_string(k)); };
  switch (opt.format) {
    case Format::text:
      out << pad("pattern", 12) << pad("kappa", 8) << pad("alpha* side", 24) << pad("alpha side", 28)
          << pad("bound", 28) << pad("decimal", 12) << "> lambda_inf\n";
      for (const auto& r : rows) {
        out << pad(to_string(r.pattern), 12) << pad(kappa_name(r.kappa_used), 8)
            << pad(to_string(r.extremal_left), 24) << pad(to_string(r.extremal_right), 28)
            << pad(to_string(r.bound), 28) << pad(decimal(r.bound, opt.digits, opt.refinement_limit), 12)
            << (r.exceeds_lambda_inf ? "yes" : "no") << '\n';
      }
      break;
    case Format::csv:
      out << "pattern,kappa,alpha_star_side,alpha_side,bound_exact,bound_decimal,exceeds_lambda_inf,"
             "perturbations_checked\n";
      for (const auto& r : rows) {
        out << '"' << to_string(r.pattern) << "\"," << kappa_name(r.kappa_used) << ",\"" << to_string(r.extremal_left)
            << "\",\"" << to_string(r.extremal_right) << "\"," << to_string(r.bound) << ','
            << decimal(r.bound, opt.digits, opt.refinement_limit) << ',' << (r.exceeds_lambda_inf ? 1 : 0) << ','
            << r.perturbations_checked << '\n';
      }
      break;
    case Format::jsonl:
      for (const auto& r : rows) {
        out << json{{"pattern", to_string(r.pattern)},
                    {"kappa", kappa_name(r.kappa_used)},
                    {"alpha_star_side", to_string(r.extremal_left)},
                    {"alpha_side", to_string(r.extremal_right)},
                    {"bound_exact", to_string(r.bound)},
                    {"bound_decimal", decimal(r.bound, opt.digits, opt.refinement_limit)},
                    {"exceeds_lambda_inf", r.exceeds_lambda_inf},
                    {"perturbations_checked", r.perturbations_checked}}
                   .dump()
            << '\n';
      }
      break;
  }
}

void emit_scan(std::ostream& out, const Options& opt, const std::vector<ScanRow>& rows) {
  if (opt.format != Format::jsonl) {
    write_scan_csv(out, rows);
    return;
  }
  for (const ScanRow& row : rows) {
    out << json{{"period_word", to_string(row.period)},
                {"value_exact", to_string(row.value.value)},
                {"value_decimal_10", decimal(row.value.value, 10, opt.refinement_limit)},
                {"witness_position", row.value.witness_position},
                {"dominant_kappa", to_string(row.value.witness_kappa.value_or(KappaKind::golden))},
                {"below_lambda_inf", row.below_lambda_inf}}
               .dump()
        << '\n';
  }
}

std::string enclosure_text(const RationalEnclosure& e, unsigned digits) {
  return "[" + decimal(e.lo, digits) + ", " + decimal(e.hi, digits) + "]";
}

std::string scientific(const Rational& x) {
  std::ostringstream s;
  s << std::setprecision(3) << x.get_d();
  return s.str();
}

void emit_family(std::ostream& out, const Options& opt, const FamilyReport& report) {
  const std::string prefix = "[0;" + to_string(report.prefix) + ",...]";
  const auto max_lo = [](const KappaBounds& b) { return std::max({b.kappa1.lo, b.kappa2.lo, b.kappa4.lo}); };
  const auto max_hi = [](const KappaBounds& b) { return std::max({b.kappa1.hi, b.kappa2.hi, b.kappa4.hi}); };
  switch (opt.format) {
    case Format::text:
      out << "prefix " << prefix << " (" << report.prefix.size() << " quotients)\n";
      if (!opt.quiet) {
        for (const FamilyMark& m : report.marks) {
          out << "  n=" << m.index << (m.junction ? " junction " : " interior ") << "max kappa in "
              << enclosure_text({max_lo(m.kappas), max_hi(m.kappas)}, opt.digits) << '\n';
        }
      }
      out << "max junction deviation from lambda_inf <= " << scientific(report.max_junction_deviation) << '\n';
      out << "interior max kappa <= " << decimal(report.interior_max_kappa, opt.digits) << '\n';
      break;
    case Format::csv:
      out << "index,junction,max_kappa_lo,max_kappa_hi\n";
      for (const FamilyMark& m : report.marks) {
        out << m.index << ',' << (m.junction ? 1 : 0) << ',' << decimal(max_lo(m.kappas), opt.digits) << ','
            << decimal(max_hi(m.kappas), opt.digits) << '\n';
      }
      break;
    case Format::jsonl:
      for (const FamilyMark& m : report.marks) {
        out << json{{"index", m.index},
                    {"junction", m.junction},
                    {"max_kappa_lo", decimal(max_lo(m.kappas), opt.digits)},
                    {"max_kappa_hi", decimal(max_hi(m.kappas), opt.digits)}}
                   .dump()
            << '\n';
      }
      out << json{{"prefix", prefix},
                  {"max_junction_deviation", scientific(report.max_junction_deviation)},
                  {"interior_max_kappa", decimal(report.interior_max_kappa, opt.digits)}}
                 .dump()
          << '\n';
      break;
  }
}

bool is_cf_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  return first != std::string::npos && text[first] == '[';
}

QuadraticSurd parse_threshold(const std::string& text) {
  if (text == "lambda-inf") return lambda_infinity();
  return parse_surd(text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  std::string format = "text";
  std::string cf_text;
  std::string value_text;
  int index = 0;
  int max_k = 12;
  int max_period = 8;
  int max_quotient = 3;
  int cases = 500;
  std::uint64_t seed = 20240601;
  std::uint64_t t_max = 100000;
  std::optional<std::string> threshold;
  std::string verify_target;
  std::vector<int> ns;

  CLI::App app{"Second Lagrange spectrum toolkit: exact quadratic-surd evaluation of continued fractions."};
  app.name("lag2");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--digits", opt.digits, "Fractional digits in decimal output")->check(CLI::Range(1u, 2000u));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "jsonl"}));
  app.add_flag("--quiet", opt.quiet, "Only print results and summaries");

  const auto cf_arg = [&](CLI::App* sub) {
    sub->add_option("cf", cf_text, "Continued fraction, e.g. \"[2;(1,1,3)*]\"")->required();
  };
  CLI::App* eval = app.add_subcommand("eval", "Decimal value of a continued fraction or surd");
  eval->add_option("value", value_text, "\"[a0;...,(...)*]\" or a surd such as \"(1 + sqrt(5))/2\"")->required();
  CLI::App* surd = app.add_subcommand("surd", "Continued fraction to surd, or surd to continued fraction");
  surd->add_option("value", value_text, "\"[a0;...,(...)*]\" or a surd such as \"(1 + sqrt(5))/2\"")->required();
  CLI::App* lambda = app.add_subcommand("lambda", "Classical Lagrange constant");
  cf_arg(lambda);
  CLI::App* lambda2_cmd = app.add_subcommand("lambda2", "Second Lagrange constant");
  cf_arg(lambda2_cmd);
  CLI::App* dirichlet = app.add_subcommand("dirichlet", "Dirichlet value limsup of the tail products");
  cf_arg(dirichlet);
  CLI::App* xi_cmd = app.add_subcommand("xi", "Continued fraction of the n-th member of the discrete ladder");
  xi_cmd->add_option("n", index, "n >= 3")->required();
  CLI::App* lambda_n_cmd = app.add_subcommand("lambda-n", "n-th value of the discrete ladder");
  lambda_n_cmd->add_option("n", index, "n >= 3")->required();
  CLI::App* table = app.add_subcommand("table-lemma2", "Prohibited-pattern bounds table");
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify
      ->add_option("suite", verify_target, "lemma2-table, lemma4, lemma5, lemma6, lemma7, perron, eq11, "
                                           "continuant-split, round-trip")
      ->required()
      ->check(CLI::IsMember({"lemma2-table", "lemma4", "lemma5", "lemma6", "lemma7", "perron", "eq11",
                             "continuant-split", "round-trip"}));
  verify->add_option("--max-k", max_k, "Largest k (or m) instance")->check(CLI::Range(0, 200));
  verify->add_option("--cases", cases, "Random cases for identity suites")->check(CLI::Range(1, 1000000));
  verify->add_option("--seed", seed, "Seed for identity suites");
  CLI::App* scan_cmd = app.add_subcommand("scan", "Second Lagrange constants of all short periods (CSV)");
  scan_cmd->add_option("--max-period", max_period, "Longest period")->check(CLI::Range(1, 12));
  scan_cmd->add_option("--max-quotient", max_quotient, "Largest partial quotient")->check(CLI::Range(1, 4));
  scan_cmd->add_option("--threshold", threshold, "Keep values below: lambda-inf or a surd literal");
  CLI::App* family = app.add_subcommand("family", "Kappa enclosures along [0;(3,1,1)^(2n+1),3,1,1,1,1,...]");
  family->add_option("n", ns, "Nondecreasing positive integers")->required();
  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force max of (t psi2(t))^-1 for t <= t-max");
  cf_arg(oracle);
  oracle->add_option("--t-max", t_max, "Largest denominator")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    opt.format = format == "csv" ? Format::csv : format == "jsonl" ? Format::jsonl : Format::text;
    opt.refinement_limit = refinement_limit_from_env();

    if (eval->parsed()) {
      const QuadraticSurd x = is_cf_text(value_text) ? cf_to_surd(parse_cf(value_text)) : parse_surd(value_text);
      emit_value(out, opt, value_text, x, false);
    } else if (surd->parsed()) {
      if (is_cf_text(value_text)) {
        emit_value(out, opt, value_text, cf_to_surd(parse_cf(value_text)));
      } else {
        emit_cf(out, opt, value_text, surd_to_cf(parse_surd(value_text)));
      }
    } else if (lambda->parsed()) {
      emit_value(out, opt, cf_text, lambda_classic(parse_cf(cf_text)).value);
    } else if (lambda2_cmd->parsed()) {
      emit_value(out, opt, cf_text, lambda2(parse_cf(cf_text)).value);
    } else if (dirichlet->parsed()) {
      emit_value(out, opt, cf_text, dirichlet_value(parse_cf(cf_text)));
    } else if (xi_cmd->parsed()) {
      emit_cf(out, opt, std::to_string(index), xi(index));
    } else if (lambda_n_cmd->parsed()) {
      emit_value(out, opt, std::to_string(index), lambda_n(index));
    } else if (table->parsed()) {
      emit_table(out, opt, lemma2_table());
    } else if (verify->parsed()) {
      if (verify_target == "lemma2-table") {
        VerificationReport report{"every bound exceeds lambda_inf", {}};
        for (const auto& r : lemma2_table()) {
          report.checks.push_back({to_string(r.pattern), r.exceeds_lambda_inf,
                                   decimal(r.bound, opt.digits, opt.refinement_limit) + " with " +
                                       std::to_string(r.perturbations_checked) + " perturbations"});
        }
        return emit_report(out, opt, report, "rows", false);
      }
      if (verify_target == "lemma4") return emit_report(out, opt, verify_lemma4(max_k), "instances", false);
      if (verify_target == "lemma5") return emit_report(out, opt, verify_lemma5(max_k), "instances", false);
      if (verify_target == "lemma6") return emit_report(out, opt, verify_lemma6(), "checks", false);
      if (verify_target == "lemma7") return emit_report(out, opt, verify_lemma7(), "checks", false);
      if (verify_target == "perron") return emit_report(out, opt, verify_perron(cases, seed), "cases", true);
      if (verify_target == "eq11")
        return emit_report(out, opt, verify_difference_formula(cases, seed), "cases", true);
      if (verify_target == "continuant-split")
        return emit_report(out, opt, verify_continuant_split(cases, seed), "cases", true);
      return emit_report(out, opt, verify_round_trip(cases, seed), "cases", true);
    } else if (scan_cmd->parsed()) {
      std::optional<QuadraticSurd> limit;
      if (threshold) limit = parse_threshold(*threshold);
      emit_scan(out, opt, scan(max_period, max_quotient, limit));
    } else if (family->parsed()) {
      emit_family(out, opt, continuum_family(ns));
    } else if (oracle->parsed()) {
      const PeriodicCF cf = parse_cf(cf_text);
      const PsiTable table = psi2_oracle(cf, t_max, opt.refinement_limit);
      const EmpiricalConstant c = empirical_constant(table);
      const std::string range = enclosure_text(c.value, opt.digits);
      switch (opt.format) {
        case Format::text:
          out << "max (t psi2(t))^-1 over t <= " << t_max << " in " << range << " at q = " << c.q << '\n';
          break;
        case Format::csv:
          out << "input,t_max,lo,hi,q\n\"" << cf_text << "\"," << t_max << ',' << decimal(c.value.lo, opt.digits)
              << ',' << decimal(c.value.hi, opt.digits) << ',' << c.q << '\n';
          break;
        case Format::jsonl:
          out << json{{"input", cf_text}, {"t_max", t_max}, {"lo", decimal(c.value.lo, opt.digits)},
                      {"hi", decimal(c.value.hi, opt.digits)}, {"q", c.q}}
                     .dump()
              << '\n';
          break;
      }
    }
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const PrecisionLimitError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace lag2::cli
