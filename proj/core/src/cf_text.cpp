#include "lag2/cf_text.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "lag2/errors.hpp"

namespace lag2 {

namespace {

class CfParser {
 public:
  explicit CfParser(std::string_view text) : text_(text) {}

  PeriodicCF parse() {
    expect('[');
    BigInt a0 = parse_int();
    expect(';');
    std::vector<Quotient> preperiod;
    std::vector<Quotient> period;
    bool have_period = false;
    for (;;) {
      if (have_period) fail("periodic group must be the last item");
      if (peek() == '(') {
        const std::size_t group_start = pos_;
        auto group = parse_group(/*depth=*/0);
        skip_space();
        if (peek() == '*') {
          ++pos_;
          period = std::move(group);
          have_period = true;
        } else if (peek() == '^') {
          ++pos_;
          const Quotient times = parse_posint();
          for (Quotient i = 0; i < times; ++i) preperiod.insert(preperiod.end(), group.begin(), group.end());
        } else {
          pos_ = group_start;
          fail("expected '^' or '*' after group");
        }
      } else {
        preperiod.push_back(parse_posint());
      }
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    expect(']');
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    if (!have_period) fail("missing periodic group '(...)*'");
    return PeriodicCF(std::move(a0), Word(std::move(preperiod)), Word(std::move(period)));
  }

 private:
  // "(" elem ("," elem)* ")" with the opening parenthesis at pos_.
  std::vector<Quotient> parse_group(int depth) {
    expect('(');
    std::vector<Quotient> out;
    for (;;) {
      if (peek() == '(') {
        if (depth > 0) fail("groups nest at most one level deep");
        auto inner = parse_group(depth + 1);
        expect('^');
        const Quotient times = parse_posint();
        for (Quotient i = 0; i < times; ++i) out.insert(out.end(), inner.begin(), inner.end());
      } else {
        out.push_back(parse_posint());
      }
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    expect(')');
    return out;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string digits() {
    skip_space();
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
    return out;
  }

  BigInt parse_int() {
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = text_[pos_++] == '-';
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.empty()) {
      pos_ = start;
      fail("expected integer");
    }
    BigInt value(d, 10);
    return negative ? BigInt(-value) : value;
  }

  Quotient parse_posint() {
    skip_space();
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.empty()) {
      pos_ = start;
      fail("expected positive integer");
    }
    const BigInt value(d, 10);
    if (value <= 0 || !value.fits_ulong_p()) {
      pos_ = start;
      fail("partial quotient out of range");
    }
    return value.get_ui();
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PeriodicCF parse_cf(std::string_view text) { return CfParser(text).parse(); }

std::string format_cf(const PeriodicCF& cf) {
  std::string out = "[" + cf.a0().get_str() + ";";
  if (!cf.preperiod().empty()) out += to_string(cf.preperiod()) + ",";
  out += "(" + to_string(cf.period()) + ")*]";
  return out;
}

}  // namespace lag2
