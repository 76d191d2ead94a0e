#include "hesscurve/parse.hpp"

#include <cctype>
#include <string>

#include "hesscurve/error.hpp"

namespace hesscurve {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) src_.push_back(c);
    }
  }

  BivarPoly parse() {
    if (src_.empty()) fail("empty polynomial");
    BivarPoly result;
    bool first = true;
    while (pos_ < src_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      result += parse_term() * Rational(sign);
      first = false;
    }
    return result;
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + src_ + "'");
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(src_[pos_++]);
    return out;
  }

  BivarPoly parse_term() {
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      std::string den = "1";
      if (peek() == '/') {
        ++pos_;
        den = digits();
        if (den.empty()) fail("expected denominator");
      }
      coeff = parse_rational(num + "/" + den);
      have_coeff = true;
    }

    int ex = 0, ey = 0;
    bool have_var = false;
    while (true) {
      const std::size_t mark = pos_;
      if (peek() == '*' && (have_coeff || have_var)) ++pos_;
      const char v = peek();
      if (v != 'x' && v != 'y') {
        if (pos_ != mark) fail("expected variable after '*'");
        break;
      }
      ++pos_;
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        const std::string ds = digits();
        if (ds.empty() || ds.size() > 6) fail("bad exponent");
        e = std::stoi(ds);
      }
      (v == 'x' ? ex : ey) += e;
      have_var = true;
    }
    if (!have_coeff && !have_var) fail("expected a term");
    return BivarPoly::term(coeff, ex, ey);
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

BivarPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace hesscurve
