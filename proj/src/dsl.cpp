#include "hbesov/dsl.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace hbesov {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool try_literal(std::string_view lit) {
    skip_ws();
    std::size_t p = pos_;
    for (char c : lit) {
      while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
      if (p >= text_.size() || text_[p] != c) return false;
      ++p;
    }
    pos_ = p;
    return true;
  }

  void expect_literal(std::string_view lit, const char* what) {
    if (!try_literal(lit)) throw ParseError(pos_, std::string("expected ") + what);
  }

  bool peek_number() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
  }

  double number(const char* what) {
    skip_ws();
    double v = 0.0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr == first)
      throw ParseError(pos_, std::string("expected number for ") + what);
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SeqExpr parse_seq(std::string_view text) {
  Cursor c(text);
  if (c.try_literal("paren(")) {
    const double a = c.number("rate");
    c.expect_literal(")", "')'");
    c.expect_end();
    return paren(a);
  }

  SeqExpr s;
  if (!c.try_literal("2^(")) {
    if (!c.peek_number()) throw ParseError(c.pos(), "expected scale or '2^('");
    s.scale = c.number("scale");
    if (!(s.scale > 0.0)) throw ParseError(c.pos(), "scale must be positive");
    c.expect_literal("*", "'*' after scale");
    c.expect_literal("2^(", "'2^('");
  }
  if (c.try_literal("j)")) {
    s.rate = 1.0;
  } else if (c.try_literal("-j)")) {
    s.rate = -1.0;
  } else {
    s.rate = c.number("rate");
    c.expect_literal("j)", "'j)'");
  }
  while (c.try_literal("*")) {
    if (c.try_literal("(1+j)^")) {
      s.poly = c.number("polynomial exponent");
    } else if (c.try_literal("log^")) {
      s.loglog = c.number("log exponent");
    } else {
      throw ParseError(c.pos(), "expected '(1+j)^' or 'log^' factor");
    }
  }
  c.expect_end();
  return s;
}

GaugeExpr parse_gauge(std::string_view text, int n) {
  Cursor c(text);
  double scale = 1.0;
  if (c.peek_number()) {
    scale = c.number("scale");
    if (!(scale > 0.0)) throw ParseError(c.pos(), "scale must be positive");
    c.expect_literal("*", "'*' after scale");
  }
  c.expect_literal("r^", "'r^'");
  const std::size_t dpos = c.pos();
  const double d = c.number("dimension exponent");
  if (d < 0.0) throw ParseError(dpos, "dimension exponent must be >= 0");
  double beta = 0.0;
  if (c.try_literal("*(1+L)^")) beta = c.number("log exponent");
  c.expect_end();
  return make_gauge(d, beta, n, scale);
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // folds -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

double parse_exponent_flag(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") return kInfExp;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("cannot parse exponent '" + text + "'");
  return v;
}

std::string print_seq(const SeqExpr& s) {
  std::string out;
  if (s.scale != 1.0) out += format_number(s.scale) + "*";
  out += "2^(" + format_number(s.rate) + "j)";
  if (s.poly != 0.0) out += "*(1+j)^" + format_number(s.poly);
  if (s.loglog != 0.0) out += "*log^" + format_number(s.loglog);
  return out;
}

std::string print_gauge(const GaugeExpr& g) {
  std::string out;
  if (g.scale != 1.0) out += format_number(g.scale) + "*";
  out += "r^" + format_number(g.d);
  if (g.logexp != 0.0) out += "*(1+L)^" + format_number(g.logexp);
  return out;
}

}  // namespace hbesov
