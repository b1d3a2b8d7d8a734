#ifndef HBESOV_DSL_HPP
#define HBESOV_DSL_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "hbesov/gauge.hpp"
#include "hbesov/seq.hpp"

namespace hbesov {

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(std::size_t off, const std::string& msg)
      : std::runtime_error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

/// seq := [number '*'] '2^(' [number] 'j)' ['*(1+j)^' number] ['*log^' number]
///      | 'paren(' number ')'
/// Whitespace-insensitive; offsets in errors refer to the original bytes.
SeqExpr parse_seq(std::string_view text);

/// gauge := [number '*'] 'r^' number ['*(1+L)^' number]
/// where L stands for |log2 r|; the ambient dimension comes from the caller.
GaugeExpr parse_gauge(std::string_view text, int n = 1);

/// Canonical forms; parse(print(e)) == e for prefix-free sequences.
std::string print_seq(const SeqExpr& s);
std::string print_gauge(const GaugeExpr& g);

/// Shortest round-trip decimal for a double; "inf" for infinity.
std::string format_number(double v);
double parse_exponent_flag(const std::string& text);  // accepts "inf"

}  // namespace hbesov

#endif
