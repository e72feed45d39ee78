#pragma once

// Text forms of links:
//
//   link   := ("M" | "P") "(" int ";" param ("," param)* ")"
//   param  := int | int "/" int | word
//   word   := digitstring | "w:[" int ("," int)* "]"
//
// Whitespace between tokens is ignored. Inside M(...), a bare digit string of
// two or more digits is a Conway tangle word with one digit per tassel
// ("324" is the tangle 3 2 4 = 31/7); a leading minus negates every tassel,
// and the per-tassel form "-2-4-3" is accepted as well. Use "w:[...]" for
// multi-digit tassels and "n/1" for integer tangles with |n| >= 10.
// Inside P(...), parameters are plain integers.
//
// e follows the convention M(e; ...) = 1*(e + t_1 0 + ... + t_p 0); data in
// the Burde-Zieschang convention must have e negated before use.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mqa/montesinos.hpp"
#include "mqa/rational.hpp"

namespace mqa {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

enum class LinkKind { MontesinosForm, PretzelForm };

struct LinkExpression {
  LinkKind kind = LinkKind::MontesinosForm;
  Integer e;
  std::vector<Fraction> params;  // integers (den 1) for PretzelForm

  friend bool operator==(const LinkExpression&, const LinkExpression&) = default;
};

enum class PrintStyle { Fractions, TangleWords };

LinkExpression parse_link(std::string_view text);

std::string print_link(const LinkExpression& expr, PrintStyle style = PrintStyle::Fractions);

/// Renders a single parameter the way print_link does inside M(...).
std::string format_param(const Fraction& t, PrintStyle style = PrintStyle::Fractions);

/// P(e; p_1, ..., p_n) -> M(e; p_1, ..., p_n) (tassels as integer tangles),
/// normalized. Throws for a non-pretzel expression or a zero tassel.
MontesinosLink pretzel_to_montesinos(const LinkExpression& expr);

/// Either form, normalized into a MontesinosLink.
MontesinosLink to_montesinos(const LinkExpression& expr);

inline MontesinosLink parse_montesinos(std::string_view text) { return to_montesinos(parse_link(text)); }

LinkExpression to_expression(const TangleSum& sum);

inline std::string format_link(const TangleSum& sum, PrintStyle style = PrintStyle::Fractions) {
  return print_link(to_expression(sum), style);
}
inline std::string format_link(const MontesinosLink& link, PrintStyle style = PrintStyle::Fractions) {
  return format_link(link.params(), style);
}

}  // namespace mqa
