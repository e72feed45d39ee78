#include "mqa/notation.hpp"

#include <cctype>

namespace mqa {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LinkExpression parse() {
    LinkExpression expr;
    skip_ws();
    if (peek() == 'M') {
      expr.kind = LinkKind::MontesinosForm;
    } else if (peek() == 'P') {
      expr.kind = LinkKind::PretzelForm;
    } else {
      fail("expected 'M' or 'P'");
    }
    ++pos_;
    expect('(');
    skip_ws();
    expr.e = parse_int();
    expect(';');
    skip_ws();
    if (peek() == ')') fail("empty parameter list");
    for (;;) {
      skip_ws();
      const std::size_t start = pos_;
      Fraction t = parse_param(expr.kind);
      if (t.is_zero()) throw ParseError("elementary tangle not allowed (zero parameter)", start);
      expr.params.push_back(std::move(t));
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ')') {
        ++pos_;
        break;
      }
      fail("expected ',' or ')'");
    }
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return expr;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Integer parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    if (!is_digit(peek())) fail("expected an integer");
    while (is_digit(peek())) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.front() == '+') digits.erase(0, 1);
    return Integer(digits);
  }

  Fraction parse_param(LinkKind kind) {
    const std::size_t start = pos_;
    if (text_.substr(pos_, 3) == "w:[") {
      if (kind == LinkKind::PretzelForm) fail("tangle words are not allowed in P(...)");
      pos_ += 3;
      IntSequence word;
      for (;;) {
        word.push_back(parse_int());
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == ']') {
          ++pos_;
          break;
        }
        fail("expected ',' or ']' in tangle word");
      }
      return word_to_fraction(word, start);
    }

    // Maximal run of digits and minus signs.
    while (is_digit(peek()) || peek() == '-') ++pos_;
    const std::string_view run = text_.substr(start, pos_ - start);
    if (run.empty()) fail("expected a parameter");

    std::size_t save = pos_;
    skip_ws();
    if (peek() == '/') {
      if (kind == LinkKind::PretzelForm) fail("pretzel tassels must be integers");
      ++pos_;
      const Integer num = run_as_int(run, start);
      const Integer den = parse_int();
      if (den.is_zero()) throw ParseError("undefined fraction", start);
      return Fraction::make(num, den);
    }
    pos_ = save;

    if (kind == LinkKind::PretzelForm) return Fraction(run_as_int(run, start));

    const bool negative = run.front() == '-';
    std::size_t digit_count = 0;
    for (char c : run) digit_count += is_digit(c) ? 1 : 0;
    if (digit_count == 1) return Fraction(run_as_int(run, start));

    IntSequence word;
    for (std::size_t k = 0; k < run.size(); ++k) {
      const char c = run[k];
      if (c == '-') {
        if (!negative || k + 1 >= run.size() || !is_digit(run[k + 1])) {
          throw ParseError("malformed tangle word", start + k);
        }
        continue;
      }
      const int d = c - '0';
      word.push_back(negative ? Integer(-d) : Integer(d));
    }
    return word_to_fraction(word, start);
  }

  Integer run_as_int(std::string_view run, std::size_t start) const {
    std::size_t k = run.front() == '-' ? 1 : 0;
    if (k == run.size()) throw ParseError("expected an integer", start);
    for (; k < run.size(); ++k) {
      if (!is_digit(run[k])) throw ParseError("expected an integer", start + k);
    }
    return Integer(std::string(run));
  }

  static Fraction word_to_fraction(const IntSequence& word, std::size_t start) {
    try {
      return word_value(word);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      throw ParseError(std::string("invalid tangle word: ") + err.what(), start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += ", ";
    out += parts[i];
  }
  return out;
}

}  // namespace

LinkExpression parse_link(std::string_view text) { return Parser(text).parse(); }

std::string format_param(const Fraction& t, PrintStyle style) {
  if (style == PrintStyle::Fractions || abs(t.num()) == 1 || t.is_zero()) {
    // Multi-digit bare integers would read back as tangle words.
    if (t.is_integer() && abs(t.num()) >= 10) return t.num().str() + "/1";
    return t.str();
  }
  const IntSequence word = tangle_word(t);
  bool compact = true;
  for (const auto& a : word) compact = compact && abs(a) <= 9;
  if (!compact) {
    std::vector<std::string> parts;
    for (const auto& a : word) parts.push_back(a.str());
    std::string out = "w:[";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
    return out + "]";
  }
  std::string out;
  const bool negative = t.sign() < 0;
  for (const auto& a : word) {
    if (negative) out += '-';
    out += abs(a).str();
  }
  return out;
}

std::string print_link(const LinkExpression& expr, PrintStyle style) {
  std::vector<std::string> parts;
  parts.reserve(expr.params.size());
  if (expr.kind == LinkKind::PretzelForm) {
    for (const auto& q : expr.params) parts.push_back(q.str());
    return "P(" + expr.e.str() + "; " + join(parts) + ")";
  }
  for (const auto& t : expr.params) parts.push_back(format_param(t, style));
  return "M(" + expr.e.str() + "; " + join(parts) + ")";
}

MontesinosLink pretzel_to_montesinos(const LinkExpression& expr) {
  if (expr.kind != LinkKind::PretzelForm) throw Error("not a pretzel expression");
  for (const auto& q : expr.params) {
    if (q.is_zero()) throw Error("zero tassel");
    if (!q.is_integer()) throw Error("pretzel tassels must be integers");
  }
  return normalize_input(expr.e, expr.params);
}

MontesinosLink to_montesinos(const LinkExpression& expr) {
  if (expr.kind == LinkKind::PretzelForm) return pretzel_to_montesinos(expr);
  return normalize_input(expr.e, expr.params);
}

LinkExpression to_expression(const TangleSum& sum) {
  return LinkExpression{LinkKind::MontesinosForm, sum.e, sum.tangles};
}

}  // namespace mqa
