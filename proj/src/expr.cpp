#include "adq/expr.hpp"

#include <algorithm>
#include <cctype>

namespace adq {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, const ExprContext& ctx) : text_(text), ctx_(ctx) {}

  LaurentPoly parse_all() {
    LaurentPoly v = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) +
                     "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  LaurentPoly expression() {
    skip_space();
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    LaurentPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        LaurentPoly d = factor();
        if (auto c = d.constant_value()) {
          if (*c == 0) fail("division by zero");
          acc /= *c;
        } else if (d.is_monomial()) {
          // names denote torus coordinates, so a monomial is a unit
          acc *= LaurentPoly::monomial(monomial_scaled(d.leading_monomial(), -1), 1 / d.leading_coefficient());
        } else {
          acc = exact_divide(acc, d);
        }
      } else {
        return acc;
      }
    }
  }

  long integer_exponent() {
    skip_space();
    bool neg = false;
    if (accept('-'))
      neg = true;
    else if (accept('('))
      return paren_exponent();
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    const long k = std::stol(std::string(text_.substr(start, pos_ - start)));
    return neg ? -k : k;
  }

  long paren_exponent() {
    const long k = integer_exponent();
    expect(')');
    return k;
  }

  static LaurentPoly raise(const LaurentPoly& base, long k) {
    if (k >= 0) return base.pow(static_cast<unsigned>(k));
    if (!base.is_monomial()) throw NonInvertibleImage("negative power of a non-monomial");
    const auto& [m, c] = *base.terms().begin();
    return LaurentPoly::monomial(monomial_scaled(m, -1), Rational(1) / c)
        .pow(static_cast<unsigned>(-k));
  }

  LaurentPoly factor() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && is_name_start(text_[pos_])) {
      std::string name = name_token();
      if (accept('^')) {
        const long k = integer_exponent();
        if (ctx_.resolve_power)
          if (auto v = ctx_.resolve_power(name, k)) return *v;
        return raise(lookup(name), k);
      }
      return lookup(name);
    }
    pos_ = start;
    LaurentPoly base = atom();
    if (accept('^')) return raise(base, integer_exponent());
    return base;
  }

  LaurentPoly lookup(const std::string& name) {
    if (!ctx_.resolve) throw UnknownGenerator("no names available: '" + name + "'");
    if (ctx_.resolve_power)
      if (auto v = ctx_.resolve_power(name, 1)) return *v;
    return ctx_.resolve(name);
  }

  std::string name_token() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    // A "(i,j)" suffix that holds only integers belongs to the name.
    std::size_t p = pos_;
    if (p < text_.size() && text_[p] == '(') {
      std::size_t q = p + 1;
      bool ok = true;
      int commas = 0;
      while (q < text_.size() && text_[q] != ')') {
        const char c = text_[q];
        if (c == ',') ++commas;
        else if (!std::isdigit(static_cast<unsigned char>(c)) && c != ' ') ok = false;
        ++q;
      }
      if (ok && q < text_.size() && commas == 1) {
        std::string suffix;
        for (std::size_t i = p; i <= q; ++i)
          if (text_[i] != ' ') suffix += text_[i];
        name += suffix;
        pos_ = q + 1;
      }
    }
    return name;
  }

  LaurentPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly v = expression();
      expect(')');
      return v;
    }
    if (c == '{') {
      ++pos_;
      LaurentPoly f = expression();
      expect(',');
      LaurentPoly g = expression();
      expect('}');
      if (!ctx_.bracket) fail("brackets are not available here");
      return ctx_.bracket(f, g);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentPoly::constant(ctx_.nvars, parse_rational(text_.substr(start, pos_ - start)));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const ExprContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_expression(std::string_view text, const ExprContext& ctx) {
  LaurentPoly v = Parser(text, ctx).parse_all();
  return v.nvars() == ctx.nvars ? v : v.widened(ctx.nvars);
}

std::pair<std::string, std::string> split_equation(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) return {std::string(text), "0"};  // untrimmed, parsed as is
  if (text.find('=', eq + 1) != std::string_view::npos) throw ParseError("more than one '='");
  auto trim = [](std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return std::string();
    return std::string(s.substr(b, s.find_last_not_of(" \t") - b + 1));
  };
  return {trim(text.substr(0, eq)), trim(text.substr(eq + 1))};
}

std::vector<std::string> expression_names(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_name_start(text[i]) || (i > 0 && is_name_char(text[i - 1]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && is_name_char(text[j])) ++j;
    std::string name(text.substr(i, j - i));
    if (j < text.size() && text[j] == '(') {
      const auto close = text.find(')', j);
      const auto inner = close == std::string_view::npos ? std::string_view{}
                                                         : text.substr(j + 1, close - j - 1);
      const bool integer_pair =
          !inner.empty() && std::count(inner.begin(), inner.end(), ',') == 1 &&
          std::all_of(inner.begin(), inner.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c)) || c == ',' || c == ' ';
          });
      if (integer_pair) {
        for (char c : text.substr(j, close - j + 1))
          if (c != ' ') name += c;
        j = close + 1;
      }
    }
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    i = j;
  }
  return out;
}

}  // namespace adq
