#include "milnor/polyforms/parse.hpp"

#include <cctype>

namespace milnor::polyforms {

ParseError::ParseError(const std::string& what, std::size_t position)
    : InputError(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(vars_.size());
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Poly t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  bool starts_atom() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '_';
  }

  Poly term() {
    Poly acc = power();
    for (;;) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        skip_ws();
        std::size_t at = pos_;
        exactla::Integer den = integer();
        if (den == 0) throw ParseError("division by zero", at);
        acc = acc * Rational(1, den);
      } else if (starts_atom()) {
        acc = acc * power();  // implicit multiplication
      } else {
        break;
      }
    }
    return acc;
  }

  Poly power() {
    skip_ws();
    std::size_t at = pos_;
    Poly base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip_ws();
    std::size_t exp_at = pos_;
    exactla::Integer e = integer();
    if (!e.fits_uint_p() || e > 4096) throw ParseError("exponent too large", exp_at);
    auto ue = static_cast<unsigned>(e.get_ui());
    if (!negative) return base.pow(ue);
    if (base.term_count() != 1) throw ParseError("negative exponent needs a single monomial base", at);
    const auto& [m, c] = *base.terms().begin();
    Monomial inv(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) inv[i] = -m[i] * static_cast<int>(ue);
    Rational coef = 1;
    for (unsigned i = 0; i < ue; ++i) coef /= c;
    return Poly::monomial(inv, coef);
  }

  exactla::Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return exactla::Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(vars_.size(), Rational(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return Poly::variable(vars_.size(), i);
      throw ParseError("unknown variable '" + name + "'", start);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  if (vars.empty()) throw InputError("parse_poly: empty variable list");
  return Parser(text, vars).parse();
}

std::vector<std::string> parse_variable_list(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  if (out.empty()) throw InputError("empty variable list");
  return out;
}

}  // namespace milnor::polyforms
