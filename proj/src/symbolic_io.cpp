#include <cctype>

#include "cyclicpic/symbolic.hpp"

namespace cyclicpic {

namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += to_string(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    std::vector<MultiPoly::Term> terms;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = next() == '-';
      skip_ws();
    }
    terms.push_back(parse_term(negative));
    skip_ws();
    while (pos_ < text_.size()) {
      char c = next();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      skip_ws();
      terms.push_back(parse_term(c == '-'));
      skip_ws();
    }
    return MultiPoly::from_terms(std::move(terms));
  }

 private:
  MultiPoly::Term parse_term(bool negative) {
    Rational coeff = negative ? -1 : 1;
    std::vector<Monomial::Factor> factors;
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        BigInt num = parse_uint();
        BigInt den = 1;
        skip_ws();
        if (pos_ < text_.size() && peek() == '/') {
          ++pos_;
          skip_ws();
          den = parse_uint();
          if (den == 0) fail("zero denominator");
        }
        coeff *= Rational(num, den);
        coeff.canonicalize();
      } else {
        VarId v = parse_var();
        std::uint32_t e = 1;
        skip_ws();
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = static_cast<std::uint32_t>(to_int64(parse_uint()));
        }
        factors.emplace_back(v, e);
      }
      skip_ws();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {Monomial::from_factors(std::move(factors)), coeff};
  }

  VarId parse_var() {
    if (pos_ == text_.size()) fail("expected a variable");
    char c = next();
    VarFamily family{};
    switch (c) {
      case 'a': family = VarFamily::A; break;
      case 'p': family = VarFamily::P; break;
      case 's': family = VarFamily::S; break;
      case 't': family = VarFamily::T; break;
      case 'x': family = VarFamily::X; break;
      case 'y': family = VarFamily::Y; break;
      default: fail(std::string("unexpected character '") + c + "'");
    }
    if (pos_ < text_.size() && peek() == '_') {
      ++pos_;
      auto index = to_int64(parse_uint());
      if (index < 0 || index > UINT32_MAX) fail("variable index out of range");
      try {
        return VarId::make(family, static_cast<std::uint32_t>(index));
      } catch (const Error& e) {
        fail(e.what());
      }
    }
    if (family != VarFamily::X && family != VarFamily::Y) fail("variable needs an index");
    return VarId{family, 0};
  }

  BigInt parse_uint() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return text_[pos_]; }
  char next() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, why + " at offset " + std::to_string(pos_) + " in '" +
                                      std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Position of the ')' matching the '(' at `open`, or npos.
std::size_t matching_paren(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i;
  }
  return std::string_view::npos;
}

[[noreturn]] void bad_factored(std::string_view text) {
  throw Error(ErrorKind::Parse, "malformed rational function: '" + std::string(text) + "'");
}

}  // namespace

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(t.coeff);
    std::string mono = monomial_text(t.monomial);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

MultiPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string to_string(const FactoredRational& f) {
  if (f.is_polynomial()) return to_string(f.numerator());
  std::string out = "(" + to_string(f.numerator()) + ")/(";
  bool first = true;
  for (const auto& [poly, k] : f.denominator_factors()) {
    if (!first) out += '*';
    first = false;
    out += "(" + to_string(poly) + ")";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out + ")";
}

FactoredRational parse_factored(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty() || s.front() != '(') return FactoredRational(parse_poly(s));
  std::size_t close = matching_paren(s, 0);
  if (close == std::string_view::npos) bad_factored(text);
  MultiPoly num = parse_poly(s.substr(1, close - 1));
  std::string_view rest = trim(s.substr(close + 1));
  if (rest.empty()) return FactoredRational(num);
  if (rest.front() != '/') bad_factored(text);
  rest = trim(rest.substr(1));
  if (rest.empty() || rest.front() != '(' || matching_paren(rest, 0) != rest.size() - 1) {
    bad_factored(text);
  }
  rest = trim(rest.substr(1, rest.size() - 2));
  std::vector<FactoredRational::Factor> factors;
  while (!rest.empty()) {
    if (rest.front() != '(') bad_factored(text);
    std::size_t end = matching_paren(rest, 0);
    if (end == std::string_view::npos) bad_factored(text);
    MultiPoly poly = parse_poly(rest.substr(1, end - 1));
    rest = trim(rest.substr(end + 1));
    std::uint32_t k = 1;
    if (!rest.empty() && rest.front() == '^') {
      rest = trim(rest.substr(1));
      std::size_t digits = 0;
      while (digits < rest.size() && std::isdigit(static_cast<unsigned char>(rest[digits]))) {
        ++digits;
      }
      if (digits == 0) bad_factored(text);
      k = static_cast<std::uint32_t>(std::stoul(std::string(rest.substr(0, digits))));
      rest = trim(rest.substr(digits));
    }
    factors.push_back({std::move(poly), k});
    if (!rest.empty()) {
      if (rest.front() != '*') bad_factored(text);
      rest = trim(rest.substr(1));
    }
  }
  return FactoredRational(std::move(num), std::move(factors));
}

}  // namespace cyclicpic
