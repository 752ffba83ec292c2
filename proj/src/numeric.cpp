#include "cyclicpic/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "cyclicpic/error.hpp"

namespace cyclicpic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? "1" : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorKind::Parse, "malformed rational: '" + std::string(text) + "'");
  }
  BigInt d = parse_integer(den);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator: '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorKind::DenominatorVanished, "negative power of zero");
    return pow(Rational(1) / base, -exponent);
  }
  auto e = static_cast<unsigned long>(exponent);
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return Rational(num, den);
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::OutOfRange, "integer too large: " + z.get_str());
  return z.get_si();
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingVariable: return "MissingVariable";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::DenominatorVanished: return "DenominatorVanished";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::NotInSublattice: return "NotInSublattice";
    case ErrorKind::EmptyStack: return "EmptyStack";
    case ErrorKind::NonLinearOccurrence: return "NonLinearOccurrence";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace cyclicpic
