#pragma once

// Exact scalar types and their Eigen integration.

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <string_view>

using BigInt = mpz_class;
using Rational = mpq_class;

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 300,
    MulCost = 200
  };
};

}  // namespace Eigen

namespace cyclicpic {

using IntMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<BigInt, Eigen::Dynamic, 1>;
using IntRowVector = Eigen::Matrix<BigInt, 1, Eigen::Dynamic>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Mat2 = Eigen::Matrix<Rational, 2, 2>;

/// Parses `p`, `-p` or `p/q` (surrounding whitespace allowed). Throws
/// Error(Parse) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// `p` when the denominator is 1, otherwise `p/q`.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

Rational pow(const Rational& base, long exponent);
BigInt pow(const BigInt& base, unsigned long exponent);

/// Binomial coefficient as a machine integer; callers stay well below overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Exact conversion; throws Error(OutOfRange) when the value does not fit.
std::int64_t to_int64(const BigInt& z);

}  // namespace cyclicpic
