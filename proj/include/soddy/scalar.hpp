#pragma once

// Scalar domains for the whole library: IEEE double for numeric work and
// arbitrary-precision rationals for exact identities. Everything downstream
// is templated on the scalar type S and talks to it through scalar_traits.

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>

namespace soddy {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated or value malformed for the requested operation.
class domain_error : public error {
 public:
  using error::error;
};

// The exact domain cannot represent the result (non-square radicand, ...).
class not_representable : public domain_error {
 public:
  using domain_error::domain_error;
};

class not_mutually_tangent : public error {
 public:
  using error::error;
};

class no_real_solution : public error {
 public:
  using error::error;
};

inline constexpr double default_tolerance = 1e-9;

template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;

  static double abs(double v) { return std::fabs(v); }
  static double to_double(double v) { return v; }
  static bool is_zero(double v) { return v == 0.0; }

  static std::optional<double> try_sqrt(double v) {
    if (v < 0.0) return std::nullopt;
    return std::sqrt(v);
  }

  static std::string str(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
  }

  static double parse(const std::string& s) {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw domain_error("bad scalar literal: " + s);
    return v;
  }
};

template <>
struct scalar_traits<BigRational> {
  static constexpr bool exact = true;

  static BigRational abs(const BigRational& v) { return v < 0 ? BigRational(-v) : v; }
  static double to_double(const BigRational& v) { return v.template convert_to<double>(); }
  static bool is_zero(const BigRational& v) { return v == 0; }

  // Exact square root; empty unless v is the square of a rational.
  static std::optional<BigRational> try_sqrt(const BigRational& v) {
    if (v < 0) return std::nullopt;
    BigInt num = numerator(v), den = denominator(v);
    BigInt sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return BigRational(sn, sd);
  }

  static std::string str(const BigRational& v) {
    BigInt num = numerator(v), den = denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  static BigRational parse(const std::string& s) {
    try {
      if (s.find('/') != std::string::npos) return BigRational(s);
      if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
          s.find('E') != std::string::npos) {
        // Decimal literals convert through double, which is itself a rational.
        return BigRational(scalar_traits<double>::parse(s));
      }
      return BigRational(s);
    } catch (const std::exception&) {
      throw domain_error("bad rational literal: " + s);
    }
  }
};

// 1/x extended by the division-by-zero convention 1/0 = 0. Total.
template <typename S>
S dbz_inv(const S& x) {
  return scalar_traits<S>::is_zero(x) ? S(0) : S(S(1) / x);
}

template <typename S>
S abs_val(const S& v) {
  return scalar_traits<S>::abs(v);
}

template <typename S>
double to_double(const S& v) {
  return scalar_traits<S>::to_double(v);
}

// Square root in the scalar domain; throws when the domain has no value for it.
template <typename S>
S domain_sqrt(const S& v) {
  auto r = scalar_traits<S>::try_sqrt(v);
  if (!r) {
    if constexpr (scalar_traits<S>::exact) {
      throw not_representable("square root is irrational in the exact domain: sqrt(" +
                              scalar_traits<S>::str(v) + ")");
    } else {
      throw not_representable("square root of negative value: sqrt(" +
                              scalar_traits<S>::str(v) + ")");
    }
  }
  return *r;
}

}  // namespace soddy
