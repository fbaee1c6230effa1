#ifndef FREELERAY_SCALAR_HPP
#define FREELERAY_SCALAR_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fleray {

// Exact arbitrary-precision scalars. cpp_rational keeps values canonical
// (gcd 1, positive denominator), so operator== is value equality and maps
// keyed on exact comparisons behave.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

// Raised when an operation needs exact scalars but was handed floats, or
// the other way around (zeta basis).
class UnsupportedModeError : public std::logic_error {
 public:
  explicit UnsupportedModeError(const std::string& what) : std::logic_error(what) {}
};

// Raised by the JSON readers; the message names the offending term.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static constexpr bool exact = true;
  static Rational conj(const Rational& x) { return x; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational from_int(std::int64_t v) { return Rational(v); }
  static double abs_value(const Rational& x) { return std::abs(x.convert_to<double>()); }
};

template <>
struct ScalarOps<Complex> {
  static constexpr bool exact = false;
  static Complex conj(const Complex& x) { return std::conj(x); }
  static bool is_zero(const Complex& x) { return x.real() == 0.0 && x.imag() == 0.0; }
  static Complex from_int(std::int64_t v) { return Complex(static_cast<double>(v), 0.0); }
  static double abs_value(const Complex& x) { return std::abs(x); }
};

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline Complex to_complex(const Rational& x) { return Complex(to_double(x), 0.0); }

}  // namespace fleray

#endif  // FREELERAY_SCALAR_HPP
