#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

#include "strata/error.hpp"

namespace strata {

enum class Mode { Exact, Float };

std::string_view to_string(Mode mode);

/// A matrix entry: an exact rational (GMP, always canonical) or a double.
/// Arithmetic between an exact and a float scalar is rejected.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }
  explicit Scalar(double x) : value_(x) {}

  static Scalar zero(Mode mode) { return mode == Mode::Exact ? Scalar(mpq_class(0)) : Scalar(0.0); }
  static Scalar exact(long num, long den = 1);
  /// Parses "p", "p/q" or a decimal literal such as "-1.25" into an exact value.
  static Scalar parse_exact(std::string_view text);

  Mode mode() const { return std::holds_alternative<mpq_class>(value_) ? Mode::Exact : Mode::Float; }
  bool is_exact() const { return mode() == Mode::Exact; }

  const mpq_class& rational() const;
  double real() const;
  /// Value as a double in either mode (lossy for exact scalars).
  double to_double() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  Scalar abs() const;

  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  /// Exact equality for exact scalars, bitwise value equality for floats.
  /// Comparing scalars of different modes is an error.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b);

 private:
  void require_same_mode(const Scalar& other) const;

  std::variant<mpq_class, double> value_;
};

}  // namespace strata
