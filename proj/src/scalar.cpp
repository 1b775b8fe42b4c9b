#include "strata/scalar.hpp"

#include <cmath>
#include <sstream>

namespace strata {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::ModeMismatch: return "mode_mismatch";
    case ErrorCode::IndexOutOfRange: return "index_out_of_range";
    case ErrorCode::EmptySubset: return "empty_subset";
    case ErrorCode::TooLarge: return "too_large";
    case ErrorCode::ZeroMatrix: return "zero_matrix";
    case ErrorCode::NotMandelstam: return "not_mandelstam";
    case ErrorCode::NonzeroDiagonal: return "nonzero_diagonal";
    case ErrorCode::IntransitiveZeros: return "intransitive_zero_pattern";
    case ErrorCode::InconsistentSigns: return "inconsistent_sign_coloring";
    case ErrorCode::RankOutOfRange: return "rank_out_of_range";
    case ErrorCode::EmptyStratum: return "empty_stratum";
    case ErrorCode::Inadmissible: return "not_momentum_conserving";
    case ErrorCode::SamplingFailed: return "sampling_failed";
    case ErrorCode::NotConverged: return "not_converged";
    case ErrorCode::Incomparable: return "incomparable_labels";
    case ErrorCode::InconsistentAngles: return "inconsistent_angles";
    case ErrorCode::LpFailure: return "lp_failure";
    case ErrorCode::Parse: return "parse_error";
  }
  return "unknown";
}

std::string_view to_string(Mode mode) { return mode == Mode::Exact ? "exact" : "float"; }

Scalar Scalar::exact(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::parse_exact(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    const auto b = t.find_first_not_of(" \t");
    const auto e = t.find_last_not_of(" \t");
    t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty rational literal");
  try {
    if (const auto dot = s.find('.'); dot != std::string::npos) {
      // Decimal literal: shift the point into the denominator.
      if (s.find_first_of("eE/") != std::string::npos)
        throw Error(ErrorCode::Parse, "unsupported rational literal '" + s + "'");
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      const std::size_t scale = s.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+") throw Error(ErrorCode::Parse, "bad literal '" + s + "'");
      if (digits[0] == '+') digits.erase(0, 1);
      mpz_class num(digits, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
      return Scalar(mpq_class(num, den));
    }
    std::string body = s;
    if (body[0] == '+') body.erase(0, 1);
    mpq_class q(body, 10);
    if (q.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + s + "'");
    return Scalar(std::move(q));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::Parse, "bad rational literal '" + s + "'");
  }
}

const mpq_class& Scalar::rational() const {
  if (!is_exact()) throw Error(ErrorCode::ModeMismatch, "scalar is not exact");
  return std::get<mpq_class>(value_);
}

double Scalar::real() const {
  if (is_exact()) throw Error(ErrorCode::ModeMismatch, "scalar is not a float");
  return std::get<double>(value_);
}

double Scalar::to_double() const {
  return is_exact() ? std::get<mpq_class>(value_).get_d() : std::get<double>(value_);
}

int Scalar::sign() const {
  if (is_exact()) return sgn(std::get<mpq_class>(value_));
  const double x = std::get<double>(value_);
  return (x > 0) - (x < 0);
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

std::string Scalar::to_string() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_str();
  std::ostringstream os;
  os.precision(17);
  os << std::get<double>(value_);
  return os.str();
}

void Scalar::require_same_mode(const Scalar& other) const {
  if (mode() != other.mode()) throw Error(ErrorCode::ModeMismatch, "mixed exact/float arithmetic");
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-std::get<mpq_class>(value_)));
  return Scalar(-std::get<double>(value_));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_mode(rhs);
  if (is_exact()) std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  else std::get<double>(value_) += std::get<double>(rhs.value_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_mode(rhs);
  if (is_exact()) std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  else std::get<double>(value_) -= std::get<double>(rhs.value_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_mode(rhs);
  if (is_exact()) std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  else std::get<double>(value_) *= std::get<double>(rhs.value_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_mode(rhs);
  if (rhs.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (is_exact()) std::get<mpq_class>(value_) /= std::get<mpq_class>(rhs.value_);
  else std::get<double>(value_) /= std::get<double>(rhs.value_);
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_mode(b);
  if (a.is_exact()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return std::get<double>(a.value_) == std::get<double>(b.value_);
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.require_same_mode(b);
  if (a.is_exact()) return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
  return std::get<double>(a.value_) < std::get<double>(b.value_);
}

}  // namespace strata
