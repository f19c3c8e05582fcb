#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace blaschke {

/// Parses "p/q", an integer, or a finite decimal ("0.25", "3.5") into an
/// exact canonical rational. Throws DomainError on malformed input.
mpq_class parse_rational(std::string_view text);

std::string to_string(const mpq_class& q);

/// Norm exponent p ∈ [1, ∞]. Finite values are kept as exact rationals so
/// that theory exponents such as (2-p)/(2p) stay exact.
class Exponent {
 public:
  static Exponent finite(const mpq_class& p);
  static Exponent finite(long p) { return finite(mpq_class(p)); }
  static Exponent infinity() { return Exponent(); }
  /// Accepts "inf", "infinity" or anything parse_rational accepts.
  static Exponent parse(std::string_view text);

  bool is_infinite() const { return !value_.has_value(); }
  /// Exact value; only valid for finite exponents.
  const mpq_class& exact() const;
  double to_double() const;
  std::string str() const;

  friend bool operator==(const Exponent& a, const Exponent& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return *a.value_ == *b.value_;
  }

 private:
  Exponent() = default;
  std::optional<mpq_class> value_;
};

}  // namespace blaschke
