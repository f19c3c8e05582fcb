#include "blaschke/rational.hpp"

#include <cctype>
#include <limits>

#include "blaschke/errors.hpp"

namespace blaschke {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw DomainError("not an integer: '" + std::string(s) + "'");
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError("empty rational");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(text.substr(0, slash));
    const mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    bool neg = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      neg = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw DomainError("malformed decimal '" + std::string(text) + "'");
    mpz_class scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole), 10);
    const mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(std::string(frac), 10);
    mpq_class q(w * scale + f, scale);
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
  }

  return mpq_class(parse_integer(text));
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

Exponent Exponent::finite(const mpq_class& p) {
  if (p < 1) throw DomainError("norm exponent must satisfy p >= 1, got " + p.get_str());
  Exponent e;
  e.value_ = p;
  return e;
}

Exponent Exponent::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf" || text == "oo") return infinity();
  return finite(parse_rational(text));
}

const mpq_class& Exponent::exact() const {
  if (!value_) throw DomainError("p = inf has no finite value");
  return *value_;
}

double Exponent::to_double() const {
  return value_ ? value_->get_d() : std::numeric_limits<double>::infinity();
}

std::string Exponent::str() const { return value_ ? value_->get_str() : std::string("inf"); }

}  // namespace blaschke
