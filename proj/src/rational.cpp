#include "adet/rational.hpp"

#include "adet/errors.hpp"

#include <cctype>
#include <string>

namespace adet {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den))
    throw ParseError("invalid rational: '" + std::string(text) + "'");
  Integer d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational q(Integer(std::string(num)), d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational binomial(const Rational& x, long j) {
  if (j < 0) return 0;
  Rational out = 1;
  for (long i = 0; i < j; ++i) {
    out *= x - i;
    out /= i + 1;
  }
  return out;
}

Rational pochhammer(const Rational& a, long j) {
  Rational out = 1;
  for (long i = 0; i < j; ++i) out *= a + i;
  return out;
}

Integer factorial(unsigned long m) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), m);
  return out;
}

} // namespace adet
