#include "adet/poly.hpp"

#include "adet/errors.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace adet {

PolyQ::PolyQ(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

PolyQ::PolyQ(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

PolyQ::PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::monomial(int k, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return PolyQ(std::move(v));
}

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolyQ::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational PolyQ::eval(const Rational& a) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= a;
    acc += *it;
  }
  return acc;
}

PolyQ PolyQ::compose(const PolyQ& q) const {
  PolyQ acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += PolyQ(*it);
  }
  return acc;
}

PolyQ PolyQ::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return PolyQ(std::move(d));
}

PolyQ PolyQ::pow(unsigned k) const {
  PolyQ out(1);
  PolyQ base = *this;
  while (k) {
    if (k & 1u) out *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return out;
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return {};
  PolyQ out = *this;
  out *= Rational(1 / leading());
  return out;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyQ(std::move(out));
}

PolyQ& PolyQ::operator*=(const PolyQ& o) { return *this = *this * o; }

PolyQ& PolyQ::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PolyQ PolyQ::operator-() const {
  PolyQ out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {PolyQ(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coeffs();
  const Rational& lead = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + b.degree());
    if (rem[top] == 0) continue;
    Rational q = rem[top] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * bc[j];
  }
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ div_exact(const PolyQ& a, const PolyQ& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("div_exact: nonzero remainder");
  return q;
}

PolyQ gcd(const PolyQ& a, const PolyQ& b) {
  PolyQ x = a.monic();
  PolyQ y = b.monic();
  while (!y.is_zero()) {
    PolyQ r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x;
}

std::string to_string(const PolyQ& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational c = p.coeff(k);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_string(c);
    if (k == 1) out += "*a";
    if (k > 1) out += "*a^" + std::to_string(k);
  }
  return out;
}

PolyQ parse_poly(std::string_view text) {
  std::vector<Rational> coeffs;
  std::string s(text);
  std::size_t pos = 0;
  bool any = false;
  while (pos <= s.size()) {
    std::size_t next = s.find(" + ", pos);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    int k = 0;
    std::string coef = term;
    if (auto star = term.find("*a"); star != std::string::npos) {
      coef = term.substr(0, star);
      const std::string rest = term.substr(star + 2);
      if (rest.empty()) {
        k = 1;
      } else if (rest.size() > 1 && rest[0] == '^') {
        try {
          k = std::stoi(rest.substr(1));
        } catch (const std::exception&) {
          throw ParseError("invalid exponent in term '" + term + "'");
        }
        if (k < 0) throw ParseError("negative exponent in term '" + term + "'");
      } else {
        throw ParseError("invalid term '" + term + "'");
      }
    }
    Rational c = parse_rational(coef);
    if (coeffs.size() <= static_cast<std::size_t>(k)) coeffs.resize(static_cast<std::size_t>(k) + 1);
    coeffs[static_cast<std::size_t>(k)] += c;
    any = true;
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  if (!any) throw ParseError("empty polynomial");
  return PolyQ(std::move(coeffs));
}

std::vector<std::string> to_coeff_strings(const PolyQ& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

PolyQ from_coeff_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(parse_rational(c));
  return PolyQ(std::move(v));
}

} // namespace adet
