#include "ssice/rational.hpp"

#include "ssice/errors.hpp"

#include <cctype>

namespace ssice {

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw UsageError("not a rational: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  while (!trim(text).empty()) {
    auto comma = text.find(',');
    out.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (is_zero(base)) throw DomainError("zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

}  // namespace ssice
