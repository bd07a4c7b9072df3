#include "ostro/rational.hpp"

#include <cctype>

namespace ostro {

namespace {

bool valid_integer_token(std::string_view s) {
  if (s.starts_with('+') || s.starts_with('-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view numTok = text.substr(0, slash);
  std::string_view denTok = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_token(numTok) || !valid_integer_token(denTok))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  mpz_class n(std::string(numTok), 10);
  mpz_class d(std::string(denTok), 10);
  if (d == 0) throw std::domain_error("zero denominator");
  return Rational(n, d);
}

std::string Rational::str() const {
  if (isInteger()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::string Rational::decimal(std::size_t digits) const {
  // Round half away from zero on the last kept digit; exact integer work only.
  mpz_class p = ::abs(num());
  const mpz_class& q = den();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = p * scale;
  mpz_class quo, rem;
  mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), q.get_mpz_t());
  if (2 * rem >= q) quo += 1;
  mpz_class ip = quo / scale, fp = quo % scale;
  std::string out = isNegative() && (ip != 0 || fp != 0) ? "-" : "";
  out += ip.get_str();
  if (digits > 0) {
    std::string frac = fp.get_str();
    out += "." + std::string(digits - frac.size(), '0') + frac;
  }
  return out;
}

}  // namespace ostro
