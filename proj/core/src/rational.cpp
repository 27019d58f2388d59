#include "pdel/rational.hpp"

#include <cctype>

namespace pdel {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational literal");

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos)
      throw ParseError("rational literal mixes '.' and '/': " + text);
    bool neg = false;
    std::string digits = s;
    if (digits[0] == '+' || digits[0] == '-') {
      neg = digits[0] == '-';
      digits = digits.substr(1);
      dot = digits.find('.');
    }
    std::string intpart = digits.substr(0, dot);
    std::string frac = digits.substr(dot + 1);
    if (intpart.empty() && frac.empty())
      throw ParseError("bad decimal literal: " + text);
    for (char c : intpart + frac)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad decimal literal: " + text);
    mpz_class num(intpart.empty() ? "0" : intpart);
    for (size_t i = 0; i < frac.size(); ++i) num *= 10;
    num += frac.empty() ? mpz_class(0) : mpz_class(frac);
    mpz_class den(1);
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }

  try {
    Rational q(s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + text);
  }
}

std::string rational_string(const Rational& q) {
  return q.get_str();
}

std::string round_decimal(const Rational& q, int digits) {
  mpz_class scale(1);
  for (int i = 0; i < digits; ++i) scale *= 10;
  bool neg = q < 0;
  Rational a = neg ? Rational(-q) : q;
  // half-up on the magnitude: floor(a * scale + 1/2)
  Rational scaled = a * Rational(scale) + Rational(1, 2);
  mpz_class units = scaled.get_num() / scaled.get_den();
  mpz_class ip = units / scale;
  mpz_class fp = units % scale;
  std::string frac = fp.get_str();
  while (static_cast<int>(frac.size()) < digits) frac = "0" + frac;
  std::string out = ip.get_str();
  if (digits > 0) out += "." + frac;
  if (neg && units != 0) out = "-" + out;
  return out;
}

}  // namespace pdel
