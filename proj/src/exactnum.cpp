#include "lowrank/exactnum.hpp"

#include <stdexcept>

#include "lowrank/errors.hpp"

namespace lowrank {

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

unsigned p2_valuation(const BigInt& n) {
  if (sgn(n) <= 0) throw std::domain_error("p2_valuation requires a positive argument");
  return static_cast<unsigned>(mpz_scan1(n.get_mpz_t(), 0));
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw ParseError("expected an integer", std::string(text));
  for (char c : digits) {
    if (c < '0' || c > '9') throw ParseError("expected an integer", std::string(text));
  }
  BigInt out(std::string(digits), 10);
  if (negative) out = -out;
  return out;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw ParseError("denominator must be unsigned", std::string(text));
  }
  BigInt den = parse_bigint(den_text);
  if (sgn(den) == 0) throw ParseError("zero denominator", std::string(text));
  return make_rational(num, den);
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

}  // namespace lowrank
