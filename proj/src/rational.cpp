#include "gramcal/rational.hpp"

#include <cctype>

namespace gramcal {

Rational make_rational(long num, long den) {
  if (den == 0) throw input_error("rational denominator is zero");
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw input_error("malformed rational '" + std::string(whole) + "'");
  }
  mpz_class v(std::string(s), 10);
  return negative ? mpz_class(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  mpz_class num = parse_integer(text.substr(0, slash), text);
  std::string_view den_part = text.substr(slash + 1);
  if (!all_digits(den_part)) {
    throw input_error("malformed rational '" + std::string(text) + "'");
  }
  mpz_class den(std::string(den_part), 10);
  if (den == 0) throw input_error("rational denominator is zero");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }


Rational rational_floor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

Rational rational_ceil(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

Rational rational_pow(const Rational& base, unsigned exp) {
  Rational acc(1);
  Rational b = base;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  return acc;
}

}  // namespace gramcal
