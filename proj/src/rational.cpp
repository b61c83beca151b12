#include "tropskel/rational.hpp"

#include <climits>

namespace tropskel {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

long checked_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw InvalidArgument("integer out of range: " + z.get_str());
  return z.get_si();
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw InvalidArgument("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw FormatError("not a rational \"" + std::string(text) + "\"");
  }
  std::string n(num.front() == '+' ? num.substr(1) : num);
  mpz_class p(n, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw FormatError("zero denominator in \"" + std::string(text) + "\"");
  mpq_class v(p, q);
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const { return value_.get_num().get_str() + "/" + value_.get_den().get_str(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  value_ /= o.value_;
  return *this;
}

long Rational::to_long() const {
  if (!is_integer()) throw InvalidArgument("not an integer: " + str());
  return checked_long(value_.get_num());
}

long Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num().get_mpz_t(), value_.get_den().get_mpz_t());
  return checked_long(q);
}

long Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num().get_mpz_t(), value_.get_den().get_mpz_t());
  return checked_long(q);
}

}  // namespace tropskel
