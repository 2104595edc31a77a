#include "flagcy/rational.hpp"

#include "flagcy/errors.hpp"

#include <cctype>
#include <sstream>

namespace flagcy
{

Rational make_rational(long num, long den)
{
  if (den == 0)
    throw Error(ErrorCode::InvalidParameter, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q)
{
  return q.get_str();
}

namespace
{
bool is_digits(std::string_view s)
{
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}
} // namespace

Rational parse_rational(std::string_view text)
{
  std::string_view s = trim(text);
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    body.remove_prefix(1);

  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");

  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0)
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  if (!s.empty() && s.front() == '-')
    n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::vector<Rational> parse_rational_list(std::string_view text)
{
  std::vector<Rational> out;
  if (trim(text).empty())
    return out;
  std::size_t start = 0;
  while (true)
  {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

bool is_integer(const Rational& q)
{
  return q.get_den() == 1;
}

Integer gcd(const Integer& a, const Integer& b)
{
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b)
{
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Rational factorial(std::size_t n)
{
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational pow(const Rational& base, long exponent)
{
  if (exponent < 0)
  {
    if (base == 0)
      throw Error(ErrorCode::InvalidParameter, "zero raised to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

} // namespace flagcy
