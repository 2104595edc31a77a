#include "flagcy/flag_geometry.hpp"

#include "flagcy/errors.hpp"

#include <algorithm>

namespace flagcy
{

ParabolicFlag::ParabolicFlag(RootDatum datum, std::set<std::size_t> parabolic_set)
    : m_datum(std::make_shared<const RootDatum>(std::move(datum))),
      m_parabolic(std::move(parabolic_set))
{
  const std::size_t n = m_datum->rank();
  for (std::size_t i : m_parabolic)
    if (i >= n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "parabolic index " + std::to_string(i + 1) + " exceeds rank " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    if (!m_parabolic.count(i))
      m_complement.push_back(i);
  if (m_complement.empty())
    throw Error(ErrorCode::InvalidParameter, "parabolic set contains every simple root");

  for (const auto& beta : m_datum->positive_roots())
  {
    const bool outside = std::any_of(m_complement.begin(), m_complement.end(),
                                     [&](std::size_t a) { return beta.root_coords[a] != 0; });
    if (outside)
      m_phi.push_back(beta);
  }
}

std::size_t ParabolicFlag::picard_position(std::size_t simple_index) const
{
  const auto it = std::find(m_complement.begin(), m_complement.end(), simple_index);
  if (it == m_complement.end())
    throw Error(ErrorCode::IndexOutOfRange,
                "simple root " + std::to_string(simple_index + 1) + " is not a Picard direction");
  return static_cast<std::size_t>(it - m_complement.begin());
}

ParabolicFlag make_flag(const RootDatum& datum, const std::set<std::size_t>& parabolic_set)
{
  return ParabolicFlag(datum, parabolic_set);
}

// ---------------------------------------------------------------------------

InvariantClass::InvariantClass(int two_pi_power, std::vector<Rational> coeffs)
    : m_power(two_pi_power), m_coeffs(std::move(coeffs))
{
  normalize();
}

InvariantClass InvariantClass::zero(std::size_t picard_number)
{
  return InvariantClass(0, std::vector<Rational>(picard_number, Rational(0)));
}

InvariantClass InvariantClass::generator(std::size_t picard_number, std::size_t position)
{
  if (position >= picard_number)
    throw Error(ErrorCode::IndexOutOfRange, "Picard position out of range");
  std::vector<Rational> c(picard_number, Rational(0));
  c[position] = 1;
  return InvariantClass(0, std::move(c));
}

bool InvariantClass::is_zero() const
{
  return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const Rational& q) { return q == 0; });
}

void InvariantClass::normalize()
{
  if (is_zero())
    m_power = 0;
}

InvariantClass InvariantClass::with_power(int power) const
{
  return InvariantClass(power, m_coeffs);
}

InvariantClass& InvariantClass::operator*=(const Rational& s)
{
  for (auto& c : m_coeffs)
    c *= s;
  normalize();
  return *this;
}

InvariantClass& InvariantClass::operator+=(const InvariantClass& other)
{
  if (other.size() != size())
    throw Error(ErrorCode::DimensionMismatch, "class length mismatch");
  if (other.is_zero())
    return *this;
  if (is_zero())
    m_power = other.m_power;
  else if (m_power != other.m_power)
    throw Error(ErrorCode::DimensionMismatch, "cannot add classes with different powers of 2pi");
  for (std::size_t i = 0; i < m_coeffs.size(); ++i)
    m_coeffs[i] += other.m_coeffs[i];
  normalize();
  return *this;
}

InvariantClass& InvariantClass::operator-=(const InvariantClass& other)
{
  return *this += Rational(-1) * other;
}

bool InvariantClass::operator==(const InvariantClass& other) const
{
  return m_power == other.m_power && m_coeffs == other.m_coeffs;
}

bool ScaledRational::operator==(const ScaledRational& other) const
{
  if (value == 0 || other.value == 0)
    return value == other.value;
  return value == other.value && two_pi_power == other.two_pi_power;
}

// ---------------------------------------------------------------------------

namespace
{

void check_size(const ParabolicFlag& flag, const InvariantClass& c)
{
  if (c.size() != flag.picard_number())
    throw Error(ErrorCode::DimensionMismatch,
                "class has " + std::to_string(c.size()) + " coefficients, Picard number is " +
                    std::to_string(flag.picard_number()));
}

void require_kahler(const ParabolicFlag& flag, const InvariantClass& omega)
{
  if (!is_kahler(flag, omega))
    throw Error(ErrorCode::NotKahler, "class is not in the Kahler cone");
}

Weight weight_of(const ParabolicFlag& flag, const InvariantClass& c)
{
  return class_weight(flag, c).first;
}

} // namespace

std::pair<Weight, int> class_weight(const ParabolicFlag& flag, const InvariantClass& c)
{
  check_size(flag, c);
  Weight w(flag.rank());
  for (std::size_t p = 0; p < flag.picard_number(); ++p)
    w.coeffs[flag.complement()[p]] = c.coeffs()[p];
  return {w, c.two_pi_power()};
}

Weight delta_P(const ParabolicFlag& flag)
{
  Weight sum(flag.rank());
  for (const auto& beta : flag.phi_I_plus())
    sum += flag.datum().root_as_weight(beta.root_coords);
  return sum;
}

std::vector<Integer> anticanonical_coeffs(const ParabolicFlag& flag)
{
  const Weight delta = delta_P(flag);
  std::vector<Integer> ell;
  for (std::size_t a : flag.complement())
    ell.push_back(delta.coeffs[a].get_num());
  return ell;
}

InvariantClass anticanonical_class(const ParabolicFlag& flag)
{
  std::vector<Rational> c;
  for (const auto& l : anticanonical_coeffs(flag))
    c.emplace_back(l);
  return InvariantClass(0, std::move(c));
}

InvariantClass ricci_class(const ParabolicFlag& flag)
{
  return anticanonical_class(flag).with_power(1);
}

Integer fano_index(const ParabolicFlag& flag)
{
  Integer g(0);
  for (const auto& l : anticanonical_coeffs(flag))
    g = gcd(g, l);
  return g;
}

bool is_kahler(const ParabolicFlag& flag, const InvariantClass& c)
{
  check_size(flag, c);
  return std::all_of(c.coeffs().begin(), c.coeffs().end(),
                     [](const Rational& q) { return q > 0; });
}

std::vector<Rational> endomorphism_eigenvalues(const ParabolicFlag& flag,
                                               const InvariantClass& omega0,
                                               const InvariantClass& psi)
{
  require_kahler(flag, omega0);
  const Weight lw = weight_of(flag, omega0);
  const Weight lp = weight_of(flag, psi);
  std::vector<Rational> q;
  q.reserve(flag.dim());
  for (const auto& beta : flag.phi_I_plus())
    q.push_back(pairing(lp, beta) / pairing(lw, beta));
  return q;
}

ScaledRational lefschetz_contraction(const ParabolicFlag& flag, const InvariantClass& omega0,
                                     const InvariantClass& psi)
{
  Rational trace(0);
  for (const auto& q : endomorphism_eigenvalues(flag, omega0, psi))
    trace += q;
  return {trace, psi.two_pi_power() - omega0.two_pi_power()};
}

ScaledRational volume(const ParabolicFlag& flag, const InvariantClass& omega)
{
  require_kahler(flag, omega);
  const Weight lw = weight_of(flag, omega);
  const Weight rho = rho_plus(flag.datum());
  Rational v(1);
  for (const auto& beta : flag.phi_I_plus())
    v *= pairing(lw, beta) / pairing(rho, beta);
  return {v, omega.two_pi_power() * static_cast<int>(flag.dim())};
}

ScaledRational degree(const ParabolicFlag& flag, const InvariantClass& bundle_class,
                      const InvariantClass& omega)
{
  const ScaledRational contraction = lefschetz_contraction(flag, omega, bundle_class);
  const ScaledRational vol = volume(flag, omega);
  return {factorial(flag.dim() - 1) * contraction.value * vol.value,
          contraction.two_pi_power + vol.two_pi_power};
}

} // namespace flagcy
