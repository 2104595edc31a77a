#include "flagcy/bundle_constructor.hpp"

#include "flagcy/errors.hpp"

namespace flagcy
{

namespace
{

void check_parameters(long k, const Rational& t)
{
  if (k == 0)
    throw Error(ErrorCode::InvalidParameter, "k must be nonzero");
  if (t >= 1)
    throw Error(ErrorCode::InvalidParameter, "t must be < 1, got " + to_string(t));
}

void check_bundle_sizes(const ParabolicFlag& flag, const std::vector<LineBundleClass>& bundles)
{
  for (std::size_t j = 0; j < bundles.size(); ++j)
    if (bundles[j].coeffs.size() != flag.picard_number())
      throw Error(ErrorCode::DimensionMismatch,
                  "bundle " + std::to_string(j + 1) + " has the wrong number of coefficients",
                  j + 1);
}

InvariantClass curvature_class(const LineBundleClass& l)
{
  return l.as_class().with_power(1);
}

GauduchonDatum assemble(const ParabolicFlag& flag, long k, const Rational& t, const Rational& lambda,
                        const std::vector<LineBundleClass>& bundles)
{
  check_bundle_sizes(flag, bundles);
  const InvariantClass rho0 = ricci_class(flag);
  const Rational k_over_index = Rational(k) / Rational(fano_index(flag));

  GauduchonDatum d{flag, k, t, lambda, lambda * rho0, {}, bundles, (bundles.size() + 1) / 2};
  d.psi.push_back(k_over_index * rho0);
  for (const auto& l : bundles)
    d.psi.push_back(curvature_class(l));
  return d;
}

} // namespace

Rational lambda_kt(const ParabolicFlag& flag, long k, const Rational& t)
{
  check_parameters(k, t);
  const Rational index(fano_index(flag));
  const Rational n(static_cast<unsigned long>(flag.dim()));
  return (Rational(1) - t) / 2 * Rational(k) * Rational(k) * n / (index * index);
}

GauduchonDatum build_t_gauduchon(const ParabolicFlag& flag, long k, const Rational& t,
                                 const std::vector<LineBundleClass>& bundles)
{
  if (flag.picard_number() < 2)
    throw Error(ErrorCode::PicardRankOne, "Picard number is 1; no nontrivial degree-zero bundles");
  check_parameters(k, t);
  if (bundles.size() % 2 == 0)
    throw Error(ErrorCode::OddCount,
                "need 2r-1 bundles F_j (an odd count), got " + std::to_string(bundles.size()));
  check_bundle_sizes(flag, bundles);

  const InvariantClass theta0 = anticanonical_class(flag);
  for (std::size_t j = 0; j < bundles.size(); ++j)
  {
    if (bundles[j].is_trivial())
      throw Error(ErrorCode::TrivialBundle, "bundle " + std::to_string(j + 1) + " is trivial",
                  j + 1);
    if (!is_primitive(flag, bundles[j].as_class(), theta0))
      throw Error(ErrorCode::NotPrimitive,
                  "bundle " + std::to_string(j + 1) + " does not have degree zero", j + 1);
  }
  return assemble(flag, k, t, lambda_kt(flag, k, t), bundles);
}

GauduchonDatum make_gauduchon_diagnostic(const ParabolicFlag& flag, long k, const Rational& t,
                                         const Rational& lambda,
                                         const std::vector<LineBundleClass>& bundles)
{
  if (lambda <= 0)
    throw Error(ErrorCode::InvalidParameter, "lambda must be positive");
  if (k == 0)
    throw Error(ErrorCode::InvalidParameter, "k must be nonzero");
  return assemble(flag, k, t, lambda, bundles);
}

InvariantClass verify_ricci_flat(const GauduchonDatum& d)
{
  InvariantClass residual = ricci_class(d.flag);
  const Rational half_t_minus_one = (d.t - 1) / 2;
  for (const auto& psi : d.psi)
  {
    const ScaledRational c = lefschetz_contraction(d.flag, d.omega0, psi);
    residual += (half_t_minus_one * c.value * psi).with_power(psi.two_pi_power() + c.two_pi_power);
  }
  return residual;
}

Rational verify_c1_trivial(const GauduchonDatum& d)
{
  const InvariantClass rho0 = ricci_class(d.flag);
  const InvariantClass& psi1 = d.psi.front();
  if (psi1.is_zero() || psi1.two_pi_power() != rho0.two_pi_power())
    throw Error(ErrorCode::NotProportional, "rho_0 is not a multiple of psi_1");
  Rational c(0);
  for (std::size_t i = 0; i < psi1.size(); ++i)
    if (psi1.coeffs()[i] != 0)
    {
      c = rho0.coeffs()[i] / psi1.coeffs()[i];
      break;
    }
  if (!(c * psi1 == rho0))
    throw Error(ErrorCode::NotProportional, "rho_0 is not a multiple of psi_1");
  return c;
}

std::vector<ScaledRational> hym_contractions(const GauduchonDatum& d)
{
  std::vector<ScaledRational> out;
  for (std::size_t j = 1; j < d.psi.size(); ++j)
    out.push_back(lefschetz_contraction(d.flag, d.omega0, d.psi[j]));
  return out;
}

BalancedDatum build_balanced(const ParabolicFlag& flag, const InvariantClass& omega0,
                             const std::vector<LineBundleClass>& bundles)
{
  if (flag.picard_number() < 2)
    throw Error(ErrorCode::PicardRankOne, "Picard number is 1; no nontrivial degree-zero bundles");
  if (!is_kahler(flag, omega0))
    throw Error(ErrorCode::NotKahler, "class is not in the Kahler cone");
  if (bundles.empty() || bundles.size() % 2 != 0)
    throw Error(ErrorCode::OddCount,
                "need an even, nonzero number of bundles, got " + std::to_string(bundles.size()));
  check_bundle_sizes(flag, bundles);

  BalancedDatum d{flag, omega0, {}, bundles};
  for (std::size_t j = 0; j < bundles.size(); ++j)
  {
    if (!is_primitive(flag, bundles[j].as_class(), omega0))
      throw Error(ErrorCode::NotPrimitive,
                  "bundle " + std::to_string(j + 1) + " does not have degree zero", j + 1);
    d.psi.push_back(curvature_class(bundles[j]));
  }
  return d;
}

BalancedDatum make_balanced_diagnostic(const ParabolicFlag& flag, const InvariantClass& omega0,
                                       const std::vector<InvariantClass>& psi)
{
  return BalancedDatum{flag, omega0, psi, {}};
}

std::vector<ScaledRational> verify_coclosed(const BalancedDatum& d)
{
  std::vector<ScaledRational> out;
  for (const auto& psi : d.psi)
    out.push_back(lefschetz_contraction(d.flag, d.omega0, psi));
  return out;
}

std::vector<ScaledRational> lee_form_coefficients(const ParabolicFlag& flag,
                                                  const std::vector<InvariantClass>& psi,
                                                  const InvariantClass& omega0)
{
  if (!is_kahler(flag, omega0))
    throw Error(ErrorCode::NotKahler, "class is not in the Kahler cone");
  if (psi.size() % 2 != 0)
    throw Error(ErrorCode::OddCount, "the Lee form needs an even number of curvature classes");

  std::vector<ScaledRational> theta;
  for (std::size_t j = 0; j < psi.size(); j += 2)
  {
    const ScaledRational odd = lefschetz_contraction(flag, omega0, psi[j]);
    const ScaledRational even = lefschetz_contraction(flag, omega0, psi[j + 1]);
    theta.push_back(even);
    theta.push_back({-odd.value, odd.two_pi_power});
  }
  return theta;
}

} // namespace flagcy
