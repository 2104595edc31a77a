#ifndef FLAGCY_BUNDLE_CONSTRUCTOR_HPP
#define FLAGCY_BUNDLE_CONSTRUCTOR_HPP

#include "flagcy/flag_geometry.hpp"
#include "flagcy/picard_lattice.hpp"

#include <vector>

namespace flagcy
{

/// Base data of a torus bundle U(E), E = O(k) + F_1 + ... + F_{2r-1}, over (X_P, omega0)
/// with omega0 = lambda * rho_0.
///
/// psi[0] = (k / I) rho_0 and psi[j] = 2 pi c_1(F_j); all carry one power of 2 pi.
/// Only build_t_gauduchon() guarantees the Ricci-flat scale; make_gauduchon_diagnostic()
/// accepts any lambda and t so the verifiers can be exercised on non-solutions.
struct GauduchonDatum
{
  ParabolicFlag flag;
  long k = 0;
  Rational t;
  Rational lambda_kt;
  InvariantClass omega0;
  std::vector<InvariantClass> psi;
  std::vector<LineBundleClass> bundles;
  std::size_t r = 0;
};

/// Base data of a torus bundle U(F), F = F_1 + ... + F_{2r}, over (X_P, omega0).
struct BalancedDatum
{
  ParabolicFlag flag;
  InvariantClass omega0;
  std::vector<InvariantClass> psi;
  std::vector<LineBundleClass> bundles;
};

/// (1 - t)/2 * k^2 dim / I^2.
Rational lambda_kt(const ParabolicFlag& flag, long k, const Rational& t);

GauduchonDatum build_t_gauduchon(const ParabolicFlag& flag, long k, const Rational& t,
                                 const std::vector<LineBundleClass>& bundles);

GauduchonDatum make_gauduchon_diagnostic(const ParabolicFlag& flag, long k, const Rational& t,
                                         const Rational& lambda,
                                         const std::vector<LineBundleClass>& bundles);

/// rho_0 + (t - 1)/2 sum_j Lambda_{omega0}(psi_j) psi_j.
InvariantClass verify_ricci_flat(const GauduchonDatum& d);

/// c with rho_0 = c * psi_1; throws NotProportional if there is none.
Rational verify_c1_trivial(const GauduchonDatum& d);

/// Lambda_{omega0}(psi_j) for the sub-bundle F (j >= 2): the HYM contractions.
std::vector<ScaledRational> hym_contractions(const GauduchonDatum& d);

BalancedDatum build_balanced(const ParabolicFlag& flag, const InvariantClass& omega0,
                             const std::vector<LineBundleClass>& bundles);

BalancedDatum make_balanced_diagnostic(const ParabolicFlag& flag, const InvariantClass& omega0,
                                       const std::vector<InvariantClass>& psi);

/// (Lambda_{omega0}(psi_j))_j; all zero iff the total-space metric is balanced.
std::vector<ScaledRational> verify_coclosed(const BalancedDatum& d);

/// Coefficients of Theta_i in the Lee form: slot 2j-1 holds Lambda(psi_2j),
/// slot 2j holds -Lambda(psi_{2j-1}).
std::vector<ScaledRational> lee_form_coefficients(const ParabolicFlag& flag,
                                                  const std::vector<InvariantClass>& psi,
                                                  const InvariantClass& omega0);

} // namespace flagcy

#endif
