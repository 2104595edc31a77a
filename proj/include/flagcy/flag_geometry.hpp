#ifndef FLAGCY_FLAG_GEOMETRY_HPP
#define FLAGCY_FLAG_GEOMETRY_HPP

#include "flagcy/rational.hpp"
#include "flagcy/root_system.hpp"

#include <cstdint>
#include <memory>
#include <set>
#include <utility>
#include <vector>

namespace flagcy
{

/// Flag variety G/P_I given by a root datum and a set I of simple roots (0-based).
class ParabolicFlag
{
public:
  ParabolicFlag(RootDatum datum, std::set<std::size_t> parabolic_set);

  const RootDatum& datum() const { return *m_datum; }
  std::size_t rank() const { return m_datum->rank(); }
  const std::set<std::size_t>& parabolic_set() const { return m_parabolic; }

  /// Simple roots outside I, ascending; position p here is Picard direction p.
  const std::vector<std::size_t>& complement() const { return m_complement; }

  /// Positive roots with a nonzero coefficient outside I, in datum order.
  const std::vector<PositiveRoot>& phi_I_plus() const { return m_phi; }

  std::size_t dim() const { return m_phi.size(); }
  std::size_t picard_number() const { return m_complement.size(); }

  /// Position of simple root `simple_index` in complement(); throws IndexOutOfRange.
  std::size_t picard_position(std::size_t simple_index) const;

private:
  std::shared_ptr<const RootDatum> m_datum;
  std::set<std::size_t> m_parabolic;
  std::vector<std::size_t> m_complement;
  std::vector<PositiveRoot> m_phi;
};

ParabolicFlag make_flag(const RootDatum& datum, const std::set<std::size_t>& parabolic_set);

/// (2 pi)^two_pi_power * sum_a coeffs[a] [Omega_a], coefficients over the complement.
class InvariantClass
{
public:
  InvariantClass() = default;
  InvariantClass(int two_pi_power, std::vector<Rational> coeffs);

  static InvariantClass zero(std::size_t picard_number);
  /// [Omega_a] for complement position `position`.
  static InvariantClass generator(std::size_t picard_number, std::size_t position);

  int two_pi_power() const { return m_power; }
  const std::vector<Rational>& coeffs() const { return m_coeffs; }
  std::size_t size() const { return m_coeffs.size(); }
  bool is_zero() const;

  /// Same class with a different power of 2 pi attached.
  InvariantClass with_power(int power) const;

  InvariantClass& operator*=(const Rational& s);
  friend InvariantClass operator*(const Rational& s, InvariantClass c) { return c *= s; }

  /// Requires equal powers (or a zero operand); throws DimensionMismatch otherwise.
  InvariantClass& operator+=(const InvariantClass& other);
  InvariantClass& operator-=(const InvariantClass& other);
  friend InvariantClass operator+(InvariantClass a, const InvariantClass& b) { return a += b; }
  friend InvariantClass operator-(InvariantClass a, const InvariantClass& b) { return a -= b; }

  bool operator==(const InvariantClass& other) const;

private:
  void normalize();

  int m_power = 0;
  std::vector<Rational> m_coeffs;
};

/// Exact value times (2 pi)^two_pi_power.
struct ScaledRational
{
  Rational value;
  int two_pi_power = 0;

  bool operator==(const ScaledRational& other) const;
};

std::pair<Weight, int> class_weight(const ParabolicFlag& flag, const InvariantClass& c);

/// Sum of the roots in Phi_I^+, in the fundamental-weight basis.
Weight delta_P(const ParabolicFlag& flag);

/// l_a = <delta_P, a^v> for a in the complement.
std::vector<Integer> anticanonical_coeffs(const ParabolicFlag& flag);

/// theta_0 = c_1(X_P) = sum l_a [Omega_a] (no 2 pi).
InvariantClass anticanonical_class(const ParabolicFlag& flag);

/// rho_0 = 2 pi theta_0.
InvariantClass ricci_class(const ParabolicFlag& flag);

Integer fano_index(const ParabolicFlag& flag);

bool is_kahler(const ParabolicFlag& flag, const InvariantClass& c);

/// q_beta = <lambda(psi), beta^v> / <lambda(omega0), beta^v>, ordered like phi_I_plus().
std::vector<Rational> endomorphism_eigenvalues(const ParabolicFlag& flag,
                                               const InvariantClass& omega0,
                                               const InvariantClass& psi);

/// Trace of omega0^{-1} psi.
ScaledRational lefschetz_contraction(const ParabolicFlag& flag, const InvariantClass& omega0,
                                     const InvariantClass& psi);

/// (1/n!) int omega^n = prod <lambda(omega), beta^v> / <rho^+, beta^v>.
ScaledRational volume(const ParabolicFlag& flag, const InvariantClass& omega);

/// (n-1)! Lambda_omega(c) Vol(omega).
ScaledRational degree(const ParabolicFlag& flag, const InvariantClass& bundle_class,
                      const InvariantClass& omega);

} // namespace flagcy

#endif
