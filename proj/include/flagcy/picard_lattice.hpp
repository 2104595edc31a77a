#ifndef FLAGCY_PICARD_LATTICE_HPP
#define FLAGCY_PICARD_LATTICE_HPP

#include "flagcy/flag_geometry.hpp"

#include <optional>
#include <vector>

namespace flagcy
{

/// Line bundle (x)_a O_a(s_a), coefficients over the complement.
struct LineBundleClass
{
  std::vector<Integer> coeffs;

  static LineBundleClass from_ints(const std::vector<long>& s);

  /// c_1 as an invariant class (no 2 pi).
  InvariantClass as_class() const;
  bool is_trivial() const;

  bool operator==(const LineBundleClass&) const = default;
};

/// Generators xi_a = -q_a [Omega_gamma] + q_gamma [Omega_a] of the degree-zero classes.
struct PrimitiveBasis
{
  std::size_t pivot_gamma = 0;            ///< complement position of gamma
  std::vector<Integer> q;                 ///< q_a = Q(Omega_a, omega0) / tau
  Integer tau;                            ///< gcd of the pairings Q(Omega_a, omega0)
  std::vector<std::size_t> positions;     ///< complement position a of each basis element
  std::vector<LineBundleClass> basis;
};

/// Smallest positive integral multiple of the coefficient ray of omega0
/// (drops any 2 pi power, then clears denominators).
InvariantClass integral_representative(const InvariantClass& omega0);

/// Q(Omega_a, omega0) = (n-1)! Lambda_{omega0}(Omega_a) Vol(omega0), for integral omega0.
Integer hodge_riemann_pairing(const ParabolicFlag& flag, std::size_t position,
                              const InvariantClass& omega0);

/// gamma defaults to the first Picard direction. omega0 may be any rational Kahler class;
/// it is replaced by integral_representative() first.
PrimitiveBasis primitive_basis(const ParabolicFlag& flag, const InvariantClass& omega0,
                               std::size_t gamma_position = 0);

bool is_primitive(const ParabolicFlag& flag, const InvariantClass& c, const InvariantClass& omega0);

struct OrthogonalDecomposition
{
  ScaledRational multiple;   ///< m, so that c = m * omega0 + primitive
  InvariantClass primitive;
};

OrthogonalDecomposition orthogonal_decompose(const ParabolicFlag& flag, const InvariantClass& c,
                                             const InvariantClass& omega0);

/// Solves sum_i x_i basis[i] = target over Q by Gaussian elimination.
/// Basis vectors must be linearly independent; returns nullopt if target is not in their span.
std::optional<std::vector<Rational>> solve_rational_combination(
    const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& target);

/// Integer coefficients expressing `target` in `basis`, if they exist.
std::optional<std::vector<Integer>> solve_integer_combination(
    const std::vector<LineBundleClass>& basis, const LineBundleClass& target);

} // namespace flagcy

#endif
