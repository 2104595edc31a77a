#ifndef FLAGCY_POTENTIAL_LAB_HPP
#define FLAGCY_POTENTIAL_LAB_HPP

#include "flagcy/flag_geometry.hpp"

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <vector>

namespace flagcy
{

/// Coordinates z_beta on the opposite big cell, one per root of Phi_I^+ (flag order).
struct BigCellPoint
{
  std::vector<std::complex<double>> coords;

  static BigCellPoint origin(const ParabolicFlag& flag);
};

/// Coefficients c_a of phi = sum_a c_a (1/2pi) log ||g v_a||^2, over the complement.
/// Signed coefficients are allowed; they describe differences of Kahler potentials.
struct PotentialSpec
{
  std::vector<Rational> c;

  static PotentialSpec from_class(const InvariantClass& cls);
  bool is_kahler() const;
  std::vector<double> as_doubles() const;
};

/// Lower unitriangular SL_n matrix s_U(z): the entry for beta = e_i - e_j sits at (j, i).
Eigen::MatrixXcd unipotent_matrix(const ParabolicFlag& flag, const BigCellPoint& point);

/// ||s_U(z) v_k||^2 for v_k = e_1 ^ ... ^ e_k, i.e. the sum of |k x k minors|^2 of the
/// first k columns. `simple_index` is the 0-based simple root index k-1.
double norm_sq_fundamental(const ParabolicFlag& flag, const BigCellPoint& point,
                           std::size_t simple_index);

/// norm_sq_fundamental() - 1, summed without the leading minor (which is exactly 1).
double norm_sq_excess(const ParabolicFlag& flag, const BigCellPoint& point,
                      std::size_t simple_index);

double kahler_potential(const ParabolicFlag& flag, const PotentialSpec& spec,
                        const BigCellPoint& point);

using RealFunction = std::function<double(const std::vector<std::complex<double>>&)>;

/// d^2 f / dz_j dzbar_k at the origin of C^dim by central differences; not symmetrized.
Eigen::MatrixXcd complex_hessian_at_origin(const RealFunction& f, std::size_t dim, double step);

/// Hermitian matrix of sqrt(-1) d dbar phi at the origin ((H + H^*)/2 of the raw stencil).
Eigen::MatrixXcd numeric_form_at_origin(const ParabolicFlag& flag, const PotentialSpec& spec,
                                        double step);

struct EigenvalueReport
{
  std::vector<Rational> exact;          ///< flag order
  std::vector<double> exact_sorted;
  std::vector<double> numeric_sorted;
  double max_deviation = 0.0;
  double numeric_trace = 0.0;
  Rational exact_trace;
  double tolerance = 0.0;

  bool passed() const { return max_deviation < tolerance; }
};

/// Generalized eigenvalues of (H_psi, H_omega0) against the exact pairing ratios.
EigenvalueReport check_eigenvalue_formula(const ParabolicFlag& flag, const PotentialSpec& omega0,
                                          const PotentialSpec& psi, double step, double tol);

} // namespace flagcy

#endif
