#include "flagcy/potential_lab.hpp"

#include "flagcy/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace flagcy
{

namespace
{

void require_type_a(const ParabolicFlag& flag)
{
  if (flag.datum().lie_type().family() != Family::A)
    throw Error(ErrorCode::UnsupportedType,
                "numeric potentials are only available for type A, got " +
                    flag.datum().lie_type().name());
}

void check_point(const ParabolicFlag& flag, const BigCellPoint& point)
{
  if (point.coords.size() != flag.dim())
    throw Error(ErrorCode::DimensionMismatch, "big cell point has the wrong dimension");
}

void check_spec(const ParabolicFlag& flag, const PotentialSpec& spec)
{
  if (spec.c.size() != flag.picard_number())
    throw Error(ErrorCode::DimensionMismatch, "potential has the wrong number of coefficients");
}

// Calls visit(rows) for every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit)
{
  std::vector<std::size_t> rows(k);
  for (std::size_t i = 0; i < k; ++i)
    rows[i] = i;
  while (true)
  {
    visit(rows);
    std::size_t i = k;
    while (i > 0 && rows[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      return;
    ++rows[i - 1];
    for (std::size_t j = i; j < k; ++j)
      rows[j] = rows[j - 1] + 1;
  }
}

double minor_sum(const Eigen::MatrixXcd& m, std::size_t k, bool skip_leading)
{
  const std::size_t n = static_cast<std::size_t>(m.rows());
  double sum = 0.0;
  bool first = true;
  Eigen::MatrixXcd block(k, k);
  for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
    if (first && skip_leading)
    {
      first = false;
      return;
    }
    first = false;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c)
        block(r, c) = m(rows[r], c);
    sum += std::norm(block.determinant());
  });
  return sum;
}

} // namespace

BigCellPoint BigCellPoint::origin(const ParabolicFlag& flag)
{
  return BigCellPoint{std::vector<std::complex<double>>(flag.dim(), {0.0, 0.0})};
}

PotentialSpec PotentialSpec::from_class(const InvariantClass& cls)
{
  return PotentialSpec{cls.coeffs()};
}

bool PotentialSpec::is_kahler() const
{
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return q > 0; });
}

std::vector<double> PotentialSpec::as_doubles() const
{
  std::vector<double> out;
  for (const auto& q : c)
    out.push_back(q.get_d());
  return out;
}

Eigen::MatrixXcd unipotent_matrix(const ParabolicFlag& flag, const BigCellPoint& point)
{
  require_type_a(flag);
  check_point(flag, point);
  const std::size_t n = flag.rank() + 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
  const auto& phi = flag.phi_I_plus();
  for (std::size_t b = 0; b < phi.size(); ++b)
  {
    // beta = alpha_i + ... + alpha_{j-1} = e_i - e_j
    const auto& rc = phi[b].root_coords;
    const auto first = std::find(rc.begin(), rc.end(), 1) - rc.begin();
    const auto j = first + phi[b].height();
    m(j, first) = point.coords[b];
  }
  return m;
}

double norm_sq_fundamental(const ParabolicFlag& flag, const BigCellPoint& point,
                           std::size_t simple_index)
{
  return 1.0 + norm_sq_excess(flag, point, simple_index);
}

double norm_sq_excess(const ParabolicFlag& flag, const BigCellPoint& point,
                      std::size_t simple_index)
{
  flag.picard_position(simple_index);
  return minor_sum(unipotent_matrix(flag, point), simple_index + 1, true);
}

double kahler_potential(const ParabolicFlag& flag, const PotentialSpec& spec,
                        const BigCellPoint& point)
{
  require_type_a(flag);
  check_spec(flag, spec);
  const Eigen::MatrixXcd m = unipotent_matrix(flag, point);
  const std::vector<double> c = spec.as_doubles();
  double phi = 0.0;
  for (std::size_t p = 0; p < c.size(); ++p)
  {
    if (c[p] == 0.0)
      continue;
    const std::size_t k = flag.complement()[p] + 1;
    phi += c[p] * std::log1p(minor_sum(m, k, true));
  }
  return phi / (2.0 * std::numbers::pi);
}

Eigen::MatrixXcd complex_hessian_at_origin(const RealFunction& f, std::size_t dim, double step)
{
  if (!(step > 0.0))
    throw Error(ErrorCode::InvalidParameter, "finite-difference step must be positive");

  // real coordinates: 2j -> Re z_j, 2j+1 -> Im z_j
  const std::size_t m = 2 * dim;
  std::vector<std::complex<double>> z(dim);
  auto shift = [&](std::size_t a, double h) {
    if (a % 2 == 0)
      z[a / 2] += std::complex<double>(h, 0.0);
    else
      z[a / 2] += std::complex<double>(0.0, h);
  };
  auto eval_at = [&](std::size_t a, double ha, std::size_t b, double hb) {
    std::fill(z.begin(), z.end(), std::complex<double>(0.0, 0.0));
    shift(a, ha);
    shift(b, hb);
    return f(z);
  };

  std::fill(z.begin(), z.end(), std::complex<double>(0.0, 0.0));
  const double f0 = f(z);
  Eigen::MatrixXd real(m, m);
  const double h = step;
  for (std::size_t a = 0; a < m; ++a)
  {
    for (std::size_t b = 0; b < m; ++b)
    {
      if (a == b)
      {
        const double fp = eval_at(a, h, a, 0.0);
        const double fm = eval_at(a, -h, a, 0.0);
        real(a, a) = (fp - 2.0 * f0 + fm) / (h * h);
      }
      else
      {
        const double fpp = eval_at(a, h, b, h);
        const double fpm = eval_at(a, h, b, -h);
        const double fmp = eval_at(a, -h, b, h);
        const double fmm = eval_at(a, -h, b, -h);
        real(a, b) = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
      }
    }
  }

  Eigen::MatrixXcd hess(dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k)
    {
      const std::size_t xj = 2 * j, yj = 2 * j + 1, xk = 2 * k, yk = 2 * k + 1;
      hess(j, k) = 0.25 * std::complex<double>(real(xj, xk) + real(yj, yk),
                                               real(xj, yk) - real(yj, xk));
    }
  return hess;
}

Eigen::MatrixXcd numeric_form_at_origin(const ParabolicFlag& flag, const PotentialSpec& spec,
                                        double step)
{
  require_type_a(flag);
  check_spec(flag, spec);
  const RealFunction phi = [&](const std::vector<std::complex<double>>& z) {
    return kahler_potential(flag, spec, BigCellPoint{z});
  };
  const Eigen::MatrixXcd raw = complex_hessian_at_origin(phi, flag.dim(), step);
  return 0.5 * (raw + raw.adjoint());
}

EigenvalueReport check_eigenvalue_formula(const ParabolicFlag& flag, const PotentialSpec& omega0,
                                          const PotentialSpec& psi, double step, double tol)
{
  require_type_a(flag);
  check_spec(flag, omega0);
  check_spec(flag, psi);
  if (!omega0.is_kahler())
    throw Error(ErrorCode::NotKahler, "omega0 potential must have positive coefficients");

  const InvariantClass omega_class(0, omega0.c);
  const InvariantClass psi_class(0, psi.c);

  EigenvalueReport report;
  report.tolerance = tol;
  report.exact = endomorphism_eigenvalues(flag, omega_class, psi_class);
  report.exact_trace = lefschetz_contraction(flag, omega_class, psi_class).value;
  for (const auto& q : report.exact)
    report.exact_sorted.push_back(q.get_d());
  std::sort(report.exact_sorted.begin(), report.exact_sorted.end());

  const Eigen::MatrixXcd h_omega = numeric_form_at_origin(flag, omega0, step);
  const Eigen::MatrixXcd h_psi = numeric_form_at_origin(flag, psi, step);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> base(h_omega, Eigen::EigenvaluesOnly);
  const double lo = base.eigenvalues().minCoeff();
  const double hi = base.eigenvalues().maxCoeff();
  if (base.info() != Eigen::Success || !(lo > 1e-12 * std::max(hi, 1.0)))
    throw Error(ErrorCode::IllConditioned, "numeric omega0 form is not positive definite");

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> ges(h_psi, h_omega,
                                                                 Eigen::EigenvaluesOnly);
  if (ges.info() != Eigen::Success)
    throw Error(ErrorCode::IllConditioned, "generalized eigenproblem did not converge");

  for (Eigen::Index i = 0; i < ges.eigenvalues().size(); ++i)
    report.numeric_sorted.push_back(ges.eigenvalues()[i]);
  std::sort(report.numeric_sorted.begin(), report.numeric_sorted.end());

  report.numeric_trace = 0.0;
  for (std::size_t i = 0; i < report.numeric_sorted.size(); ++i)
  {
    report.numeric_trace += report.numeric_sorted[i];
    report.max_deviation = std::max(report.max_deviation,
                                    std::abs(report.numeric_sorted[i] - report.exact_sorted[i]));
  }
  return report;
}

} // namespace flagcy
