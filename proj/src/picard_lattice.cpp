#include "flagcy/picard_lattice.hpp"

#include "flagcy/errors.hpp"

#include <algorithm>

namespace flagcy
{

LineBundleClass LineBundleClass::from_ints(const std::vector<long>& s)
{
  LineBundleClass l;
  for (long v : s)
    l.coeffs.emplace_back(v);
  return l;
}

InvariantClass LineBundleClass::as_class() const
{
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& v : coeffs)
    c.emplace_back(v);
  return InvariantClass(0, std::move(c));
}

bool LineBundleClass::is_trivial() const
{
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& v) { return v == 0; });
}

InvariantClass integral_representative(const InvariantClass& omega0)
{
  Integer scale(1);
  for (const auto& c : omega0.coeffs())
    scale = lcm(scale, Integer(c.get_den()));
  return Rational(scale) * omega0.with_power(0);
}

Integer hodge_riemann_pairing(const ParabolicFlag& flag, std::size_t position,
                              const InvariantClass& omega0)
{
  if (!is_kahler(flag, omega0))
    throw Error(ErrorCode::NotKahler, "class is not in the Kahler cone");
  const bool integral = omega0.two_pi_power() == 0 &&
                        std::all_of(omega0.coeffs().begin(), omega0.coeffs().end(),
                                    [](const Rational& q) { return is_integer(q); });
  if (!integral)
    throw Error(ErrorCode::NotIntegral, "Kahler class is not integral");

  const auto omega_alpha = InvariantClass::generator(flag.picard_number(), position);
  const ScaledRational d = degree(flag, omega_alpha, omega0);
  if (!is_integer(d.value))
    throw Error(ErrorCode::NotIntegral, "pairing " + to_string(d.value) + " is not an integer");
  return d.value.get_num();
}

PrimitiveBasis primitive_basis(const ParabolicFlag& flag, const InvariantClass& omega0,
                               std::size_t gamma_position)
{
  const std::size_t rho = flag.picard_number();
  if (gamma_position >= rho)
    throw Error(ErrorCode::IndexOutOfRange, "pivot is not a Picard direction");
  if (!is_kahler(flag, omega0))
    throw Error(ErrorCode::NotKahler, "class is not in the Kahler cone");
  if (rho < 2)
    throw Error(ErrorCode::PicardRankOne, "Picard number is 1; the primitive lattice is {0}");

  const InvariantClass omega = integral_representative(omega0);

  PrimitiveBasis out;
  out.pivot_gamma = gamma_position;
  std::vector<Integer> pairings;
  Integer tau(0);
  for (std::size_t a = 0; a < rho; ++a)
  {
    pairings.push_back(hodge_riemann_pairing(flag, a, omega));
    tau = gcd(tau, pairings.back());
  }
  out.tau = tau;
  for (const auto& p : pairings)
    out.q.push_back(p / tau);

  for (std::size_t a = 0; a < rho; ++a)
  {
    if (a == gamma_position)
      continue;
    LineBundleClass xi;
    xi.coeffs.assign(rho, Integer(0));
    xi.coeffs[gamma_position] = -out.q[a];
    xi.coeffs[a] = out.q[gamma_position];
    out.positions.push_back(a);
    out.basis.push_back(std::move(xi));
  }
  return out;
}

bool is_primitive(const ParabolicFlag& flag, const InvariantClass& c, const InvariantClass& omega0)
{
  return lefschetz_contraction(flag, omega0, c).value == 0;
}

OrthogonalDecomposition orthogonal_decompose(const ParabolicFlag& flag, const InvariantClass& c,
                                             const InvariantClass& omega0)
{
  const ScaledRational contraction = lefschetz_contraction(flag, omega0, c);
  ScaledRational m{contraction.value / static_cast<unsigned long>(flag.dim()),
                   contraction.two_pi_power};
  const InvariantClass along = (m.value * omega0).with_power(c.two_pi_power());
  return {m, c - along};
}

std::optional<std::vector<Rational>> solve_rational_combination(
    const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& target)
{
  const std::size_t cols = basis.size();
  const std::size_t rows = target.size();
  for (const auto& b : basis)
    if (b.size() != rows)
      throw Error(ErrorCode::DimensionMismatch, "basis vector length mismatch");

  // augmented matrix [B | t], B has the basis vectors as columns
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r)
  {
    for (std::size_t c = 0; c < cols; ++c)
      m[r][c] = basis[c][r];
    m[r][cols] = target[r];
  }

  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_col_of_row;
  for (std::size_t c = 0; c < cols; ++c)
  {
    std::size_t r = pivot_row;
    while (r < rows && m[r][c] == 0)
      ++r;
    if (r == rows)
      throw Error(ErrorCode::InvalidParameter, "basis vectors are linearly dependent");
    std::swap(m[r], m[pivot_row]);
    const Rational inv = Rational(1) / m[pivot_row][c];
    for (auto& v : m[pivot_row])
      v *= inv;
    for (std::size_t k = 0; k < rows; ++k)
    {
      if (k == pivot_row || m[k][c] == 0)
        continue;
      const Rational f = m[k][c];
      for (std::size_t j = c; j <= cols; ++j)
        m[k][j] -= f * m[pivot_row][j];
    }
    pivot_col_of_row.push_back(c);
    ++pivot_row;
  }

  for (std::size_t r = pivot_row; r < rows; ++r)
    if (m[r][cols] != 0)
      return std::nullopt;

  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < pivot_row; ++r)
    x[pivot_col_of_row[r]] = m[r][cols];
  return x;
}

std::optional<std::vector<Integer>> solve_integer_combination(
    const std::vector<LineBundleClass>& basis, const LineBundleClass& target)
{
  std::vector<std::vector<Rational>> b;
  for (const auto& l : basis)
    b.push_back(l.as_class().coeffs());
  const auto x = solve_rational_combination(b, target.as_class().coeffs());
  if (!x)
    return std::nullopt;
  std::vector<Integer> out;
  for (const auto& v : *x)
  {
    if (!is_integer(v))
      return std::nullopt;
    out.push_back(v.get_num());
  }
  return out;
}

} // namespace flagcy
