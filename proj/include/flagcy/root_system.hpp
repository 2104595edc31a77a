#ifndef FLAGCY_ROOT_SYSTEM_HPP
#define FLAGCY_ROOT_SYSTEM_HPP

#include "flagcy/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace flagcy
{

enum class Family { A, B, C, D, E, F, G };

/// Simple Lie type X_n. Construction enforces the rank range of the family.
class LieType
{
public:
  LieType(Family family, int rank);

  Family family() const { return m_family; }
  std::size_t rank() const { return m_rank; }
  bool simply_laced() const;
  std::string name() const;

  static Family parse_family(const std::string& letter);

  bool operator==(const LieType&) const = default;

private:
  Family m_family;
  std::size_t m_rank;
};

char family_letter(Family f);

/// Number of positive roots of the type (closed form).
std::size_t positive_root_count(const LieType& type);

struct PositiveRoot
{
  /// Coefficients in the simple-root basis.
  std::vector<int> root_coords;
  /// Coefficients of the coroot in the simple-coroot basis.
  std::vector<Rational> coroot_coords;

  int height() const;
};

/// Weight in the fundamental-weight basis.
struct Weight
{
  std::vector<Rational> coeffs;

  Weight() = default;
  explicit Weight(std::size_t rank) : coeffs(rank, Rational(0)) {}
  explicit Weight(std::vector<Rational> c) : coeffs(std::move(c)) {}

  std::size_t rank() const { return coeffs.size(); }

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& s);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight w) { return w *= s; }
  bool operator==(const Weight&) const = default;
};

Weight fundamental_weight(std::size_t rank, std::size_t index);

/// Root system of a simple Lie algebra.
///
/// Cartan convention: cartan[i][j] = <alpha_i, alpha_j^v> = 2(alpha_i,alpha_j)/(alpha_j,alpha_j),
/// Bourbaki node labels (0-based here). The symmetrizer holds half squared lengths
/// of the simple roots with short roots normalized to 1.
class RootDatum
{
public:
  explicit RootDatum(const LieType& type);

  const LieType& lie_type() const { return m_type; }
  std::size_t rank() const { return m_type.rank(); }
  const std::vector<std::vector<int>>& cartan() const { return m_cartan; }
  const std::vector<Rational>& symmetrizer() const { return m_symmetrizer; }

  /// Graded by height; within a height, descending lexicographic in root_coords
  /// (so the simple roots come out as alpha_1, alpha_2, ...).
  const std::vector<PositiveRoot>& positive_roots() const { return m_roots; }

  /// Converts simple-root coordinates to the fundamental-weight basis.
  Weight root_as_weight(const std::vector<int>& root_coords) const;

private:
  LieType m_type;
  std::vector<std::vector<int>> m_cartan;
  std::vector<Rational> m_symmetrizer;
  std::vector<PositiveRoot> m_roots;
};

RootDatum build_root_datum(const LieType& type);

/// <w, beta^v>
Rational pairing(const Weight& w, const PositiveRoot& beta);

/// Half the sum of positive roots; every fundamental coefficient equals 1.
Weight rho_plus(const RootDatum& datum);

} // namespace flagcy

#endif
