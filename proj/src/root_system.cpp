#include "flagcy/root_system.hpp"

#include "flagcy/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace flagcy
{

namespace
{

bool rank_allowed(Family f, int rank)
{
  switch (f)
  {
  case Family::A: return rank >= 1;
  case Family::B:
  case Family::C: return rank >= 2;
  case Family::D: return rank >= 3;
  case Family::E: return rank >= 6 && rank <= 8;
  case Family::F: return rank == 4;
  case Family::G: return rank == 2;
  }
  return false;
}

using IntMatrix = std::vector<std::vector<int>>;

void link(IntMatrix& c, std::size_t i, std::size_t j)
{
  c[i][j] = -1;
  c[j][i] = -1;
}

IntMatrix cartan_matrix(const LieType& type)
{
  const std::size_t n = type.rank();
  IntMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    c[i][i] = 2;

  switch (type.family())
  {
  case Family::A:
    for (std::size_t i = 0; i + 1 < n; ++i)
      link(c, i, i + 1);
    break;
  case Family::B:
    for (std::size_t i = 0; i + 1 < n; ++i)
      link(c, i, i + 1);
    c[n - 2][n - 1] = -2; // alpha_n short
    break;
  case Family::C:
    for (std::size_t i = 0; i + 1 < n; ++i)
      link(c, i, i + 1);
    c[n - 1][n - 2] = -2; // alpha_n long
    break;
  case Family::D:
    for (std::size_t i = 0; i + 2 < n; ++i)
      link(c, i, i + 1);
    link(c, n - 3, n - 1);
    break;
  case Family::E:
    // 1-3-4-5-6-7-8 with 2 hanging off 4
    link(c, 0, 2);
    link(c, 1, 3);
    for (std::size_t i = 2; i + 1 < n; ++i)
      link(c, i, i + 1);
    break;
  case Family::F:
    link(c, 0, 1);
    link(c, 1, 2);
    link(c, 2, 3);
    c[1][2] = -2; // alpha_1, alpha_2 long
    break;
  case Family::G:
    c[0][1] = -1; // alpha_1 short
    c[1][0] = -3;
    break;
  }
  return c;
}

std::vector<Rational> symmetrizer_for(const LieType& type)
{
  const std::size_t n = type.rank();
  std::vector<Rational> d(n, Rational(1));
  switch (type.family())
  {
  case Family::B:
    for (std::size_t i = 0; i + 1 < n; ++i)
      d[i] = 2;
    break;
  case Family::C:
    d[n - 1] = 2;
    break;
  case Family::F:
    d[0] = 2;
    d[1] = 2;
    break;
  case Family::G:
    d[1] = 3;
    break;
  default:
    break;
  }
  return d;
}

int pair_with_simple_coroot(const IntMatrix& c, const std::vector<int>& root, std::size_t i)
{
  int s = 0;
  for (std::size_t j = 0; j < root.size(); ++j)
    s += root[j] * c[j][i];
  return s;
}

// Height-graded closure: beta + alpha_i is a root iff q = p - <beta, alpha_i^v> > 0,
// where p is the length of the alpha_i-string below beta.
std::vector<std::vector<int>> enumerate_positive_roots(const IntMatrix& c)
{
  const std::size_t n = c.size();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> layer;
  for (std::size_t i = 0; i < n; ++i)
  {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    layer.push_back(e);
  }

  std::vector<std::vector<int>> all = layer;
  while (!layer.empty())
  {
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer)
    {
      for (std::size_t i = 0; i < n; ++i)
      {
        int p = 0;
        std::vector<int> down = beta;
        while (true)
        {
          --down[i];
          if (!seen.count(down))
            break;
          ++p;
        }
        const int q = p - pair_with_simple_coroot(c, beta, i);
        if (q <= 0)
          continue;
        std::vector<int> up = beta;
        ++up[i];
        if (seen.insert(up).second)
          next.push_back(up);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

} // namespace

LieType::LieType(Family family, int rank) : m_family(family), m_rank(0)
{
  if (!rank_allowed(family, rank))
    throw Error(ErrorCode::InvalidRank, std::string("rank ") + std::to_string(rank) +
                                            " is not valid for family " + family_letter(family));
  m_rank = static_cast<std::size_t>(rank);
}

bool LieType::simply_laced() const
{
  return m_family == Family::A || m_family == Family::D || m_family == Family::E;
}

std::string LieType::name() const
{
  return std::string(1, family_letter(m_family)) + std::to_string(m_rank);
}

Family LieType::parse_family(const std::string& letter)
{
  if (letter.size() == 1)
  {
    switch (std::toupper(static_cast<unsigned char>(letter[0])))
    {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    }
  }
  throw Error(ErrorCode::ParseError, "unknown Lie family '" + letter + "'");
}

char family_letter(Family f)
{
  return "ABCDEFG"[static_cast<int>(f)];
}

std::size_t positive_root_count(const LieType& type)
{
  const std::size_t n = type.rank();
  switch (type.family())
  {
  case Family::A: return n * (n + 1) / 2;
  case Family::B:
  case Family::C: return n * n;
  case Family::D: return n * (n - 1);
  case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
  case Family::F: return 24;
  case Family::G: return 6;
  }
  return 0;
}

int PositiveRoot::height() const
{
  return std::accumulate(root_coords.begin(), root_coords.end(), 0);
}

Weight& Weight::operator+=(const Weight& other)
{
  if (other.rank() != rank())
    throw Error(ErrorCode::DimensionMismatch, "weight rank mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    coeffs[i] += other.coeffs[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other)
{
  if (other.rank() != rank())
    throw Error(ErrorCode::DimensionMismatch, "weight rank mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    coeffs[i] -= other.coeffs[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& s)
{
  for (auto& c : coeffs)
    c *= s;
  return *this;
}

Weight fundamental_weight(std::size_t rank, std::size_t index)
{
  if (index >= rank)
    throw Error(ErrorCode::IndexOutOfRange, "fundamental weight index out of range");
  Weight w(rank);
  w.coeffs[index] = 1;
  return w;
}

RootDatum::RootDatum(const LieType& type)
    : m_type(type), m_cartan(cartan_matrix(type)), m_symmetrizer(symmetrizer_for(type))
{
  const std::size_t n = rank();
  auto coords = enumerate_positive_roots(m_cartan);
  std::sort(coords.begin(), coords.end(), [](const auto& a, const auto& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb)
      return ha < hb;
    return a > b;
  });

  m_roots.reserve(coords.size());
  for (auto& c : coords)
  {
    // half squared length: (beta,beta)/2 with (alpha_i, alpha_j) = C_ij d_j
    Rational half_sq(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        half_sq += c[i] * c[j] * m_cartan[i][j] * m_symmetrizer[j];
    half_sq /= 2;

    PositiveRoot root;
    root.coroot_coords.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
      root.coroot_coords.push_back(c[j] * m_symmetrizer[j] / half_sq);
    root.root_coords = std::move(c);
    m_roots.push_back(std::move(root));
  }
}

Weight RootDatum::root_as_weight(const std::vector<int>& root_coords) const
{
  if (root_coords.size() != rank())
    throw Error(ErrorCode::DimensionMismatch, "root coordinate length mismatch");
  Weight w(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    w.coeffs[i] = pair_with_simple_coroot(m_cartan, root_coords, i);
  return w;
}

RootDatum build_root_datum(const LieType& type)
{
  return RootDatum(type);
}

Rational pairing(const Weight& w, const PositiveRoot& beta)
{
  if (w.rank() != beta.coroot_coords.size())
    throw Error(ErrorCode::DimensionMismatch, "weight and root come from different ranks");
  Rational s(0);
  for (std::size_t j = 0; j < w.rank(); ++j)
    s += w.coeffs[j] * beta.coroot_coords[j];
  return s;
}

Weight rho_plus(const RootDatum& datum)
{
  return Weight(std::vector<Rational>(datum.rank(), Rational(1)));
}

} // namespace flagcy
