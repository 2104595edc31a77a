#ifndef FLAGCY_TESTS_SUPPORT_HPP
#define FLAGCY_TESTS_SUPPORT_HPP

#include "flagcy/flag_geometry.hpp"
#include "flagcy/picard_lattice.hpp"

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace flagcy::testing
{

inline ParabolicFlag flag_of(char family, int rank, std::set<std::size_t> parabolic = {})
{
  return make_flag(build_root_datum(LieType(LieType::parse_family(std::string(1, family)), rank)),
                   parabolic);
}

inline InvariantClass cls(std::vector<Rational> coeffs, int power = 0)
{
  return InvariantClass(power, std::move(coeffs));
}

inline Rational q(long num, long den = 1)
{
  return make_rational(num, den);
}

/// Every A/B/C/D flag of rank <= max_rank with Picard number >= min_picard.
inline void for_each_classical_flag(int max_rank, std::size_t min_picard,
                                    const std::function<void(const ParabolicFlag&)>& visit)
{
  const std::vector<std::pair<char, int>> families = {{'A', 1}, {'B', 2}, {'C', 2}, {'D', 3}};
  for (const auto& [family, min_rank] : families)
    for (int rank = min_rank; rank <= max_rank; ++rank)
      for (unsigned mask = 0; mask < (1u << rank); ++mask)
      {
        std::set<std::size_t> parabolic;
        for (int i = 0; i < rank; ++i)
          if (mask & (1u << i))
            parabolic.insert(static_cast<std::size_t>(i));
        if (static_cast<std::size_t>(rank) - parabolic.size() < std::max<std::size_t>(min_picard, 1))
          continue;
        visit(flag_of(family, rank, parabolic));
      }
}

inline Rational random_rational(std::mt19937& rng, int span = 7)
{
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  return make_rational(num(rng), den(rng));
}

inline InvariantClass random_class(std::mt19937& rng, std::size_t size)
{
  std::vector<Rational> c;
  for (std::size_t i = 0; i < size; ++i)
    c.push_back(random_rational(rng));
  return InvariantClass(0, c);
}

} // namespace flagcy::testing

#endif
