#include "oracle_fixtures.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace flagcy;

TEST_CASE("classical flags reproduce the frozen oracle table")
{
  REQUIRE(oracle_rows().size() == 63);
  for (const auto& row : oracle_rows())
  {
    const auto flag = flagcy::testing::flag_of(row.family[0], row.rank, row.parabolic);
    CAPTURE(row.family);
    CAPTURE(row.rank);
    CHECK(flag.dim() == row.dim);

    const auto ell = anticanonical_coeffs(flag);
    REQUIRE(ell.size() == row.ell.size());
    const auto theta = anticanonical_class(flag);
    CHECK(volume(flag, theta).value == Rational(row.volume));

    const auto pb = primitive_basis(flag, theta);
    for (std::size_t p = 0; p < ell.size(); ++p)
    {
      CHECK(ell[p] == Integer(row.ell[p]));
      CHECK(hodge_riemann_pairing(flag, p, theta) == Integer(row.pairings[p]));
      CHECK(pb.q[p] == Integer(row.q[p]));
    }
  }
}
