/// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion.
///
///   flagcy_acceptance          run all criteria
///   flagcy_acceptance 2 5      run the listed criteria only
///
/// Exit status is 0 iff every selected criterion passes.

#include "flagcy/bundle_constructor.hpp"
#include "flagcy/errors.hpp"
#include "flagcy/potential_lab.hpp"
#include "../test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace flagcy;
using flagcy::testing::flag_of;

namespace
{

/// Pinned tolerances and budgets.
constexpr double kEigenTolerance = 1e-5;
constexpr double kFiniteDifferenceStep = 1e-4;
constexpr double kBudgetFixture = 1.0;
constexpr double kBudgetGrid = 30.0;
constexpr double kBudgetNumeric = 10.0;
constexpr unsigned kLatticeSeed = 20240917;
constexpr int kLatticeSamples = 200;
constexpr int kLatticeSpan = 5;

struct Outcome
{
  bool passed = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what)
  {
    if (!ok)
    {
      passed = false;
      if (failures.size() < 5)
        failures.push_back(what);
    }
  }
};

struct Criterion
{
  int id;
  std::string title;
  double budget_seconds; // 0: no runtime bound
  std::function<void(Outcome&)> body;
};

Rational q(long n, long d = 1)
{
  return make_rational(n, d);
}

std::string flag_name(const ParabolicFlag& flag)
{
  std::ostringstream os;
  os << flag.datum().lie_type().name() << " I={";
  bool first = true;
  for (std::size_t i : flag.parabolic_set())
  {
    os << (first ? "" : ",") << i + 1;
    first = false;
  }
  os << "}";
  return os.str();
}

/// Odd-length bundle lists drawn from the primitive basis.
std::vector<std::vector<LineBundleClass>> gauduchon_bundle_lists(const PrimitiveBasis& pb)
{
  std::vector<std::vector<LineBundleClass>> lists;
  for (const auto& xi : pb.basis)
    lists.push_back({xi});
  if (pb.basis.size() >= 2)
    lists.push_back({pb.basis[0], pb.basis[1], pb.basis.back()});
  return lists;
}

/// Even-length bundle lists drawn from the primitive basis.
std::vector<std::vector<LineBundleClass>> balanced_bundle_lists(const PrimitiveBasis& pb)
{
  std::vector<std::vector<LineBundleClass>> lists;
  for (const auto& a : pb.basis)
    for (const auto& b : pb.basis)
      lists.push_back({a, b});
  if (pb.basis.size() >= 2)
    lists.push_back({pb.basis[0], pb.basis[1], pb.basis[1], pb.basis[0]});
  return lists;
}

const std::vector<long> kGridK = {-2, -1, 1, 2};
const std::vector<Rational> kGridT = {Rational(-1), Rational(0), make_rational(1, 2)};

void fixture(Outcome& o)
{
  const auto a2 = flag_of('A', 2);
  const auto theta = anticanonical_class(a2);
  o.expect(fano_index(a2) == 2, "Fano index");
  o.expect(delta_P(a2).coeffs == std::vector<Rational>{2, 2}, "delta_B = 2w1 + 2w2");
  o.expect(lefschetz_contraction(a2, theta, InvariantClass::generator(2, 0)) ==
               ScaledRational{q(3, 4), 0},
           "Lambda(Omega_1) = 3/4");
  o.expect(lefschetz_contraction(a2, theta, InvariantClass::generator(2, 1)) ==
               ScaledRational{q(3, 4), 0},
           "Lambda(Omega_2) = 3/4");
  const auto pb = primitive_basis(a2, theta);
  o.expect(pb.basis.size() == 1 && pb.basis[0].coeffs == std::vector<Integer>{-1, 1},
           "primitive basis {O(-1,1)}");
  int cases = 0;
  for (long k : {1L, -1L, 2L, -2L})
    for (const Rational& t : kGridT)
    {
      o.expect(lambda_kt(a2, k, t) == q(3, 8) * (1 - t) * k * k,
               "lambda(" + std::to_string(k) + "," + to_string(t) + ")");
      ++cases;
    }
  o.detail = std::to_string(cases) + " lambda values";
}

void ricci_flat(Outcome& o)
{
  int data = 0, flags = 0;
  flagcy::testing::for_each_classical_flag(4, 2, [&](const ParabolicFlag& flag) {
    ++flags;
    const auto pb = primitive_basis(flag, anticanonical_class(flag));
    for (const auto& bundles : gauduchon_bundle_lists(pb))
      for (long k : kGridK)
        for (const Rational& t : kGridT)
        {
          const auto d = build_t_gauduchon(flag, k, t, bundles);
          o.expect(verify_ricci_flat(d).is_zero(),
                   flag_name(flag) + " k=" + std::to_string(k) + " t=" + to_string(t));
          ++data;
        }
  });
  o.detail = std::to_string(flags) + " flags, " + std::to_string(data) + " data";
}

void balanced(Outcome& o)
{
  int data = 0, flags = 0;
  flagcy::testing::for_each_classical_flag(4, 2, [&](const ParabolicFlag& flag) {
    ++flags;
    const auto theta = anticanonical_class(flag);
    const auto pb = primitive_basis(flag, theta);
    for (const auto& bundles : balanced_bundle_lists(pb))
    {
      const auto d = build_balanced(flag, theta, bundles);
      for (const auto& c : verify_coclosed(d))
        o.expect(c.value == 0, flag_name(flag) + " coclosed");
      for (const auto& c : lee_form_coefficients(flag, d.psi, d.omega0))
        o.expect(c.value == 0, flag_name(flag) + " Lee form");
      ++data;
    }
  });
  o.detail = std::to_string(flags) + " flags, " + std::to_string(data) + " data";
}

void c1_trivial(Outcome& o)
{
  int data = 0;
  flagcy::testing::for_each_classical_flag(4, 2, [&](const ParabolicFlag& flag) {
    const Integer index = fano_index(flag);
    const auto pb = primitive_basis(flag, anticanonical_class(flag));
    for (const auto& bundles : gauduchon_bundle_lists(pb))
      for (long k : kGridK)
        for (const Rational& t : kGridT)
        {
          const auto d = build_t_gauduchon(flag, k, t, bundles);
          o.expect(verify_c1_trivial(d) == Rational(index) / k,
                   flag_name(flag) + " k=" + std::to_string(k));
          ++data;
        }
  });
  o.detail = std::to_string(data) + " data";
}

void numeric(Outcome& o)
{
  double worst = 0.0;
  auto check = [&](const ParabolicFlag& flag, std::vector<Rational> psi) {
    const auto omega = PotentialSpec::from_class(anticanonical_class(flag));
    const auto rep = check_eigenvalue_formula(flag, omega, PotentialSpec{psi},
                                              kFiniteDifferenceStep, kEigenTolerance);
    worst = std::max(worst, rep.max_deviation);
    std::string label = flag_name(flag) + " psi=(";
    for (std::size_t i = 0; i < psi.size(); ++i)
      label += (i ? "," : "") + to_string(psi[i]);
    o.expect(rep.max_deviation < kEigenTolerance, label + ")");
  };
  const auto sl3 = flag_of('A', 2);
  check(sl3, {1, 0});
  check(sl3, {0, 1});
  check(sl3, {-1, 1});
  const auto sl4 = flag_of('A', 3);
  check(sl4, {1, 0, 0});
  check(sl4, {-1, 1, 0});
  char buf[64];
  std::snprintf(buf, sizeof buf, "max deviation %.3e (tol %.0e)", worst, kEigenTolerance);
  o.detail = buf;
}

void lattice(Outcome& o)
{
  std::mt19937 rng(kLatticeSeed);
  std::uniform_int_distribution<int> coeff(-kLatticeSpan, kLatticeSpan);
  int flags = 0, degree_zero = 0, mismatches = 0;
  flagcy::testing::for_each_classical_flag(4, 2, [&](const ParabolicFlag& flag) {
    ++flags;
    const auto theta = anticanonical_class(flag);
    const auto pb = primitive_basis(flag, theta);
    for (int s = 0; s < kLatticeSamples; ++s)
    {
      LineBundleClass l;
      for (std::size_t i = 0; i < flag.picard_number(); ++i)
        l.coeffs.push_back(coeff(rng));
      const bool deg0 = degree(flag, l.as_class(), theta).value == 0;
      const bool in_span = solve_integer_combination(pb.basis, l).has_value();
      degree_zero += deg0 ? 1 : 0;
      if (deg0 != in_span)
      {
        ++mismatches;
        std::string coords;
        for (std::size_t i = 0; i < l.coeffs.size(); ++i)
          coords += (i ? "," : "") + l.coeffs[i].get_str();
        o.expect(false, flag_name(flag) + " (" + coords + ") deg0=" + (deg0 ? "1" : "0") +
                            " in_span=" + (in_span ? "1" : "0"));
      }
    }
  });
  o.detail = std::to_string(flags) + " flags, " + std::to_string(degree_zero) +
             " degree-zero samples, " + std::to_string(mismatches) + " mismatches";
}

void volumes(Outcome& o)
{
  const auto p1 = flag_of('A', 1);
  o.expect(volume(p1, anticanonical_class(p1)) == ScaledRational{2, 0}, "Vol(P1) = 2");
  const auto a2 = flag_of('A', 2);
  o.expect(volume(a2, anticanonical_class(a2)) == ScaledRational{8, 0}, "Vol(P(T P2)) = 8");
  int cases = 0;
  for (const auto& flag : {p1, a2})
    for (const Rational& s : {Rational(2), q(1, 3)})
    {
      const auto theta = anticanonical_class(flag);
      auto scaled = theta;
      scaled *= s;
      o.expect(volume(flag, scaled).value ==
                   pow(s, static_cast<long>(flag.dim())) * volume(flag, theta).value,
               flag_name(flag) + " s=" + to_string(s));
      ++cases;
    }
  o.detail = std::to_string(cases) + " homogeneity checks";
}

} // namespace

int main(int argc, char** argv)
{
  const std::vector<Criterion> criteria = {
      {1, "A2 full flag fixture, exact", kBudgetFixture, fixture},
      {2, "Ricci-flat residual vanishes on the A/B/C/D grid", kBudgetGrid, ricci_flat},
      {3, "balanced data are coclosed with zero Lee form", 0, balanced},
      {4, "c1 ratio equals I/k on the grid", 0, c1_trivial},
      {5, "finite-difference eigenvalues match the exact ratios", kBudgetNumeric, numeric},
      {6, "degree zero iff integer combination of the xi basis", 0, lattice},
      {7, "volume values and homogeneity", 0, volumes},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i)
    selected.insert(std::atoi(argv[i]));

  bool all_passed = true;
  for (const auto& c : criteria)
  {
    if (!selected.empty() && !selected.count(c.id))
      continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try
    {
      c.body(o);
    }
    catch (const std::exception& e)
    {
      o.passed = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds)
    {
      o.passed = false;
      o.failures.push_back("runtime budget exceeded");
    }
    all_passed = all_passed && o.passed;

    char timing[64];
    if (c.budget_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.3f s < %.0f s", seconds, c.budget_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << " -- "
              << o.detail << " (" << timing << ")\n";
    for (const auto& f : o.failures)
      std::cout << "         " << f << "\n";
  }
  return all_passed ? 0 : 1;
}
