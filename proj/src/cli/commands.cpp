#include "flagcy/bundle_constructor.hpp"
#include "flagcy/cli.hpp"
#include "flagcy/errors.hpp"
#include "flagcy/flag_geometry.hpp"
#include "flagcy/picard_lattice.hpp"
#include "flagcy/potential_lab.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace flagcy::cli
{

using nlohmann::json;

namespace
{

constexpr int kVerificationFailed = 4;

struct FlagArgs
{
  std::string type;
  int rank = 0;
  std::string parabolic;
};

struct Options
{
  std::string format = "text";
  bool diagnostic = false;
  FlagArgs flag;
  std::string omega0 = "anticanonical";
  int gamma = 0;
  long k = 1;
  std::string t = "-1";
  std::string lambda;
  std::string bundles;
  std::string psi;
  double step = 1e-4;
  double tol = 1e-5;
};

// ---------------------------------------------------------------------------
// parsing helpers

std::vector<std::string> split(const std::string& s, char sep)
{
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    parts.push_back(item);
  return parts;
}

std::set<std::size_t> parse_index_set(const std::string& text)
{
  std::set<std::size_t> out;
  for (const auto& q : parse_rational_list(text))
  {
    if (!is_integer(q) || q < 1)
      throw Error(ErrorCode::ParseError, "simple root indices are positive integers, got " +
                                             to_string(q));
    out.insert(q.get_num().get_ui() - 1);
  }
  return out;
}

ParabolicFlag parse_flag(const FlagArgs& args)
{
  const LieType type(LieType::parse_family(args.type), args.rank);
  return make_flag(build_root_datum(type), parse_index_set(args.parabolic));
}

InvariantClass parse_class(const ParabolicFlag& flag, const std::string& text)
{
  if (text == "anticanonical")
    return anticanonical_class(flag);
  auto coeffs = parse_rational_list(text);
  if (coeffs.size() != flag.picard_number())
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(flag.picard_number()) + " coefficients, got " +
                    std::to_string(coeffs.size()));
  return InvariantClass(0, std::move(coeffs));
}

LineBundleClass parse_bundle(const ParabolicFlag& flag, const std::string& text)
{
  LineBundleClass l;
  for (const auto& q : parse_rational_list(text))
  {
    if (!is_integer(q))
      throw Error(ErrorCode::ParseError, "line bundle coefficients are integers, got " +
                                             to_string(q));
    l.coeffs.push_back(q.get_num());
  }
  if (l.coeffs.size() != flag.picard_number())
    throw Error(ErrorCode::DimensionMismatch,
                "bundle '" + text + "' needs " + std::to_string(flag.picard_number()) +
                    " coefficients");
  return l;
}

std::vector<LineBundleClass> parse_bundles(const ParabolicFlag& flag, const std::string& text)
{
  std::vector<LineBundleClass> out;
  for (const auto& part : split(text, ';'))
    out.push_back(parse_bundle(flag, part));
  return out;
}

// ---------------------------------------------------------------------------
// rendering helpers

std::string alpha_key(std::size_t simple_index)
{
  return "alpha_" + std::to_string(simple_index + 1);
}

json class_json(const ParabolicFlag& flag, const InvariantClass& c)
{
  json coeffs = json::object();
  for (std::size_t p = 0; p < c.size(); ++p)
    coeffs[alpha_key(flag.complement()[p])] = to_string(c.coeffs()[p]);
  return {{"two_pi_power", c.two_pi_power()}, {"coeffs", coeffs}};
}

json scaled_json(const ScaledRational& s)
{
  return {{"value", to_string(s.value)}, {"two_pi_power", s.value == 0 ? 0 : s.two_pi_power}};
}

json scaled_list(const std::vector<ScaledRational>& v)
{
  json out = json::array();
  for (const auto& s : v)
    out.push_back(scaled_json(s));
  return out;
}

json weight_json(const Weight& w)
{
  json out = json::object();
  for (std::size_t i = 0; i < w.rank(); ++i)
    out[alpha_key(i)] = to_string(w.coeffs[i]);
  return out;
}

json complement_map(const ParabolicFlag& flag, const std::vector<Integer>& values)
{
  json out = json::object();
  for (std::size_t p = 0; p < values.size(); ++p)
    out[alpha_key(flag.complement()[p])] = values[p].get_str();
  return out;
}

bool all_zero(const std::vector<ScaledRational>& v)
{
  return std::all_of(v.begin(), v.end(), [](const ScaledRational& s) { return s.value == 0; });
}

json flag_inputs(const Options& o)
{
  json parabolic = json::array();
  for (std::size_t i : parse_index_set(o.flag.parabolic))
    parabolic.push_back(i + 1);
  return {{"type", o.flag.type}, {"rank", o.flag.rank}, {"parabolic", parabolic}};
}

// ---------------------------------------------------------------------------
// commands

json cmd_describe(const Options& o, json& inputs)
{
  inputs = flag_inputs(o);
  const ParabolicFlag flag = parse_flag(o.flag);
  const Weight delta = delta_P(flag);
  const InvariantClass theta0 = anticanonical_class(flag);

  json roots = json::array();
  for (const auto& beta : flag.datum().positive_roots())
  {
    json coroot = json::array();
    for (const auto& c : beta.coroot_coords)
      coroot.push_back(to_string(c));
    const bool in_phi = std::any_of(flag.phi_I_plus().begin(), flag.phi_I_plus().end(),
                                    [&](const PositiveRoot& b) {
                                      return b.root_coords == beta.root_coords;
                                    });
    roots.push_back({{"root", beta.root_coords},
                     {"coroot", coroot},
                     {"height", beta.height()},
                     {"in_phi_I_plus", in_phi},
                     {"delta_pairing", to_string(pairing(delta, beta))}});
  }

  json cone = json::array();
  for (std::size_t p = 0; p < flag.picard_number(); ++p)
    cone.push_back(class_json(flag, InvariantClass::generator(flag.picard_number(), p)));

  return {{"lie_type", flag.datum().lie_type().name()},
          {"dim", flag.dim()},
          {"picard_number", flag.picard_number()},
          {"delta_P", weight_json(delta)},
          {"anticanonical_coeffs", complement_map(flag, anticanonical_coeffs(flag))},
          {"fano_index", fano_index(flag).get_str()},
          {"anticanonical_class", class_json(flag, theta0)},
          {"kahler_cone_generators", cone},
          {"volume_anticanonical", scaled_json(volume(flag, theta0))},
          {"positive_roots", roots}};
}

json cmd_primitive_basis(const Options& o, json& inputs)
{
  inputs = flag_inputs(o);
  inputs["omega0"] = o.omega0;
  const ParabolicFlag flag = parse_flag(o.flag);
  const InvariantClass omega0 = parse_class(flag, o.omega0);
  const std::size_t gamma =
      o.gamma == 0 ? 0 : flag.picard_position(static_cast<std::size_t>(o.gamma - 1));
  inputs["gamma"] = alpha_key(flag.complement()[gamma]);

  const PrimitiveBasis pb = primitive_basis(flag, omega0, gamma);
  const InvariantClass integral = integral_representative(omega0);
  std::vector<Integer> pairings;
  for (const auto& q : pb.q)
    pairings.push_back(q * pb.tau);

  json basis = json::array();
  for (std::size_t i = 0; i < pb.basis.size(); ++i)
  {
    const auto& xi = pb.basis[i];
    basis.push_back({{"index", alpha_key(flag.complement()[pb.positions[i]])},
                     {"class", class_json(flag, xi.as_class())},
                     {"degree", scaled_json(degree(flag, xi.as_class(), integral))}});
  }
  return {{"omega0", class_json(flag, omega0)},
          {"integral_representative", class_json(flag, integral)},
          {"pivot_gamma", alpha_key(flag.complement()[pb.pivot_gamma])},
          {"pairings", complement_map(flag, pairings)},
          {"tau", pb.tau.get_str()},
          {"q", complement_map(flag, pb.q)},
          {"basis", basis}};
}

json cmd_gauduchon(const Options& o, json& inputs)
{
  inputs = flag_inputs(o);
  const ParabolicFlag flag = parse_flag(o.flag);
  const Rational t = parse_rational(o.t);
  inputs["k"] = o.k;
  inputs["t"] = to_string(t);
  inputs["diagnostic"] = o.diagnostic;

  std::vector<LineBundleClass> bundles;
  if (o.bundles.empty())
    bundles.push_back(primitive_basis(flag, anticanonical_class(flag)).basis.front());
  else
    bundles = parse_bundles(flag, o.bundles);
  json bundle_json = json::array();
  for (const auto& b : bundles)
    bundle_json.push_back(class_json(flag, b.as_class()));
  inputs["bundles"] = bundle_json;

  GauduchonDatum d = [&] {
    if (!o.diagnostic)
      return build_t_gauduchon(flag, o.k, t, bundles);
    Rational lambda = t < 1 ? lambda_kt(flag, o.k, t) : Rational(1);
    if (!o.lambda.empty())
      lambda = parse_rational(o.lambda);
    inputs["lambda"] = to_string(lambda);
    return make_gauduchon_diagnostic(flag, o.k, t, lambda, bundles);
  }();

  const InvariantClass residual = verify_ricci_flat(d);
  json psi = json::array();
  for (const auto& p : d.psi)
    psi.push_back(class_json(flag, p));
  const auto hym = hym_contractions(d);
  const auto lee = lee_form_coefficients(flag, d.psi, d.omega0);

  json out = {{"lambda_kt", to_string(d.lambda_kt)},
              {"r", d.r},
              {"omega0", class_json(flag, d.omega0)},
              {"psi", psi},
              {"ricci_residual", class_json(flag, residual)},
              {"ricci_flat", residual.is_zero()},
              {"hym_contractions", scaled_list(hym)},
              {"hym", all_zero(hym)},
              {"lee_form", scaled_list(lee)}};
  try
  {
    out["c1_ratio"] = to_string(verify_c1_trivial(d));
  }
  catch (const Error& e)
  {
    if (e.code() != ErrorCode::NotProportional)
      throw;
    out["c1_ratio"] = nullptr;
  }
  return out;
}

json cmd_balanced(const Options& o, json& inputs)
{
  inputs = flag_inputs(o);
  inputs["omega0"] = o.omega0;
  const ParabolicFlag flag = parse_flag(o.flag);
  const InvariantClass omega0 = parse_class(flag, o.omega0);
  const auto bundles = parse_bundles(flag, o.bundles);
  json bundle_json = json::array();
  for (const auto& b : bundles)
    bundle_json.push_back(class_json(flag, b.as_class()));
  inputs["bundles"] = bundle_json;

  const BalancedDatum d = build_balanced(flag, omega0, bundles);
  const auto coclosed = verify_coclosed(d);
  const auto lee = lee_form_coefficients(flag, d.psi, d.omega0);
  json psi = json::array();
  for (const auto& p : d.psi)
    psi.push_back(class_json(flag, p));
  return {{"omega0", class_json(flag, omega0)},
          {"psi", psi},
          {"coclosed", scaled_list(coclosed)},
          {"lee_form", scaled_list(lee)},
          {"balanced", all_zero(coclosed) && all_zero(lee)}};
}

json cmd_verify_numeric(const Options& o, json& inputs, bool& passed)
{
  inputs = flag_inputs(o);
  inputs["omega0"] = o.omega0;
  inputs["psi"] = o.psi;
  inputs["step"] = o.step;
  inputs["tol"] = o.tol;
  const ParabolicFlag flag = parse_flag(o.flag);
  if (flag.datum().lie_type().family() != Family::A)
    throw Error(ErrorCode::UnsupportedType, "numeric verification is only available for type A");
  const InvariantClass omega0 = parse_class(flag, o.omega0);
  const InvariantClass psi = parse_class(flag, o.psi);

  const EigenvalueReport rep = check_eigenvalue_formula(
      flag, PotentialSpec::from_class(omega0), PotentialSpec::from_class(psi), o.step, o.tol);
  passed = rep.passed();

  json exact = json::array();
  for (const auto& q : rep.exact)
    exact.push_back(to_string(q));
  return {{"exact_eigenvalues", exact},
          {"exact_sorted", rep.exact_sorted},
          {"numeric_sorted", rep.numeric_sorted},
          {"max_deviation", rep.max_deviation},
          {"exact_trace", to_string(rep.exact_trace)},
          {"numeric_trace", rep.numeric_trace},
          {"tolerance", rep.tolerance},
          {"passed", passed}};
}

void emit(const Options& o, const json& report, std::ostream& out)
{
  out << (o.format == "json" ? render_json(report) : render_text(report));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  Options o;
  CLI::App app{"Invariant Kahler geometry of flag varieties and torus-bundle metrics", "flagcy"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--diagnostic", o.diagnostic,
               "Accept arbitrary lambda and t (including t = 1) and report the residual");

  auto add_flag_args = [&](CLI::App* sub) {
    sub->add_option("type", o.flag.type, "Lie family A..G")->required();
    sub->add_option("rank", o.flag.rank, "Rank")->required();
    sub->add_option("--parabolic", o.flag.parabolic,
                    "Comma-separated 1-based simple roots in I (default: full flag)");
  };

  auto* describe = app.add_subcommand("describe", "Root data, anticanonical class, Fano index");
  add_flag_args(describe);

  auto* basis = app.add_subcommand("primitive-basis", "Generators of the degree-zero Picard group");
  add_flag_args(basis);
  basis->add_option("--omega0", o.omega0, "'anticanonical' or comma-separated rationals");
  basis->add_option("--gamma", o.gamma, "1-based simple root used as pivot");

  auto* gauduchon = app.add_subcommand("gauduchon", "t-Gauduchon Ricci-flat datum on U(E)");
  add_flag_args(gauduchon);
  gauduchon->add_option("--k", o.k, "Nonzero integer k");
  gauduchon->add_option("--t", o.t, "Rational t < 1");
  gauduchon->add_option("--bundles", o.bundles, "Bundles F_j as 's,s;s,s;...'");
  gauduchon->add_option("--lambda", o.lambda, "Scale override (diagnostic mode only)");

  auto* balanced = app.add_subcommand("balanced", "Balanced datum on U(F)");
  add_flag_args(balanced);
  balanced->add_option("--omega0", o.omega0, "'anticanonical' or comma-separated rationals");
  balanced->add_option("--bundles", o.bundles, "Bundles F_j as 's,s;s,s;...'")->required();

  auto* numeric = app.add_subcommand("verify-numeric", "Finite-difference eigenvalue check");
  add_flag_args(numeric);
  numeric->add_option("--omega0", o.omega0, "'anticanonical' or comma-separated rationals");
  numeric->add_option("--psi", o.psi, "Comma-separated rationals")->required();
  numeric->add_option("--step", o.step, "Finite-difference step");
  numeric->add_option("--tol", o.tol, "Tolerance on the eigenvalue deviation");

  try
  {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  }
  catch (const CLI::CallForHelp&)
  {
    out << app.help();
    return 0;
  }
  catch (const CLI::ParseError& e)
  {
    err << "flagcy: " << e.what() << "\n";
    return 1;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  json report = {{"command", command}, {"inputs", json::object()}, {"results", nullptr}};
  int code = 0;
  json inputs = json::object();
  try
  {
    json results;
    if (sub == describe)
      results = cmd_describe(o, inputs);
    else if (sub == basis)
      results = cmd_primitive_basis(o, inputs);
    else if (sub == gauduchon)
      results = cmd_gauduchon(o, inputs);
    else if (sub == balanced)
      results = cmd_balanced(o, inputs);
    else
    {
      bool passed = false;
      results = cmd_verify_numeric(o, inputs, passed);
      if (!passed)
        code = kVerificationFailed;
    }
    report["inputs"] = inputs;
    report["results"] = results;
    report["status"] = {{"ok", code == 0}};
    if (code != 0)
      report["status"] = {{"ok", false},
                          {"error", "VerificationFailed"},
                          {"message", "numeric eigenvalues deviate beyond tolerance"},
                          {"exit_code", code}};
  }
  catch (const Error& e)
  {
    code = exit_code(e.code());
    json status = {{"ok", false},
                   {"error", to_string(e.code())},
                   {"message", e.what()},
                   {"exit_code", code}};
    if (e.index())
      status["index"] = *e.index();
    report["inputs"] = inputs;
    report["status"] = status;
  }
  emit(o, report, out);
  return code;
}

} // namespace flagcy::cli
