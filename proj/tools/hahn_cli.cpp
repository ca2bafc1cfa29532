#include "hahn_cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "hahn/json_io.hpp"

namespace hahn::cli {
namespace {

using Json = nlohmann::json;
namespace io = hahn::json;

int generator_digits() {
  if (const char* env = std::getenv("HAHN_GENERATOR_DIGITS")) {
    try {
      const int d = std::stoi(env);
      if (d >= 1 && d <= 60) return d;
    } catch (const std::exception&) {
    }
    throw HahnError(ErrorKind::InvalidArgument, "HAHN_GENERATOR_DIGITS must be an integer in [1, 60]");
  }
  return 30;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw HahnError(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw HahnError(ErrorKind::ParseError, path + ": " + e.what());
  }
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw HahnError(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) parts.push_back(cur);
  return parts;
}

double parse_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw HahnError(ErrorKind::ParseError, "not a number: '" + s + "'");
  }
}

/// "r,phi"
LogPoint parse_point(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw HahnError(ErrorKind::ParseError, "point must be 'r,phi', got '" + s + "'");
  return {parse_double(parts[0]), parse_double(parts[1])};
}

/// "r,phi;r,phi;..."
std::vector<LogPoint> parse_points(const std::string& s) {
  std::vector<LogPoint> points;
  for (const auto& p : split(s, ';')) points.push_back(parse_point(p));
  return points;
}

/// "a", "a:b" (generator coefficient b), optionally followed by ",beta".
Exponent parse_exponent(const GroupPtr& group, const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.empty() || parts.size() > 2) throw HahnError(ErrorKind::ParseError, "bad exponent '" + s + "'");
  const auto ab = split(parts[0], ':');
  if (ab.empty() || ab.size() > 2) throw HahnError(ErrorKind::ParseError, "bad exponent '" + s + "'");
  const Rational a = parse_rational(ab[0]);
  const Rational b = ab.size() == 2 ? parse_rational(ab[1]) : Rational(0);
  std::int64_t beta = 0;
  if (parts.size() == 2) {
    const Rational r = parse_rational(parts[1]) * group->beta_denominator();
    if (denominator(r) != 1) throw HahnError(ErrorKind::ParseError, "beta is not a multiple of 1/D in '" + s + "'");
    beta = numerator(r).convert_to<std::int64_t>();
  }
  return Exponent::lex(group, a, b, beta);
}

/// Calls fn.template operator()<C>() for the ring named in the document.
template <bool ScalarOnly = false, class Fn>
Json with_ring(const std::string& ring, Fn&& fn) {
  if (ring == "rational") return fn.template operator()<Rational>();
  if (ring == "complex") return fn.template operator()<Complex>();
  if constexpr (!ScalarOnly) {
    if (ring == "complex_matrix") return fn.template operator()<SquareMatrix<Complex>>();
    if (ring == "rational_matrix") return fn.template operator()<SquareMatrix<Rational>>();
  }
  throw HahnError(ErrorKind::ParseError, "unsupported ring '" + ring + "' for this command");
}

Series<Complex> complex_series(const Json& doc) {
  const std::string ring = io::ring_of(doc);
  if (ring == "complex") return io::series_from_json<Complex>(doc);
  if (ring == "rational") return to_complex_series(io::series_from_json<Rational>(doc));
  throw HahnError(ErrorKind::ParseError, "expected a scalar series, got ring '" + ring + "'");
}

Json eval_json(const EvalResult& r) {
  return {{"value", {r.value.real(), r.value.imag()}},
          {"residual_bound", r.residual_bound},
          {"truncation_only", r.truncation_only}};
}

std::string usage_json(const std::string& message) { return Json{{"error", "Usage"}, {"message", message}}.dump(); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated Hahn series toolkit", "hahn"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::string in, in2, out_path, order;
  auto add_io = [&](CLI::App* sub, bool second) {
    sub->add_option("--in", in, "Input series JSON")->required();
    if (second) sub->add_option("--in2", in2, "Second input series JSON")->required();
    sub->add_option("--out", out_path, "Output path (default: stdout)");
  };

  auto* mul_cmd = app.add_subcommand("mul", "Product of two series");
  add_io(mul_cmd, true);

  auto* inv_cmd = app.add_subcommand("invert", "Neumann-series inverse");
  add_io(inv_cmd, false);
  inv_cmd->add_option("--order", order, "Validity order of the result, e.g. 3, 1/2:1 or 4,-1");
  int max_iter = 4096;
  inv_cmd->add_option("--max-iterations", max_iter, "Iteration cap")->capture_default_str();

  auto* comp_cmd = app.add_subcommand("compose", "Entire power series composed with a series");
  add_io(comp_cmd, false);
  std::string coeffs_text, named = "";
  int count = 32;
  bool polynomial = false;
  comp_cmd->add_option("--coeffs", coeffs_text, "Comma-separated power-series coefficients a_0,a_1,...");
  comp_cmd->add_option("--named", named, "Named coefficients: geometric or exp")
      ->check(CLI::IsMember({"geometric", "exp"}));
  comp_cmd->add_option("--count", count, "Number of named coefficients")->capture_default_str();
  comp_cmd->add_flag("--polynomial", polynomial, "Treat the coefficient list as a polynomial");

  auto* div_cmd = app.add_subcommand("divide", "Meromorphic quotient f / g");
  add_io(div_cmd, true);
  div_cmd->add_option("--order", order, "Validity order of the unit when both inputs are exact");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a series at cover points");
  add_io(eval_cmd, false);
  std::string points_text;
  double tail_M = -1, tail_q = 0.5;
  bool csv = false;
  eval_cmd->add_option("--points", points_text, "Points 'r,phi;r,phi;...'")->required();
  eval_cmd->add_option("--tail-M", tail_M, "Tail model constant M (omit for truncation only)");
  eval_cmd->add_option("--tail-q", tail_q, "Tail model ratio q")->capture_default_str();
  eval_cmd->add_flag("--csv", csv, "Emit CSV rows r,phi,re,im,residual_bound");

  auto* maj_cmd = app.add_subcommand("majorant", "Normal-convergence majorant on a sector disc");
  add_io(maj_cmd, false);
  double radius = 0.5, sigma = -1;
  int samples = 64;
  maj_cmd->add_option("--radius", radius, "Disc radius")->capture_default_str();
  maj_cmd->add_option("--sigma", sigma, "Sector half-angle (omit for the whole cover)");
  maj_cmd->add_option("--samples", samples, "Boundary samples for log factors")->capture_default_str();

  auto* ext_cmd = app.add_subcommand("extract", "Coefficient extraction by spiral averaging");
  add_io(ext_cmd, false);
  std::string alpha_text;
  double R = 0.5;
  int L = 256, nodes = 64;
  ext_cmd->add_option("--alpha", alpha_text, "Exponent to extract, e.g. 1/2 or 0:1")->required();
  ext_cmd->add_option("--R", R, "Contour radius")->capture_default_str();
  ext_cmd->add_option("--L", L, "Number of turns")->capture_default_str();
  ext_cmd->add_option("--nodes", nodes, "Nodes per turn")->capture_default_str();

  auto* fred_cmd = app.add_subcommand("fredholm", "Invert Id - F for a matrix series");
  fred_cmd->add_option("--in", in, "Matrix series JSON {dim, entries}")->required();
  fred_cmd->add_option("--out", out_path, "Output path (default: stdout)");
  fred_cmd->add_option("--points", points_text, "Residual check points 'r,phi;...'");
  int dim_cap = static_cast<int>(kDefaultDimensionCap);
  fred_cmd->add_option("--cap", dim_cap, "Dimension cap")->capture_default_str();

  auto* bes_cmd = app.add_subcommand("bessel", "Resolvent kernel expansion of the Bessel operator");
  std::string nu_text = "1/2";
  double x = 1, y = 2;
  int terms = 25;
  bool check_direct = false, bounds = false;
  std::string lambda_text, sweep_text;
  double bound_R = 1, c = 1, r0 = 0.5;
  bes_cmd->add_option("--nu", nu_text, "Order: rational, decimal, pi or sqrt(q)")->capture_default_str();
  bes_cmd->add_option("--x", x, "First point")->capture_default_str();
  bes_cmd->add_option("--y", y, "Second point")->capture_default_str();
  bes_cmd->add_option("--terms", terms, "Number of terms K")->capture_default_str();
  bes_cmd->add_flag("--check-direct", check_direct, "Compare with the direct Bessel/Hankel evaluation");
  bes_cmd->add_option("--lambda", lambda_text, "Points 'r,phi;...' for --check-direct");
  bes_cmd->add_flag("--bounds", bounds, "Report the coefficient bounds for every k < K");
  bes_cmd->add_option("--R", bound_R, "Cauchy radius for --bounds")->capture_default_str();
  bes_cmd->add_option("--c", c, "Lower cutoff c for --bounds")->capture_default_str();
  bes_cmd->add_option("--r0", r0, "r_0 for the f2 bound")->capture_default_str();
  bes_cmd->add_option("--sweep", sweep_text, "CSV sweep points 'r,phi;...'");
  bes_cmd->add_option("--out", out_path, "Output path (default: stdout)");

  auto* cone_cmd = app.add_subcommand("cone", "Mode-truncated cone kernel");
  std::string family = "sphere", orders_text;
  int sphere_n = 2, kmax = 8;
  std::int64_t qmax = 16;
  cone_cmd->add_option("--family", family, "sphere, s1, explicit or sqrt-integers")
      ->check(CLI::IsMember({"sphere", "s1", "explicit", "sqrt-integers"}))
      ->capture_default_str();
  cone_cmd->add_option("--n", sphere_n, "Sphere dimension")->capture_default_str();
  cone_cmd->add_option("--kmax", kmax, "Mode cutoff")->capture_default_str();
  cone_cmd->add_option("--qmax", qmax, "Largest q for sqrt-integers")->capture_default_str();
  cone_cmd->add_option("--orders", orders_text, "Explicit orders 'nu[:mult],...'");
  cone_cmd->add_option("--x", x, "First point")->capture_default_str();
  cone_cmd->add_option("--y", y, "Second point")->capture_default_str();
  cone_cmd->add_option("--terms", terms, "Number of terms K")->capture_default_str();
  bool modes = false;
  cone_cmd->add_flag("--modes", modes, "Include the per-mode expansions");
  cone_cmd->add_option("--out", out_path, "Output path (default: stdout)");

  auto* suit_cmd = app.add_subcommand("suitability", "kappa-suitability of an order family");
  double kappa = 1, bound = 1;
  suit_cmd->add_option("--family", family, "sphere, s1, explicit or sqrt-integers")
      ->check(CLI::IsMember({"sphere", "s1", "explicit", "sqrt-integers"}))
      ->capture_default_str();
  suit_cmd->add_option("--n", sphere_n, "Sphere dimension")->capture_default_str();
  suit_cmd->add_option("--kmax", kmax, "Mode cutoff")->capture_default_str();
  suit_cmd->add_option("--qmax", qmax, "Largest q for sqrt-integers")->capture_default_str();
  suit_cmd->add_option("--orders", orders_text, "Explicit orders 'nu[:mult],...'");
  suit_cmd->add_option("--kappa", kappa, "kappa > 0")->capture_default_str();
  suit_cmd->add_option("--bound", bound, "Bound on the suitability quantity")->capture_default_str();
  suit_cmd->add_option("--out", out_path, "Output path (default: stdout)");

  auto* hs_cmd = app.add_subcommand("hsbound", "Weighted Hilbert-Schmidt bound for a coefficient kernel");
  HsParams hs;
  std::string weight = "exponential";
  hs_cmd->add_option("--nu", nu_text, "Order")->capture_default_str();
  hs_cmd->add_option("--kappa", hs.kappa, "Weight exponent kappa")->capture_default_str();
  hs_cmd->add_option("--c", hs.c, "Cutoff c")->capture_default_str();
  hs_cmd->add_option("--k", hs.k, "Coefficient index k")->capture_default_str();
  hs_cmd->add_option("--R", hs.R, "Cauchy radius (default kappa/3 or c kappa/8)");
  hs_cmd->add_option("--part", hs.part, "Coefficient family j (1 or 2)")->capture_default_str();
  hs_cmd->add_option("--cutoff", hs.cutoff, "Integration cutoff L")->capture_default_str();
  hs_cmd->add_option("--weight", weight, "exponential or gaussian")
      ->check(CLI::IsMember({"exponential", "gaussian"}))
      ->capture_default_str();
  hs_cmd->add_option("--out", out_path, "Output path (default: stdout)");

  std::vector<std::string> argv_store;
  argv_store.push_back("hahn");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << usage_json(e.what()) << "\n";
    return 2;
  }

  auto build_family = [&]() -> OrderFamily {
    const int digits = generator_digits();
    if (family == "sphere") return {SphereSpectrum{sphere_n, kmax}};
    if (family == "s1") return {SphereSpectrum{1, kmax}};
    if (family == "sqrt-integers") return {SqrtIntegers{qmax}};
    ExplicitList list;
    for (const auto& item : split(orders_text, ',')) {
      const auto parts = split(item, ':');
      std::int64_t mult = 1;
      if (parts.size() == 2) mult = std::stoll(parts[1]);
      list.members.push_back({Order::parse(parts.at(0), digits), mult});
    }
    if (list.members.empty()) throw HahnError(ErrorKind::InvalidArgument, "--orders is empty");
    return {list};
  };

  try {
    if (*mul_cmd) {
      const Json a = read_json(in), b = read_json(in2);
      const std::string ring = io::ring_of(a);
      if (io::ring_of(b) != ring) throw HahnError(ErrorKind::GroupMismatch, "inputs use different rings");
      emit(out_path, dump(with_ring(ring, [&]<class C>() {
             return io::series_to_json(mul(io::series_from_json<C>(a), io::series_from_json<C>(b)));
           })),
           out);
    } else if (*inv_cmd) {
      const Json a = read_json(in);
      emit(out_path, dump(with_ring(io::ring_of(a), [&]<class C>() {
             const Series<C> f = io::series_from_json<C>(a);
             std::optional<Exponent> ord;
             if (!order.empty()) ord = parse_exponent(f.group(), order);
             return io::series_to_json(neumann_invert(f, ord, IterationOptions{max_iter}));
           })),
           out);
    } else if (*comp_cmd) {
      const Json a = read_json(in);
      if (coeffs_text.empty() == named.empty())
        throw HahnError(ErrorKind::InvalidArgument, "give exactly one of --coeffs and --named");
      emit(out_path, dump(with_ring<true>(
                         io::ring_of(a),
                         [&]<class C>() -> Json {
                           if constexpr (!RingTraits<C>::commutative) {
                             throw HahnError(ErrorKind::InvalidArgument, "composition needs a commutative ring");
                           } else {
                             std::vector<C> coeffs;
                             if (!named.empty()) {
                               C fact = C(1);
                               for (int k = 0; k < count; ++k) {
                                 if (k > 0 && named == "exp") fact = fact / C(k);
                                 coeffs.push_back(named == "exp" ? fact : C(1));
                               }
                             } else {
                               for (const auto& s : split(coeffs_text, ',')) {
                                 if constexpr (std::is_same_v<C, Rational>) coeffs.push_back(parse_rational(s));
                                 else coeffs.push_back(C(parse_double(s)));
                               }
                             }
                             ComposeOptions opts;
                             opts.polynomial = polynomial;
                             return io::series_to_json(compose_entire(coeffs, io::series_from_json<C>(a), opts));
                           }
                         })),
           out);
    } else if (*div_cmd) {
      const Json a = read_json(in), b = read_json(in2);
      const std::string ring = io::ring_of(a);
      if (io::ring_of(b) != ring) throw HahnError(ErrorKind::GroupMismatch, "inputs use different rings");
      emit(out_path, dump(with_ring<true>(
                         ring,
                         [&]<class C>() {
                           const Series<C> f = io::series_from_json<C>(a);
                           std::optional<Exponent> ord;
                           if (!order.empty()) ord = parse_exponent(f.group(), order);
                           return io::meromorphic_to_json(divide_scalar(f, io::series_from_json<C>(b), ord));
                         })),
           out);
    } else if (*eval_cmd) {
      const Json a = read_json(in);
      const std::vector<LogPoint> points = parse_points(points_text);
      std::optional<TailModel> tail;
      if (tail_M >= 0) tail = TailModel{tail_M, tail_q};
      if (a.contains("pivot")) {
        const Series<Complex> unit = complex_series(a.at("unit"));
        const Meromorphic<Complex> m{io::exponent_from_json(unit.group(), a.at("pivot")), unit};
        Json rows = Json::array();
        for (const auto& p : points) {
          Json row = eval_json(series_eval(m, p, tail));
          row["r"] = p.r;
          row["phi"] = p.phi;
          rows.push_back(std::move(row));
        }
        emit(out_path, dump(rows), out);
      } else {
        const Series<Complex> f = complex_series(a);
        if (csv) {
          std::ostringstream os;
          write_eval_csv(os, f, points, tail);
          emit(out_path, os.str(), out);
        } else {
          Json rows = Json::array();
          for (const auto& p : points) {
            Json row = eval_json(series_eval(f, p, tail));
            row["r"] = p.r;
            row["phi"] = p.phi;
            rows.push_back(std::move(row));
          }
          emit(out_path, dump(rows), out);
        }
      }
    } else if (*maj_cmd) {
      const Series<Complex> f = complex_series(read_json(in));
      SectorDisc d{radius, sigma >= 0 ? std::optional<double>(sigma) : std::nullopt};
      emit(out_path, dump({{"majorant", majorant(f, d, samples)}, {"radius", radius}, {"samples", samples}}), out);
    } else if (*ext_cmd) {
      const Series<Complex> f = complex_series(read_json(in));
      const Exponent alpha = parse_exponent(f.group(), alpha_text);
      auto fn = [&](const LogPoint& p) { return series_eval(f, p).value; };
      const Complex v = extract_coefficient(fn, alpha, R, L, nodes);
      emit(out_path,
           dump({{"alpha", io::exponent_to_json(alpha)},
                 {"value", {v.real(), v.imag()}},
                 {"R", R},
                 {"L", L},
                 {"nodes_per_turn", nodes}}),
           out);
    } else if (*fred_cmd) {
      const Json a = read_json(in);
      const Json first = a.at("entries").at(0).at(0);
      const std::vector<LogPoint> points = points_text.empty() ? std::vector<LogPoint>{} : parse_points(points_text);
      emit(out_path, dump(with_ring<true>(
                         io::ring_of(first),
                         [&]<class C>() -> Json {
                           const MatrixSeries<C> F = io::matrix_series_from_json<C>(a);
                           const auto result = resolve_identity_minus(F, static_cast<std::size_t>(dim_cap));
                           if (const auto* none = std::get_if<NowhereInvertible>(&result))
                             return {{"result", "nowhere_invertible"},
                                     {"valid_below", io::validity_to_json(none->validity)}};
                           const auto& G = std::get<MeromorphicMatrix<C>>(result);
                           Json doc = {{"result", "meromorphic"},
                                       {"denom", io::series_to_json(G.denom)},
                                       {"numer", io::matrix_series_to_json(G.numer)},
                                       {"pivot", io::exponent_to_json(*G.denom.valuation())}};
                           if (!points.empty()) {
                             Json pts = Json::array();
                             for (const auto& p : points) pts.push_back({p.r, p.phi});
                             doc["residual"] = {{"points", pts}, {"max_residual", verify_inverse(F, G, points)}};
                           }
                           return doc;
                         })),
           out);
    } else if (*bes_cmd) {
      const Order nu = Order::parse(nu_text, generator_digits());
      const KernelExpansion e = resolvent_kernel_series(nu, x, y, terms);
      if (!sweep_text.empty()) {
        std::ostringstream os;
        os << "lambda_r,lambda_phi,re,im,abs_diff\n" << std::setprecision(17);
        for (const auto& p : parse_points(sweep_text)) {
          const Complex s = series_eval(e.series, p).value;
          const Complex d = resolvent_kernel_direct(nu, p, x, y);
          os << p.r << ',' << p.phi << ',' << s.real() << ',' << s.imag() << ',' << std::abs(d - s) << '\n';
        }
        emit(out_path, os.str(), out);
        return 0;
      }
      Json doc = {{"expansion", io::kernel_expansion_to_json(e)}};
      if (check_direct) {
        if (lambda_text.empty()) throw HahnError(ErrorKind::InvalidArgument, "--check-direct needs --lambda");
        Json checks = Json::array();
        double worst = 0;
        for (const auto& p : parse_points(lambda_text)) {
          const Complex s = series_eval(e.series, p).value;
          const Complex d = resolvent_kernel_direct(nu, p, x, y);
          const double rel = std::abs(s - d) / std::abs(d);
          worst = std::max(worst, rel);
          checks.push_back({{"lambda", {p.r, p.phi}},
                            {"series", {s.real(), s.imag()}},
                            {"direct", {d.real(), d.imag()}},
                            {"relative_error", rel}});
        }
        doc["check_direct"] = {{"points", checks}, {"max_relative_error", worst}};
      }
      if (bounds) {
        Json reps = Json::array();
        const std::vector<BoundPart> parts = nu.is_integer() ? std::vector<BoundPart>{BoundPart::B1, BoundPart::B2}
                                                             : std::vector<BoundPart>{BoundPart::A1, BoundPart::A2};
        bool all = true;
        for (int k = 0; k < terms; ++k)
          for (BoundPart part : parts) {
            const BoundReport r = coeff_bound_check(nu, x, y, k, bound_R, part, {c, r0});
            all = all && r.pass;
            reps.push_back(io::bound_report_to_json(r));
          }
        doc["bounds"] = {{"reports", reps}, {"all_pass", all}};
      }
      emit(out_path, dump(doc), out);
    } else if (*cone_cmd) {
      const ConeKernel k = cone_kernel_modes(build_family(), x, y, terms);
      Json doc = {{"support", io::support_report_to_json(k.report)}, {"mode_count", k.modes.size()}};
      Json list = Json::array();
      for (const auto& m : k.modes) {
        Json entry = {{"nu", m.nu.to_string()}, {"multiplicity", m.multiplicity},
                      {"branch", to_string(m.expansion.branch)}};
        if (modes) entry["expansion"] = io::kernel_expansion_to_json(m.expansion);
        list.push_back(std::move(entry));
      }
      doc["modes"] = std::move(list);
      if (k.combined) doc["combined"] = io::series_to_json(*k.combined);
      emit(out_path, dump(doc), out);
    } else if (*suit_cmd) {
      const SuitabilityReport r = kappa_suitable(build_family(), kappa, bound);
      emit(out_path, dump(io::suitability_report_to_json(r)), out);
    } else if (*hs_cmd) {
      const Order nu = Order::parse(nu_text, generator_digits());
      hs.weight = weight == "gaussian" ? HsWeight::Gaussian : HsWeight::Exponential;
      if (hs_cmd->count("--R") == 0) hs.R = hs.weight == HsWeight::Gaussian ? hs.c * hs.kappa / 8 : hs.kappa / 3;
      if (hs.weight == HsWeight::Gaussian && hs_cmd->count("--cutoff") == 0) hs.cutoff = hs.c + 8;
      Json doc = io::hs_report_to_json(hs_bound_check(nu, hs));
      doc["weight"] = weight;
      doc["R"] = hs.R;
      doc["k"] = hs.k;
      doc["part"] = hs.part;
      emit(out_path, dump(doc), out);
    }
  } catch (const HahnError& e) {
    err << io::error_to_json(e).dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << Json{{"error", "InvalidArgument"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace hahn::cli
