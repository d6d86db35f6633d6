// qortho: coefficient tables, lattices with weights, and verification suites
// for the q-para-Racah and q-para-Krawtchouk families.
//
// Exit codes: 0 ok, 2 bad arguments, 3 degenerate configuration,
// 4 verification failure.

#include "qortho/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <locale>
#include <optional>
#include <sstream>

namespace {

using namespace qortho;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitArgs = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitVerify = 4;

struct Options {
  std::string kind = "qpr";
  std::string a = "0.9", c = "0.7", Delta = "1.25", alpha = "0.5", q = "0.5";
  int N = 5;
  std::string format = "csv";
  std::optional<std::string> precision;
  std::uint64_t seed = 0;
  std::string a_exponent = "0.6";
  std::string suite = "all";
};

void add_family_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--kind", o.kind, "Family: qpr or qpk")->check(CLI::IsMember({"qpr", "qpk"}));
  cmd->add_option("--a", o.a, "q-para-Racah parameter a");
  cmd->add_option("--c", o.c, "q-para-Racah parameter c");
  cmd->add_option("--Delta", o.Delta, "q-para-Krawtchouk ratio Delta = a/c");
  cmd->add_option("--alpha", o.alpha, "deformation parameter in (0,1)");
  cmd->add_option("--q", o.q, "nome in (0,1)");
  cmd->add_option("--N", o.N, "largest degree");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--precision", o.precision, "double, extended or extended:P");
  cmd->add_option("--seed", o.seed, "seed for random evaluation points");
}

/// Flag < QORTHO_PRECISION; with neither, promote outside the double-safe box.
Precision resolve_precision(const Options& o) {
  if (const char* env = std::getenv("QORTHO_PRECISION"); env && *env)
    return Precision::parse(env);
  if (o.precision)
    return Precision::parse(*o.precision);
  const double q = std::stod(o.q);
  bool inside = o.N <= 9 && q >= 0.3 && q <= 0.8;
  if (o.kind == "qpr") {
    const double a = std::stod(o.a), c = std::stod(o.c);
    inside = inside && a >= 0.2 && a <= 0.95 && c >= 0.2 && c <= 0.95;
  }
  if (inside)
    return {};
  std::cerr << "note: parameters outside the double-precision box, using extended:"
            << kDefaultExtendedDigits << "\n";
  return {PrecisionMode::Extended, kDefaultExtendedDigits};
}

template <class T> std::string fmt(const T& v, unsigned digits) {
  if constexpr (std::is_same_v<T, double>) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(static_cast<int>(digits));
    os << v;
    return os.str();
  } else {
    return v.str(digits);
  }
}

template <class T> Json json_number(const T& v, unsigned digits) {
  if constexpr (std::is_same_v<T, double>)
    return v;
  else
    return fmt(v, digits); // full precision survives as a string
}

struct Run {
  Options opt;
  Precision prec;

  unsigned digits() const { return prec.mode == PrecisionMode::Double ? 17 : prec.digits; }

  template <class T> verify::Spec<T> spec() const {
    verify::Spec<T> s;
    s.kind = opt.kind == "qpr" ? verify::Kind::QPR : verify::Kind::QPK;
    s.a = parse_real<T>(opt.a);
    s.c = parse_real<T>(opt.c);
    s.Delta = parse_real<T>(opt.Delta);
    s.alpha = parse_real<T>(opt.alpha);
    s.q = parse_real<T>(opt.q);
    s.N = opt.N;
    s.a_exponent = parse_real<T>(opt.a_exponent);
    s.seed = opt.seed;
    return s;
  }

  Json header(const char* command) const {
    Json j;
    j["schema_version"] = 1;
    j["command"] = command;
    j["kind"] = opt.kind;
    j["precision"] = prec.to_string();
    Json p;
    if (opt.kind == "qpr") {
      p["a"] = opt.a;
      p["c"] = opt.c;
    } else {
      p["Delta"] = opt.Delta;
    }
    p["alpha"] = opt.alpha;
    p["q"] = opt.q;
    p["N"] = opt.N;
    j["params"] = p;
    return j;
  }

  template <class T> int coeffs() const {
    const auto s = spec<T>();
    TridiagonalSystem<T> sys;
    if (s.kind == verify::Kind::QPR) {
      const auto f = s.qpr_family();
      sys = qpr::tridiagonal(f);
      const auto pos = qpr::positivity_check(f);
      if (!pos.ok())
        std::cerr << "warning: outside the positivity region ("
                  << (pos.violated.empty() ? "u_" + std::to_string(pos.first_nonpositive) + " <= 0"
                                           : "violated " + pos.violated)
                  << ")\n";
    } else {
      sys = qpk::tridiagonal(s.qpk_family());
    }
    if (opt.format == "csv") {
      std::cout << "n,b,u\n";
      for (int n = 0; n <= s.N; ++n)
        std::cout << n << ',' << fmt(sys.b[n], digits()) << ',' << fmt(sys.u[n], digits()) << '\n';
      return kExitOk;
    }
    Json j = header("coeffs");
    Json rows = Json::array();
    for (int n = 0; n <= s.N; ++n)
      rows.push_back({{"n", n}, {"b", json_number(sys.b[n], digits())},
                      {"u", json_number(sys.u[n], digits())}});
    j["rows"] = rows;
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }

  template <class T> int lattice() const {
    const auto s = spec<T>();
    LatticeWeights<T> lw;
    TridiagonalSystem<T> sys;
    if (s.kind == verify::Kind::QPR) {
      lw = qpr::weights(s.qpr_family());
      sys = qpr::tridiagonal(s.qpr_family());
    } else {
      lw = qpk::weights(s.qpk_family());
      sys = qpk::tridiagonal(s.qpk_family());
    }
    if (lw.signed_measure)
      std::cerr << "warning: signed measure (some u_n or w_s are not positive)\n";
    const T gram = verify::detail::max_gram_error(sys, lw);
    const char* col = s.kind == verify::Kind::QPR ? "x" : "y";
    if (opt.format == "csv") {
      std::cout << "s," << col << ",w\n";
      for (std::size_t i = 0; i < lw.x.size(); ++i)
        std::cout << i << ',' << fmt(lw.x[i], digits()) << ',' << fmt(lw.w[i], digits()) << '\n';
      std::cout << "# sum_even," << fmt(lw.sum_even(), digits()) << '\n';
      std::cout << "# sum_odd," << fmt(lw.sum_odd(), digits()) << '\n';
      std::cout << "# gram_max_error," << fmt(gram, digits()) << '\n';
      return kExitOk;
    }
    Json j = header("lattice");
    Json rows = Json::array();
    for (std::size_t i = 0; i < lw.x.size(); ++i)
      rows.push_back({{"s", i}, {col, json_number(lw.x[i], digits())},
                      {"w", json_number(lw.w[i], digits())}});
    j["rows"] = rows;
    j["sum_even"] = json_number(lw.sum_even(), digits());
    j["sum_odd"] = json_number(lw.sum_odd(), digits());
    j["gram_max_error"] = json_number(gram, digits());
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }

  template <class T> int run_verify() const {
    const auto checks = verify::run_suite(opt.suite, spec<T>());
    bool ok = true;
    for (const auto& c : checks)
      ok = ok && c.ok();
    if (opt.format == "csv") {
      std::cout << "suite,check,residual,tolerance,status\n";
      for (const auto& c : checks)
        std::cout << c.suite << ",\"" << c.name << "\"," << fmt(c.residual, 17) << ','
                  << fmt(c.tolerance, 6) << ',' << verify::to_string(c.status) << '\n';
    } else {
      Json j = header("verify");
      j["suite"] = opt.suite;
      Json arr = Json::array();
      for (const auto& c : checks)
        arr.push_back({{"suite", c.suite}, {"check", c.name}, {"residual", c.residual},
                       {"tolerance", c.tolerance}, {"status", verify::to_string(c.status)}});
      j["checks"] = arr;
      j["passed"] = ok;
      std::cout << j.dump(2) << '\n';
    }
    if (!ok)
      std::cerr << "verification failed\n";
    return ok ? kExitOk : kExitVerify;
  }

  template <class T> int dispatch(const std::string& command) const {
    if (command == "coeffs")
      return coeffs<T>();
    if (command == "lattice")
      return lattice<T>();
    return run_verify<T>();
  }
};

} // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"q-para-Racah and q-para-Krawtchouk tables and checks"};
  app.require_subcommand(1);
  auto* coeffs = app.add_subcommand("coeffs", "recurrence coefficients n,b,u");
  auto* lattice = app.add_subcommand("lattice", "lattice points and weights");
  lattice->alias("weights");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  for (auto* cmd : {coeffs, lattice, verify})
    add_family_options(cmd, opt);
  verify->add_option("--suite", opt.suite, "orthogonality, bispectral, persymmetry, explicit, "
                                           "isospectral, qracah, dualhahn, qpk-limit or all");
  verify->add_option("--a-exponent", opt.a_exponent, "dual-Hahn limit: a = q^{a_exponent}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitArgs;
  }

  std::string command = coeffs->parsed() ? "coeffs" : lattice->parsed() ? "lattice" : "verify";
  if (command == "verify" && !verify::known_suite(opt.suite)) {
    std::cerr << "error: unknown suite '" << opt.suite << "'\n";
    return kExitArgs;
  }

  try {
    Run run{opt, resolve_precision(opt)};
    if (run.prec.mode == PrecisionMode::Double)
      return run.dispatch<double>(command);
    set_extended_digits(run.prec.digits);
    return run.dispatch<Extended>(command);
  } catch (const DegenerateError& e) {
    std::cerr << "error: degenerate configuration: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitArgs;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: malformed number (" << e.what() << ")\n";
    return kExitArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerify;
  }
}
