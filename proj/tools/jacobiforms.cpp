#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "jacobi/deformed_eisenstein.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/jacobi_operators.hpp"
#include "jacobi/json_io.hpp"
#include "jacobi/suites.hpp"

using namespace jacobi;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string qmax;
  std::optional<long> wmax;
  std::optional<long> window;
  std::string format = "text";
};

using Value = std::variant<QExp, PQSeries, WLaurent>;

SuiteConfig config_from(const Options& o, std::optional<long> nmax = std::nullopt) {
  try {
    return make_config(Rational::parse(o.qmax), o.wmax, o.window, nmax);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

long parse_index(const std::string& s) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("bad number '" + s + "'");
}

std::optional<JacobiForm> jacobi_form(const std::string& name, GridExp t) {
  if (name == "phi-2-1") return phi_form(WeakKind::minus2, t);
  if (name == "phi01") return phi_form(WeakKind::zero, t);
  if (name == "E21") return e21(t);
  if (name == "E41") return eisenstein_jacobi(4, t);
  if (name == "E61") return eisenstein_jacobi(6, t);
  return std::nullopt;
}

Value series_by_name(const std::string& name, const SuiteConfig& c) {
  const GridExp t = c.qtrunc;
  const long w = c.wtrunc;
  std::smatch m;
  if (auto f = jacobi_form(name, t)) return f->fourier;
  if (name == "delta") return delta(t);
  if (name == "wp") return weierstrass_p(w, t).series;
  if (std::regex_match(name, m, std::regex(R"(E(\d+))"))) {
    const long k = parse_index(m[1]);
    if (k < 2 || k % 2 != 0) throw UsageError("E_k needs an even weight k >= 2");
    return eisenstein(k, t);
  }
  if (std::regex_match(name, m, std::regex(R"(theta([1-4]))"))) return theta(ThetaIndex(std::stoi(m[1])), t);
  if (std::regex_match(name, m, std::regex(R"(J([2-4]),(\d+))")))
    return deformed_eisenstein_theta_variant(std::stoi(m[1]), parse_index(m[2]), w, t);
  if (std::regex_match(name, m, std::regex(R"(J(\d+))"))) return deformed_eisenstein_w(parse_index(m[1]), w, t);
  if (std::regex_match(name, m, std::regex(R"(K(\d+))"))) {
    const long n = parse_index(m[1]);
    if (n < 2) throw UsageError("K_n needs n >= 2");
    return completion_K(n, w, t).series;
  }
  throw UsageError("unknown series '" + name + "'");
}

void print_value(const std::string& name, const Value& v, const Options& o) {
  if (o.format == "json") {
    json out{{"name", name}};
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          out["layer"] = std::is_same_v<T, QExp> ? "q" : std::is_same_v<T, PQSeries> ? "fourier" : "w";
          out["value"] = to_json(x);
        },
        v);
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << name << "\n";
  if (const auto* q = std::get_if<QExp>(&v)) std::cout << q->str() << "\n";
  if (const auto* p = std::get_if<PQSeries>(&v)) std::cout << p->table();
  if (const auto* w = std::get_if<WLaurent>(&v)) std::cout << w->str() << "\n";
}

int cmd_series(const std::string& name, const Options& o) {
  const SuiteConfig c = config_from(o);
  print_value(name, series_by_name(name, c), o);
  return 0;
}

int cmd_op(const std::string& op, const std::string& input, const Options& o) {
  const SuiteConfig c = config_from(o);
  const auto f = jacobi_form(input, c.qtrunc);
  if (!f) throw UsageError("op needs one of phi-2-1, phi01, E21, E41, E61 as input");
  JacobiForm g;
  if (op == "heat") {
    g = heat_operator(*f);
  } else if (op == "ttau") {
    g = t_tau_operator(*f);
  } else if (input == "E21") {
    g = jacobi_serre_explicit(*f, f->weight);
  } else {
    g = jacobi_serre(*f);
  }
  if (o.format == "json") {
    std::cout << json{{"op", op}, {"input", input}, {"weight", g.weight}, {"index", g.index},
                      {"value", to_json(g.fourier)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << op << " " << input << ": weight " << g.weight << ", index " << g.index << "\n"
              << g.fourier.table();
  }
  return 0;
}

int cmd_table(long nmax, const Options& o) {
  const SuiteConfig c = config_from(o);
  if (nmax < 0 || Rational(nmax * QExp::kGrid) >= Rational(c.qtrunc))
    throw UsageError("table needs 0 <= nmax < qmax");
  const long rmax = 4;
  const auto rows = fourier_table(e21((nmax + 1) * QExp::kGrid).fourier, nmax, rmax);
  if (o.format == "json") {
    json out{{"table", "e21"}, {"r", json::array()}, {"rows", json::array()}};
    for (long r = -rmax; r <= rmax; ++r) out["r"].push_back(r);
    for (long n = 0; n <= nmax; ++n) {
      json row = json::array();
      for (const Rational& x : rows[n]) row.push_back(x.str());
      out["rows"].push_back({{"n", n}, {"c", row}});
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "n\\r";
  for (long r = -rmax; r <= rmax; ++r) std::cout << std::setw(8) << r;
  std::cout << "\n";
  for (long n = 0; n <= nmax; ++n) {
    std::cout << std::setw(3) << n;
    for (const Rational& x : rows[n]) std::cout << std::setw(8) << x.str();
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, std::optional<long> nmax, const Options& o) {
  const SuiteConfig c = config_from(o, nmax);
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
  const Report r = run_suite(suite, c);
  if (o.format == "json")
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << r.to_text();
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-expansions of Jacobi forms, deformed Eisenstein series and their identities"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  const char* env = std::getenv("JACOBIFORMS_QMAX_DEFAULT");
  o.qmax = env && *env ? env : "10";
  app.add_option("--qmax", o.qmax, "q-truncation (rational, on the 1/24 grid)")->capture_default_str();
  app.add_option("--wmax", o.wmax, "w-truncation (default 2 floor(sqrt(4 qmax + 1)) + 4)");
  app.add_option("--window", o.window, "p-window for windowed expansions (default qmax)");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::string name;
  auto* series = app.add_subcommand("series", "print a named expansion");
  series->add_option("name", name, "E<2k>, delta, theta1..4, phi-2-1, phi01, J<n>, K<n>, wp, J<i>,<n>, E21, E41, E61")
      ->required();

  long n = 1;
  long i = 2;
  auto* jn = app.add_subcommand("jn", "deformed Eisenstein series J_n in the w-layer");
  jn->add_option("--n", n, "n >= 0")->required();
  auto* kn = app.add_subcommand("kn", "completion K_n in the w-layer");
  kn->add_option("--n", n, "n >= 2")->required();
  auto* wp = app.add_subcommand("wp", "Weierstrass wp in the w-layer");
  auto* jin = app.add_subcommand("jin", "theta variant J_{i,n} in the w-layer");
  jin->add_option("--i", i, "2, 3 or 4")->required()->check(CLI::Range(2, 4));
  jin->add_option("--n", n, "n >= 1")->required();

  std::string op;
  std::string input;
  auto* opc = app.add_subcommand("op", "apply a degree-2 operator to an index-1 form");
  opc->add_option("operator", op, "heat, ttau or serrej")->required()->check(CLI::IsMember({"heat", "ttau", "serrej"}));
  opc->add_option("--input", input, "phi-2-1, phi01, E21, E41 or E61")->required();

  std::string table_name;
  long table_nmax = 4;
  auto* table = app.add_subcommand("table", "Fourier coefficient table c(n, r), r = -4 .. 4");
  table->add_option("name", table_name, "e21")->required()->check(CLI::IsMember({"e21"}));
  table->add_option("--nmax", table_nmax, "last row")->capture_default_str();

  std::string suite;
  std::optional<long> verify_nmax;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "relations, kstructure, ramanujan, theta, shifts, corollary, elliptic or all")
      ->required();
  verify->add_option("--nmax", verify_nmax, "largest n in the J_n checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*series) return cmd_series(name, o);
    if (*jn) return cmd_series("J" + std::to_string(n), o);
    if (*kn) return cmd_series("K" + std::to_string(n), o);
    if (*wp) return cmd_series("wp", o);
    if (*jin) return cmd_series("J" + std::to_string(i) + "," + std::to_string(n), o);
    if (*opc) return cmd_op(op, input, o);
    if (*table) return cmd_table(table_nmax, o);
    if (*verify) return cmd_verify(suite, verify_nmax, o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
