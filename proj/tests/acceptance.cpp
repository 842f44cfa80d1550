// Acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance <path to the jacobiforms executable>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "negative_controls.hpp"

using namespace jacobi;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

struct Captured {
  int status = -1;
  std::string out;
  double seconds = 0;
};

Captured run_command(const std::string& cmd) {
  Captured c;
  const auto t0 = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

void require_checks(const Report& r, const std::vector<std::string>& names, Outcome& o) {
  for (const std::string& n : names) {
    const CheckResult* c = r.find(n);
    if (!c)
      o.fail("missing check '" + n + "'");
    else if (!c->passed)
      o.fail(n + " failed at " + c->first_failure->str());
  }
}

void require_all(const Report& r, Outcome& o) {
  for (const CheckResult& c : r.checks())
    if (!c.passed) o.fail(c.check + " failed at " + (c.first_failure ? c.first_failure->str() : ""));
}

Outcome criterion1(const std::string& cli) {
  const long expect[5][9] = {{0, 0, 0, 0, 1, 0, 0, 0, 0},
                             {0, 0, 1, -28, 30, -28, 1, 0, 0},
                             {0, 0, 30, -264, 396, -264, 30, 0, 0},
                             {0, -28, 396, -1620, 2408, -1620, 396, -28, 0},
                             {1, -264, 2408, -7944, 11430, -7944, 2408, -264, 1}};
  Outcome o;
  const Captured c = run_command(cli + " table e21 --nmax 4");
  if (c.status != 0) {
    o.fail("exit status " + std::to_string(c.status));
    return o;
  }
  std::istringstream in(c.out);
  std::string header;
  std::getline(in, header);
  long entries = 0;
  for (long n = 0; n <= 4; ++n) {
    long row = -1;
    in >> row;
    if (row != n) o.fail("row " + std::to_string(n) + " missing");
    for (long r = 0; r < 9; ++r) {
      std::string cell;
      in >> cell;
      if (cell != std::to_string(expect[n][r]))
        o.fail("c(" + std::to_string(n) + "," + std::to_string(r - 4) + ") = " + cell);
      else
        ++entries;
    }
  }
  if (c.seconds >= 5) o.fail("took " + std::to_string(c.seconds) + " s");
  if (o.ok) o.note = std::to_string(entries) + " entries in " + std::to_string(c.seconds) + " s";
  return o;
}

Outcome criterion2(const Report& ram) {
  Outcome o;
  require_checks(ram,
                 {"dJ E_{2,1} + E_2 E_{2,1} / 12 + E_4' phi_{-2,1} / 16 = -E_{4,1} / 12", "dJ E_{4,1} = -E_{6,1} / 3",
                  "dJ E_{6,1} = -E_4 E_{4,1} / 2", "dS E_2 + E_2^2 / 12 = -E_4 / 12", "dS E_4 = -E_6 / 3",
                  "dS E_6 = -E_4^2 / 2", "E_{2,1} equation at z = 0", "E_{4,1} equation at z = 0",
                  "E_{6,1} equation at z = 0"},
                 o);
  return o;
}

Outcome criterion3(const Report& ram) {
  Outcome o;
  std::vector<std::string> names{"dJ commutes with z = 0 on E_{4,1}", "dJ commutes with z = 0 on E_{6,1}"};
  for (const char* f : {"phi_{-2,1}", "phi_{0,1}", "E_{4,1}", "E_{6,1}"})
    names.push_back(std::string("dJ ") + f + " explicit = (T_tau - D_H) / (1 - 4m)");
  require_checks(ram, names, o);
  return o;
}

Outcome criterion4() {
  Outcome o;
  const Report r = run_suite("kstructure", make_config(Rational(10)));
  std::vector<std::string> names;
  for (long n = 2; n <= 6; ++n)
    for (const char* s : {" leading coefficient", " has no residue", " vanishes below its gap",
                          " Laurent coefficients are modular"})
      names.push_back("K_" + std::to_string(n) + s);
  require_checks(r, names, o);
  require_all(r, o);
  return o;
}

Outcome criterion5() {
  Outcome o;
  const Report r = run_suite("relations", make_config(Rational(10), 12, std::nullopt, 8));
  std::vector<std::string> names{"J_2^. = J_3 - J_1 J_2 + E_2 J_1 / 6",
                                 "J_3^. = J_4 - J_3 J_1 + E_2 J_2 / 4 - E_4 / 120", "K_2 K_2 = -K_4 / 3 + E_4 / 60",
                                 "K_2 = -wp"};
  for (long k = 1; k <= 8; ++k) names.push_back("derivative relation k=" + std::to_string(k));
  require_checks(r, names, o);
  require_all(r, o);
  return o;
}

Outcome criterion6() {
  Outcome o;
  const SuiteConfig c = make_config(Rational(10));
  const Report th = run_suite("theta", c);
  std::vector<std::string> names;
  for (long n = 0; n <= 8; ++n) names.push_back("F_" + std::to_string(n) + " = J_" + std::to_string(n));
  for (int i = 2; i <= 4; ++i)
    for (long n = 1; n <= 6; ++n) {
      const std::string j = "J_{" + std::to_string(i) + "," + std::to_string(n) + "}";
      names.push_back("F_{" + std::to_string(i) + "," + std::to_string(n) + "} = " + j);
      names.push_back(j + " closed form matches its definition");
    }
  for (const char* s : {"even ratios at 0 = odd derivatives / theta_1^.(0)", "Eisenstein series from h",
                        "h_tilde annihilates the odd derivatives", "h by recursion"})
    names.push_back(s);
  require_checks(th, names, o);
  require_all(th, o);
  require_checks(run_suite("corollary", c), {"fourth-order theta_1 relation"}, o);
  return o;
}

Outcome criterion7() {
  Outcome o;
  const SuiteConfig c = make_config(Rational(10));
  const Report el = run_suite("elliptic", c);
  std::vector<std::string> names{"theta_1 quasi-periodicity"};
  for (const char* f : {"phi_{-2,1}", "phi_{0,1}", "E_{4,1}", "E_{6,1}", "E_{2,1}"})
    names.push_back(std::string(f) + " elliptic law");
  require_checks(el, names, o);
  require_checks(run_suite("relations", c), {"J_2(z + tau) expansion", "J_3(z + tau) expansion"}, o);
  return o;
}

Outcome criterion8() {
  Outcome o;
  const SuiteConfig c = make_config(Rational(4));
  std::size_t n = 0;
  for (const auto& nc : testing::negative_controls()) {
    const std::string why = testing::evaluate(nc, c);
    if (!why.empty()) o.fail(nc.suite + ": " + why);
    ++n;
  }
  if (o.ok) o.note = std::to_string(n) + " perturbed verifiers located their perturbation";
  return o;
}

Outcome criterion9(const std::string& cli) {
  Outcome o;
  const Captured c = run_command(cli + " verify all --qmax 10");
  if (c.status != 0) o.fail("exit status " + std::to_string(c.status));
  if (c.seconds >= 60) o.fail("took " + std::to_string(c.seconds) + " s");
  if (o.ok) o.note = std::to_string(c.seconds) + " s";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <jacobiforms executable>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const Report ram = run_suite("ramanujan", make_config(Rational(8)));
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"E_{2,1} table", [&] { return criterion1(cli); }},
      {"Ramanujan equations", [&] { return criterion2(ram); }},
      {"Jacobi-Serre consistency", [&] { return criterion3(ram); }},
      {"K_n structure", criterion4},
      {"relation suite", criterion5},
      {"theta suite", criterion6},
      {"transformation laws", criterion7},
      {"negative controls", criterion8},
      {"performance", [&] { return criterion9(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
    std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first;
    if (!o.note.empty()) std::cout << " (" << o.note << ")";
    std::cout << "\n";
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
