// krallm1: generation, verification sweeps and table export for the
// Krall-Jacobi families.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "krallm1/cli.hpp"

int main(int argc, char** argv) {
  namespace kc = krallm1::cli;
  CLI::App app{"Krall-Jacobi polynomial generator and verifier"};
  app.set_version_flag("--version", "krallm1 0.1.0");

  kc::RawArgs raw;
  app.add_option("command", raw.command,
                 "gen | verify-q | verify-m1 | moments | gram | limit-scan | matrix-verify")
      ->required();
  app.add_option("--beta", raw.beta, "beta as p/q");
  app.add_option("--M", raw.M, "mass parameter M as p/q");
  app.add_option("--q", raw.q, "q as p/q (q-side commands)");
  app.add_option("--b", raw.b, "b as p/q (q-side commands)");
  app.add_option("--j", raw.j, "a = q^j (q-side commands, default 2)");
  app.add_option("--n-max", raw.n_max, "largest degree");
  app.add_option("--s-max", raw.s_max, "largest shift for limit-scan (default 3)");
  app.add_option("--precision", raw.precision, "significant digits, at least 30");
  app.add_option("--tol", raw.tol, "tolerance as a decimal string");
  app.add_option("--eps-list", raw.eps_list, "comma-separated decreasing epsilons");
  app.add_option("--out", raw.out, "output file (default stdout)");
  app.add_option("--format", raw.format, "json | csv");
  app.add_option("--family", raw.family, "gen: m1 (default) or q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kc::kExitUsage;
  }

  kc::RunConfig config;
  try {
    config = kc::make_config(raw, std::getenv("KRALLM1_PRECISION"));
  } catch (const krallm1::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kc::kExitUsage;
  }
  return kc::run(config, std::cout, std::cerr);
}
