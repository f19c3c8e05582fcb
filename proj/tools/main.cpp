#include "CLI11.hpp"

#include <iostream>

#include "blaschke/cli.hpp"
#include "blaschke/errors.hpp"

namespace {

using blaschke::cli::Command;
using blaschke::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--lambda", c.lambda, "lambda in (0,1) as p/q or decimal");
  sub->add_option("--out", c.output_dir, "output directory (default: CSV to stdout)");
  sub->add_flag("--svg", c.emit_svg, "also write an SVG plot (needs --out)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Taylor coefficients and lp norms of powers of a Blaschke factor"};
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags");
  app.require_subcommand(1);

  RunConfig c;
  auto* coeffs = app.add_subcommand("coeffs", "coefficient table k,value,abs_error,engine");
  add_common(coeffs, c);
  coeffs->add_option("--n", c.n)->required();
  coeffs->add_option("--kmax", c.kmax);
  coeffs->add_option("--k", c.k, "single coefficient through the precision-controlled route");
  coeffs->add_option("--engine", c.engine, "exact, fft or oscillatory");

  auto* norms = app.add_subcommand("norms", "lp norms with per-region masses");
  add_common(norms, c);
  norms->add_option("--n", c.n)->required();
  norms->add_option("--p", c.p_list, "exponents, e.g. --p 1 2 inf")->delimiter(',');
  norms->add_option("--kmax", c.kmax);
  norms->add_option("--alpha", c.alpha, "region split (default alpha0/2)");
  norms->add_option("--engine", c.engine, "exact, fft or oscillatory");

  auto* regions = app.add_subcommand("regions", "region boundaries");
  add_common(regions, c);
  regions->add_option("--n", c.n)->required();
  regions->add_option("--alpha", c.alpha, "region split (default alpha0/2)");

  auto* predict = app.add_subcommand("predict", "Airy prediction against exact coefficients");
  add_common(predict, c);
  predict->add_option("--n", c.n)->required();
  predict->add_option("--k-first", c.k_first);
  predict->add_option("--k-last", c.k_last);

  auto* scaling = app.add_subcommand("scaling", "norm scaling fit over a geometric n grid");
  add_common(scaling, c);
  scaling->add_option("--grid", c.grid, "a:b, doubling from a to b")->required();
  scaling->add_option("--p", c.p_list, "exponents")->delimiter(',')->required();

  auto* weyl = app.add_subcommand("weyl", "Weyl sums over the lower Airy window");
  add_common(weyl, c);
  weyl->add_option("--n", c.n)->required();
  weyl->add_option("--j", c.j, "frequency (nonzero)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return blaschke::cli::kExitConfig;
  }

  const std::pair<CLI::App*, Command> commands[] = {
      {coeffs, Command::coeffs}, {norms, Command::norms},     {regions, Command::regions},
      {predict, Command::predict}, {scaling, Command::scaling}, {weyl, Command::weyl}};
  for (const auto& [sub, cmd] : commands)
    if (sub->parsed()) c.command = cmd;

  if (c.emit_svg && !c.output_dir) {
    std::cerr << "config error: --svg needs --out\n";
    return blaschke::cli::kExitConfig;
  }
  try {
    c.max_bits = blaschke::cli::max_bits_from_env();
  } catch (const blaschke::Error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return blaschke::cli::kExitConfig;
  }
  return blaschke::cli::run(c, std::cout, std::cerr);
}
