#include <iostream>

#include "CLI11.hpp"
#include "cubicff/cfftool.hpp"

int main(int argc, char** argv) {
  using namespace cubicff;
  CLI::App app{"Exact arithmetic for cubic function fields over F_q(x)", "cfftool"};
  CliOptions o;
  std::string command;
  bool json = true;
  app.add_option("command", command, "Subcommand")->required()->check(CLI::IsMember(cli_commands()));
  app.add_option("--q", o.q, "Field size q = p^n");
  app.add_option("--p", o.p, "Characteristic");
  app.add_option("--n", o.n, "Extension degree over F_p");
  app.add_option("--modulus", o.modulus, "Defining polynomial in t");
  app.add_option("--e", o.e, "Coefficient of X^2");
  app.add_option("--f", o.f, "Coefficient of X");
  app.add_option("--g", o.g, "Constant coefficient");
  app.add_option("--a", o.a, "Canonical parameter");
  app.add_option("--family", o.family, "Family of --a: standard, kummer or as")
      ->check(CLI::IsMember({"standard", "kummer", "as"}));
  app.add_option("--A", o.A, "Norm-form polynomial A");
  app.add_option("--B", o.B, "Norm-form polynomial B");
  app.add_option("--a1", o.a1, "First parameter for equiv");
  app.add_option("--a2", o.a2, "Second parameter for equiv");
  app.add_option("--place", o.places, "Place: monic irreducible polynomial or inf (repeatable)");
  app.add_flag("--json", json, "Compact JSON output (default)");
  app.add_flag("--pretty", o.pretty, "Indented JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_json(command, ErrorKind::ParseError, e.what()).dump() << '\n';
    return 2;
  }
  try {
    return execute(command, o, std::cout);
  } catch (const std::exception& e) {
    std::cout << error_json(command, ErrorKind::Internal, e.what()).dump() << '\n';
    return 1;
  }
}
