#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include "cubicff/cfftool.hpp"
#include "doctest.h"

using namespace cubicff;

namespace {

struct Run {
  int code;
  Json out;
  std::string raw;
};

// Runs the installed binary with a shell-quoted argument string.
Run run_binary(const std::string& args) {
  const std::string cmd = std::string(CFFTOOL_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string raw;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) raw.append(buf.data(), n);
  const int status = pclose(pipe);
  Run r{WEXITSTATUS(status), Json(), raw};
  if (!raw.empty() && raw.front() == '{') r.out = Json::parse(raw);
  return r;
}

CliOptions q5(const std::string& a) {
  CliOptions o;
  o.q = 5;
  o.a = a;
  return o;
}

}  // namespace

TEST_CASE("analyze the running example") {
  auto r = run_binary("analyze --q 5 --a '(2*x^2+1)/(x^2+2)'");
  CHECK(r.code == 0);
  CHECK(r.out["schema"] == "cubicff/1");
  CHECK(r.out["galois"] == true);
  CHECK(r.out["irreducible"] == true);
  CHECK(r.out["constant_extension"] == false);
  CHECK(r.out["ramified"].size() == 1);
  CHECK(r.out["ramified"][0]["place"] == "x^2+2");
  CHECK(r.out["genus"] == 0);
  CHECK(r.out["basis"]["integral"] == true);
  CHECK(r.out["action"]["sigma"].is_string());
  for (const auto& s : r.out["splitting"]) CHECK(s["type"] == s["oracle"]);
  // Byte-identical output on repetition.
  CHECK(run_binary("analyze --q 5 --a '(2*x^2+1)/(x^2+2)'").raw == r.raw);
}

TEST_CASE("analyze a non-Galois parameter") {
  auto r = run_binary("analyze --q 5 --a '1/x'");
  CHECK(r.code == 0);
  CHECK(r.out["galois"] == false);
  CHECK(r.out["closure"]["kind"] == "standard_times_kummer_quadratic");
  // Y^2 = -3(a^2 - 4) with a = 1/x over F_5.
  const auto F5 = make_field(5, 1);
  const RatFunc a = parse_ratfunc("1/x", F5);
  CHECK(r.out["closure"]["equation"] == "Y^2 = " + ((a * a - RatFunc::from_int(F5, 4)) * -3).str());
}

TEST_CASE("parse errors exit with 2") {
  auto r = run_binary("analyze --q 4");
  CHECK(r.code == 2);
  CHECK(r.out["error"]["kind"] == "ParseError");
  CHECK(run_binary("analyze --q 5 --a '(x+'").code == 2);
  CHECK(run_binary("bogus --q 5").code == 2);
  CHECK(run_binary("split --q 5 --a x").code == 2);
}

TEST_CASE("precondition failures exit with 3") {
  auto r = run_binary("ramify --q 5 --a '1/x'");
  CHECK(r.code == 3);
  CHECK(r.out["error"]["kind"] == "NotGalois");
  CHECK(run_binary("construct --q 5 --A 'x' --B 'x'").code == 3);
  CHECK(run_binary("analyze --q 6 --a x").code == 3);
}

TEST_CASE("focused subcommands") {
  auto c = run_binary("construct --q 5 --A x --B 1");
  CHECK(c.code == 0);
  CHECK(c.out["a"] == "(2*x^2+1)/(x^2+2)");

  auto e = run_binary("equiv --q 5 --a1 1 --a2 4");
  CHECK(e.out["equivalent"] == true);
  bool has10 = false;
  for (const auto& pt : e.out["points"]) has10 = has10 || (pt["phi"] == "1" && pt["chi"] == "0");
  CHECK(has10);

  auto s = run_binary("split --q 5 --a '(2*x^2+1)/(x^2+2)' --place 'x+1'");
  CHECK(s.out["type"] == "inert");
  auto s2 = run_binary("split --q 5 --a '(2*x^2+1)/(x^2+2)' --place 'x^2+3' --place inf");
  CHECK(s2.out["splitting"].size() == 2);
  CHECK(s2.out["splitting"][0]["type"] == "totally_split");

  auto v = run_binary("valuations --q 5 --a '(2*x^2+1)/(x^2+2)' --place 'x^2+3'");
  CHECK(v.out["valuations"][0]["rule"] == 3);
  CHECK(v.out["valuations"][0]["values"] == Json::array({1, 0, 0}));

  auto g = run_binary("genus --q 3 --a '1/x'");
  CHECK(g.out["genus"] == 0);
  auto k = run_binary("ramify --q 4 --a x --family kummer");
  CHECK(k.out["ramified"].size() == 2);
  CHECK(k.out["ramified"][1]["place"] == "inf");

  auto b = run_binary("basis --q 5 --a '(2*x^2+1)/(x^2+2)' --pretty");
  CHECK(b.code == 0);
  CHECK(b.out["basis"]["elements"].size() == 3);
  CHECK(b.raw.find("\n  ") != std::string::npos);

  auto n = run_binary("normalize --q 5 --e 0 --f 0 --g x");
  CHECK(n.out["canonical"]["kind"] == "purely_cubic");
  auto i = run_binary("irreducible --q 5 --a '(2*x^2+1)/(x^2+2)'");
  CHECK(i.out["irreducible"] == true);
  CHECK(i.out["method"] == "norm_form_cube_test");
  auto gal = run_binary("galois --q 5 --a '(2*x^2+1)/(x^2+2)'");
  CHECK(gal.out["galois"] == true);
  CHECK(gal.out["witness"]["B"].is_string());
  auto act = run_binary("action --q 5 --a 1");
  CHECK(act.out["action"]["f"] == "0");
  CHECK(act.out["action"]["c0"] == "2");
}

TEST_CASE("in-process runs match the focused subcommands") {
  Json full = run_command("analyze", q5("(2*x^2+1)/(x^2+2)"));
  CHECK(full["ramified"] == run_command("ramify", q5("(2*x^2+1)/(x^2+2)"))["ramified"]);
  CHECK(full["genus"] == run_command("genus", q5("(2*x^2+1)/(x^2+2)"))["genus"]);
  CHECK(full["basis"] == run_command("basis", q5("(2*x^2+1)/(x^2+2)"))["basis"]);
  // Round trip through text.
  CHECK(Json::parse(full.dump()) == full);
  std::ostringstream os;
  CliOptions bad;
  CHECK(execute("analyze", bad, os) == 2);
  CHECK(exit_code_for(ErrorKind::NotGalois) == 3);
}
