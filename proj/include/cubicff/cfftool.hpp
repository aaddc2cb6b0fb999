#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cubicff/placegeom.hpp"
#include "json.hpp"

namespace cubicff {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "cubicff/1";

struct CliOptions {
  std::optional<u64> q, p;
  std::optional<int> n;
  std::optional<std::string> modulus;
  std::optional<std::string> e, f, g;     // raw cubic X^3 + eX^2 + fX + g
  std::optional<std::string> a;           // canonical parameter
  std::string family;                     // "standard", "kummer" or "as"; empty picks by characteristic
  std::optional<std::string> A, B;        // norm-form witness for construct
  std::optional<std::string> a1, a2;      // equiv
  std::vector<std::string> places;
  bool pretty = false;
};

const std::vector<std::string>& cli_commands();

Field field_from_options(const CliOptions& o);

// Runs one subcommand; throws Error on parse or precondition failure.
Json run_command(const std::string& command, const CliOptions& o);

// Exit code 0 on success, 2 on parse errors, 3 on precondition failures.
int exit_code_for(ErrorKind kind);
Json error_json(const std::string& command, ErrorKind kind, const std::string& message);

// Runs the command, prints JSON to out and returns the exit code.
int execute(const std::string& command, const CliOptions& o, std::ostream& out);

}  // namespace cubicff
