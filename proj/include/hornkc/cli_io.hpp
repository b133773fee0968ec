#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hornkc/dualization.hpp"
#include "hornkc/hardness_lab.hpp"
#include "hornkc/horn_logic.hpp"
#include "hornkc/model_core.hpp"

namespace hornkc {

// Horn files:
//   c comment
//   p horn <n> <m>
//   -2 -3 4 0        one clause per 0 terminator, signed 1-based literals
HornCnf parse_horn(std::string_view text);
std::string serialize_horn(const HornCnf& h);

// Model files: an optional "p models <n>" line, then one bitstring per
// line, x1 leftmost. Without the header the width comes from the first row.
ModelSet parse_models(std::string_view text);
std::string serialize_models(const ModelSet& s);

// Monotone files share the clause syntax with positive literals only, under
// "p mono-cnf <n> <m>" or "p mono-dnf <n> <m>".
using MonotoneDocument = std::variant<MonotoneCnf, MonotoneDnf>;
MonotoneDocument parse_monotone(std::string_view text);
std::string serialize_monotone(const MonotoneCnf& c);
std::string serialize_monotone(const MonotoneDnf& d);

// Monotone 3-SAT in DIMACS form ("p cnf <n> <m>").
Monotone3SatInstance parse_m3sat(std::string_view text);
std::string serialize_m3sat(const Monotone3SatInstance& inst);

// Bucketed prime implicates:
//   p horn-pi <n>
//   b <i> <k>        followed by k clause lines, for i = 0..n
PiDecomposition parse_pi_listing(std::string_view text);
std::string serialize_pi_listing(const PiDecomposition& p);

// Whether the first problem line of a document names the given format.
bool has_problem_line(std::string_view text, std::string_view format);

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitUsage = 2,
  kExitInput = 3,
  kExitGuard = 4,
};

// Runs the hornkc command line. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hornkc
