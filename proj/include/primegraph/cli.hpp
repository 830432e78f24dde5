#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace primegraph {

enum class Verb { gen, analyze, embed, orient, dim, lattice, extract, verify };

std::string to_string(Verb verb);

// Inputs are file paths or inline family specs ("family:g1:8[:complement][:dual]").
struct Command {
  Verb verb = Verb::gen;
  bool json = false;
  std::string format = "json";  // json | dot
  std::string output;           // empty: stdout

  // gen
  std::string family;
  std::size_t n = 0;
  bool complement = false;
  bool dual = false;

  // analyze, orient, dim, lattice, extract
  std::string input;

  // embed
  std::string pattern, target;
  std::uint64_t max_nodes = 50'000'000;

  // orient
  bool force = false;
  std::size_t limit = 0;

  // dim
  std::size_t max_k = 4;

  // extract
  std::string mode;
  std::size_t threshold = 3;
  std::string homogenize = "auto";

  // verify
  std::string suite;
  std::size_t max_n = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 10'000;
  std::size_t jobs = 1;
  bool timing = false;
  std::string replay;  // violation payload to re-check
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by parse_command for --help; what() is the help text.
class HelpRequested : public UsageError {
 public:
  using UsageError::UsageError;
};

// args excludes the program name. Throws UsageError naming the offending flag.
Command parse_command(const std::vector<std::string>& args);

// Exit codes: 0 success, 1 verify found a violation, 2 input or I/O error.
int execute(const Command& cmd, std::ostream& out, std::ostream& err);

// parse_command then execute; usage errors print help hints and return 2.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primegraph
