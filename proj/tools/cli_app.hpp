#pragma once

// Command-line front end. Everything routes through run() so tests can
// drive the tool in-process with string streams; main() is one line.
//
// Commands:
//   sample    write n exact draws, one per line
//   hist      write an area-normalized histogram CSV of n draws
//   validate  run the validation suite, print the report
//   bench     time n draws and report throughput and coupling statistics
//
// Exit codes: 0 success, 1 validation failure, 2 usage error, 3 I/O error.
// Output bytes depend only on (command, n, seed, bins); bench additionally
// prints measured wall time, which is the one deliberately nondeterministic
// output.

#include <cstdint>
#include <iosfwd>
#include <string>

namespace perpsim::cli {

enum class Command { sample, hist, validate, bench };

struct CliConfig {
  Command command = Command::sample;
  std::uint64_t n = 0;
  std::uint64_t seed = 1;
  int bins = 200;
  std::string out = "-";  // "-" means the caller-supplied output stream
  std::string csv;        // validate only: also write the report CSV here
};

int cmd_sample(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_hist(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_validate(const CliConfig& config, std::ostream& out,
                 std::ostream& err);
int cmd_bench(const CliConfig& config, std::ostream& out, std::ostream& err);

// Parses argv, dispatches to the command handlers, maps errors to the exit
// codes above. out receives payload, err receives diagnostics.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace perpsim::cli
