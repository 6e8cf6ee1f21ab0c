#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "poizat/report.hpp"

namespace poizat {

struct GlobalOptions {
    std::uint64_t seed = 0;
    bool strict = false;
    int precision = 64;
};

enum ExitCode { exit_ok = 0, exit_internal = 1, exit_parse = 2, exit_precondition = 3, exit_unknown = 4 };

struct CommandResult {
    Json output;
    // The answer is undecided; with --strict this is exit code 4.
    bool unknown = false;
};

/**
 * Runs one command on a payload object. Payload keys mirror the
 * subcommand flags with dashes turned into underscores.
 * Throws ParseError and PreconditionError for bad input.
 */
CommandResult execute_command(const std::string& command, const Json& payload, const GlobalOptions& opt);

// Commands accepted in batch records.
const std::vector<std::string>& command_names();

struct BatchSummary {
    Json report;
    int records = 0;
    int errors = 0;
    int unknown = 0;
};

// One result object per input line, in input order.
BatchSummary batch_run(std::istream& input, const GlobalOptions& opt);

// Full command line without the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace poizat
