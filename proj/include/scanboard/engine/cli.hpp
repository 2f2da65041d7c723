#pragma once

#include <ostream>

namespace scanboard::engine {

/// Entry point of the `scanboard` tool. Subcommands:
///   run <file.logo> [--svg out.svg]
///   simulate --program <file> [--layout <file>] [--method physical|direct|scanning]
///            [--period-ms N] [--json]
///   layout validate <file>
///   serve [--port N] [--profile <file>]
/// Returns 0 on success; diagnostics go to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scanboard::engine
