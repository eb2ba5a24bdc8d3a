#pragma once

namespace tanhscatter::cli {

// Parses arguments and dispatches to a subcommand.
// Exit codes: 0 ok, 1 usage, 2 physics-domain error, 3 I/O,
// 4 verification failure.
int run(int argc, char** argv);

}  // namespace tanhscatter::cli
