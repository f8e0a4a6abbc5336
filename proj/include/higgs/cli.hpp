#pragma once

namespace higgs::cli {

// Command-line driver. Exit statuses: 0 success, 2 validation failure,
// 64 usage error, 70 internal error; verify returns 1 when a blocking
// case fails.
int run(int argc, char** argv);

} // namespace higgs::cli
