/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include <iosfwd>

namespace syrec::cli {
    /// Exit codes of the command line tool.
    enum ExitCode : int {
        Success     = 0,
        Diagnostics = 1,
        IoError     = 2,
    };

    /// Entry point of the `syrec` tool; all output goes to the given streams.
    [[nodiscard]] int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
} // namespace syrec::cli
