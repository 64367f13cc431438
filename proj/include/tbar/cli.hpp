/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#pragma once

#include <ostream>
#include <span>
#include <string>

namespace tbar::cli {

/// Exit codes: 0 every check passed, 1 a verification failed (the report
/// is still written), 2 usage or parse error.
enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs one invocation. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

} // namespace tbar::cli
