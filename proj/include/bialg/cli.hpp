#pragma once

#include <string>
#include <vector>

namespace bialg {

/// Runs one CLI invocation. Returns the exit code: 0 success, 1 property
/// refuted (report carries the witness), 2 usage or input error.
/// The rendered report (text, JSON or DOT) is appended to `out`.
int dispatch(const std::vector<std::string>& args, std::string& out);

/// Runs a manifest of commands ({"commands": [[...], ...]}); the aggregate
/// exit code is the worst individual one and the report names each case.
int run_batch(const std::string& manifest_path, std::string& out);

} // namespace bialg
