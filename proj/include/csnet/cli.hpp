#pragma once

#include <ostream>

namespace csnet {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 2;
inline constexpr int exit_family = 3;
inline constexpr int exit_network_check = 4;
inline constexpr int exit_positivity = 5;

/// Runs one csnet command. Normal output goes to `out`, diagnostics to `err`.
/// The immanant size cap is read from CSNET_SIZE_CAP (default 9).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace csnet
