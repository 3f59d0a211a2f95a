#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bessel_geom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconsistent = 3;

inline constexpr const char* kSchemaVersion = "1.0";

/// Runs the command line (args excludes the program name). Results go to
/// out, diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bessel_geom::cli
