#pragma once

// Command-line front end.  Exit codes: 0 success, 1 mismatch or engine
// failure, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace geostruct {

inline constexpr const char* kReportSchemaVersion = "1.0.0";

int run(int argc, char** argv);

/// Same as above with explicit streams; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geostruct
