#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace segre::cli {

// Exit codes: 0 all checks pass, 1 a check failed or a runtime error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Comma-separated rationals, e.g. "1,-1/2,0,0,0,1/2"; throws segre::ParseError.
std::vector<mpq_class> parse_coordinates(const std::string& text);

}  // namespace segre::cli
