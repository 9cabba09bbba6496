// Command-line front end. Exit codes: 0 success or affirmative verdict,
// 1 negative verdict, 2 usage, parse or input error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kpi {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace kpi
