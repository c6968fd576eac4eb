// Command-line front end: bounds, construct, verify and geometry.
//
// Exit status: 0 on success or a verified optimal code, 1 when the input is
// well formed but not optimal (or a condition fails, or a search is cut
// short), 2 on usage, input or budget errors.

#ifndef LRC_CLI_HPP
#define LRC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lrc::cli {

/// `args` excludes the program name. "-" as a file name means `in`/`out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace lrc::cli

#endif  // LRC_CLI_HPP
