#ifndef GCN_CLI_HPP
#define GCN_CLI_HPP

#include "gcn/matrix.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gcn::cli {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

// "[a, b; c, d]" (the PolyMatrix::str form) or a bare polynomial, read as p·Id
// of size n (n = 0 means 1 for a bare polynomial). ParseError columns refer to
// the whole text.
PolyMatrix parse_matrix(std::string_view text, std::size_t n = 0);

// "s" or any polynomial in s, or a rational such as 3/2.
MPoly parse_sigma(std::string_view text);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcn::cli

#endif
