#ifndef COEDIT_CLI_HPP
#define COEDIT_CLI_HPP

#include <ostream>

namespace coedit {

/// Exit codes: 0 success or verdict, 1 usage or capacity, 2 parse error,
/// 3 internal invariant violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace coedit

#endif
