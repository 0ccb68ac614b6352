#pragma once

#include <iosfwd>

namespace leibniz {

// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or IO error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace leibniz
