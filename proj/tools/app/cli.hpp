#pragma once

#include <iosfwd>

namespace dillab::app {

/// Exit statuses: 0 ok, 1 assertion failure, 2 usage error, 3 IO error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dillab::app
