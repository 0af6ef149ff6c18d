#pragma once

#include <ostream>

namespace ffgcd::cli {

// Runs one ffgcd invocation. Exit code 0 on success, 1 on a domain error (reported on err with
// the error kind), 2 on a usage error.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ffgcd::cli
