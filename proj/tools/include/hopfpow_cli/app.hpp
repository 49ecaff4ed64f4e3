#pragma once

#include <ostream>

namespace hopfpow::cli {

/// Exit codes: 0 success, 1 a computation or verification failed, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hopfpow::cli
