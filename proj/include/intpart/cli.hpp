#pragma once

namespace intpart::cli {

// Entry point used by the intpart tool. Exit codes: 0 success / positive
// result, 2 negative result (not converged, no partition, not 4-sparse,
// verification failed), 1 error.
int run(int argc, const char* const* argv);

}  // namespace intpart::cli
