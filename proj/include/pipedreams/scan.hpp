#pragma once

#include <functional>
#include <vector>

#include "pipedreams/core.hpp"

// Exhaustive scans over all partial permutations of a given size.  The
// parallel kernel distributes the inputs over OpenMP threads and merges
// per-input results back in input order; the serial variant is the
// reference the tests compare against.

namespace pipedreams {

// Honors the PIPES_THREADS environment variable (0 or unset: default).
int configured_thread_count();
void apply_thread_cap();

// Applies fn to every f with 1 <= f.n() <= max_n and collects the results
// in scan order.
std::vector<std::string> scan_serial(
    int max_n, const std::function<std::string(const PartialPermutation&)>& fn);
std::vector<std::string> scan_parallel(
    int max_n, const std::function<std::string(const PartialPermutation&)>& fn);

}  // namespace pipedreams
