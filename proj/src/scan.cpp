#include "pipedreams/scan.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pipedreams {

int configured_thread_count() {
  const char* env = std::getenv("PIPES_THREADS");
  if (!env) return 0;
  int v = std::atoi(env);
  return v > 0 ? v : 0;
}

void apply_thread_cap() {
#ifdef _OPENMP
  int v = configured_thread_count();
  if (v > 0) omp_set_num_threads(v);
#endif
}

namespace {

std::vector<PartialPermutation> inputs_up_to(int max_n) {
  std::vector<PartialPermutation> all;
  for (int n = 1; n <= max_n; ++n)
    for (auto& f : all_partial_permutations(n)) all.push_back(std::move(f));
  return all;
}

}  // namespace

std::vector<std::string> scan_serial(
    int max_n,
    const std::function<std::string(const PartialPermutation&)>& fn) {
  std::vector<std::string> out;
  for (const auto& f : inputs_up_to(max_n)) out.push_back(fn(f));
  return out;
}

std::vector<std::string> scan_parallel(
    int max_n,
    const std::function<std::string(const PartialPermutation&)>& fn) {
  apply_thread_cap();
  auto inputs = inputs_up_to(max_n);
  std::vector<std::string> out(inputs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (size_t x = 0; x < inputs.size(); ++x) out[x] = fn(inputs[x]);
  return out;
}

}  // namespace pipedreams
