// Compares the serial reference scan against the OpenMP kernel on the full
// expansion workload, and the serial vs parallel enumerators on the largest
// branching inputs.

#include <chrono>
#include <iostream>

#include "pipedreams/classes.hpp"
#include "pipedreams/dreams.hpp"
#include "pipedreams/io.hpp"
#include "pipedreams/scan.hpp"

using namespace pipedreams;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string workload(const PartialPermutation& f) {
  return to_json(expand(f, TheoryMode::KT));
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = argc > 1 ? std::atoi(argv[1]) : 5;

  auto t0 = Clock::now();
  auto serial = scan_serial(max_n, workload);
  double serial_s = seconds_since(t0);

  t0 = Clock::now();
  auto parallel = scan_parallel(max_n, workload);
  double parallel_s = seconds_since(t0);

  std::cout << "expansion scan over all f with n <= " << max_n << " ("
            << serial.size() << " inputs)\n"
            << "  serial   " << serial_s << " s\n"
            << "  parallel " << parallel_s << " s\n"
            << "  results identical: " << (serial == parallel ? "yes" : "NO")
            << '\n';

  PartialPermutation f(4, {{1, 2}, {3, 4}});
  t0 = Clock::now();
  size_t count = 0;
  for (int rep = 0; rep < 2000; ++rep)
    count += enumerate_dreams(f, TheoryMode::KT).size();
  double enum_serial = seconds_since(t0);
  t0 = Clock::now();
  size_t count_p = 0;
  for (int rep = 0; rep < 2000; ++rep)
    count_p += enumerate_dreams_parallel(f, TheoryMode::KT).size();
  double enum_parallel = seconds_since(t0);
  std::cout << "enumerator, 2000 repetitions (" << count << " dreams)\n"
            << "  serial   " << enum_serial << " s\n"
            << "  parallel " << enum_parallel << " s\n"
            << "  counts identical: " << (count == count_p ? "yes" : "NO")
            << '\n';
  return 0;
}
