// Benchmark of the parallel enumeration kernels against their serial
// reference implementations.

#include <chrono>
#include <cstdio>

#include "seltwist/congruence.hpp"
#include "seltwist/parallel.hpp"

using namespace seltwist;

namespace {

template <class F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_set(const char* name, const CongruenceSet& s, long long bound) {
  long long count_serial = 0, count_parallel = 0;
  double t_serial = time_ms([&] { count_serial = count_members_serial(s, bound); });
  double t_parallel = time_ms([&] { count_parallel = count_members(s, bound); });
  std::printf("%-28s X=%-9lld serial %8.1f ms  parallel(%d) %8.1f ms  speedup %.2fx  %s\n",
              name, bound, t_serial, worker_count(), t_parallel, t_serial / t_parallel,
              count_serial == count_parallel ? "counts agree" : "COUNT MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  long long bound = argc > 1 ? std::atoll(argv[1]) : 2000000;

  CongruenceSet squarefree;
  squarefree.ambient = Ambient::Squarefree;
  bench_set("squarefree ambient", squarefree, bound);

  bench_set("conductor-35 benchmark set", conductor35_explicit_t(), bound);

  CurveEab curve{2, -1};
  bench_set("t_prime(2,-1)", t_prime_set(curve), bound);
  return 0;
}
