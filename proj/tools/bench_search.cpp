// Compares the OpenMP search kernel against the serial reference
// implementation on the same inputs: values must agree, timings show
// the speedup.

#include <omp.h>

#include <chrono>
#include <iostream>
#include <string>

#include "opturan/search.hpp"
#include "opturan/search_reference.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int n = 8;
  int p = 2;
  int q = 2;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    int value = std::stoi(argv[i + 1]);
    if (flag == "--n") n = value;
    else if (flag == "--p") p = value;
    else if (flag == "--q") q = value;
    else {
      std::cerr << "usage: opturan_bench [--n N] [--p P] [--q Q]\n";
      return 1;
    }
  }

  const opturan::DoubleStarSpec spec(p, q);
  std::cout << "connected search, n = " << n << ", S_{" << p << "," << q
            << "}\n";

  auto t0 = std::chrono::steady_clock::now();
  auto reference = opturan::ex_connected_reference(n, spec);
  double t_reference = seconds_since(t0);

  opturan::EngineOptions serial_opts;
  serial_opts.workers = 1;
  serial_opts.override_cap = true;
  t0 = std::chrono::steady_clock::now();
  auto serial = opturan::ex_connected(n, spec, serial_opts);
  double t_serial = seconds_since(t0);

  opturan::EngineOptions parallel_opts;
  parallel_opts.workers = omp_get_max_threads();
  parallel_opts.override_cap = true;
  t0 = std::chrono::steady_clock::now();
  auto parallel = opturan::ex_connected(n, spec, parallel_opts);
  double t_parallel = seconds_since(t0);

  std::cout << "reference (serial, generic matcher): value = "
            << reference.value << ", " << t_reference << "s\n";
  std::cout << "kernel, 1 worker:                    value = "
            << serial.value << ", " << t_serial << "s\n";
  std::cout << "kernel, " << parallel_opts.workers
            << " worker(s):                  value = " << parallel.value
            << ", " << t_parallel << "s\n";
  if (t_parallel > 0)
    std::cout << "speedup over 1-worker kernel: " << t_serial / t_parallel
              << "x\n";

  if (reference.value != serial.value || serial.value != parallel.value ||
      serial.witnesses != parallel.witnesses ||
      reference.witnesses != serial.witnesses) {
    std::cerr << "DISAGREEMENT between engines\n";
    return 2;
  }
  std::cout << "engines agree (values and witness lists)\n";
  return 0;
}
