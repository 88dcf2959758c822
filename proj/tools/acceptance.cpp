#include <cstring>
#include <iostream>

#include "wildram/acceptance.hpp"

// Prints one line per criterion; exit status is nonzero when any criterion fails.
int main(int argc, char** argv) {
  wildram::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--parallel") == 0) opt.parallel = true;
  const auto report = wildram::run_acceptance(opt);
  std::cout << wildram::acceptance_lines(report);
  return report["summary"]["ok"].get<bool>() ? 0 : 1;
}
