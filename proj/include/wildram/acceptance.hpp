#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wildram/job.hpp"

namespace wildram {

struct GridPoint {
  int p = 0, s = 0, m = 0;
};
/// p in {2,3,5}, s in {1,2}, m <= max_m prime to p (m > 1 when s = 2).
std::vector<GridPoint> acceptance_grid(int max_m = 20);
/// Values (1) over F_p for s = 1 and (1, x) over F_{p^2} for s = 2.
Character grid_character(const GridPoint& g);

struct AcceptanceOptions {
  bool parallel = false;
  std::uint64_t seed = 20240601;
  int max_m = 20;
  /// Criterion 10 reruns criteria 1-9; off for the inner runs.
  bool determinism = true;
};

/// One record per criterion: {id, name, pass, checked, failures, detail}.
Json run_acceptance(const AcceptanceOptions& opt);

/// "criterion  N  PASS  name  (detail)" lines.
std::string acceptance_lines(const Json& report);

}  // namespace wildram
