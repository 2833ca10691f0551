#pragma once

#include <string>
#include <vector>

namespace flatgrid {

struct SweepRow {
  int m = 0, n = 0, gamma = 0;
  std::string model;  // grid | quotient
  int genus = 0;
  int zeros = 0;       // count of positive-order zeros
  int zero_order = 0;  // their common order (0 for torus rows)
  bool arithmetic = false;
  bool excluded = false;
  bool operator==(const SweepRow& o) const = default;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool consistent = true;  // geometric strata match the closed forms
  std::string detail;
};

/// One grid row per (m,n) with mn >= 6 in [2,max_m] x [2,max_n], plus a
/// quotient row when m and n are both even.  Strata come from the built
/// surfaces; the closed forms are asserted as a cross-check.  Cells are
/// independent, so the parallel path evaluates them with OpenMP; row order is
/// identical either way.
SweepResult sweep_rows(int max_m, int max_n, bool parallel);

std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Closed-form strata, used as the cross-check oracle.
struct ClosedFormStratum {
  int genus = 0;
  int zeros = 0;
  int zero_order = 0;
};
ClosedFormStratum grid_stratum_formula(int m, int n);
ClosedFormStratum quotient_stratum_formula(int m, int n);

}  // namespace flatgrid
