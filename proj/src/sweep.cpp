#include "flatgrid/sweep.hpp"

#include <numeric>
#include <stdexcept>

#include "flatgrid/obstruction.hpp"
#include "flatgrid/semiregular.hpp"
#include "flatgrid/thurston.hpp"
#include "flatgrid/veech.hpp"

namespace flatgrid {

ClosedFormStratum grid_stratum_formula(int m, int n) {
  int g = std::gcd(m, n);
  ClosedFormStratum f;
  f.genus = (m * n - m - n - g) / 2 + 1;
  int order = (m * n - m - n) / g - 1;
  f.zeros = order > 0 ? g : 0;
  f.zero_order = order > 0 ? order : 0;
  return f;
}

ClosedFormStratum quotient_stratum_formula(int m, int n) {
  if (m % 2 != 0 || n % 2 != 0)
    throw std::invalid_argument("quotient_stratum_formula: m and n must be even");
  ClosedFormStratum f;
  if (m <= 4 && n <= 4) {
    f.genus = 1;
    return f;
  }
  int g = std::gcd(m, n);
  int mn = m * n;
  if ((m / g) % 2 == 1 && (n / g) % 2 == 1) {
    f.genus = (mn - m - n - 2 * g) / 4 + 1;
    f.zeros = g;
    f.zero_order = (mn - m - n) / (2 * g) - 1;
  } else {
    f.genus = (mn - m - n - g) / 4 + 1;
    f.zeros = g / 2;
    f.zero_order = (mn - m - n) / g - 1;
  }
  if (f.zero_order <= 0) {
    // order-0 classes are marked points, not zeros
    f.zeros = 0;
    f.zero_order = 0;
  }
  return f;
}

namespace {

struct Cell {
  int m, n;
};

struct CellOutput {
  std::vector<SweepRow> rows;
  bool consistent = true;
  std::string detail;
};

CellOutput evaluate_cell(int m, int n) {
  CellOutput out;
  auto push = [&](const std::string& model, const StratumInfo& info,
                  const ClosedFormStratum& formula) {
    SweepRow row;
    row.m = m;
    row.n = n;
    row.gamma = std::gcd(m, n);
    row.model = model;
    row.genus = info.genus;
    auto zs = info.zeros();
    row.zeros = static_cast<int>(zs.size());
    row.zero_order = zs.empty() ? 0 : zs.front();
    bool uniform = true;
    for (int z : zs) uniform = uniform && z == row.zero_order;
    row.arithmetic = is_arithmetic(m, n);
    row.excluded = excluded_triangle_group(m, n);
    if (!uniform || row.genus != formula.genus || row.zeros != formula.zeros ||
        row.zero_order != formula.zero_order) {
      out.consistent = false;
      out.detail = model + " stratum mismatch at (" + std::to_string(m) + "," +
                   std::to_string(n) + ")";
    }
    out.rows.push_back(std::move(row));
  };
  TranslationSurface x = rectangle_surface(grid_graph(m, n).graph, eigen_width(m, n));
  push("grid", stratum(x), grid_stratum_formula(m, n));
  if (m % 2 == 0 && n % 2 == 0)
    push("quotient", stratum(semiregular_quotient(m, n)), quotient_stratum_formula(m, n));
  return out;
}

}  // namespace

SweepResult sweep_rows(int max_m, int max_n, bool parallel) {
  std::vector<Cell> cells;
  for (int m = 2; m <= max_m; ++m)
    for (int n = 2; n <= max_n; ++n)
      if (m * n >= 6) cells.push_back({m, n});

  std::vector<CellOutput> outputs(cells.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < static_cast<int>(cells.size()); ++i)
      outputs[i] = evaluate_cell(cells[i].m, cells[i].n);
  } else {
    for (size_t i = 0; i < cells.size(); ++i)
      outputs[i] = evaluate_cell(cells[i].m, cells[i].n);
  }

  SweepResult res;
  for (auto& out : outputs) {
    for (auto& row : out.rows) res.rows.push_back(std::move(row));
    if (!out.consistent && res.consistent) {
      res.consistent = false;
      res.detail = out.detail;
    }
  }
  return res;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "m,n,gamma,model,genus,zeros,zero_order,arithmetic,excluded\n";
  for (const SweepRow& r : rows) {
    out += std::to_string(r.m) + "," + std::to_string(r.n) + "," +
           std::to_string(r.gamma) + "," + r.model + "," + std::to_string(r.genus) +
           "," + std::to_string(r.zeros) + "," + std::to_string(r.zero_order) + "," +
           (r.arithmetic ? "true" : "false") + "," + (r.excluded ? "true" : "false") +
           "\n";
  }
  return out;
}

}  // namespace flatgrid
