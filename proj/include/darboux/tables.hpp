#pragma once

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "darboux/entropy_momentum.hpp"
#include "darboux/entropy_position.hpp"
#include "darboux/model.hpp"

namespace darboux {

/// A (lambda x n) grid of values with a golden file and a pinned tolerance.
struct TableSheet {
  std::string name;
  std::string golden_file;
  double tolerance;
  std::vector<double> lambdas;
  int n_count;
  std::function<double(double lambda, int n)> compute;
};

struct TableGrid {
  std::vector<double> lambdas;
  std::vector<std::vector<double>> values;  // [lambda][n]
};

struct TableDiffCell {
  double lambda;
  int n;
  double computed;
  double golden;
  double deviation;
};

struct TableDiff {
  double max_deviation = 0.0;
  std::vector<TableDiffCell> offenders;  // cells beyond tolerance
};

inline TableGrid load_golden_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden table: " + path);
  TableGrid grid;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      header_seen = true;  // column labels, not data
      continue;
    }
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() < 2) throw std::runtime_error("malformed golden row: " + line);
    grid.lambdas.push_back(row.front());
    grid.values.emplace_back(row.begin() + 1, row.end());
  }
  if (grid.values.empty()) throw std::runtime_error("empty golden table: " + path);
  return grid;
}

inline TableGrid compute_table(const TableSheet& sheet) {
  TableGrid grid;
  grid.lambdas = sheet.lambdas;
  for (double lambda : sheet.lambdas) {
    std::vector<double> row;
    row.reserve(sheet.n_count);
    for (int n = 0; n < sheet.n_count; ++n) row.push_back(sheet.compute(lambda, n));
    grid.values.push_back(std::move(row));
  }
  return grid;
}

inline TableDiff diff_tables(const TableSheet& sheet, const TableGrid& computed,
                             const TableGrid& golden) {
  if (computed.values.size() != golden.values.size())
    throw std::runtime_error("table shape mismatch for " + sheet.name);
  TableDiff diff;
  for (size_t i = 0; i < computed.values.size(); ++i) {
    if (computed.values[i].size() != golden.values[i].size())
      throw std::runtime_error("table row mismatch for " + sheet.name);
    for (size_t j = 0; j < computed.values[i].size(); ++j) {
      const double dev = std::abs(computed.values[i][j] - golden.values[i][j]);
      diff.max_deviation = std::max(diff.max_deviation, dev);
      if (dev > sheet.tolerance)
        diff.offenders.push_back({computed.lambdas[i], static_cast<int>(j),
                                  computed.values[i][j], golden.values[i][j],
                                  dev});
    }
  }
  return diff;
}

/// Definition of every reproducible table, keyed by its published id.
inline std::vector<TableSheet> table_sheets(int id, double hbar = 1.0,
                                            double omega = 1.0) {
  const std::vector<double> small = {0.0, 0.025, 0.05, 0.075, 0.1};
  const std::vector<double> large = {0.0, 0.25, 0.5, 0.75, 1.0};
  const std::vector<double> small3d = {0.0, 0.01, 0.02, 0.03, 0.04};

  auto params1d = [hbar, omega](double lambda) {
    return ModelParams{lambda, omega, hbar, 1};
  };
  auto params3d = [hbar, omega](double lambda) {
    return ModelParams{lambda, omega, hbar, 3};
  };

  switch (id) {
    case 1:
      return {
          {"table1_energy", "table1_energy.csv", 5e-4, small, 10,
           [=](double lambda, int n) {
             return energy(params1d(lambda), QuantumNumbers::d1(n));
           }},
          {"table1_frequency", "table1_frequency.csv", 5e-4, small, 10,
           [=](double lambda, int n) {
             return frequency(params1d(lambda), QuantumNumbers::d1(n));
           }},
      };
    case 2:
      return {{"table2", "table2.csv", 1.5e-3, small, 16,
               [=](double lambda, int n) {
                 return entropy_position_1d(params1d(lambda), n).value;
               }}};
    case 3:
      return {{"table3", "table3.csv", 2e-3, small, 16,
               [=](double lambda, int n) {
                 return entropy_momentum_1d(params1d(lambda), n).value;
               }}};
    case 4:
      return {{"table4", "table4.csv", 2e-3, small, 16,
               [=](double lambda, int n) {
                 const ModelParams p = params1d(lambda);
                 return entropy_position_1d(p, n).value +
                        entropy_momentum_1d(p, n).value;
               }}};
    case 5:
      return {{"table5", "table5.csv", 2e-3, large, 3,
               [=](double lambda, int n) {
                 const ModelParams p = params1d(lambda);
                 return entropy_position_1d(p, n).value +
                        entropy_momentum_1d(p, n).value;
               }}};
    case 6:
      return {{"table6", "table6.csv", 2e-3, small3d, 10,
               [=](double lambda, int n) {
                 return entropy_position_nd(params3d(lambda),
                                            QuantumNumbers::d3(n, 0, 0))
                     .value;
               }}};
    case 7:
      return {{"table7", "table7.csv", 2e-3, small3d, 10,
               [=](double lambda, int n) {
                 return entropy_momentum_3d(params3d(lambda), n, 0, {0, 0})
                     .value;
               }}};
    case 8:
      return {{"table8", "table8.csv", 2e-3, small3d, 10,
               [=](double lambda, int n) {
                 const ModelParams p = params3d(lambda);
                 return entropy_position_nd(p, QuantumNumbers::d3(n, 0, 0)).value +
                        entropy_momentum_3d(p, n, 0, {0, 0}).value;
               }}};
    default:
      throw std::domain_error("table_sheets: table id must be in 1..8");
  }
}

}  // namespace darboux
