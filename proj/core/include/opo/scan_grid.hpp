#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace opo {

struct Axis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int count = 0;

  // ((n-1-i) min + i max) / (n-1): mirror-exact for symmetric ranges.
  double value(int i) const noexcept;
  // count >= 1, min < max unless count == 1 (then min == max).
  void validate() const;
};

// Row-major result matrix: values[iy * x.count + ix].
struct ScanGrid {
  Axis x;
  Axis y;
  std::string quantity;
  std::vector<double> values;
  std::string metadata; // free-form, written after '#' on the first line

  ScanGrid() = default;
  ScanGrid(Axis x_axis, Axis y_axis, std::string quantity_name);

  double& at(int ix, int iy) { return values[static_cast<std::size_t>(iy) * x.count + ix]; }
  double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * x.count + ix]; }
};

// Long format: one `#` metadata line, a header `<x>,<y>,<quantity>`, then
// one row per cell in row-major order with 17 significant digits. Masked
// cells are written as `nan`.
void write_csv(std::ostream& os, const ScanGrid& grid);

// Inverse of write_csv. Axes are recovered from the data; throws
// std::runtime_error on a malformed or non-rectangular file.
ScanGrid read_csv(std::istream& is);

std::string format_double(double v);

} // namespace opo
