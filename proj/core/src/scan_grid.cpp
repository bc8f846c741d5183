#include "opo/scan_grid.hpp"

#include "opo/errors.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace opo {

double Axis::value(int i) const noexcept {
  if (count <= 1) return min;
  const double n1 = count - 1;
  return ((n1 - i) * min + i * max) / n1;
}

void Axis::validate() const {
  if (count < 1) throw InvalidParams("axis '" + name + "': count must be >= 1");
  if (!std::isfinite(min) || !std::isfinite(max))
    throw InvalidParams("axis '" + name + "': bounds must be finite");
  if (count == 1 && min != max) throw InvalidParams("axis '" + name + "': single-point axis needs min == max");
  if (count > 1 && !(min < max)) throw InvalidParams("axis '" + name + "': min must be < max");
}

ScanGrid::ScanGrid(Axis x_axis, Axis y_axis, std::string quantity_name)
    : x(std::move(x_axis)), y(std::move(y_axis)), quantity(std::move(quantity_name)) {
  x.validate();
  y.validate();
  values.assign(static_cast<std::size_t>(x.count) * y.count, 0.0);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

void write_csv(std::ostream& os, const ScanGrid& grid) {
  os << "# " << grid.metadata << '\n';
  os << grid.x.name << ',' << grid.y.name << ',' << grid.quantity << '\n';
  for (int iy = 0; iy < grid.y.count; ++iy)
    for (int ix = 0; ix < grid.x.count; ++ix)
      os << format_double(grid.x.value(ix)) << ',' << format_double(grid.y.value(iy)) << ','
         << format_double(grid.at(ix, iy)) << '\n';
}

namespace {

double parse_field(std::string_view s, int line) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  double v = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw std::runtime_error("csv line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
  return v;
}

struct Row {
  double x, y, v;
};

} // namespace

ScanGrid read_csv(std::istream& is) {
  std::string line;
  std::string metadata;
  int lineno = 0;
  if (!std::getline(is, line)) throw std::runtime_error("csv: empty input");
  ++lineno;
  if (!line.empty() && line[0] == '#') {
    metadata = line.size() > 2 ? line.substr(2) : std::string();
    if (!std::getline(is, line)) throw std::runtime_error("csv: missing header row");
    ++lineno;
  }
  std::string names[3];
  {
    std::istringstream hs(line);
    for (auto& n : names)
      if (!std::getline(hs, n, ',')) throw std::runtime_error("csv: header needs three columns");
  }

  std::vector<Row> rows;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos) throw std::runtime_error("csv line " + std::to_string(lineno) + ": expected 3 fields");
    const std::string_view sv(line);
    rows.push_back({parse_field(sv.substr(0, c1), lineno), parse_field(sv.substr(c1 + 1, c2 - c1 - 1), lineno),
                    parse_field(sv.substr(c2 + 1), lineno)});
  }
  if (rows.empty()) throw std::runtime_error("csv: no data rows");

  // Row-major: x varies fastest, so the x axis length is the run of rows
  // sharing the first y value.
  int nx = 0;
  while (nx < static_cast<int>(rows.size()) && rows[nx].y == rows[0].y) ++nx;
  if (rows.size() % nx != 0) throw std::runtime_error("csv: data is not a rectangular grid");
  const int ny = static_cast<int>(rows.size() / nx);

  ScanGrid g;
  g.x = {names[0], rows.front().x, rows[nx - 1].x, nx};
  g.y = {names[1], rows.front().y, rows.back().y, ny};
  g.quantity = names[2];
  g.metadata = metadata;
  g.values.reserve(rows.size());
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      const Row& r = rows[static_cast<std::size_t>(iy) * nx + ix];
      if (r.x != g.x.value(ix) || r.y != g.y.value(iy))
        throw std::runtime_error("csv: coordinates do not form a uniform grid");
      g.values.push_back(r.v);
    }
  return g;
}

} // namespace opo
