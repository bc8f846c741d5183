#include "opo_cli/commands.hpp"

#include <opo/correlators.hpp>
#include <opo/errors.hpp>
#include <opo/parallel.hpp>
#include <opo/stokes.hpp>
#include <opo/validation.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace opo::cli {

namespace {

Axis with_default(Axis a, int count) {
  if (a.count == 0) a.count = count;
  return a;
}

std::string metadata(const RunConfig& cfg, std::string_view cmd) {
  std::ostringstream m;
  m << "opo " << cmd << ' ' << cfg.params.describe() << " omega_max=" << format_double(cfg.quadrature.omega_max)
    << " rel_tol=" << format_double(cfg.quadrature.rel_tol) << " abs_tol=" << format_double(cfg.quadrature.abs_tol);
  return m.str();
}

// Writes to cfg.output if set, else to `out`.
template <class Fn>
void emit(const RunConfig& cfg, std::ostream& out, Fn&& fn) {
  if (cfg.output.empty()) {
    fn(out);
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw ConfigError("cannot open output file '" + cfg.output + "'");
  fn(f);
  if (!f) throw Error("failed writing '" + cfg.output + "'");
}

StokesMapQuantity map_quantity(std::string_view cmd, const std::string& q) {
  if (cmd == "stokes-map") {
    if (q.empty() || q == "s0") return StokesMapQuantity::s0;
    if (q == "s1") return StokesMapQuantity::s1;
    if (q == "p2") return StokesMapQuantity::p2;
    throw ConfigError("stokes-map quantity must be s0, s1 or p2");
  }
  if (q.empty() || q == "d23") return StokesMapQuantity::d23_normal;
  if (q == "d1") return StokesMapQuantity::d1_normal;
  if (q == "g1") return StokesMapQuantity::g1_normal;
  if (q == "g23") return StokesMapQuantity::g23_normal;
  throw ConfigError("stokes-corr quantity must be g1, g23, d1 or d23");
}

int run_validate(const RunConfig& cfg, std::ostream& out) {
  ValidationOptions opts;
  opts.seed = cfg.seed;
  opts.mc_samples = cfg.mc_samples;
  const auto results = run_validation(cfg.params, cfg.quadrature, opts);

  bool ok = true;
  char line[160];
  std::snprintf(line, sizeof line, "%-34s %-6s %14s %14s\n", "check", "status", "measured", "bound");
  out << line;
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-34s %-6s %14.6g %14.6g\n", r.name.c_str(), to_string(r.status), r.measured,
                  r.bound);
    out << line;
    if (r.status == CheckStatus::fail) ok = false;
  }
  if (!cfg.output.empty()) {
    std::ofstream f(cfg.output);
    if (!f) throw ConfigError("cannot open output file '" + cfg.output + "'");
    f << "name,status,measured,bound\n";
    for (const auto& r : results)
      f << r.name << ',' << to_string(r.status) << ',' << format_double(r.measured) << ',' << format_double(r.bound)
        << '\n';
  }
  return ok ? exit_ok : exit_validation;
}

} // namespace

ScanGrid farfield_map(const RunConfig& cfg) {
  ScanGrid grid(with_default(cfg.kx, 128), with_default(cfg.ky, 128), "intensity");
  parallel_for(grid.y.count, cfg.threads, [&](int iy) {
    for (int ix = 0; ix < grid.x.count; ++ix)
      grid.at(ix, iy) = farfield_intensity(cfg.params, {grid.x.value(ix), grid.y.value(iy)}, cfg.quadrature);
  });
  grid.metadata = metadata(cfg, "farfield");
  return grid;
}

ScanGrid epr_cut(const RunConfig& cfg) {
  const double psi = cfg.cut_psi ? *cfg.cut_psi
                                 : optimal_phase(cfg.params, cfg.scheme, cfg.gain, 0.0, cfg.psi.min, cfg.psi.max)
                                       .psi_sum;
  ScanGrid grid = epr_scan(cfg.params, cfg.scheme, cfg.gain, cfg.omega, Axis{"psi_sum", psi, psi, 1}, cfg.threads);
  // epr_scan lays psi along x; a cut wants omega along x.
  ScanGrid cut(cfg.omega, Axis{"psi_sum", psi, psi, 1}, "variance");
  for (int i = 0; i < cfg.omega.count; ++i) cut.at(i, 0) = grid.at(0, i);
  cut.metadata = metadata(cfg, "epr-cut") + " scheme=" + std::string(scheme_name(cfg.scheme)) +
                 " gain=" + describe_gain(cfg.gain);
  return cut;
}

int run_subcommand(const RunConfig& cfg, std::string_view cmd, std::ostream& out, std::ostream& err) {
  try {
    if (cmd == "farfield") {
      const ScanGrid g = farfield_map(cfg);
      emit(cfg, out, [&](std::ostream& os) { write_csv(os, g); });
    } else if (cmd == "critical-points") {
      const CriticalPoints cp = critical_points(cfg.params);
      emit(cfg, out, [&](std::ostream& os) {
        os << "k_h = (" << format_double(cp.k_h.kx) << ", " << format_double(cp.k_h.ky) << ")\n"
           << "k_v = (" << format_double(cp.k_v.kx) << ", " << format_double(cp.k_v.ky) << ")\n"
           << "ky_plus = " << format_double(cp.ky_plus) << '\n'
           << "ky_minus = " << format_double(cp.ky_minus) << '\n'
           << "omega_h(k_v) = " << format_double(hopf_frequency(cfg.params, cp.k_v)) << '\n';
      });
    } else if (cmd == "epr-scan") {
      ScanGrid g = epr_scan(cfg.params, cfg.scheme, cfg.gain, cfg.psi, cfg.omega, cfg.threads);
      g.metadata = metadata(cfg, cmd) + " scheme=" + std::string(scheme_name(cfg.scheme)) +
                   " gain=" + describe_gain(cfg.gain);
      emit(cfg, out, [&](std::ostream& os) { write_csv(os, g); });
    } else if (cmd == "epr-cut") {
      const ScanGrid g = epr_cut(cfg);
      emit(cfg, out, [&](std::ostream& os) { write_csv(os, g); });
    } else if (cmd == "stokes-map" || cmd == "stokes-corr") {
      const StokesMapQuantity q = map_quantity(cmd, cfg.quantity);
      ScanGrid g = stokes_map(cfg.params, cfg.quadrature, q, with_default(cfg.kx, 64), with_default(cfg.ky, 64),
                              cfg.threads);
      g.metadata = metadata(cfg, cmd);
      emit(cfg, out, [&](std::ostream& os) { write_csv(os, g); });
    } else if (cmd == "validate") {
      return run_validate(cfg, out);
    } else {
      err << "unknown subcommand '" << cmd << "'\n";
      return exit_config;
    }
    return exit_ok;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const InvalidParams& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return exit_config;
  } catch (const NoInstability& e) {
    err << "no instability: " << e.what() << '\n';
    return exit_config;
  } catch (const QuadratureNonConvergence& e) {
    err << "numerical failure: " << e.what() << '\n';
    return exit_numerical;
  } catch (const DegenerateDenominator& e) {
    err << "numerical failure: " << e.what() << '\n';
    return exit_numerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_validation;
  }
}

} // namespace opo::cli
