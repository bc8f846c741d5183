#include "opo_cli/config.hpp"

#include <opo/errors.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace opo::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(std::string_view key, std::string_view v, int line) {
  double out = 0.0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || r.ec != std::errc() || r.ptr != v.data() + v.size())
    throw ConfigError("'" + std::string(key) + "' expects a number, got '" + std::string(v) + "'", line);
  return out;
}

template <class Int>
Int to_int(std::string_view key, std::string_view v, int line) {
  Int out = 0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || r.ec != std::errc() || r.ptr != v.data() + v.size())
    throw ConfigError("'" + std::string(key) + "' expects an integer, got '" + std::string(v) + "'", line);
  return out;
}

using Setter = std::function<void(RunConfig&, std::string_view, std::string_view, int)>;

Setter real(double OpoParams::*field) {
  return [field](RunConfig& c, std::string_view k, std::string_view v, int l) { c.params.*field = to_double(k, v, l); };
}

Setter axis_bound(Axis RunConfig::*axis, double Axis::*bound) {
  return [axis, bound](RunConfig& c, std::string_view k, std::string_view v, int l) {
    (c.*axis).*bound = to_double(k, v, l);
  };
}

Setter axis_count(Axis RunConfig::*axis) {
  return [axis](RunConfig& c, std::string_view k, std::string_view v, int l) {
    const int n = to_int<int>(k, v, l);
    if (n < 2) throw ConfigError("'" + std::string(k) + "' must be >= 2", l);
    (c.*axis).count = n;
  };
}

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"gamma1", real(&OpoParams::gamma1)},
      {"gamma2", real(&OpoParams::gamma2)},
      {"delta1", real(&OpoParams::delta1)},
      {"delta2", real(&OpoParams::delta2)},
      {"a1", real(&OpoParams::a1)},
      {"a2", real(&OpoParams::a2)},
      {"rho1", real(&OpoParams::rho1)},
      {"rho2", real(&OpoParams::rho2)},
      {"a0", real(&OpoParams::a0)},
      {"sigma", real(&OpoParams::sigma)},
      {"omega_max",
       [](RunConfig& c, std::string_view k, std::string_view v, int l) {
         c.quadrature.omega_max = to_double(k, v, l);
         c.omega_max_set = true;
       }},
      {"rel_tol", [](RunConfig& c, std::string_view k, std::string_view v, int l) { c.quadrature.rel_tol = to_double(k, v, l); }},
      {"abs_tol", [](RunConfig& c, std::string_view k, std::string_view v, int l) { c.quadrature.abs_tol = to_double(k, v, l); }},
      {"max_intervals",
       [](RunConfig& c, std::string_view k, std::string_view v, int l) { c.quadrature.max_intervals = to_int<int>(k, v, l); }},
      {"kx_min", axis_bound(&RunConfig::kx, &Axis::min)},
      {"kx_max", axis_bound(&RunConfig::kx, &Axis::max)},
      {"kx_count", axis_count(&RunConfig::kx)},
      {"ky_min", axis_bound(&RunConfig::ky, &Axis::min)},
      {"ky_max", axis_bound(&RunConfig::ky, &Axis::max)},
      {"ky_count", axis_count(&RunConfig::ky)},
      {"psi_min", axis_bound(&RunConfig::psi, &Axis::min)},
      {"psi_max", axis_bound(&RunConfig::psi, &Axis::max)},
      {"psi_count", axis_count(&RunConfig::psi)},
      {"scan_omega_min", axis_bound(&RunConfig::omega, &Axis::min)},
      {"scan_omega_max", axis_bound(&RunConfig::omega, &Axis::max)},
      {"scan_omega_count", axis_count(&RunConfig::omega)},
      {"scheme",
       [](RunConfig& c, std::string_view, std::string_view v, int l) {
         if (v == "kh") c.scheme = DetectionScheme::horizontal;
         else if (v == "vbright") c.scheme = DetectionScheme::vertical_bright;
         else if (v == "vdark") c.scheme = DetectionScheme::vertical_dark;
         else throw ConfigError("'scheme' must be kh, vbright or vdark", l);
       }},
      {"gain",
       [](RunConfig& c, std::string_view k, std::string_view v, int l) {
         if (v == "unit") c.gain = UnitGain{};
         else if (v == "optimal") c.gain = OptimalGain{};
         else if (const auto comma = v.find(','); comma != std::string_view::npos)
           c.gain = FixedGain{{to_double(k, trim(v.substr(0, comma)), l), to_double(k, trim(v.substr(comma + 1)), l)}};
         else c.gain = FixedGain{{to_double(k, v, l), 0.0}};
       }},
      {"cut_psi",
       [](RunConfig& c, std::string_view k, std::string_view v, int l) {
         if (v == "auto") c.cut_psi.reset();
         else c.cut_psi = to_double(k, v, l);
       }},
      {"quantity", [](RunConfig& c, std::string_view, std::string_view v, int) { c.quantity = std::string(v); }},
      {"output", [](RunConfig& c, std::string_view, std::string_view v, int) { c.output = std::string(v); }},
      {"threads",
       [](RunConfig& c, std::string_view k, std::string_view v, int l) {
         c.threads = to_int<int>(k, v, l);
         if (c.threads < 0) throw ConfigError("'threads' must be >= 0", l);
       }},
      {"seed", [](RunConfig& c, std::string_view k, std::string_view v, int l) { c.seed = to_int<std::uint64_t>(k, v, l); }},
      {"mc_samples",
       [](RunConfig& c, std::string_view k, std::string_view v, int l) {
         c.mc_samples = to_int<std::int64_t>(k, v, l);
         if (c.mc_samples < 1000) throw ConfigError("'mc_samples' must be >= 1000", l);
       }},
  };
  return table;
}

void check_axis(const Axis& a) {
  if (!(a.min < a.max)) throw ConfigError(a.name + " axis: min must be < max");
}

} // namespace

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value, int line) {
  const auto& table = setters();
  const auto it = table.find(key);
  if (it == table.end()) throw ConfigError("unknown key '" + std::string(key) + "'", line);
  it->second(cfg, key, value, line);
}

void finalize(RunConfig& cfg) {
  try {
    cfg.params.validate();
    if (!cfg.omega_max_set) cfg.quadrature.omega_max = QuadratureSpec::defaults_for(cfg.params).omega_max;
    cfg.quadrature.validate();
  } catch (const InvalidParams& e) {
    throw ConfigError(e.what());
  }
  check_axis(cfg.kx);
  check_axis(cfg.ky);
  check_axis(cfg.psi);
  check_axis(cfg.omega);
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  int line = 0;
  while (!text.empty()) {
    ++line;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    const auto eq = raw.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line);
    const auto key = trim(raw.substr(0, eq));
    const auto value = trim(raw.substr(eq + 1));
    if (key.empty()) throw ConfigError("missing key before '='", line);
    apply_setting(cfg, key, value, line);
  }
  finalize(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
  std::string text;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  for (const auto& o : overrides) {
    if (o.find('=') == std::string::npos) throw ConfigError("override '" + o + "' is not key=value");
    text += '\n';
    text += o;
  }
  return parse_config(text);
}

std::string_view scheme_name(DetectionScheme s) noexcept {
  switch (s) {
  case DetectionScheme::horizontal: return "kh";
  case DetectionScheme::vertical_bright: return "vbright";
  case DetectionScheme::vertical_dark: return "vdark";
  }
  return "?";
}

std::string describe_gain(const GainSetting& g) {
  if (std::holds_alternative<UnitGain>(g)) return "unit";
  if (std::holds_alternative<OptimalGain>(g)) return "optimal";
  const cplx v = std::get<FixedGain>(g).g;
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g", v.real(), v.imag());
  return buf;
}

} // namespace opo::cli
