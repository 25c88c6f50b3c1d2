#include "pwig/io.hpp"

#include <unistd.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "pwig/models.hpp"

namespace pwig::io {

namespace fs = std::filesystem;

void write_atomic(const fs::path& path, std::string_view content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
  }
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw IoError("rename to " + path.string() + " failed: " + ec.message());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);
  return buf;
}

std::string half_index(long m_twice) {
  const long whole = m_twice / 2;
  if (m_twice % 2 == 0) return std::to_string(whole);
  // -1 -> "-0.5", 3 -> "1.5"
  const std::string sign = m_twice < 0 ? "-" : "";
  return sign + std::to_string(std::labs(m_twice) / 2) + ".5";
}

namespace {

std::string header(LatticeMode mode, Period period, long n_min_twice, int k_count) {
  return std::string("# mode=") + (mode == LatticeMode::Integer ? "integer" : "half") +
         ", period=" + (period == Period::Pi ? "pi" : "2pi") + ", n_min_twice=" + std::to_string(n_min_twice) +
         ", k_count=" + std::to_string(k_count) + "\n";
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start)));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

long to_long(const std::string& s) {
  long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw IoError("not an integer: '" + s + "'");
  return v;
}

double to_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw IoError("not a number: '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw IoError("not a number: '" + s + "'");
  }
}

}  // namespace

std::string wigner_csv(const WignerField& w) {
  std::string out = header(w.mode(), w.grid().period(), w.m_min_twice(), w.grid().count());
  for (std::size_t r = 0; r < w.rows(); ++r) {
    const std::string m = std::to_string(w.row_twice(r));
    for (std::size_t j = 0; j < w.cols(); ++j) out += m + ", " + std::to_string(j) + ", " + fmt(w(r, j)) + "\n";
  }
  return out;
}

WignerField read_wigner_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line.rfind("#", 0) != 0) throw IoError("missing Wigner CSV header");
  std::map<std::string, std::string> meta;
  for (const auto& kv : split(std::string_view(line).substr(1), ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw IoError("bad header field '" + kv + "'");
    meta[trim(kv.substr(0, eq))] = trim(kv.substr(eq + 1));
  }
  for (const char* key : {"mode", "period", "n_min_twice", "k_count"})
    if (!meta.count(key)) throw IoError(std::string("header lacks ") + key);
  const LatticeMode mode = meta["mode"] == "integer" ? LatticeMode::Integer
                           : meta["mode"] == "half"  ? LatticeMode::HalfInteger
                                                     : throw IoError("bad mode " + meta["mode"]);
  const Period period = parse_period(meta["period"]);
  const long lo = to_long(meta["n_min_twice"]);
  const int count = static_cast<int>(to_long(meta["k_count"]));

  std::vector<std::tuple<long, long, double>> cells;
  long hi = lo;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 3) throw IoError("bad Wigner CSV row '" + line + "'");
    cells.emplace_back(to_long(f[0]), to_long(f[1]), to_double(f[2]));
    hi = std::max(hi, std::get<0>(cells.back()));
  }
  WignerField w(mode, lo, hi, QuasiMomentumGrid(period, count));
  for (const auto& [m, j, v] : cells) {
    if (j < 0 || j >= count) throw IoError("k_index out of range");
    w(w.row_of(m), static_cast<std::size_t>(j)) = v;
  }
  return w;
}

std::string kernel_csv(const std::vector<dynamics::PropagatorKernel>& kernels, LatticeMode mode) {
  if (kernels.empty()) throw IoError("no kernel rows to write");
  const auto& g = kernels.front().grid;
  long lo = kernels.front().m_twice;
  for (const auto& k : kernels) lo = std::min(lo, k.m_twice);
  std::string out = header(mode, g.period(), lo, g.count());
  for (const auto& k : kernels) {
    const std::string n = half_index(k.m_twice), t = fmt(k.t);
    for (std::size_t j = 0; j < k.samples.size(); ++j)
      out += n + ", " + std::to_string(j) + ", " + t + ", " + fmt(k.samples[j]) + "\n";
  }
  return out;
}

std::string heatmap_pgm(const WignerField& w) {
  const std::size_t width = w.rows(), height = w.cols();
  std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  const double vmax = w.max_abs();
  out.reserve(out.size() + width * height);
  for (std::size_t y = 0; y < height; ++y) {
    const std::size_t j = height - 1 - y;
    for (std::size_t r = 0; r < width; ++r) {
      long px = 128;
      if (vmax > 0.0) px = std::clamp(std::lround(128.0 + 127.0 * w(r, j) / vmax), 1L, 255L);
      out.push_back(static_cast<char>(static_cast<unsigned char>(px)));
    }
  }
  return out;
}

json to_json(const DensityWindow& rho) {
  json re = json::array(), im = json::array();
  for (int a = 0; a < rho.dim(); ++a) {
    json rr = json::array(), ii = json::array();
    for (int b = 0; b < rho.dim(); ++b) {
      const cplx v = rho(rho.n_min() + a, rho.n_min() + b);
      rr.push_back(v.real());
      ii.push_back(v.imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  return {{"n_min", rho.n_min()}, {"dim", rho.dim()}, {"re", re}, {"im", im}};
}

DensityWindow density_from_json(const json& j) {
  const long n_min = j.at("n_min").get<long>();
  const int dim = j.at("dim").get<int>();
  DensityWindow rho(n_min, dim);
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (re.size() != static_cast<std::size_t>(dim) || im.size() != static_cast<std::size_t>(dim))
    throw IoError("density matrix rows do not match dim");
  for (int a = 0; a < dim; ++a) {
    if (re[a].size() != static_cast<std::size_t>(dim) || im[a].size() != static_cast<std::size_t>(dim))
      throw IoError("density matrix columns do not match dim");
    for (int b = 0; b < dim; ++b) rho(n_min + a, n_min + b) = {re[a][b].get<double>(), im[a][b].get<double>()};
  }
  return rho;
}

json to_json(const oracle::OracleReport& r) {
  return {{"name", r.name},
          {"reference", r.reference},
          {"comparison", r.comparison},
          {"max_abs_error", r.max_abs_error},
          {"tolerance", r.tolerance},
          {"pass", r.pass}};
}

json to_json(const LatticeState& psi) {
  json re = json::array(), im = json::array();
  for (const cplx& a : psi.amplitudes()) {
    re.push_back(a.real());
    im.push_back(a.imag());
  }
  return {{"n_min", psi.n_min()}, {"re", re}, {"im", im}};
}

LatticeState state_from_json(const json& j) {
  const auto& re = j.at("re");
  const json im = j.contains("im") ? j.at("im") : json::array();
  if (!im.empty() && im.size() != re.size()) throw IoError("re and im lengths differ");
  std::vector<cplx> amps;
  for (std::size_t i = 0; i < re.size(); ++i)
    amps.emplace_back(re[i].get<double>(), im.empty() ? 0.0 : im[i].get<double>());
  return LatticeState(j.at("n_min").get<long>(), std::move(amps));
}

ModelConfig model_from_json(const json& j) {
  const json& m = j.contains("model") && j.at("model").is_object() ? j.at("model") : j;
  ModelConfig c;
  if (m.contains("model")) c.model = m.at("model").get<std::string>();
  static const std::vector<std::string> known{"jc", "rabi", "buck_sukumar", "dispersive", "tight_binding", "custom"};
  if (std::find(known.begin(), known.end(), c.model) == known.end()) throw IoError("unknown model '" + c.model + "'");
  c.omega = m.value("omega", c.omega);
  c.delta = m.value("delta", c.delta);
  c.g = m.value("g", c.g);
  if (m.contains("Omega")) c.Omega = m.at("Omega").get<double>();
  if (m.contains("n_max")) c.n_max = m.at("n_max").get<long>();
  c.alpha_re = m.value("alpha_re", c.alpha_re);
  c.alpha_im = m.value("alpha_im", c.alpha_im);
  if (c.model == "custom") c.custom = m;
  return c;
}

SpectrumModel spectrum_for(const ModelConfig& m) {
  if (m.model == "jc") return models::jc_spectrum({m.omega, m.delta, m.g});
  if (m.model == "buck_sukumar") return models::bs_spectrum(m.omega, m.g);
  if (m.model == "dispersive") return models::dispersive_spectrum(m.omega, m.delta, m.g);
  if (m.model == "custom") {
    if (!m.custom.contains("epsilon")) throw IoError("custom spectrum needs 'epsilon'");
    return SpectrumModel::custom(m.custom.value("n_min", 0L), m.custom.at("epsilon").get<std::vector<double>>());
  }
  throw IoError("model '" + m.model + "' has no diagonal spectrum");
}

SpectrumModel spectrum_from_json(const json& j) { return spectrum_for(model_from_json(j)); }

LatticeMode parse_mode(std::string_view s) {
  if (s == "int" || s == "integer") return LatticeMode::Integer;
  if (s == "half") return LatticeMode::HalfInteger;
  throw IoError("mode must be int or half, got '" + std::string(s) + "'");
}

Period parse_period(std::string_view s) {
  if (s == "pi") return Period::Pi;
  if (s == "2pi") return Period::TwoPi;
  throw IoError("period must be pi or 2pi, got '" + std::string(s) + "'");
}

std::pair<long, long> parse_window(std::string_view s) {
  // A leading '-' belongs to the first bound, so split on the first ':'.
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) throw IoError("window must be A:B");
  const long a = to_long(trim(s.substr(0, colon))), b = to_long(trim(s.substr(colon + 1)));
  if (a > b) throw IoError("window lower bound exceeds upper bound");
  return {a, b};
}

std::vector<double> parse_times(std::string_view s) {
  std::vector<double> out;
  for (const auto& f : split(s, ',')) out.push_back(to_double(f));
  return out;
}

RunConfig run_config_from_json(const json& j, const fs::path& base) {
  RunConfig c;
  c.model = model_from_json(j);
  if (j.contains("state")) {
    const auto& s = j.at("state");
    c.state.kind = s.value("kind", c.state.kind);
    c.state.n1 = s.value("n1", c.state.n1);
    c.state.n2 = s.value("n2", c.state.n2);
    c.state.k1 = s.value("k1", c.state.k1);
    c.state.k2 = s.value("k2", c.state.k2);
    c.state.branch = s.value("branch", c.state.branch);
    if (s.contains("file")) {
      fs::path f = s.at("file").get<std::string>();
      c.state.file = f.is_absolute() ? f : base / f;
    }
  }
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    c.grid.k_count = g.value("k_count", c.grid.k_count);
    if (g.contains("period")) c.grid.period = parse_period(g.at("period").get<std::string>());
    if (g.contains("mode")) c.grid.mode = parse_mode(g.at("mode").get<std::string>());
    if (g.contains("window")) {
      const auto w = g.at("window").get<std::vector<long>>();
      if (w.size() != 2) throw IoError("grid.window must be [lo, hi]");
      c.grid.lo = w[0];
      c.grid.hi = w[1];
    }
  }
  if (j.contains("times")) c.times = j.at("times").get<std::vector<double>>();
  if (j.contains("out")) c.out_dir = j.at("out").get<std::string>();
  c.truncation = j.value("truncation", c.truncation);
  return c;
}

void validate(const RunConfig& c) {
  if (c.grid.k_count <= 0 || c.grid.k_count % 2 != 0) throw IoError("k_count must be positive and even");
  if (c.grid.lo > c.grid.hi) throw IoError("empty lattice window");
  if (c.grid.mode == LatticeMode::HalfInteger && c.grid.period != Period::TwoPi)
    throw IoError("half-integer mode needs period 2pi");
  for (double t : c.times)
    if (!(t >= 0.0)) throw IoError("times must be non-negative");
  if (c.state.kind == "amplitudes" && !fs::exists(c.state.file))
    throw IoError("state file not found: " + c.state.file.string());
  static const std::vector<std::string> kinds{"position", "position_cat", "momentum",     "momentum_cat",
                                              "coherent", "dressed_coherent", "amplitudes"};
  if (std::find(kinds.begin(), kinds.end(), c.state.kind) == kinds.end())
    throw IoError("unknown state kind '" + c.state.kind + "'");
}

}  // namespace pwig::io
