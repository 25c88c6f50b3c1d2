// File formats and run configuration: Wigner/kernel CSV, density and
// spectrum JSON, 8-bit grayscale heatmaps, atomic writes.
#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pwig/dynamics.hpp"
#include "pwig/lattice.hpp"
#include "pwig/oracle.hpp"
#include "pwig/spectrum.hpp"

namespace pwig::io {

using nlohmann::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes to a sibling temp file, then renames over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

/// %.17g with negative zero printed as 0.
std::string fmt(double v);
/// Doubled index M as a decimal n = M/2 ("3", "-1.5").
std::string half_index(long m_twice);

/// "# mode=<integer|half>, period=<pi|2pi>, n_min_twice=<int>, k_count=<int>"
/// followed by "n_twice, k_index, value" rows.
std::string wigner_csv(const WignerField& w);
WignerField read_wigner_csv(std::string_view text);

/// Kernel rows "n, k_index, t, value" under the WignerField header.
std::string kernel_csv(const std::vector<dynamics::PropagatorKernel>& kernels, LatticeMode mode);

/// Binary PGM (P5), one column per lattice row and one pixel row per k sample
/// (largest k at the top).  Pixel = 128 + 127 v / max|W|, clipped to [1, 255].
std::string heatmap_pgm(const WignerField& w);

json to_json(const DensityWindow& rho);
DensityWindow density_from_json(const json& j);

json to_json(const oracle::OracleReport& r);

/// {n_min, re: [...], im: [...]}.
json to_json(const LatticeState& psi);
LatticeState state_from_json(const json& j);

struct ModelConfig {
  std::string model = "jc";  // jc | rabi | buck_sukumar | dispersive | tight_binding | custom
  double omega = 1.0;
  double delta = 0.0;
  double g = 1.0;
  std::optional<double> Omega;
  std::optional<long> n_max;
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  json custom;  // {n_min, epsilon} for model = custom
};

ModelConfig model_from_json(const json& j);
/// Diagonal spectrum of a model; throws for rabi and tight_binding.
SpectrumModel spectrum_for(const ModelConfig& m);
/// {model: "custom", n_min, epsilon: [...]} or a named model object.
SpectrumModel spectrum_from_json(const json& j);

struct StateSpec {
  // position | position_cat | momentum | momentum_cat | coherent |
  // dressed_coherent | amplitudes
  std::string kind = "position";
  long n1 = 0;
  long n2 = 1;
  double k1 = 0.0;
  double k2 = kPi / 2.0;
  std::string branch = "minus";
  std::filesystem::path file;
};

struct GridSpec {
  int k_count = 256;
  Period period = Period::TwoPi;
  long lo = -10;
  long hi = 10;
  LatticeMode mode = LatticeMode::Integer;
};

struct RunConfig {
  ModelConfig model;
  StateSpec state;
  GridSpec grid;
  std::vector<double> times{0.0};
  std::filesystem::path out_dir = ".";
  int truncation = -1;
};

/// Parses a config document; relative file paths resolve against `base`.
RunConfig run_config_from_json(const json& j, const std::filesystem::path& base = ".");
/// Throws IoError on a violated RunConfig invariant.
void validate(const RunConfig& c);

LatticeMode parse_mode(std::string_view s);
Period parse_period(std::string_view s);
std::pair<long, long> parse_window(std::string_view s);
std::vector<double> parse_times(std::string_view s);

}  // namespace pwig::io
