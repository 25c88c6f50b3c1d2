// pwig: compute and evolve discrete Wigner functions on the polariton lattice.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "pwig/dynamics.hpp"
#include "pwig/io.hpp"
#include "pwig/models.hpp"
#include "pwig/phase_space.hpp"
#include "pwig/rabi.hpp"
#include "pwig/verify.hpp"

namespace fs = std::filesystem;
using namespace pwig;
using io::json;

namespace {

struct Overrides {
  std::string config;
  std::string out;
  std::string mode;
  int k_count = 0;
  std::string window;
  std::string times;
  std::string model;
};

io::RunConfig load_config(const Overrides& o) {
  json doc = json::object();
  fs::path base = ".";
  std::string path = o.config;
  if (path.empty())
    if (const char* env = std::getenv("WIGNER_CONFIG")) path = env;
  if (!path.empty()) {
    doc = json::parse(io::read_file(path));
    base = fs::path(path).parent_path();
  }
  auto c = io::run_config_from_json(doc, base);
  if (!o.out.empty()) c.out_dir = o.out;
  if (!o.mode.empty()) c.grid.mode = io::parse_mode(o.mode);
  if (o.k_count != 0) c.grid.k_count = o.k_count;
  if (!o.window.empty()) std::tie(c.grid.lo, c.grid.hi) = io::parse_window(o.window);
  if (!o.times.empty()) c.times = io::parse_times(o.times);
  if (!o.model.empty()) {
    json m = doc.contains("model") && doc["model"].is_object() ? doc["model"] : doc;
    m["model"] = o.model;
    c.model = io::model_from_json(m);
  }
  // Half-integer rows carry odd harmonics, so they force the 2pi period.
  if (c.grid.mode == LatticeMode::HalfInteger && !(doc.contains("grid") && doc["grid"].contains("period")))
    c.grid.period = Period::TwoPi;
  io::validate(c);
  return c;
}

cplx alpha_of(const io::RunConfig& c) { return {c.model.alpha_re, c.model.alpha_im}; }

bool is_momentum(const io::RunConfig& c) { return c.state.kind == "momentum" || c.state.kind == "momentum_cat"; }

LatticeState build_state(const io::RunConfig& c) {
  const auto& s = c.state;
  const long lo = c.grid.lo, hi = c.grid.hi;
  if (s.kind == "position") return LatticeState::position(s.n1, std::min(lo, s.n1) - 1, std::max(hi, s.n1) + 1);
  if (s.kind == "position_cat") {
    if (s.n1 == s.n2) throw PhaseSpaceError("position cat needs n1 != n2");
    const long a = std::min({lo, s.n1, s.n2}) - 1, b = std::max({hi, s.n1, s.n2}) + 1;
    std::vector<cplx> amps(static_cast<std::size_t>(b - a + 1));
    amps[static_cast<std::size_t>(s.n1 - a)] = 1.0;
    amps[static_cast<std::size_t>(s.n2 - a)] = 1.0;
    return LatticeState(a, std::move(amps));
  }
  if (s.kind == "coherent") return models::coherent_lattice_state(alpha_of(c));
  if (s.kind == "dressed_coherent") {
    const auto branch = s.branch == "plus" ? models::Branch::Plus : models::Branch::Minus;
    auto psi = models::dressed_coherent(alpha_of(c), branch, lo - 1, hi + 1);
    if (branch == models::Branch::Plus) psi = LatticeState(psi.n_min(), {psi.amplitudes().begin(), psi.amplitudes().end()});
    return psi;
  }
  if (s.kind == "amplitudes") return io::state_from_json(json::parse(io::read_file(s.file)));
  throw io::IoError("state kind '" + s.kind + "' has no ket form");
}

DeltaField build_delta(const io::RunConfig& c) {
  if (c.state.kind == "momentum") return momentum_eigenstate_wigner(c.state.k1, c.grid.mode, c.grid.lo, c.grid.hi);
  return cat_momentum_wigner(c.state.k1, c.state.k2, c.grid.mode, c.grid.lo, c.grid.hi);
}

QuasiMomentumGrid grid_of(const io::RunConfig& c) { return {c.grid.period, c.grid.k_count}; }

WignerField wigner_on_window(const LatticeState& psi, const io::RunConfig& c) {
  const auto wide = psi.widened(std::min(psi.n_min(), c.grid.lo - 1), std::max(psi.n_max(), c.grid.hi + 1));
  return wigner_from_state(wide, grid_of(c), c.grid.mode).cropped(2 * c.grid.lo, 2 * c.grid.hi);
}

std::string position_marginal_csv(const WignerField& w) {
  const double scale = w.grid().spacing() * kTwoPi / w.grid().length();
  std::string out = "n, probability\n";
  for (std::size_t r = 0; r < w.rows(); ++r) {
    double s = 0.0;
    for (double v : w.row(r)) s += v;
    out += io::half_index(w.row_twice(r)) + ", " + io::fmt(s * scale) + "\n";
  }
  return out;
}

void write_field(const fs::path& dir, const std::string& stem, const WignerField& w) {
  io::write_atomic(dir / (stem + ".csv"), io::wigner_csv(w));
  io::write_atomic(dir / (stem + ".pgm"), io::heatmap_pgm(w));
}

int cmd_wigner(const io::RunConfig& c) {
  const WignerField w = is_momentum(c) ? build_delta(c).render(grid_of(c)) : wigner_on_window(build_state(c), c);
  write_field(c.out_dir, "wigner", w);
  std::cout << "wrote " << (c.out_dir / "wigner.csv").string() << " and wigner.pgm (" << w.rows() << " x "
            << w.cols() << ")\n";
  return 0;
}

struct Evolved {
  WignerField field;
  std::optional<double> cross_check;
};

Evolved evolve_once(const io::RunConfig& c, const LatticeState& psi0, double t) {
  const auto& m = c.model;
  const auto grid = grid_of(c);
  if (m.model == "tight_binding") {
    const auto psi = dynamics::tb_evolve_state(psi0, t);
    Evolved e{wigner_on_window(psi, c), std::nullopt};
    if (c.grid.mode == LatticeMode::HalfInteger) {
      const auto kern = dynamics::tb_propagate_wigner(wigner_from_state(psi0, grid, c.grid.mode), t);
      const auto direct = wigner_from_state(psi, grid, c.grid.mode);
      double err = 0.0;
      for (std::size_t r = 0; r < direct.rows(); ++r)
        for (std::size_t j = 0; j < direct.cols(); ++j)
          err = std::max(err, std::abs(direct(r, j) - kern.at_twice(direct.row_twice(r), j)));
      e.cross_check = err;
    }
    return e;
  }
  if (m.model == "rabi") {
    const models::JCParams ref{m.omega, m.delta, m.g};
    rabi::RabiParams rp = rabi::from_jc(ref);
    if (m.Omega) rp.Omega = *m.Omega;
    if (c.state.kind != "position") throw io::IoError("rabi evolution starts from a dressed site (state kind position)");
    const auto p = rabi::wigner_portrait(ref, rp, c.state.n1, t, grid, c.grid.mode);
    return {wigner_on_window(p.lattice, c), std::nullopt};
  }
  const auto spectrum = io::spectrum_for(m);
  const auto psi = dynamics::phase_evolve(psi0, spectrum, t);
  Evolved e{wigner_on_window(psi, c), std::nullopt};
  const auto w0 = wigner_from_state(psi0, grid, c.grid.mode);
  const long width = psi0.n_max() - psi0.n_min() + 1;
  const int trunc = c.truncation >= 0 ? c.truncation : static_cast<int>((width + 1) / 2);
  if (grid.count() >= 2 * (2 * trunc + 1)) {
    const auto kern = dynamics::propagate_wigner(w0, spectrum, t, {.truncation = trunc});
    const auto direct = wigner_from_state(psi, grid, c.grid.mode);
    double err = 0.0;
    for (std::size_t i = 0; i < kern.values().size(); ++i)
      err = std::max(err, std::abs(kern.values()[i] - direct.values()[i]));
    e.cross_check = err;
  }
  return e;
}

int cmd_evolve(const io::RunConfig& c) {
  json index = json::array();
  for (std::size_t i = 0; i < c.times.size(); ++i) {
    const double t = c.times[i];
    const std::string stem = "evolve_" + std::to_string(i);
    Evolved e{WignerField(c.grid.mode, 2 * c.grid.lo, 2 * c.grid.hi, grid_of(c)), std::nullopt};
    if (is_momentum(c)) {
      const auto spectrum = io::spectrum_for(c.model);
      const int trunc = c.truncation >= 0 ? c.truncation : static_cast<int>((c.grid.hi - c.grid.lo + 2) / 2);
      e.field = t == 0.0 ? build_delta(c).render(grid_of(c))
                         : dynamics::propagate_delta_field(build_delta(c), spectrum, t, grid_of(c), trunc);
    } else {
      const auto psi0 = build_state(c);
      e = t == 0.0 ? Evolved{wigner_on_window(psi0, c), std::nullopt} : evolve_once(c, psi0, t);
    }
    write_field(c.out_dir, stem, e.field);
    io::write_atomic(c.out_dir / (stem + "_marginal.csv"), position_marginal_csv(e.field));
    json entry = {{"t", t}, {"csv", stem + ".csv"}, {"pgm", stem + ".pgm"}};
    if (e.cross_check) {
      entry["kernel_vs_direct_max_abs"] = *e.cross_check;
      std::cerr << "t=" << t << ": kernel vs direct route max |dW| = " << *e.cross_check << "\n";
    }
    index.push_back(entry);
  }
  io::write_atomic(c.out_dir / "evolve.json", index.dump(2) + "\n");
  std::cout << "wrote " << c.times.size() << " portraits to " << c.out_dir.string() << "\n";
  return 0;
}

int cmd_kernel(const io::RunConfig& c) {
  const auto spectrum = io::spectrum_for(c.model);
  const auto grid = grid_of(c);
  const int trunc = c.truncation >= 0 ? c.truncation : static_cast<int>((c.grid.hi - c.grid.lo + 2) / 2);
  std::vector<dynamics::PropagatorKernel> ks;
  const long step = c.grid.mode == LatticeMode::Integer ? 2 : 1;
  for (double t : c.times)
    for (long m = 2 * c.grid.lo; m <= 2 * c.grid.hi; m += step) ks.push_back(dynamics::kernel(spectrum, m, grid, t, trunc));
  io::write_atomic(c.out_dir / "kernel.csv", io::kernel_csv(ks, c.grid.mode));
  std::cout << "wrote " << (c.out_dir / "kernel.csv").string() << " (N'=" << trunc << ")\n";
  return 0;
}

int cmd_marginals(io::RunConfig c) {
  c.grid.mode = LatticeMode::HalfInteger;
  c.grid.period = Period::TwoPi;
  const auto w = wigner_on_window(build_state(c), c);
  const auto pos = marginal_position(w);
  const auto mom = marginal_momentum(w);
  json j = {{"position", json::array()}, {"momentum", json::array()}};
  for (std::size_t r = 0; r < w.rows(); ++r)
    if (w.row_twice(r) % 2 == 0) j["position"].push_back({{"n", w.row_twice(r) / 2}, {"value", pos[r]}});
  for (std::size_t i = 0; i < mom.size(); ++i)
    j["momentum"].push_back({{"k", w.grid().at(static_cast<int>(i))}, {"value", mom[i]}});
  io::write_atomic(c.out_dir / "marginals.json", j.dump(2) + "\n");
  std::cout << "wrote " << (c.out_dir / "marginals.json").string() << "\n";
  return 0;
}

int cmd_caustics(const io::RunConfig& c, const json& doc) {
  models::CausticQuery q;
  const json cq = doc.contains("caustic") ? doc["caustic"] : json::object();
  q.n = cq.value("n", 10L);
  q.dk = cq.value("dk", -1.0);
  q.t = cq.value("t", 1.0);
  q.delta = cq.value("delta", c.model.delta);
  q.g = cq.value("g", c.model.g);
  json out = json::array();
  for (const auto& p : models::caustics(q)) {
    const char* kind = p.kind == models::CausticPoint::Kind::Maximum   ? "maximum"
                       : p.kind == models::CausticPoint::Kind::Minimum ? "minimum"
                                                                       : "neither";
    out.push_back({{"x", p.x}, {"phase", p.phase}, {"kind", kind}});
  }
  json j = {{"query", {{"n", q.n}, {"dk", q.dk}, {"t", q.t}, {"delta", q.delta}, {"g", q.g}}},
            {"roots", out},
            {"strong_coupling_root", models::strong_coupling_root(q)},
            {"strong_coupling_family", models::strong_coupling_family(q)}};
  io::write_atomic(c.out_dir / "caustics.json", j.dump(2) + "\n");
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& level, bool inject, const std::string& out) {
  verify::VerifyOptions opt;
  opt.level = level == "full" ? verify::Level::Full : verify::Level::Fast;
  opt.inject_kernel_sign_error = inject;
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = verify::run(opt);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json j = json::array();
  for (const auto& r : reports) {
    std::printf("%-4s %-40s err=%.3e tol=%.1e\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.max_abs_error,
                r.tolerance);
    j.push_back(io::to_json(r));
  }
  std::printf("%zu checks in %.2f s\n", reports.size(), secs);
  if (!out.empty()) io::write_atomic(fs::path(out) / "verify.json", j.dump(2) + "\n");
  return verify::all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Wigner functions on the polariton lattice"};
  app.require_subcommand(1);
  Overrides o;
  const auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--config", o.config, "JSON run configuration (default: $WIGNER_CONFIG)");
    sub->add_option("--out", o.out, "output directory");
    sub->add_option("--mode", o.mode, "lattice mode")->check(CLI::IsMember({"int", "half"}));
    sub->add_option("--k-count", o.k_count, "quasi-momentum samples (even)");
    sub->add_option("--window", o.window, "lattice window A:B");
    sub->add_option("--times", o.times, "comma-separated times");
    sub->add_option("--model", o.model, "model name");
  };
  auto* wig = app.add_subcommand("wigner", "Wigner portrait of the configured state");
  auto* evo = app.add_subcommand("evolve", "evolve the configured state and write portraits");
  auto* ker = app.add_subcommand("kernel", "dump the propagator kernel");
  auto* mar = app.add_subcommand("marginals", "position and momentum marginals");
  auto* cau = app.add_subcommand("caustics", "stationary points of the kernel phase");
  for (auto* s : {wig, evo, ker, mar, cau}) add_common(s);

  auto* ver = app.add_subcommand("verify", "run the oracle and invariant suites");
  std::string level = "fast", ver_out;
  bool inject = false;
  ver->add_option("--level", level, "suite size")->check(CLI::IsMember({"fast", "full"}));
  ver->add_option("--out", ver_out, "directory for verify.json");
  ver->add_flag("--inject-kernel-sign-error", inject, "harness self-test: corrupt the kernel phase");

  CLI11_PARSE(app, argc, argv);
  try {
    if (ver->parsed()) return cmd_verify(level, inject, ver_out);
    const auto c = load_config(o);
    if (wig->parsed()) return cmd_wigner(c);
    if (evo->parsed()) return cmd_evolve(c);
    if (ker->parsed()) return cmd_kernel(c);
    if (mar->parsed()) return cmd_marginals(c);
    if (cau->parsed()) {
      std::string path = o.config;
      if (path.empty())
        if (const char* env = std::getenv("WIGNER_CONFIG")) path = env;
      return cmd_caustics(c, path.empty() ? json::object() : json::parse(io::read_file(path)));
    }
  } catch (const std::exception& e) {
    std::cerr << "pwig: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
