#include "pwig/verify.hpp"

#include <algorithm>
#include <cmath>

#include "pwig/bessel.hpp"
#include "pwig/dynamics.hpp"
#include "pwig/models.hpp"
#include "pwig/phase_space.hpp"

namespace pwig::verify {

LatticeState random_state(std::mt19937_64& rng, long n_min, int size) {
  std::normal_distribution<double> nd;
  std::vector<cplx> a(static_cast<std::size_t>(size + 2));
  for (int i = 1; i <= size; ++i) a[i] = {nd(rng), nd(rng)};
  return LatticeState(n_min - 1, std::move(a));
}

DensityWindow random_density(std::mt19937_64& rng, long n_min, int dim, int rank) {
  std::uniform_real_distribution<double> ud(0.1, 1.0);
  std::normal_distribution<double> nd;
  DensityWindow rho(n_min, dim);
  std::vector<double> p(static_cast<std::size_t>(rank));
  double z = 0.0;
  for (auto& x : p) z += (x = ud(rng));
  for (int r = 0; r < rank; ++r) {
    std::vector<cplx> v(static_cast<std::size_t>(dim));
    double nrm = 0.0;
    for (auto& x : v) {
      x = {nd(rng), nd(rng)};
      nrm += std::norm(x);
    }
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) rho(n_min + a, n_min + b) += p[r] / z * v[a] * std::conj(v[b]) / nrm;
  }
  return rho;
}

bool all_pass(const std::vector<oracle::OracleReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

oracle::OracleReport thin(oracle::OracleReport r, std::size_t keep) {
  const auto shrink = [keep](std::vector<double>& v) {
    if (v.size() <= keep) return;
    std::vector<double> out;
    for (std::size_t i = 0; i < keep; ++i) out.push_back(v[i * v.size() / keep]);
    v = std::move(out);
  };
  shrink(r.reference);
  shrink(r.comparison);
  return r;
}

namespace {

struct Suite {
  const VerifyOptions& opt;
  std::mt19937_64 rng;
  std::vector<oracle::OracleReport> out;

  bool full() const { return opt.level == Level::Full; }

  void add(std::string name, std::vector<double> ref, std::vector<double> cmp, double tol) {
    out.push_back(thin(oracle::compare(std::move(name), std::move(ref), std::move(cmp), tol)));
  }

  void marginals() {
    const int sites = full() ? 32 : 8, states = full() ? 50 : 5;
    const QuasiMomentumGrid grid(Period::TwoPi, 64);
    std::vector<double> pr, pc, mr, mc;
    for (int s = 0; s < states; ++s) {
      const auto psi = random_state(rng, 0, sites);
      const auto w = wigner_from_state(psi, grid, LatticeMode::HalfInteger);
      const auto pos = marginal_position(w);
      for (std::size_t r = 0; r < w.rows(); ++r) {
        const long m = w.row_twice(r);
        pr.push_back(m % 2 == 0 ? std::norm(psi(m / 2)) : 0.0);
        pc.push_back(pos[r]);
      }
      const auto mom = marginal_momentum(w);
      for (int j = 0; j < grid.count(); ++j) {
        mr.push_back(std::norm(oracle::direct_transform(psi, grid.at(j))) / kTwoPi);
        mc.push_back(mom[static_cast<std::size_t>(j)]);
      }
    }
    add("marginal_position", pr, pc, 1e-10);
    add("marginal_momentum", mr, mc, 1e-10);
  }

  void naive_points() {
    const auto psi = random_state(rng, -5, full() ? 24 : 10);
    const QuasiMomentumGrid grid(Period::TwoPi, 64);
    const auto w = wigner_from_state(psi, grid, LatticeMode::HalfInteger);
    std::uniform_int_distribution<std::size_t> rr(0, w.rows() - 1), cc(0, w.cols() - 1);
    std::vector<double> ref, cmp;
    for (int i = 0; i < (full() ? 100 : 20); ++i) {
      const std::size_t r = rr(rng), j = cc(rng);
      ref.push_back(oracle::naive_wigner(psi, w.row_twice(r), grid.at(static_cast<int>(j))));
      cmp.push_back(w(r, j));
    }
    add("wigner_vs_naive_sum", ref, cmp, 1e-12);
  }

  void reconstruction() {
    const int dim = full() ? 8 : 4;
    const auto rho = random_density(rng, -2, dim);
    const QuasiMomentumGrid grid(Period::TwoPi, 4 * dim);
    const auto w = wigner_from_density(rho, grid, LatticeMode::HalfInteger);
    const auto back = reconstruct_operator(w, rho.n_min(), rho.dim());
    std::vector<double> ref, cmp;
    for (long a = rho.n_min(); a < rho.n_min() + dim; ++a)
      for (long b = rho.n_min(); b < rho.n_min() + dim; ++b) {
        ref.push_back(rho(a, b).real());
        ref.push_back(rho(a, b).imag());
        cmp.push_back(back(a, b).real());
        cmp.push_back(back(a, b).imag());
      }
    add("reconstruction_roundtrip", ref, cmp, 1e-10);
  }

  void bessel_table() {
    std::vector<double> ref, cmp;
    for (double x : {0.5, 10.0, 37.3})
      for (int n = 0; n <= 40; ++n) {
        ref.push_back(std::cyl_bessel_j(static_cast<double>(n), x));
        cmp.push_back(bessel::jn(n, x));
      }
    add("bessel_vs_std", ref, cmp, 1e-12);
  }

  void tight_binding() {
    const double t = full() ? 5.0 : 2.0;
    const long half = full() ? 60 : 20;
    const auto core = random_state(rng, -3, 6);
    const auto psi0 = core.widened(-half, half - 1);
    const auto ode = oracle::ode_tb_evolve(psi0, t, 1e-10);
    const auto green = dynamics::tb_evolve_state(psi0, t);
    std::vector<double> ref, cmp;
    for (long n = ode.state.n_min(); n <= ode.state.n_max(); ++n) {
      ref.push_back(ode.state(n).real());
      ref.push_back(ode.state(n).imag());
      cmp.push_back(green(n).real());
      cmp.push_back(green(n).imag());
    }
    add("tb_green_vs_ode", ref, cmp, 1e-8);

    // Closed-form Wigner evolution against the Wigner of the evolved ket.
    const QuasiMomentumGrid grid(Period::TwoPi, 32);
    const auto w0 = wigner_from_state(core, grid, LatticeMode::HalfInteger);
    const double tw = full() ? 3.0 : 1.0;
    const auto wt = dynamics::tb_propagate_wigner(w0, tw);
    const auto direct = wigner_from_state(dynamics::tb_evolve_state(core, tw), grid, LatticeMode::HalfInteger);
    std::vector<double> r2, c2;
    for (std::size_t r = 0; r < direct.rows(); ++r)
      for (std::size_t j = 0; j < direct.cols(); ++j) {
        const long m = direct.row_twice(r);
        r2.push_back(direct(r, j));
        c2.push_back(wt.has_row(m) ? wt.at_twice(m, j) : 0.0);
      }
    add("tb_wigner_closed_form", r2, c2, 1e-10);
  }

  void kernel_propagation() {
    const auto jc = models::jc_spectrum({1.0, 0.5, 1.0});
    // A sign error in the kernel phase is the same as running time backwards.
    const SpectrumModel used = opt.inject_kernel_sign_error
                                   ? SpectrumModel("jc_sign_flipped", [&jc](long n) { return -jc(n); })
                                   : jc;
    const int count = full() ? 256 : 128;
    const QuasiMomentumGrid grid(Period::TwoPi, count);
    const auto psi = random_state(rng, -4, 10);
    const auto w0 = wigner_from_state(psi, grid, LatticeMode::Integer);
    std::vector<double> ts{0.5, 5.0};
    if (full()) ts.push_back(50.0);
    std::vector<double> ref, cmp;
    for (double t : ts) {
      const auto wk = dynamics::propagate_wigner(w0, used, t);
      const auto we = wigner_from_state(oracle::eigenphase_evolve(psi, jc, t), grid, LatticeMode::Integer);
      ref.insert(ref.end(), we.values().begin(), we.values().end());
      cmp.insert(cmp.end(), wk.values().begin(), wk.values().end());
    }
    add("kernel_propagation_equivalence", ref, cmp, 1e-8);

    std::vector<double> tr;
    std::uniform_real_distribution<double> ud(0.0, kTwoPi);
    for (int i = 0; i < 8; ++i) {
      const long m = 2 * (i - 4);
      tr.push_back(dynamics::kernel_trace_identity_check(jc, m, m, ud(rng), ud(rng), 1.7, 6));
      tr.push_back(dynamics::kernel_trace_identity_check(jc, m, m + 2, ud(rng), ud(rng), 1.7, 6));
    }
    add("kernel_trace_identity", std::vector<double>(tr.size(), 0.0), tr, 1e-10);
  }

  void coherent() {
    const cplx alpha = full() ? cplx(0.0, 6.0) : cplx(0.0, 2.0);
    const auto psi = models::coherent_lattice_state(alpha);
    std::uniform_int_distribution<long> nd(-static_cast<long>(std::norm(alpha)) - 5,
                                           static_cast<long>(std::norm(alpha)) + 5);
    std::uniform_real_distribution<double> kd(0.0, kTwoPi);
    std::vector<double> ref, cmp;
    for (int i = 0; i < 10; ++i) {
      const long n = nd(rng);
      const double k = kd(rng);
      ref.push_back(oracle::naive_wigner(psi, 2 * n, k));
      cmp.push_back(models::jc_coherent_wigner_closed(alpha, n, k));
    }
    add("coherent_closed_form", ref, cmp, 1e-10);
  }

  void periodicity() {
    const double omega = 1.0, g = 0.5;
    const auto bs = models::bs_spectrum(omega, g);
    const double T = kPi / (omega + g);
    std::vector<double> ref, cmp;
    for (long n : {4L, 7L})
      for (double k : {0.3, 1.9})
        for (double t : {0.7, 3.1}) {
          ref.push_back(dynamics::kernel_value_restricted(bs, 2 * n, k, t, 1, static_cast<int>(n - 1)));
          cmp.push_back(dynamics::kernel_value_restricted(bs, 2 * n, k, t + T, 1, static_cast<int>(n - 1)));
        }
    add("buck_sukumar_restricted_periodicity", ref, cmp, 1e-10);
  }

  void serial_parallel() {
    const auto psi = random_state(rng, -6, 12);
    const QuasiMomentumGrid grid(Period::TwoPi, 64);
    const auto a = wigner_from_state(psi, grid, LatticeMode::HalfInteger, Exec::Serial);
    const auto b = wigner_from_state(psi, grid, LatticeMode::HalfInteger, Exec::Parallel);
    add("wigner_serial_vs_parallel", {a.values().begin(), a.values().end()}, {b.values().begin(), b.values().end()},
        0.0);
    const auto jc = models::jc_spectrum({1.0, 0.5, 1.0});
    const auto w0 = wigner_from_state(psi, grid, LatticeMode::Integer);
    const auto d = dynamics::propagate_wigner(w0, jc, 2.0, {.exec = Exec::Serial});
    const auto f = dynamics::propagate_wigner(w0, jc, 2.0, {.exec = Exec::Parallel});
    add("convolution_direct_vs_fft", {d.values().begin(), d.values().end()}, {f.values().begin(), f.values().end()},
        1e-12);
  }
};

}  // namespace

std::vector<oracle::OracleReport> run(const VerifyOptions& opt) {
  Suite s{opt, std::mt19937_64(opt.seed), {}};
  s.marginals();
  s.naive_points();
  s.reconstruction();
  s.bessel_table();
  s.tight_binding();
  s.kernel_propagation();
  s.coherent();
  s.periodicity();
  s.serial_parallel();
  return std::move(s.out);
}

}  // namespace pwig::verify
