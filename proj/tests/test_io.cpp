#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <random>

#include "pwig/io.hpp"
#include "pwig/verify.hpp"

using namespace pwig;
namespace fs = std::filesystem;

TEST_CASE("number formatting") {
  CHECK(io::fmt(-0.0) == "0");
  CHECK(io::fmt(0.5) == "0.5");
  CHECK(std::stod(io::fmt(0.1)) == 0.1);
  CHECK(io::half_index(3) == "1.5");
  CHECK(io::half_index(-3) == "-1.5");
  CHECK(io::half_index(-4) == "-2");
  CHECK(io::half_index(0) == "0");
}

TEST_CASE("Wigner CSV round trip") {
  std::mt19937_64 rng(1);
  const auto psi = verify::random_state(rng, -2, 5);
  for (auto [period, mode] : {std::pair{Period::TwoPi, LatticeMode::HalfInteger}, std::pair{Period::Pi, LatticeMode::Integer}}) {
    const auto w = wigner_from_state(psi, QuasiMomentumGrid(period, 16), mode);
    const auto text = io::wigner_csv(w);
    CHECK(text.rfind("# mode=", 0) == 0);
    const auto back = io::read_wigner_csv(text);
    CHECK(back.m_min_twice() == w.m_min_twice());
    CHECK(back.rows() == w.rows());
    CHECK(back.grid().period() == period);
    CHECK(std::ranges::equal(back.values(), w.values()));
    CHECK(io::wigner_csv(back) == text);
  }
  CHECK_THROWS_AS(io::read_wigner_csv("0, 0, 1\n"), io::IoError);
  CHECK_THROWS_AS(io::read_wigner_csv("# mode=half, period=2pi, n_min_twice=0, k_count=4\n0, 9, 1\n"), io::IoError);
}

TEST_CASE("PGM heatmap") {
  const auto w = wigner_from_state(LatticeState::position(0, -1, 1), QuasiMomentumGrid(Period::TwoPi, 4), LatticeMode::Integer);
  const auto pgm = io::heatmap_pgm(w);
  const std::string head = "P5\n" + std::to_string(w.rows()) + " 4\n255\n";
  REQUIRE(pgm.rfind(head, 0) == 0);
  CHECK(pgm.size() == head.size() + w.rows() * 4);
  // row n = 0 holds the maximum in every column
  const auto r0 = static_cast<std::size_t>(-w.m_min_twice() / 2);
  CHECK(static_cast<unsigned char>(pgm[head.size() + r0]) == 255);
  CHECK(static_cast<unsigned char>(pgm[head.size()]) == 128);
}

TEST_CASE("JSON round trips") {
  std::mt19937_64 rng(2);
  const auto rho = verify::random_density(rng, -1, 4);
  CHECK(io::density_from_json(io::to_json(rho)).max_abs_diff(rho) == 0.0);
  const auto psi = verify::random_state(rng, 3, 4);
  const auto back = io::state_from_json(io::to_json(psi));
  CHECK(back.n_min() == psi.n_min());
  for (long n = psi.n_min(); n <= psi.n_max(); ++n) CHECK(std::abs(back(n) - psi(n)) < 1e-15);
  CHECK_THROWS(io::state_from_json(io::json{{"n_min", 0}, {"re", {1.0, 0.0}}, {"im", {0.0}}}));
}

TEST_CASE("model and run configuration") {
  const auto m = io::model_from_json(io::json::parse(R"({"model": {"model": "buck_sukumar", "omega": 1, "g": 0.5}})"));
  CHECK(m.model == "buck_sukumar");
  CHECK(io::spectrum_for(m)(3) == doctest::Approx(4.5));
  CHECK(io::model_from_json(io::json::parse(R"({"model": "dispersive", "delta": 5})")).delta == 5.0);
  CHECK_THROWS_AS(io::model_from_json(io::json::parse(R"({"model": "heisenberg"})")), io::IoError);
  CHECK_THROWS_AS(io::spectrum_for(io::ModelConfig{.model = "rabi"}), io::IoError);
  const auto custom = io::spectrum_from_json(io::json::parse(R"({"model": "custom", "n_min": -1, "epsilon": [3, 0, 1]})"));
  CHECK(custom(-1) == 3.0);

  const auto c = io::run_config_from_json(io::json::parse(R"({
    "model": {"model": "jc", "delta": 0.5},
    "state": {"kind": "position_cat", "n1": -1, "n2": 2, "file": "s.json"},
    "grid": {"k_count": 64, "period": "2pi", "mode": "half", "window": [-5, 6]},
    "times": [0, 1.5], "out": "o", "truncation": 12})"), "/base");
  CHECK(c.state.kind == "position_cat");
  CHECK(c.state.file == fs::path("/base/s.json"));
  CHECK(c.grid.mode == LatticeMode::HalfInteger);
  CHECK(c.grid.lo == -5);
  CHECK(c.times.size() == 2);
  CHECK(c.truncation == 12);

  io::RunConfig bad;
  CHECK_NOTHROW(io::validate(bad));
  bad.grid.k_count = 7;
  CHECK_THROWS_AS(io::validate(bad), io::IoError);
  bad = {};
  bad.grid.mode = LatticeMode::HalfInteger;
  bad.grid.period = Period::Pi;
  CHECK_THROWS_AS(io::validate(bad), io::IoError);
  bad = {};
  bad.times = {-1.0};
  CHECK_THROWS_AS(io::validate(bad), io::IoError);
  bad = {};
  bad.state.kind = "squeezed";
  CHECK_THROWS_AS(io::validate(bad), io::IoError);
}

TEST_CASE("flag parsers") {
  CHECK(io::parse_mode("half") == LatticeMode::HalfInteger);
  CHECK(io::parse_mode("int") == LatticeMode::Integer);
  CHECK_THROWS_AS(io::parse_mode("x"), io::IoError);
  CHECK(io::parse_period("pi") == Period::Pi);
  CHECK(io::parse_window("-3:4") == std::pair<long, long>{-3, 4});
  CHECK_THROWS_AS(io::parse_window("4:-3"), io::IoError);
  CHECK_THROWS_AS(io::parse_window("4"), io::IoError);
  CHECK(io::parse_times("0,1.5,2") == std::vector<double>{0, 1.5, 2});
  CHECK_THROWS_AS(io::parse_times("0,x"), io::IoError);
}

TEST_CASE("atomic write") {
  const auto dir = fs::temp_directory_path() / "pwig_io_test";
  fs::create_directories(dir);
  const auto p = dir / "a.txt";
  io::write_atomic(p, "one");
  io::write_atomic(p, "two");
  CHECK(io::read_file(p) == "two");
  std::size_t n = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++n;
  CHECK(n == 1);
  CHECK_THROWS_AS(io::read_file(dir / "missing"), io::IoError);
  io::write_atomic(dir / "sub" / "x", "y");
  CHECK(io::read_file(dir / "sub" / "x") == "y");
  CHECK_THROWS_AS(io::write_atomic(p / "x", "y"), io::IoError);
  fs::remove_all(dir);
}
