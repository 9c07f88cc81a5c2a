#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <vector>

#include "qti/ldos.hpp"
#include "qti/linalg.hpp"
#include "qti/majorana.hpp"
#include "qti/model.hpp"

namespace {

qti::MajoranaMatrix matrix_of(int n, double g, double delta, double coupling = 1.0) {
  qti::ChainParams p{n, g, delta, coupling};
  return qti::build_h_m(qti::build_profile(p), coupling);
}

double cell_l1(const qti::LdosGrid& a, const qti::LdosGrid& b, int cell) {
  double acc = 0.0;
  for (int i = 0; i < a.bins; ++i) acc += std::abs(a.at(cell, i) - b.at(cell, i));
  return acc * a.bin_width();
}

double cell_total(const qti::LdosGrid& g, int cell) {
  double acc = 0.0;
  for (int i = 0; i < g.bins; ++i) acc += g.at(cell, i);
  return acc * g.bin_width();
}

}  // namespace

TEST_SUITE("ldos") {

TEST_CASE("histogram needs at least two bins and eigenvectors") {
  const auto m = matrix_of(4, 0.05, 0.4);
  const auto s = qti::diagonalize(m);
  CHECK_THROWS_AS(qti::ldos_histogram(s, 1), std::invalid_argument);
  const auto novec = qti::diagonalize(m, false);
  CHECK_THROWS_AS(qti::ldos_histogram(novec, 100), std::invalid_argument);
}

TEST_CASE("decoupled dimers: two sharp lines per cell") {
  qti::ChainParams p{3, 0.05, 0.4, 0.0};
  const auto profile = qti::build_profile(p);
  const auto m = qti::build_h_m(profile, 0.0);
  const auto s = qti::diagonalize(m);
  const auto grid = qti::ldos_histogram(s, 200);
  for (int cell = 0; cell < grid.cells; ++cell) {
    const double f = profile.values[cell];
    double mass_at_poles = 0.0, mass_total = 0.0;
    for (int i = 0; i < grid.bins; ++i) {
      const double d = grid.at(cell, i);
      if (d == 0.0) continue;
      mass_total += d;
      if (std::abs(std::abs(grid.energies[i]) - 0.5 * f) < grid.bin_width())
        mass_at_poles += d;
    }
    CHECK(mass_at_poles == doctest::Approx(mass_total).epsilon(1e-12));
  }
}

TEST_CASE("recursion breaks down exactly on a closed dimer") {
  qti::ChainParams p{2, 0.05, 0.4, 0.0};
  const auto m = qti::build_h_m(qti::build_profile(p), 0.0);
  const auto lc = qti::lanczos_tridiag(m, 0, 50);
  CHECK(lc.breakdown);
  CHECK(lc.depth == 2);
}

TEST_CASE("dimer recursion puts Lorentzian weight at the poles") {
  qti::ChainParams p{2, 0.05, 0.4, 0.0};
  const auto profile = qti::build_profile(p);
  const auto m = qti::build_h_m(profile, 0.0);
  const double f0 = profile.at(0);
  const double eta = 0.01;
  const std::vector<double> probe{0.5 * f0, 0.0};
  const auto col = qti::ldos_recursion_cell(m, 2, 40, eta, probe, 1.0);
  // at the pole the two seeds give 1/(pi eta) together; at zero energy the
  // tails are tiny
  CHECK(col[0] == doctest::Approx(1.0 / (std::numbers::pi * eta)).epsilon(1e-3));
  CHECK(col[1] < 0.3 * col[0]);
}

TEST_CASE("histogram total weight counts every state") {
  const auto m = matrix_of(10, 3.0 / 100.0, 0.3);
  const auto s = qti::diagonalize(m);
  const auto grid = qti::ldos_histogram(s, 300);
  double total = 0.0;
  for (int cell = 0; cell < grid.cells; ++cell) total += cell_total(grid, cell);
  CHECK(total / grid.norm_lambda == doctest::Approx(2.0 * grid.cells).epsilon(1e-10));
}

TEST_CASE("per-cell sum rule survives broadening") {
  const auto m = matrix_of(12, 3.0 / 144.0, 0.3);
  const auto s = qti::diagonalize(m);
  const auto grid = qti::ldos_histogram(s, 400, 0.02);
  for (int cell = 0; cell < grid.cells; ++cell)
    CHECK(cell_total(grid, cell) / grid.norm_lambda == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("densities are nonnegative") {
  const auto m = matrix_of(15, 3.0 / 225.0, 0.3);
  const auto rec = qti::ldos_recursion(m, 60, 0.02, 200);
  for (const double v : rec.values) CHECK(v >= 0.0);
}

TEST_CASE("recursion moments match direct powers of the matrix") {
  const auto m = matrix_of(12, 2e-3, 0.35);
  const int seed = 10;
  const auto lc = qti::lanczos_tridiag(m, seed, 20);
  REQUIRE(lc.depth >= 7);

  // tridiagonal representation of the recursion: moments are (T^k)_{00}
  const int nt = lc.depth;
  std::vector<double> tmat(static_cast<std::size_t>(nt) * nt, 0.0);
  for (int i = 0; i < nt; ++i) {
    tmat[static_cast<std::size_t>(i) * nt + i] = lc.a[i];
    if (i + 1 < nt) {
      tmat[static_cast<std::size_t>(i) * nt + i + 1] = lc.b[i + 1];
      tmat[static_cast<std::size_t>(i + 1) * nt + i] = lc.b[i + 1];
    }
  }
  std::vector<double> tv(nt, 0.0), tw(nt);
  tv[0] = 1.0;
  std::vector<double> hv(m.dim, 0.0), hw(m.dim);
  hv[seed] = 1.0;
  for (int k = 1; k <= 6; ++k) {
    for (int i = 0; i < nt; ++i) {
      double acc = 0.0;
      for (int j = 0; j < nt; ++j) acc += tmat[static_cast<std::size_t>(i) * nt + j] * tv[j];
      tw[i] = acc;
    }
    tv = tw;
    qti::tridiag_matvec(m.diagonal, m.subdiagonal, hv.data(), hw.data());
    hv = hw;
    const double direct = hv[seed];
    const double from_recursion = tv[0];
    CHECK(from_recursion == doctest::Approx(direct).epsilon(1e-8));
  }
}

TEST_CASE("broadened LDOS is even in energy") {
  const auto m = matrix_of(10, 3.0 / 100.0, 0.3);
  const auto s = qti::diagonalize(m);
  const auto grid = qti::ldos_histogram(s, 301, 0.05);
  for (int cell = 0; cell < grid.cells; ++cell)
    for (int i = 0; i < grid.bins; ++i) {
      const int mirror = grid.bins - 1 - i;
      CHECK(grid.at(cell, i) == doctest::Approx(grid.at(cell, mirror)).epsilon(1e-6));
    }
}

TEST_CASE("recursion agrees with the smoothed histogram") {
  const auto m = matrix_of(30, 3.0 / 900.0, 0.3);
  const auto s = qti::diagonalize(m);
  const auto hist = qti::ldos_histogram(s, 400, 0.02);
  const auto rec = qti::ldos_recursion(m, 60, 0.02, 400);
  for (const int cell : {0, 15, 30, 45, 60}) {
    const double budget = 0.05 * cell_total(hist, cell);
    CHECK(cell_l1(hist, rec, cell) < budget);
  }
}

TEST_CASE("point-measure limit: smaller eta tightens the integrated distance") {
  const auto m = matrix_of(10, 3.0 / 100.0, 0.3);
  const auto s = qti::diagonalize(m);
  const int cell = 10;

  auto ks_distance = [&](double eta, int bins, int depth) {
    const auto rec = qti::ldos_recursion(m, depth, eta, bins);
    // exact cumulative cell weight from the eigendecomposition
    std::vector<double> cum_exact(rec.bins, 0.0);
    for (int i = 0; i < rec.bins; ++i) {
      double acc = 0.0;
      const double edge = rec.energies[i] + 0.5 * rec.bin_width();
      for (int n = 0; n < s.dim; ++n) {
        if (s.lambdas[n] > edge) continue;
        const double wa = s.vectors[static_cast<std::size_t>(2 * cell) * s.dim + n];
        const double wb = s.vectors[static_cast<std::size_t>(2 * cell + 1) * s.dim + n];
        acc += wa * wa + wb * wb;
      }
      cum_exact[i] = acc;
    }
    double ks = 0.0, cum = 0.0;
    for (int i = 0; i < rec.bins; ++i) {
      cum += rec.at(cell, i) * rec.bin_width() / rec.norm_lambda;
      ks = std::max(ks, std::abs(cum - cum_exact[i]));
    }
    return ks;
  };

  const double coarse = ks_distance(0.10, 200, 41);
  const double fine = ks_distance(0.02, 800, 41);
  CHECK(fine < coarse);
}

}  // TEST_SUITE
