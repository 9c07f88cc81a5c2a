#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "qti/linalg.hpp"
#include "qti/majorana.hpp"
#include "qti/model.hpp"
#include "qti/reference.hpp"
#include "qti/zeromodes.hpp"

namespace {

struct Setup {
  qti::ChainParams params;
  qti::FieldProfile profile;
  qti::Interfaces ifc;
  qti::ZeroModeData zm;
};

Setup make(int n, double g, double delta) {
  Setup s;
  s.params = {n, g, delta, 1.0};
  s.profile = qti::build_profile(s.params);
  s.ifc = qti::interfaces_or_edges(s.params);
  s.zm = qti::analytic_modes(s.profile, s.ifc);
  return s;
}

}  // namespace

TEST_SUITE("zeromodes") {

TEST_CASE("normalization and peak position") {
  const auto s = make(80, 5e-4, 0.3);
  double sum = 0.0;
  for (const double a : s.zm.alpha) sum += a * a;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  double peak = 0.0;
  int arg = 0;
  for (std::size_t i = 0; i < s.zm.alpha.size(); ++i)
    if (s.zm.alpha[i] > peak) {
      peak = s.zm.alpha[i];
      arg = static_cast<int>(i) - s.params.half_length;
    }
  CHECK(arg == s.zm.m_minus);
}

TEST_CASE("log-space and linear-space stay consistent") {
  const auto s = make(60, 1e-3, 0.3);
  for (std::size_t i = 0; i < s.zm.alpha.size(); ++i)
    if (s.zm.alpha[i] > 1e-300)
      CHECK(std::exp(s.zm.log_alpha[i]) ==
            doctest::Approx(s.zm.alpha[i]).epsilon(1e-12));
}

TEST_CASE("direct product oracle at small N") {
  const auto s = make(12, 0.01, 0.4);
  const auto direct = qti::reference::mode_coefficients_direct(
      s.profile.values, s.params.half_length, s.zm.m_plus);
  REQUIRE(direct.size() == s.zm.alpha.size());
  for (std::size_t i = 0; i < direct.size(); ++i)
    CHECK(s.zm.alpha[i] == doctest::Approx(direct[i]).epsilon(1e-12));
}

TEST_CASE("uniform chain gives a geometric edge mode") {
  const auto s = make(10, 0.0, 0.4);
  CHECK(s.zm.m_plus == 10);
  CHECK(s.zm.clamped);
  // alpha_{j+1}/alpha_j = delta for every j
  for (std::size_t i = 0; i + 1 < s.zm.alpha.size(); ++i)
    CHECK(s.zm.alpha[i + 1] / s.zm.alpha[i] == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("field must stay positive") {
  auto s = make(5, 0.1, 0.5);
  auto bad = s.profile;
  bad.values[2] = -0.1;
  CHECK_THROWS_AS(qti::analytic_modes(bad, s.ifc), std::invalid_argument);
}

TEST_CASE("mode vectors: support, norms, effective two-level structure") {
  const auto s = make(30, 2e-3, 0.3);
  const auto v = qti::make_mode_vectors(s.zm);
  const auto m = qti::build_h_m(s.profile, 1.0);

  CHECK(qti::dot(v.phi_a.data(), v.phi_b.data(), v.dim) == 0.0);
  CHECK(qti::nrm2(v.phi_a.data(), v.dim) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(qti::nrm2(v.phi_b.data(), v.dim) == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<double> h_phi(v.dim);
  qti::tridiag_matvec(m.diagonal, m.subdiagonal, v.phi_a.data(), h_phi.data());
  // A-only vectors are chirally off-diagonal: the diagonal matrix element
  // vanishes exactly, all products pair disjoint supports
  CHECK(qti::dot(v.phi_a.data(), h_phi.data(), v.dim) == 0.0);
  const double coupling = qti::dot(v.phi_b.data(), h_phi.data(), v.dim);
  CHECK(coupling == doctest::Approx(s.zm.lambda0).epsilon(1e-10));

  qti::tridiag_matvec(m.diagonal, m.subdiagonal, v.phi_b.data(), h_phi.data());
  CHECK(qti::dot(v.phi_b.data(), h_phi.data(), v.dim) == 0.0);
}

TEST_CASE("reflection: B coefficients mirror the A coefficients") {
  const auto s = make(25, 3e-3, 0.35);
  const auto v = qti::make_mode_vectors(s.zm);
  const int n = s.params.half_length;
  for (int j = -n; j <= s.zm.m_plus; ++j)
    CHECK(v.phi_b[2 * (-j + n) + 1] == doctest::Approx(v.phi_a[2 * (j + n)]).epsilon(1e-14));
}

TEST_CASE("residual check against the closed form") {
  const auto s = make(20, 0.002, 0.5);
  const auto v = qti::make_mode_vectors(s.zm);
  const auto m = qti::build_h_m(s.profile, 1.0);
  const auto rep = qti::residual_check(m, v, s.zm);
  CHECK(rep.verified);
  CHECK(rep.norm_a == doctest::Approx(rep.expected).epsilon(1e-9));
  CHECK(rep.norm_b == doctest::Approx(rep.expected).epsilon(1e-9));
  CHECK(rep.norm_a < 0.5 * s.zm.delta_prod);
}

TEST_CASE("residual check at the reference parameters sits at the noise floor") {
  const auto s = make(80, 5e-4, 0.3);
  const auto v = qti::make_mode_vectors(s.zm);
  const auto m = qti::build_h_m(s.profile, 1.0);
  const auto rep = qti::residual_check(m, v, s.zm);
  CHECK(rep.verified);  // tolerance widens to the matvec floor
  CHECK(rep.norm_a < 1e-12);
}

TEST_CASE("uniform-chain residual vanishes with N") {
  const auto small = make(6, 0.0, 0.4);
  const auto large = make(14, 0.0, 0.4);
  const auto ra = qti::residual_check(qti::build_h_m(small.profile, 1.0),
                                      qti::make_mode_vectors(small.zm), small.zm);
  const auto rb = qti::residual_check(qti::build_h_m(large.profile, 1.0),
                                      qti::make_mode_vectors(large.zm), large.zm);
  CHECK(rb.norm_a < ra.norm_a * 1e-3);
}

TEST_CASE("analytic hybrids overlap the numerical near-zero pair") {
  const auto s = make(80, 5e-4, 0.3);
  const auto spec = qti::diagonalize(qti::build_h_m(s.profile, 1.0));
  const double ov = qti::mode_overlap(qti::make_mode_vectors(s.zm), spec);
  CHECK(ov >= 0.999);
}

TEST_CASE("overlap stays high across the small-g window") {
  for (const double g : {2e-4, 5e-4, 1e-3}) {
    const auto s = make(80, g, 0.3);
    const auto spec = qti::diagonalize(qti::build_h_m(s.profile, 1.0));
    CHECK(qti::mode_overlap(qti::make_mode_vectors(s.zm), spec) >= 0.99);
  }
}

TEST_CASE("analytic splitting tracks the numerical one where resolvable") {
  // below ~1e-13 the numerical pair is degenerate at machine precision and
  // the comparison is empty; these g keep epsilon0 well above that
  for (const double g : {1e-3, 2e-3, 5e-3, 1e-2}) {
    const auto s = make(80, g, 0.3);
    const auto spec = qti::diagonalize(qti::build_h_m(s.profile, 1.0), false);
    const double numeric = spec.epsilons.front();
    REQUIRE(numeric > 1e-12);
    CHECK(std::abs(s.zm.epsilon0_analytic - numeric) / numeric < 0.15);
  }
}

TEST_CASE("gaussian fit at the reference parameters") {
  const auto s = make(80, 5e-4, 0.3);
  const auto fit = qti::gaussian_fit(s.zm, s.params);
  const double expected_curv = std::sqrt(0.7 * 5e-4);
  CHECK(std::abs(fit.center - (-37.0)) <= 1.0);
  CHECK(std::abs(fit.curvature - expected_curv) / expected_curv < 0.10);
  CHECK_FALSE(fit.edge_truncated);
}

TEST_CASE("gaussian approximation degrades for larger g") {
  const auto small = make(80, 5e-4, 0.3);
  const auto large = make(80, 1e-2, 0.3);
  const auto fa = qti::gaussian_fit(small.zm, small.params);
  const auto fb = qti::gaussian_fit(large.zm, large.params);
  CHECK(fb.max_pointwise_error > fa.max_pointwise_error);
}

TEST_CASE("splitting sweep is monotone in g") {
  qti::ChainParams base{5, 0.0, 0.5, 1.0};
  std::vector<double> gs{0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35};
  const auto table = qti::splitting_sweep(base, gs);
  REQUIRE(table.size() == gs.size());
  for (std::size_t i = 0; i + 1 < table.size(); ++i) {
    CHECK(table[i].epsilon0_numeric < table[i + 1].epsilon0_numeric);
    CHECK(table[i].epsilon0_analytic < table[i + 1].epsilon0_analytic);
  }
  // quasi-degenerate at the small end of the window
  CHECK(table.front().epsilon0_numeric < 1e-2);
}

TEST_CASE("disorder keeps the splitting small and the mode in place") {
  qti::ChainParams p{80, 5e-4, 0.3, 1.0};
  const auto ifc = qti::interface_sites(p);
  for (const std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const auto prof = qti::build_profile(p, qti::DisorderSpec{0.05, seed});
    const auto spec = qti::diagonalize(qti::build_h_m(prof, 1.0));
    CHECK(spec.epsilons.front() < 1e-6);
    const auto zm = qti::analytic_modes(prof, ifc);
    const auto rep =
        qti::residual_check(qti::build_h_m(prof, 1.0), qti::make_mode_vectors(zm), zm);
    CHECK(rep.norm_a < 1e-10);
  }
}

}  // TEST_SUITE
