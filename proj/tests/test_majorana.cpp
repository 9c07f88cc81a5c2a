#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "qti/majorana.hpp"
#include "qti/model.hpp"

namespace {

qti::FieldProfile profile_of(const qti::ChainParams& p) { return qti::build_profile(p); }

}  // namespace

TEST_SUITE("majorana") {

TEST_CASE("single-site matrix and spectrum") {
  qti::ChainParams p{1, 0.0, 0.3, 1.0};
  // N = 0 is below the model's validity floor, so build the single cell directly
  qti::FieldProfile single;
  single.params = p;
  single.values = {0.3};
  const auto m = qti::build_h_m(single, 1.0);
  REQUIRE(m.dim == 2);
  CHECK(m.subdiagonal[0] == doctest::Approx(0.15));
  const auto s = qti::diagonalize(m);
  CHECK(s.lambdas[0] == doctest::Approx(-0.15).epsilon(1e-14));
  CHECK(s.lambdas[1] == doctest::Approx(0.15).epsilon(1e-14));
  CHECK(s.epsilons[0] == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(s.ground_energy == doctest::Approx(-0.3).epsilon(1e-14));
}

TEST_CASE("matrix entry pattern") {
  qti::ChainParams p{2, 0.5, 0.3, 1.0};
  const auto profile = profile_of(p);
  const auto m = qti::build_h_m(profile, p.coupling);
  REQUIRE(m.dim == 10);
  for (const double d : m.diagonal) CHECK(d == 0.0);
  for (int k = 0; k < 5; ++k)
    CHECK(m.subdiagonal[2 * k] == doctest::Approx(0.5 * profile.values[k]));
  for (int k = 0; k < 4; ++k) CHECK(m.subdiagonal[2 * k + 1] == doctest::Approx(-0.5));
}

TEST_CASE("decoupled dimers at J = 0") {
  qti::ChainParams p{1, 0.5, 0.3, 0.0};
  const auto profile = profile_of(p);
  const auto s = qti::diagonalize(qti::build_h_m(profile, 0.0));
  // lambda = +-f_j/2, epsilon = 2 f_j, E_g = -sum f_j
  CHECK(s.ground_energy == doctest::Approx(-1.9).epsilon(1e-14));
  std::vector<double> eps_expect{0.6, 1.6, 1.6};
  for (int i = 0; i < 3; ++i) CHECK(s.epsilons[i] == doctest::Approx(eps_expect[i]).epsilon(1e-13));
}

TEST_CASE("spectrum symmetry, trace, and orthonormality") {
  qti::ChainParams p{30, 1e-3, 0.3, 1.0};
  const auto s = qti::diagonalize(qti::build_h_m(profile_of(p), p.coupling));
  const double radius = s.spectral_radius();
  double sum = 0.0;
  for (int k = 0; k < s.dim; ++k) {
    sum += s.lambdas[k];
    CHECK(std::abs(s.lambdas[k] + s.lambdas[s.dim - 1 - k]) < 1e-10 * radius);
  }
  CHECK(std::abs(sum) < 1e-12 * s.dim);

  double gram = 0.0;
  for (int k = 0; k < s.dim; ++k)
    for (int l = k; l < s.dim; ++l) {
      double d = 0.0;
      for (int i = 0; i < s.dim; ++i)
        d += s.vectors[static_cast<std::size_t>(i) * s.dim + k] *
             s.vectors[static_cast<std::size_t>(i) * s.dim + l];
      gram = std::max(gram, std::abs(d - (k == l ? 1.0 : 0.0)));
    }
  CHECK(gram < 1e-10);
}

TEST_CASE("eigenvector residuals") {
  qti::ChainParams p{20, 2e-3, 0.4, 1.0};
  const auto m = qti::build_h_m(profile_of(p), p.coupling);
  const auto s = qti::diagonalize(m);
  const double tol = 1e-10 * s.spectral_radius();
  for (int k = 0; k < s.dim; ++k) {
    const auto v = s.eigenvector(k);
    double res = 0.0;
    for (int i = 0; i < s.dim; ++i) {
      double h = 0.0;
      if (i > 0) h += m.subdiagonal[i - 1] * v[i - 1];
      if (i + 1 < s.dim) h += m.subdiagonal[i] * v[i + 1];
      const double d = h - s.lambdas[k] * v[i];
      res += d * d;
    }
    CHECK(std::sqrt(res) < tol);
  }
}

TEST_CASE("epsilon list is the positive half-spectrum times four") {
  qti::ChainParams p{15, 5e-3, 0.35, 1.0};
  const auto s = qti::diagonalize(qti::build_h_m(profile_of(p), p.coupling), false);
  const int pairs = s.dim / 2;
  for (int k = 0; k < pairs; ++k)
    CHECK(s.epsilons[k] == doctest::Approx(4.0 * std::abs(s.lambdas[pairs + k])).epsilon(1e-12));
}

TEST_CASE("near-zero pair at the reference parameters") {
  qti::ChainParams p{80, 5e-4, 0.3, 1.0};
  const auto s = qti::diagonalize(qti::build_h_m(profile_of(p), p.coupling), false);
  REQUIRE(s.dim == 322);
  // two mid-gap eigenvalues orders of magnitude below the rest of the spectrum
  CHECK(std::abs(s.lambdas[160]) < 1e-8);
  CHECK(std::abs(s.lambdas[161]) < 1e-8);
  CHECK(std::abs(s.lambdas[159]) > 1e-3);
  CHECK(s.epsilons[0] < 1e-7);
  CHECK(s.epsilons[1] > 1e-3);
}

TEST_CASE("uniform-chain splitting falls exponentially with N") {
  std::vector<double> log_eps;
  std::vector<int> ns{3, 5, 7, 9};
  for (const int n : ns) {
    qti::ChainParams p{n, 0.0, 0.3, 1.0};
    const auto s = qti::diagonalize(qti::build_h_m(profile_of(p), p.coupling), false);
    log_eps.push_back(std::log(s.epsilons[0]));
  }
  for (std::size_t i = 0; i + 1 < log_eps.size(); ++i) CHECK(log_eps[i + 1] < log_eps[i]);
  // slope per unit N should be about 2 log(delta)
  const double slope = (log_eps.back() - log_eps.front()) / (ns.back() - ns.front());
  CHECK(slope == doctest::Approx(2.0 * std::log(0.3)).epsilon(0.15));
}

TEST_CASE("chiral pairing holds for clean and disordered profiles") {
  qti::ChainParams p{25, 2e-3, 0.3, 1.0};
  {
    const auto m = qti::build_h_m(profile_of(p), p.coupling);
    const auto rep = qti::check_chiral_pairing(m, qti::diagonalize(m));
    CHECK(rep.symmetric);
    CHECK(rep.max_vector_residual < 1e-9);
  }
  {
    const auto prof = qti::build_profile(p, qti::DisorderSpec{0.05, 7});
    const auto m = qti::build_h_m(prof, p.coupling);
    const auto rep = qti::check_chiral_pairing(m, qti::diagonalize(m));
    CHECK(rep.symmetric);
  }
}

TEST_CASE("injected diagonal breaks chiral symmetry and is flagged") {
  qti::ChainParams p{10, 5e-3, 0.4, 1.0};
  auto m = qti::build_h_m(profile_of(p), p.coupling);
  for (auto& d : m.diagonal) d = 0.05;
  const auto rep = qti::check_chiral_pairing(m, qti::diagonalize(m));
  CHECK_FALSE(rep.symmetric);
}

}  // TEST_SUITE
