#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "sqw/state.hpp"

using namespace sqw;

namespace {
const InitialCoinState kSpread{0.5, -0.5, -0.5, 0.5};
const InitialCoinState kLocalized{0.5, cplx{0, 0.5}, cplx{0, 0.5}, -0.5};
}  // namespace

TEST_CASE("make_initial places the spinor at the origin") {
  WaveFunction psi = make_initial({1, 0, 0, 0}, 4);
  CHECK(psi.time() == 0);
  CHECK(psi.amplitude(0, 0, CoinIndex::L) == cplx{1, 0});
  CHECK(psi.amplitude(0, 0, CoinIndex::R) == cplx{0, 0});
  CHECK(psi.amplitude(2, 0, CoinIndex::L) == cplx{0, 0});
  CHECK(norm(psi) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("make_initial reproduces the input exactly") {
  for (const auto& s : {kSpread, kLocalized}) {
    WaveFunction psi = make_initial(s, 2);
    CHECK(psi.amplitude(0, 0, CoinIndex::L) == s.alpha);
    CHECK(psi.amplitude(0, 0, CoinIndex::U) == s.beta);
    CHECK(psi.amplitude(0, 0, CoinIndex::D) == s.gamma);
    CHECK(psi.amplitude(0, 0, CoinIndex::R) == s.delta);
  }
}

TEST_CASE("make_initial rejects non-normalized input") {
  CHECK_THROWS_WITH_AS(make_initial({0.5, 0, 0, 0}, 2),
                       doctest::Contains("not normalized"),
                       std::invalid_argument);
  // deviation just past the 1e-12 gate
  double eps = 4e-7;  // norm^2 off by ~8e-7 > 1e-12
  CHECK_THROWS_AS(make_initial({1.0 + eps, 0, 0, 0}, 2),
                  std::invalid_argument);
}

TEST_CASE("norm of the zero state is zero") {
  WaveFunction psi(0, 3);
  CHECK(norm(psi) == 0.0);
}
