#include <cmath>
#include <random>

#include "doctest.h"
#include "sqw/limit.hpp"
#include "sqw/spectral.hpp"

using namespace sqw;

namespace {

const InitialCoinState kSpread{0.5, -0.5, -0.5, 0.5};
const InitialCoinState kLocalized{0.5, cplx{0, 0.5}, cplx{0, 0.5}, -0.5};

const double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("momentum coin at k = 0 is the coin itself") {
  for (CoinKind k : {CoinKind::Grover, CoinKind::SelfAvoidCoin,
                     CoinKind::SelfAvoidPosition,
                     CoinKind::SelfAvoidCoinPosition}) {
    CoinOperator c = build_coin(k);
    CoinOperator m = momentum_coin(k, {0.0, 0.0});
    for (int i = 0; i < 16; ++i)
      CHECK(std::abs(m.m[i] - c.m[i]) <= 1e-15);
  }
}

TEST_CASE("momentum coin applies the four phases row-wise") {
  CoinOperator c = build_coin(CoinKind::Grover);
  MomentumPoint p{0.7, -1.1};
  CoinOperator m = momentum_coin(c, p);
  cplx ph[4] = {std::polar(1.0, p.kx), std::polar(1.0, -p.ky),
                std::polar(1.0, p.ky), std::polar(1.0, -p.kx)};
  for (int r = 0; r < 4; ++r)
    for (int col = 0; col < 4; ++col)
      CHECK(std::abs(m.at(r, col) - ph[r] * c.at(r, col)) <= 1e-15);
  CHECK(is_unitary(m, 1e-12));
}

TEST_CASE("eigensystem gives a unit-modulus orthonormal decomposition") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (CoinKind k : {CoinKind::Grover, CoinKind::SelfAvoidCoin,
                     CoinKind::SelfAvoidPosition,
                     CoinKind::SelfAvoidCoinPosition})
    for (int trial = 0; trial < 25; ++trial) {
      CoinOperator m = momentum_coin(k, {u(rng), u(rng)});
      EigenSystem es = eigensystem(m);
      for (int j = 0; j < 4; ++j) {
        CHECK(std::abs(std::abs(es.values[j]) - 1.0) <= 1e-10);
        // residual ||M v - lambda v||
        for (int r = 0; r < 4; ++r) {
          cplx mv{};
          for (int c2 = 0; c2 < 4; ++c2) mv += m.at(r, c2) * es.vectors[j][c2];
          CHECK(std::abs(mv - es.values[j] * es.vectors[j][r]) <= 1e-9);
        }
        for (int i = 0; i < j; ++i) {
          cplx dot{};
          for (int r = 0; r < 4; ++r)
            dot += std::conj(es.vectors[i][r]) * es.vectors[j][r];
          CHECK(std::abs(dot) <= 1e-10);
        }
      }
      // phases sorted ascending
      for (int j = 1; j < 4; ++j)
        CHECK(std::arg(es.values[j - 1]) <= std::arg(es.values[j]) + 1e-14);
      // completeness against an arbitrary spinor
      double w = 0.0;
      for (int j = 0; j < 4; ++j) w += std::norm(es.overlap(j, kLocalized));
      CHECK(w == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("grover walk carries two flat bands") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    MomentumPoint p{u(rng), u(rng)};
    EigenSystem es = eigensystem(momentum_coin(CoinKind::Grover, p));
    int plus = 0, minus = 0;
    for (int j = 0; j < 4; ++j) {
      if (std::abs(es.values[j] - cplx{1, 0}) < 1e-9) ++plus;
      if (std::abs(es.values[j] + cplx{1, 0}) < 1e-9) ++minus;
    }
    CHECK(plus == 1);
    CHECK(minus == 1);
  }
}

TEST_CASE("flat-band group velocity vanishes") {
  bool ok = false;
  MomentumPoint p{0.9, 0.4};
  EigenSystem es = eigensystem(momentum_coin(CoinKind::Grover, p));
  for (int j = 0; j < 4; ++j) {
    if (std::abs(std::abs(es.values[j].real()) - 1.0) > 1e-9) continue;
    auto [vx, vy] = group_velocity(CoinKind::Grover, p, j, 1e-5, ok);
    CHECK(ok);
    CHECK(std::abs(vx) <= 1e-6);
    CHECK(std::abs(vy) <= 1e-6);
  }
}

TEST_CASE("group velocities stay inside the limit support") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int trial = 0; trial < 40; ++trial) {
    BandVelocities v =
        band_velocities(CoinKind::SelfAvoidCoinPosition, {u(rng), u(rng)}, 1e-5);
    for (int j = 0; j < 4; ++j) {
      if (!v.ok[j]) continue;
      CHECK(v.vx[j] * v.vx[j] + v.vy[j] * v.vy[j] <= 0.25 + 1e-6);
    }
    BandVelocities w =
        band_velocities(CoinKind::SelfAvoidCoin, {u(rng), u(rng)}, 1e-5);
    for (int j = 0; j < 4; ++j) {
      if (!w.ok[j]) continue;
      CHECK(std::abs(w.vx[j]) <= 1.0 / 3.0 + 1e-6);
      CHECK(std::abs(w.vy[j]) <= 1.0 / 3.0 + 1e-6);
    }
  }
}

TEST_CASE("oracle histogram is normalized and matches closed-form moments") {
  OracleResult r =
      oracle_histogram(CoinKind::SelfAvoidCoinPosition, kLocalized, 200, 20);
  CHECK(r.discarded_fraction <= 0.01);
  CHECK(r.hist.total() ==
        doctest::Approx(1.0 - r.discarded_fraction).epsilon(1e-10));
  CHECK(histogram_moment(r.hist, 1, 0) ==
        doctest::Approx(0.09084605).scale(1).epsilon(5e-3));
  CHECK(histogram_moment(r.hist, 0, 1) ==
        doctest::Approx(0.09084605).scale(1).epsilon(5e-3));
}

TEST_CASE("oracle confirms the sign of the coin-space drift") {
  // independent check of the x/y-linear factor of the coin-space law
  OracleResult r =
      oracle_histogram(CoinKind::SelfAvoidCoin, kLocalized, 240, 24);
  CHECK(histogram_moment(r.hist, 1, 0) < -0.02);
  CHECK(histogram_moment(r.hist, 0, 1) < -0.02);
  double q = quadrature_moment(LimitModel::SelfAvoidCoin, kLocalized, 1, 0, 512);
  CHECK(histogram_moment(r.hist, 1, 0) ==
        doctest::Approx(q).scale(1).epsilon(5e-3));
}

TEST_CASE("oracle reproduces the grover point mass") {
  OracleResult r = oracle_histogram(CoinKind::Grover, kLocalized, 200, 50);
  double center = r.hist.at(24, 24) + r.hist.at(24, 25) + r.hist.at(25, 24) +
                  r.hist.at(25, 25);
  CHECK(center == doctest::Approx(0.5).epsilon(0.02));
  // with no point mass the center block stays small
  OracleResult s = oracle_histogram(CoinKind::Grover, kSpread, 200, 50);
  double c2 = s.hist.at(24, 24) + s.hist.at(24, 25) + s.hist.at(25, 24) +
              s.hist.at(25, 25);
  CHECK(c2 <= 0.05);
}

TEST_CASE("flat-band spike split recovers the point mass by quadrant") {
  SpikeSplit s = grover_spike_split(kLocalized, 256, 24);
  CHECK(s.total == doctest::Approx(0.5).scale(1).epsilon(2e-3));
  CHECK(s.pp == doctest::Approx(0.38561334).scale(1).epsilon(2e-3));
  CHECK(s.pm == doctest::Approx(0.03657945).scale(1).epsilon(2e-3));
  CHECK(s.mp == doctest::Approx(0.04607678).scale(1).epsilon(2e-3));
  CHECK(s.mm == doctest::Approx(0.03173044).scale(1).epsilon(2e-3));
  // no localization for the spread state
  SpikeSplit z = grover_spike_split(kSpread, 128, 16);
  CHECK(z.total <= 1e-10);
}

TEST_CASE("custom-coin oracle matches the built-in one") {
  OracleResult a = oracle_histogram(CoinKind::SelfAvoidCoinPosition, kSpread,
                                    100, 20);
  OracleResult b = oracle_histogram(build_coin(CoinKind::SelfAvoidCoinPosition),
                                    kSpread, 100, 20);
  CHECK(l1_distance(a.hist, b.hist) == 0.0);
}

TEST_CASE("oracle rejects too-small grids") {
  CHECK_THROWS_AS(oracle_histogram(CoinKind::Grover, kLocalized, 32, 20),
                  std::invalid_argument);
  CHECK_THROWS_AS(oracle_histogram(CoinKind::Grover, kLocalized, 200, 8),
                  std::invalid_argument);
}
