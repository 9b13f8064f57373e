#pragma once

#include <array>
#include <complex>

#include "sqw/coin.hpp"
#include "sqw/state.hpp"
#include "sqw/stats.hpp"

namespace sqw {

struct MomentumPoint {
  double kx, ky;
};

// R(kx,ky) * C with R = diag(e^{i kx}, e^{-i ky}, e^{i ky}, e^{-i kx}).
CoinOperator momentum_coin(CoinKind kind, const MomentumPoint& p);
CoinOperator momentum_coin(const CoinOperator& coin, const MomentumPoint& p);

// Unit-modulus eigenvalues sorted by phase in [-pi, pi) and an orthonormal
// eigenbasis (columns). Degenerate clusters are re-orthonormalized so the
// completeness relation holds to roundoff.
struct EigenSystem {
  std::array<cplx, 4> values;
  std::array<std::array<cplx, 4>, 4> vectors;  // vectors[j] is eigenvector j

  cplx overlap(int j, const InitialCoinState& s) const;
};

// Throws std::runtime_error when an eigen-residual exceeds 1e-9.
EigenSystem eigensystem(const CoinOperator& m);

struct BandVelocities {
  std::array<double, 4> vx, vy;
  std::array<bool, 4> ok;  // false when band matching failed (near-degeneracy)
};

// Group velocities -d(arg lambda_j)/dk via central differences of the
// eigenvalue phase, bands matched across k +- h by eigenvector overlap
// (threshold 0.5).
BandVelocities band_velocities(CoinKind kind, const MomentumPoint& p, double h);

// Single-band convenience wrapper; ok reports matching success.
std::pair<double, double> group_velocity(CoinKind kind, const MomentumPoint& p,
                                         int band, double h, bool& ok);

struct OracleResult {
  Histogram hist;
  double discarded_fraction = 0.0;  // overlap weight lost to failed matches
  std::array<double, 4> origin_eigenphases{};
};

// Limit histogram reconstructed from the momentum-space eigen-decomposition:
// weight |<v_j|psi0>|^2 / N^2 deposited at the band group velocity, over an
// N x N midpoint grid of [-pi,pi)^2. Throws when more than 1% of the weight
// is discarded.
OracleResult oracle_histogram(CoinKind kind, const InitialCoinState& state,
                              int grid, int bins, double h = 1e-5);
OracleResult oracle_histogram(const CoinOperator& coin,
                              const InitialCoinState& state, int grid, int bins,
                              double h = 1e-5);

// Quadrant masses of the stationary localized profile built from the
// flat-band (eigenvalue +-1) projection of the initial state. The rescaled
// histogram of a localized walk keeps straddling the origin corner for any
// even bin count, with the point mass distributed by these weights: sites
// with x >= 0 count toward the "p" side. total is the summed profile mass
// and approaches the point mass as grid and extent grow.
struct SpikeSplit {
  double pp, pm, mp, mm;
  double total;
};
SpikeSplit grover_spike_split(const InitialCoinState& state, int grid = 256,
                              int extent = 24);

// Moment of an oracle (or any) histogram using bin centers.
double histogram_moment(const Histogram& h, int r1, int r2);

}  // namespace sqw
