#include "sqw/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sqw {

namespace {

constexpr double kPi = std::numbers::pi;

using Matrix4cd = Eigen::Matrix4cd;

Matrix4cd to_eigen(const CoinOperator& c) {
  Matrix4cd m;
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k) m(r, k) = c.at(r, k);
  return m;
}

double wrap_pi(double d) {
  while (d > kPi) d -= 2 * kPi;
  while (d < -kPi) d += 2 * kPi;
  return d;
}

EigenSystem solve(const Matrix4cd& m) {
  Eigen::ComplexEigenSolver<Matrix4cd> es(m, true);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("4x4 eigen-decomposition failed");
  Eigen::Vector4cd w = es.eigenvalues();
  Matrix4cd v = es.eigenvectors();

  // sort by eigenvalue phase in [-pi, pi)
  std::array<int, 4> order{0, 1, 2, 3};
  std::array<double, 4> phase;
  for (int j = 0; j < 4; ++j) phase[j] = std::arg(w[j]);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return phase[a] < phase[b]; });

  Eigen::Vector4cd ws;
  Matrix4cd vs;
  for (int j = 0; j < 4; ++j) {
    ws[j] = w[order[j]];
    vs.col(j) = v.col(order[j]).normalized();
  }

  // Eigenvectors of distinct eigenvalues of a unitary are orthogonal, but
  // inside a degenerate cluster the solver returns an arbitrary (possibly
  // oblique) basis. Re-orthonormalize clusters so overlap completeness holds.
  int start = 0;
  while (start < 4) {
    int end = start + 1;
    while (end < 4 && std::abs(ws[end] - ws[start]) < 1e-8) ++end;
    for (int j = start + 1; j < end; ++j) {
      for (int k = start; k < j; ++k)
        vs.col(j) -= vs.col(k).dot(vs.col(j)) * vs.col(k);
      vs.col(j).normalize();
    }
    start = end;
  }

  EigenSystem out;
  for (int j = 0; j < 4; ++j) {
    out.values[j] = ws[j];
    for (int r = 0; r < 4; ++r) out.vectors[j][r] = vs(r, j);
  }

  for (int j = 0; j < 4; ++j) {
    double resid = (m * vs.col(j) - ws[j] * vs.col(j)).cwiseAbs().maxCoeff();
    if (resid > 1e-9) {
      std::ostringstream msg;
      msg << "eigen-residual " << resid << " exceeds 1e-9";
      throw std::runtime_error(msg.str());
    }
  }
  return out;
}

// Index of the band of `es` whose eigenvector best overlaps `ref`;
// overlap magnitude returned through `best`.
int match_band(const EigenSystem& es, const std::array<cplx, 4>& ref,
               double& best) {
  best = -1.0;
  int arg = 0;
  for (int m = 0; m < 4; ++m) {
    cplx dot{};
    for (int r = 0; r < 4; ++r)
      dot += std::conj(ref[r]) * es.vectors[m][r];
    double a = std::abs(dot);
    if (a > best) {
      best = a;
      arg = m;
    }
  }
  return arg;
}

struct PointVelocities {
  std::array<double, 4> vx, vy, weight;
  std::array<bool, 4> ok;
};

PointVelocities velocities_at(const CoinOperator& coin, const MomentumPoint& p,
                              double h, const EigenSystem& center,
                              const InitialCoinState* state) {
  EigenSystem xp = solve(to_eigen(momentum_coin(coin, {p.kx + h, p.ky})));
  EigenSystem xm = solve(to_eigen(momentum_coin(coin, {p.kx - h, p.ky})));
  EigenSystem yp = solve(to_eigen(momentum_coin(coin, {p.kx, p.ky + h})));
  EigenSystem ym = solve(to_eigen(momentum_coin(coin, {p.kx, p.ky - h})));

  PointVelocities out;
  for (int j = 0; j < 4; ++j) {
    double o1, o2, o3, o4;
    int a = match_band(xp, center.vectors[j], o1);
    int b = match_band(xm, center.vectors[j], o2);
    int c = match_band(yp, center.vectors[j], o3);
    int d = match_band(ym, center.vectors[j], o4);
    out.ok[j] = o1 > 0.5 && o2 > 0.5 && o3 > 0.5 && o4 > 0.5;
    out.vx[j] =
        -wrap_pi(std::arg(xp.values[a]) - std::arg(xm.values[b])) / (2 * h);
    out.vy[j] =
        -wrap_pi(std::arg(yp.values[c]) - std::arg(ym.values[d])) / (2 * h);
    out.weight[j] = state ? std::norm(center.overlap(j, *state)) : 0.0;
  }
  return out;
}

}  // namespace

CoinOperator momentum_coin(const CoinOperator& coin, const MomentumPoint& p) {
  const cplx phase[4] = {
      std::exp(cplx{0.0, p.kx}),
      std::exp(cplx{0.0, -p.ky}),
      std::exp(cplx{0.0, p.ky}),
      std::exp(cplx{0.0, -p.kx}),
  };
  CoinOperator out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out.at(r, c) = phase[r] * coin.at(r, c);
  return out;
}

CoinOperator momentum_coin(CoinKind kind, const MomentumPoint& p) {
  return momentum_coin(build_coin(kind), p);
}

cplx EigenSystem::overlap(int j, const InitialCoinState& s) const {
  cplx dot{};
  for (int r = 0; r < 4; ++r) dot += std::conj(vectors[j][r]) * s[r];
  return dot;
}

EigenSystem eigensystem(const CoinOperator& m) { return solve(to_eigen(m)); }

BandVelocities band_velocities(CoinKind kind, const MomentumPoint& p,
                               double h) {
  CoinOperator coin = build_coin(kind);
  EigenSystem center = solve(to_eigen(momentum_coin(coin, p)));
  PointVelocities pv = velocities_at(coin, p, h, center, nullptr);
  return {pv.vx, pv.vy, pv.ok};
}

std::pair<double, double> group_velocity(CoinKind kind, const MomentumPoint& p,
                                         int band, double h, bool& ok) {
  if (band < 0 || band > 3) throw std::invalid_argument("band index");
  BandVelocities bv = band_velocities(kind, p, h);
  ok = bv.ok[band];
  return {bv.vx[band], bv.vy[band]};
}

OracleResult oracle_histogram(const CoinOperator& coin,
                              const InitialCoinState& state, int grid, int bins,
                              double h) {
  if (grid < 64) throw std::invalid_argument("oracle grid < 64");
  if (bins < 16) throw std::invalid_argument("oracle bins < 16");
  double n2 = double(grid) * grid;

  // per-row partials merged in row order so the result is independent of
  // the thread count
  std::vector<Histogram> rows(grid, Histogram(bins));
  std::vector<double> row_discard(grid, 0.0);

#pragma omp parallel for schedule(static)
  for (int i = 0; i < grid; ++i) {
    double kx = -kPi + 2 * kPi / grid * (i + 0.5);
    for (int j = 0; j < grid; ++j) {
      double ky = -kPi + 2 * kPi / grid * (j + 0.5);
      MomentumPoint p{kx, ky};
      EigenSystem center = solve(to_eigen(momentum_coin(coin, p)));
      PointVelocities pv = velocities_at(coin, p, h, center, &state);
      for (int b = 0; b < 4; ++b) {
        double w = pv.weight[b] / n2;
        if (!pv.ok[b]) {
          row_discard[i] += w;
          continue;
        }
        rows[i].at(Histogram::bin_of(pv.vx[b], bins),
                   Histogram::bin_of(pv.vy[b], bins)) += w;
      }
    }
  }

  OracleResult out;
  out.hist = Histogram(bins);
  double discarded = 0.0;
  for (int i = 0; i < grid; ++i) {
    for (std::size_t k = 0; k < out.hist.value.size(); ++k)
      out.hist.value[k] += rows[i].value[k];
    discarded += row_discard[i];
  }
  out.discarded_fraction = discarded;
  EigenSystem origin = solve(to_eigen(momentum_coin(coin, {0.0, 0.0})));
  for (int j = 0; j < 4; ++j)
    out.origin_eigenphases[j] = std::arg(origin.values[j]);
  if (discarded > 0.01) {
    std::ostringstream msg;
    msg << "discarded degenerate-sample weight " << discarded << " above 1%";
    throw std::runtime_error(msg.str());
  }
  return out;
}

OracleResult oracle_histogram(CoinKind kind, const InitialCoinState& state,
                              int grid, int bins, double h) {
  return oracle_histogram(build_coin(kind), state, grid, bins, h);
}

SpikeSplit grover_spike_split(const InitialCoinState& state, int grid,
                              int extent) {
  if (grid < 64) throw std::invalid_argument("spike grid < 64");
  if (extent < 1) throw std::invalid_argument("spike extent < 1");
  CoinOperator coin = build_coin(CoinKind::Grover);
  int N = grid;
  int W = 2 * extent + 1;

  // flat-band projection of the initial spinor at every momentum sample
  std::vector<std::array<cplx, 4>> proj(std::size_t(N) * N);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < N; ++i) {
    double kx = -kPi + 2 * kPi / N * (i + 0.5);
    for (int j = 0; j < N; ++j) {
      double ky = -kPi + 2 * kPi / N * (j + 0.5);
      EigenSystem es = solve(to_eigen(momentum_coin(coin, {kx, ky})));
      std::array<cplx, 4> acc{};
      for (int b = 0; b < 4; ++b) {
        if (std::abs(std::abs(es.values[b].real()) - 1.0) > 1e-9 ||
            std::abs(es.values[b].imag()) > 1e-9)
          continue;
        cplx w = es.overlap(b, state);
        for (int r = 0; r < 4; ++r) acc[r] += w * es.vectors[b][r];
      }
      proj[std::size_t(i) * N + j] = acc;
    }
  }

  // separable inverse transform onto the window [-extent, extent]^2
  std::vector<std::array<cplx, 4>> half(std::size_t(N) * W);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < N; ++i)
    for (int yy = 0; yy < W; ++yy) {
      int y = yy - extent;
      std::array<cplx, 4> acc{};
      for (int j = 0; j < N; ++j) {
        double ky = -kPi + 2 * kPi / N * (j + 0.5);
        cplx ph = std::exp(cplx{0.0, ky * y});
        const auto& p = proj[std::size_t(i) * N + j];
        for (int r = 0; r < 4; ++r) acc[r] += ph * p[r];
      }
      half[std::size_t(i) * W + yy] = acc;
    }

  SpikeSplit out{0.0, 0.0, 0.0, 0.0, 0.0};
  KahanSum quad[2][2];
  for (int xx = 0; xx < W; ++xx) {
    int x = xx - extent;
    for (int yy = 0; yy < W; ++yy) {
      int y = yy - extent;
      std::array<cplx, 4> amp{};
      for (int i = 0; i < N; ++i) {
        double kx = -kPi + 2 * kPi / N * (i + 0.5);
        cplx ph = std::exp(cplx{0.0, kx * x});
        const auto& hrow = half[std::size_t(i) * W + yy];
        for (int r = 0; r < 4; ++r) amp[r] += ph * hrow[r];
      }
      double p = 0.0;
      for (int r = 0; r < 4; ++r) p += std::norm(amp[r]) / (double(N) * N * N * N);
      quad[x >= 0 ? 1 : 0][y >= 0 ? 1 : 0].add(p);
    }
  }
  out.mm = quad[0][0].value();
  out.mp = quad[0][1].value();
  out.pm = quad[1][0].value();
  out.pp = quad[1][1].value();
  out.total = out.mm + out.mp + out.pm + out.pp;
  return out;
}

double histogram_moment(const Histogram& h, int r1, int r2) {
  KahanSum s;
  int B = h.bins;
  for (int ix = 0; ix < B; ++ix) {
    double x = -1.0 + 2.0 * (ix + 0.5) / B;
    for (int iy = 0; iy < B; ++iy) {
      double y = -1.0 + 2.0 * (iy + 0.5) / B;
      s.add(std::pow(x, r1) * std::pow(y, r2) * h.at(ix, iy));
    }
  }
  return s.value();
}

}  // namespace sqw
