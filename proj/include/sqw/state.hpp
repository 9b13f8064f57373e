#pragma once

#include <complex>
#include <vector>

#include "sqw/coin.hpp"

namespace sqw {

// Initial coin state (alpha, beta, gamma, delta) at the origin.
struct InitialCoinState {
  cplx alpha, beta, gamma, delta;

  double norm_sq() const {
    return std::norm(alpha) + std::norm(beta) + std::norm(gamma) +
           std::norm(delta);
  }
  cplx operator[](int j) const {
    switch (j) {
      case 0: return alpha;
      case 1: return beta;
      case 2: return gamma;
      default: return delta;
    }
  }
};

// Four-component wave function on the square lattice [-radius, radius]^2.
// Amplitudes outside the diamond |x|+|y| <= t and on sites with x+y+t odd
// are exact zeros.
class WaveFunction {
 public:
  WaveFunction(int t, int radius)
      : t_(t),
        radius_(radius),
        width_(2 * radius + 1),
        amp_(4 * std::size_t(width_) * width_, cplx{0.0, 0.0}) {}

  int time() const { return t_; }
  int radius() const { return radius_; }

  bool in_grid(int x, int y) const {
    return x >= -radius_ && x <= radius_ && y >= -radius_ && y <= radius_;
  }

  // Pointer to the 4 coin amplitudes of site (x, y).
  const cplx* site(int x, int y) const { return &amp_[index(x, y)]; }
  cplx* site(int x, int y) { return &amp_[index(x, y)]; }

  cplx amplitude(int x, int y, CoinIndex j) const {
    return amp_[index(x, y) + int(j)];
  }

  const std::vector<cplx>& raw() const { return amp_; }

 private:
  std::size_t index(int x, int y) const {
    return 4 * (std::size_t(y + radius_) * width_ + std::size_t(x + radius_));
  }

  int t_;
  int radius_;
  int width_;
  std::vector<cplx> amp_;

  friend void step_into(const WaveFunction&, const CoinOperator&,
                        WaveFunction&);
};

// Point-localized state at the origin. Throws std::invalid_argument when the
// input deviates from unit norm by more than 1e-12.
WaveFunction make_initial(const InitialCoinState& state, int radius);

// Sum of |amplitude|^2 over all sites and coin components (compensated).
double norm(const WaveFunction& psi);

}  // namespace sqw
