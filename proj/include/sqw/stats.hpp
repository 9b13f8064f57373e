#pragma once

#include <functional>
#include <vector>

#include "sqw/state.hpp"

namespace sqw {

// Compensated (Kahan) accumulator.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Site probabilities P(x, y) at time t.
class Distribution {
 public:
  Distribution(int t, int radius)
      : t_(t),
        radius_(radius),
        width_(2 * radius + 1),
        p_(std::size_t(width_) * width_, 0.0) {}

  int time() const { return t_; }
  int radius() const { return radius_; }
  double mass(int x, int y) const { return p_[index(x, y)]; }
  double& mass(int x, int y) { return p_[index(x, y)]; }
  double total() const;

 private:
  std::size_t index(int x, int y) const {
    return std::size_t(y + radius_) * width_ + std::size_t(x + radius_);
  }
  int t_;
  int radius_;
  int width_;
  std::vector<double> p_;
};

// B x B histogram over [-1,1]^2. Bins are half-open [a,b) except the last
// edge, which is closed. Index (ix, iy) row-major in ix.
struct Histogram {
  int bins = 0;
  std::vector<double> value;

  explicit Histogram(int B = 0) : bins(B), value(std::size_t(B) * B, 0.0) {}
  double& at(int ix, int iy) { return value[std::size_t(ix) * bins + iy]; }
  double at(int ix, int iy) const { return value[std::size_t(ix) * bins + iy]; }
  double total() const;

  // Bin containing coordinate v in [-1, 1].
  static int bin_of(double v, int B) {
    int i = int((v + 1.0) / 2.0 * B);
    if (i < 0) i = 0;
    if (i >= B) i = B - 1;
    return i;
  }
};

Distribution distribution(const WaveFunction& psi);

double region_mass(const Distribution& d,
                   const std::function<bool(int, int)>& predicate);

// Mass inside the block |x| <= r and |y| <= r.
double block_mass(const Distribution& d, int r);

Histogram rescaled_histogram(const Distribution& d, int bins);

// E[(X_t/t)^{r1} (Y_t/t)^{r2}]; for t = 0 the rescaled position is taken
// as the origin with 0^0 := 1.
double empirical_moment(const Distribution& d, int r1, int r2);

// L1 distance between two histograms of equal bin count.
double l1_distance(const Histogram& a, const Histogram& b);

}  // namespace sqw
