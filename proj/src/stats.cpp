#include "sqw/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace sqw {

double Distribution::total() const {
  KahanSum s;
  for (double v : p_) s.add(v);
  return s.value();
}

double Histogram::total() const {
  KahanSum s;
  for (double v : value) s.add(v);
  return s.value();
}

Distribution distribution(const WaveFunction& psi) {
  Distribution d(psi.time(), psi.radius());
  int t = psi.time();
  for (int y = -t; y <= t; ++y) {
    int span = t - std::abs(y);
    for (int x = -span; x <= span; ++x) {
      const cplx* a = psi.site(x, y);
      d.mass(x, y) = std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]) +
                     std::norm(a[3]);
    }
  }
  return d;
}

double region_mass(const Distribution& d,
                   const std::function<bool(int, int)>& predicate) {
  KahanSum s;
  int t = d.time();
  for (int y = -t; y <= t; ++y) {
    int span = t - std::abs(y);
    for (int x = -span; x <= span; ++x)
      if (predicate(x, y)) s.add(d.mass(x, y));
  }
  return s.value();
}

double block_mass(const Distribution& d, int r) {
  KahanSum s;
  int t = d.time();
  int lim = std::min(r, t);
  for (int y = -lim; y <= lim; ++y)
    for (int x = -lim; x <= lim; ++x)
      if (std::abs(x) + std::abs(y) <= t) s.add(d.mass(x, y));
  return s.value();
}

Histogram rescaled_histogram(const Distribution& d, int bins) {
  if (bins < 2) throw std::invalid_argument("need at least 2 bins");
  if (d.time() < 1) throw std::invalid_argument("need t >= 1 to rescale");
  Histogram h(bins);
  int t = d.time();
  for (int y = -t; y <= t; ++y) {
    int span = t - std::abs(y);
    int iy = Histogram::bin_of(double(y) / t, bins);
    for (int x = -span; x <= span; ++x) {
      int ix = Histogram::bin_of(double(x) / t, bins);
      h.at(ix, iy) += d.mass(x, y);
    }
  }
  return h;
}

double empirical_moment(const Distribution& d, int r1, int r2) {
  if (r1 < 0 || r2 < 0) throw std::invalid_argument("negative moment order");
  KahanSum s;
  int t = d.time();
  for (int y = -t; y <= t; ++y) {
    int span = t - std::abs(y);
    double ys = t > 0 ? double(y) / t : 0.0;
    double yp = std::pow(ys, r2);  // pow(0, 0) == 1
    for (int x = -span; x <= span; ++x) {
      double xs = t > 0 ? double(x) / t : 0.0;
      s.add(std::pow(xs, r1) * yp * d.mass(x, y));
    }
  }
  return s.value();
}

double l1_distance(const Histogram& a, const Histogram& b) {
  if (a.bins != b.bins) throw std::invalid_argument("bin count mismatch");
  KahanSum s;
  for (std::size_t i = 0; i < a.value.size(); ++i)
    s.add(std::abs(a.value[i] - b.value[i]));
  return s.value();
}

}  // namespace sqw
