#include "sqw/limit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace sqw {

namespace {

constexpr double kPi = std::numbers::pi;

double re(cplx z) { return z.real(); }

// Linear coefficients of eta_sc. The sign convention follows the numerical
// behaviour of the walk (and the momentum-space oracle): the density tilts
// as 1 - 2x*cx + 2y*cy, mirroring the coin-and-position law.
struct ScCoeffs {
  double cx, cy;
  static ScCoeffs from(const InitialCoinState& s) {
    cplx a = s.alpha, b = s.beta, g = s.gamma, d = s.delta;
    ScCoeffs c;
    c.cx = std::norm(a) - std::norm(d) +
           re((-a + g - d) * std::conj(b) + (a + b - d) * std::conj(g));
    c.cy = std::norm(b) - std::norm(g) +
           re((b + g + d) * std::conj(a) + (a - b + g) * std::conj(d));
    return c;
  }
  double eta(double x, double y) const { return 1.0 - 2.0 * x * cx + 2.0 * y * cy; }
};

struct ScpCoeffs {
  double cx, cy;
  static ScpCoeffs from(const InitialCoinState& s) {
    ScpCoeffs c;
    c.cx = std::norm(s.alpha) - std::norm(s.delta) -
           2.0 * re(s.beta * std::conj(s.gamma));
    c.cy = std::norm(s.beta) - std::norm(s.gamma) -
           2.0 * re(s.alpha * std::conj(s.delta));
    return c;
  }
  double eta(double x, double y) const { return 1.0 - 2.0 * x * cx + 2.0 * y * cy; }
};

double grover_eta(const GroverCoeffs& c, double x, double y) {
  return c.m1 - c.m2 * x - c.m3 * y + c.m4 * x * x + c.m5 * y * y +
         c.m6 * x * y;
}

// sc density without the eta factor: f_sc * (g1 + g2). Assumes D > 0.
double sc_shape(double x, double y, double d) {
  double sq = std::sqrt(d);
  double x2 = x * x, y2 = y * y;
  double a = 648.0 * (x2 * x2 + y2 * y2) + 576.0 * x2 * y2 -
             324.0 * (x2 + y2) + 53.0;
  double b = 4.0 * (7.0 - 18.0 * (x2 + y2)) * sq;
  double g1 = std::sqrt(std::max(a + b, 0.0));
  double g2 = std::sqrt(std::max(a - b, 0.0));
  double f = 1.0 / (kPi * kPi * (1.0 - 4.0 * x2) * (1.0 - 4.0 * y2) * sq);
  return f * (g1 + g2);
}

// --- transformed midpoint grids -------------------------------------------
//
// Each support carries an integrable singularity on its boundary, so a
// Cartesian midpoint rule stalls at O(h^{1/2}). The rules below substitute
// variables that flatten the boundary:
//
//  scp:    x = sin(u)/2, y = sin(v)/2 maps the open disk to the diamond
//          |u|+|v| < pi/2; rotating to p = u+v, q = u-v gives the square
//          (-pi/2, pi/2)^2 with integrand eta / (pi^2 (cos p + cos q)).
//          A second layer p = (pi/2) sin s, q = (pi/2) sin w flattens the
//          remaining corner spikes.
//  grover: identical after the 45-degree rotation u = x+y, v = x-y (the
//          continuous part has the same product structure on the disk of
//          radius 1/sqrt(2)).
//  sc:     polar midpoints with r = R(theta) sin(u) (kills the 1/sqrt(D)
//          boundary singularity) and a graded angle theta = phi - sin(4 phi)/4
//          that clusters points at the four cusps, where the density grows
//          like 1/distance.

template <typename Cell>
void scp_grid(const InitialCoinState& s, int res, Cell&& cell) {
  ScpCoeffs c = ScpCoeffs::from(s);
  double h = kPi / res;
  std::vector<double> p(res), jac(res);
  for (int i = 0; i < res; ++i) {
    double t = -kPi / 2 + h * (i + 0.5);
    p[i] = kPi / 2 * std::sin(t);
    jac[i] = kPi / 2 * std::cos(t);
  }
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      double u = (p[i] + p[j]) / 2, v = (p[i] - p[j]) / 2;
      double x = 0.5 * std::sin(u), y = 0.5 * std::sin(v);
      double w = c.eta(x, y) /
                 (kPi * kPi * (std::cos(p[i]) + std::cos(p[j]))) * jac[i] *
                 jac[j] * h * h;
      cell(x, y, w);
    }
  }
}

template <typename Cell>
void grover_grid(const InitialCoinState& s, int res, Cell&& cell) {
  GroverCoeffs c = GroverCoeffs::from(s);
  double h = kPi / res;
  std::vector<double> p(res), jac(res);
  for (int i = 0; i < res; ++i) {
    double t = -kPi / 2 + h * (i + 0.5);
    p[i] = kPi / 2 * std::sin(t);
    jac[i] = kPi / 2 * std::cos(t);
  }
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      double a = (p[i] + p[j]) / 2, b = (p[i] - p[j]) / 2;
      double u = std::sin(a), v = std::sin(b);
      double x = (u + v) / 2, y = (u - v) / 2;
      double w = grover_eta(c, x, y) /
                 (kPi * kPi * (std::cos(p[i]) + std::cos(p[j]))) * jac[i] *
                 jac[j] * h * h;
      cell(x, y, w);
    }
  }
}

template <typename Cell>
void sc_grid(const InitialCoinState& s, int res, Cell&& cell) {
  ScCoeffs c = ScCoeffs::from(s);
  double hphi = 2 * kPi / res;
  double hu = (kPi / 2) / res;
  std::vector<double> sinu(res), cosu(res);
  for (int i = 0; i < res; ++i) {
    double u = hu * (i + 0.5);
    sinu[i] = std::sin(u);
    cosu[i] = std::cos(u);
  }
  for (int i = 0; i < res; ++i) {
    double phi = -kPi + hphi * (i + 0.5);
    double theta = phi - std::sin(4.0 * phi) / 4.0;
    double wth = (1.0 - std::cos(4.0 * phi)) * hphi;
    double rb = sc_support_radius(theta);
    double ct = std::cos(theta), st = std::sin(theta);
    for (int j = 0; j < res; ++j) {
      double r = rb * sinu[j];
      double x = r * ct, y = r * st;
      double d = sc_discriminant(x, y);
      if (d <= 0.0) continue;  // roundoff stragglers right at the boundary
      double w = sc_shape(x, y, d) * c.eta(x, y) * r * rb * cosu[j] * hu * wth;
      cell(x, y, w);
    }
  }
}

template <typename Cell>
void model_grid(LimitModel model, const InitialCoinState& s, int res,
                Cell&& cell) {
  if (res < 64) throw std::invalid_argument("quadrature resolution < 64");
  switch (model) {
    case LimitModel::GroverWatabe:
      grover_grid(s, res, cell);
      break;
    case LimitModel::SelfAvoidCoin:
      sc_grid(s, res, cell);
      break;
    case LimitModel::SelfAvoidCoinPosition:
      scp_grid(s, res, cell);
      break;
  }
}

}  // namespace

GroverCoeffs GroverCoeffs::from(const InitialCoinState& s) {
  cplx a = s.alpha, b = s.beta, g = s.gamma, d = s.delta;
  double na = std::norm(a), nb = std::norm(b), ng = std::norm(g),
         nd = std::norm(d);
  GroverCoeffs c;
  c.m1 = 0.5 + re(a * std::conj(d) + b * std::conj(g));
  c.m2 = na - nd + re(-a * std::conj(b) - a * std::conj(g) +
                      b * std::conj(d) + g * std::conj(d));
  c.m3 = -nb + ng + re(a * std::conj(b) - a * std::conj(g) +
                       b * std::conj(d) - g * std::conj(d));
  c.m4 = 0.5 * (na - nb - ng + nd) -
         re(a * std::conj(b) + a * std::conj(g) + 3.0 * a * std::conj(d) +
            b * std::conj(g) + b * std::conj(d) + g * std::conj(d));
  c.m5 = -0.5 * (na - nb - ng + nd) -
         re(a * std::conj(b) + a * std::conj(g) + a * std::conj(d) +
            3.0 * b * std::conj(g) + b * std::conj(d) + g * std::conj(d));
  c.m6 = -2.0 * re(-a * std::conj(b) + a * std::conj(g) +
                   b * std::conj(d) - g * std::conj(d));
  c.delta = re((kPi - 2.0) * (a + d) * (std::conj(b) + std::conj(g)) +
               (kPi - 4.0) * (a * std::conj(d) + b * std::conj(g))) /
                kPi +
            0.5;
  return c;
}

double grover_delta(const InitialCoinState& s) {
  return GroverCoeffs::from(s).delta;
}

double grover_density(double x, double y, const InitialCoinState& s) {
  if (x * x + y * y >= 0.5) return 0.0;
  GroverCoeffs c = GroverCoeffs::from(s);
  double f = 2.0 / (kPi * kPi * (x + y + 1.0) * (x - y + 1.0) *
                    (x + y - 1.0) * (x - y - 1.0));
  return f * grover_eta(c, x, y);
}

double sc_discriminant(double x, double y) {
  double x2 = x * x, y2 = y * y;
  return 81.0 * (x2 * x2 + y2 * y2) - 18.0 * x2 * y2 - 18.0 * (x2 + y2) + 1.0;
}

double sc_density(double x, double y, const InitialCoinState& s) {
  double d = sc_discriminant(std::abs(x), std::abs(y));
  if (!(d > 0.0) || std::abs(x) > 1.0 / 3.0 || std::abs(y) > 1.0 / 3.0)
    return 0.0;
  return sc_shape(x, y, d) * ScCoeffs::from(s).eta(x, y);
}

double scp_density(double x, double y, const InitialCoinState& s) {
  if (x * x + y * y >= 0.25) return 0.0;
  double f = 4.0 / (kPi * kPi * (1.0 - 4.0 * x * x) * (1.0 - 4.0 * y * y));
  return f * ScpCoeffs::from(s).eta(x, y);
}

bool in_support(LimitModel model, double x, double y) {
  switch (model) {
    case LimitModel::GroverWatabe:
      return x * x + y * y < 0.5;
    case LimitModel::SelfAvoidCoin:
      return sc_discriminant(std::abs(x), std::abs(y)) > 0.0 &&
             std::abs(x) <= 1.0 / 3.0 && std::abs(y) <= 1.0 / 3.0;
    case LimitModel::SelfAvoidCoinPosition:
    default:
      return x * x + y * y < 0.25;
  }
}

double sc_support_radius(double theta) {
  double ct = std::cos(theta), st = std::sin(theta);
  // D(0) = 1 > 0; march outward to bracket the first root, then bisect.
  double rmax = 1.0 / 3.0 / std::max(std::abs(ct), std::abs(st));
  auto d = [&](double r) { return sc_discriminant(r * ct, r * st); };
  const int n = 2048;
  double lo = 0.0, hi = rmax;
  bool bracketed = false;
  for (int i = 1; i <= n; ++i) {
    double r = rmax * i / n;
    if (d(r) <= 0.0) {
      lo = rmax * (i - 1) / n;
      hi = r;
      bracketed = true;
      break;
    }
  }
  if (!bracketed) return rmax;  // on-axis rays: D > 0 all the way to 1/3
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    (d(mid) > 0.0 ? lo : hi) = mid;
  }
  return lo;
}

double quadrature_mass(LimitModel model, const InitialCoinState& s,
                       int resolution) {
  KahanSum sum;
  model_grid(model, s, resolution,
             [&](double, double, double w) { sum.add(w); });
  return sum.value();
}

double quadrature_moment(LimitModel model, const InitialCoinState& s, int r1,
                         int r2, int resolution) {
  if (r1 < 0 || r2 < 0) throw std::invalid_argument("negative moment order");
  KahanSum sum;
  model_grid(model, s, resolution, [&](double x, double y, double w) {
    sum.add(std::pow(x, r1) * std::pow(y, r2) * w);
  });
  // The Grover point mass contributes only to the (0,0) moment.
  if (model == LimitModel::GroverWatabe && r1 == 0 && r2 == 0)
    sum.add(grover_delta(s));
  return sum.value();
}

ConvergedValue quadrature_mass_checked(LimitModel model,
                                       const InitialCoinState& s,
                                       int resolution, double tol) {
  double coarse = quadrature_mass(model, s, resolution / 2);
  double fine = quadrature_mass(model, s, resolution);
  double change = std::abs(fine - coarse);
  return {fine, change, change <= tol};
}

ConvergedValue quadrature_moment_checked(LimitModel model,
                                         const InitialCoinState& s, int r1,
                                         int r2, int resolution, double tol) {
  double coarse = quadrature_moment(model, s, r1, r2, resolution / 2);
  double fine = quadrature_moment(model, s, r1, r2, resolution);
  double change = std::abs(fine - coarse);
  return {fine, change, change <= tol};
}

Histogram binned_density(LimitModel model, const InitialCoinState& s, int bins,
                         int resolution) {
  if (bins < 2) throw std::invalid_argument("need at least 2 bins");
  Histogram h(bins);
  model_grid(model, s, resolution, [&](double x, double y, double w) {
    h.at(Histogram::bin_of(x, bins), Histogram::bin_of(y, bins)) += w;
  });
  return h;
}

}  // namespace sqw
