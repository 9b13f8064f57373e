#pragma once

#include "sqw/state.hpp"
#include "sqw/stats.hpp"

namespace sqw {

enum class LimitModel {
  GroverWatabe,
  SelfAvoidCoin,
  SelfAvoidCoinPosition,
};

// Coefficients of the Grover limit law for one initial state.
struct GroverCoeffs {
  double m1, m2, m3, m4, m5, m6;
  double delta;

  static GroverCoeffs from(const InitialCoinState& s);
};

// Point mass of the Grover limit law at the origin.
double grover_delta(const InitialCoinState& s);

// Absolutely-continuous limit densities. Each evaluator returns 0 outside
// its support: x^2+y^2 < 1/2 (Grover), D_sc(|x|,|y|) > 0 with |x|,|y| <= 1/3
// (coin-space), x^2+y^2 < 1/4 (coin-and-position). Support inequalities are
// strict; boundary points give 0.
double grover_density(double x, double y, const InitialCoinState& s);
double sc_density(double x, double y, const InitialCoinState& s);
double scp_density(double x, double y, const InitialCoinState& s);

double sc_discriminant(double x, double y);  // D_sc

bool in_support(LimitModel model, double x, double y);

// Radius of the coin-space support along direction theta (smallest positive
// root of D_sc on the ray).
double sc_support_radius(double theta);

// Numerical integrals of the densities over their support. The integrands
// are evaluated on uniform midpoint grids in smoothing variables, so the
// boundary singularities never get touched; see limit.cpp for the exact
// substitutions.
double quadrature_mass(LimitModel model, const InitialCoinState& s,
                       int resolution);
double quadrature_moment(LimitModel model, const InitialCoinState& s, int r1,
                         int r2, int resolution);

struct ConvergedValue {
  double value;       // finest-resolution result
  double change;      // |value - result at half resolution|
  bool converged;     // change <= tol
};

// Runs the quadrature at resolution/2 and resolution and reports the
// resolution-doubling change against tol.
ConvergedValue quadrature_mass_checked(LimitModel model,
                                       const InitialCoinState& s,
                                       int resolution, double tol);
ConvergedValue quadrature_moment_checked(LimitModel model,
                                         const InitialCoinState& s, int r1,
                                         int r2, int resolution, double tol);

// Limit density integrated bin-by-bin over the [-1,1]^2 histogram grid.
// For GroverWatabe only the continuous part is deposited; add the point
// mass grover_delta() to the origin bin separately when comparing against
// simulations.
Histogram binned_density(LimitModel model, const InitialCoinState& s, int bins,
                         int resolution);

}  // namespace sqw
