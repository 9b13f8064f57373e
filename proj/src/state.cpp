#include "sqw/state.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sqw/stats.hpp"

namespace sqw {

WaveFunction make_initial(const InitialCoinState& state, int radius) {
  double dev = std::abs(state.norm_sq() - 1.0);
  if (dev > 1e-12) {
    std::ostringstream msg;
    msg << "initial coin state is not normalized: |norm^2 - 1| = " << dev;
    throw std::invalid_argument(msg.str());
  }
  if (radius < 0) throw std::invalid_argument("negative grid radius");
  WaveFunction psi(0, radius);
  cplx* origin = psi.site(0, 0);
  origin[0] = state.alpha;
  origin[1] = state.beta;
  origin[2] = state.gamma;
  origin[3] = state.delta;
  return psi;
}

double norm(const WaveFunction& psi) {
  KahanSum sum;
  int t = psi.time();
  for (int y = -t; y <= t; ++y) {
    int span = t - std::abs(y);
    for (int x = -span; x <= span; ++x) {
      const cplx* a = psi.site(x, y);
      for (int j = 0; j < 4; ++j) sum.add(std::norm(a[j]));
    }
  }
  return sum.value();
}

}  // namespace sqw
