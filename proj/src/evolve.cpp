#include "sqw/evolve.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace sqw {

constexpr int ShiftRule::dx[4];
constexpr int ShiftRule::dy[4];

// Gather form of S*C: each output site reads the coin-flipped component it
// receives from the matching neighbor. Output sites are written exactly once,
// so the row loop parallelizes without races and the result is independent
// of the thread count. All four components of every support site of time t+1
// are assigned (zero when there is no source), and the support parity class
// of t+1 equals that of t-1, so a buffer recycled from two steps back needs
// no clearing.
void step_into(const WaveFunction& psi, const CoinOperator& coin,
               WaveFunction& out) {
  int t = psi.time();
  int tn = t + 1;
  if (tn > psi.radius())
    throw std::out_of_range("step would leave the pre-allocated lattice");
  if (out.radius() != psi.radius())
    throw std::invalid_argument("step_into: mismatched grid radius");
  out.t_ = tn;

  const cplx c0[4] = {coin.at(0, 0), coin.at(0, 1), coin.at(0, 2),
                      coin.at(0, 3)};
  const cplx c1[4] = {coin.at(1, 0), coin.at(1, 1), coin.at(1, 2),
                      coin.at(1, 3)};
  const cplx c2[4] = {coin.at(2, 0), coin.at(2, 1), coin.at(2, 2),
                      coin.at(2, 3)};
  const cplx c3[4] = {coin.at(3, 0), coin.at(3, 1), coin.at(3, 2),
                      coin.at(3, 3)};

#pragma omp parallel for schedule(static)
  for (int y = -tn; y <= tn; ++y) {
    int span = tn - std::abs(y);
    int x0 = -span;
    if (((x0 + y + tn) & 1) != 0) ++x0;  // support parity: x + y + t even
    int ay = std::abs(y);
    int aym = std::abs(y - 1);
    int ayp = std::abs(y + 1);
    for (int x = x0; x <= span; x += 2) {
      cplx* o = out.site(x, y);
      // l arrives from (x+1, y), u from (x, y-1), d from (x, y+1),
      // r from (x-1, y); a source outside the time-t diamond contributes 0.
      if (std::abs(x + 1) + ay <= t) {
        const cplx* a = psi.site(x + 1, y);
        o[0] = c0[0] * a[0] + c0[1] * a[1] + c0[2] * a[2] + c0[3] * a[3];
      } else {
        o[0] = cplx{};
      }
      if (std::abs(x) + aym <= t) {
        const cplx* a = psi.site(x, y - 1);
        o[1] = c1[0] * a[0] + c1[1] * a[1] + c1[2] * a[2] + c1[3] * a[3];
      } else {
        o[1] = cplx{};
      }
      if (std::abs(x) + ayp <= t) {
        const cplx* a = psi.site(x, y + 1);
        o[2] = c2[0] * a[0] + c2[1] * a[1] + c2[2] * a[2] + c2[3] * a[3];
      } else {
        o[2] = cplx{};
      }
      if (std::abs(x - 1) + ay <= t) {
        const cplx* a = psi.site(x - 1, y);
        o[3] = c3[0] * a[0] + c3[1] * a[1] + c3[2] * a[2] + c3[3] * a[3];
      } else {
        o[3] = cplx{};
      }
    }
  }
}

WaveFunction step(const WaveFunction& psi, const CoinOperator& coin) {
  WaveFunction out(psi.time(), psi.radius());
  step_into(psi, coin, out);
  return out;
}

WaveFunction evolve(const InitialCoinState& state, const CoinOperator& coin,
                    int t, int radius) {
  if (t < 0) throw std::invalid_argument("negative step count");
  if (radius < 0) radius = t;
  if (t > radius) throw std::out_of_range("step count exceeds grid radius");
  WaveFunction psi = make_initial(state, radius);
  if (t == 0) return psi;
  WaveFunction buf(0, radius);
  for (int s = 0; s < t; ++s) {
    step_into(psi, coin, buf);
    std::swap(psi, buf);
  }
  return psi;
}

WaveFunction evolve(const InitialCoinState& state, CoinKind kind, int t,
                    int radius) {
  return evolve(state, build_coin(kind), t, radius);
}

}  // namespace sqw
