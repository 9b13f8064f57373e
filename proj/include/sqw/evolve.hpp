#pragma once

#include "sqw/coin.hpp"
#include "sqw/state.hpp"

namespace sqw {

// Displacement of each coin component: l->(-1,0), u->(0,+1), d->(0,-1),
// r->(+1,0).
struct ShiftRule {
  static constexpr int dx[4] = {-1, 0, 0, +1};
  static constexpr int dy[4] = {0, +1, -1, 0};
};

// One step: coin flip then shift. Throws std::out_of_range when the support
// would leave the pre-allocated grid.
WaveFunction step(const WaveFunction& psi, const CoinOperator& coin);

// In-place variant: writes the next state into out (same radius). Every
// support site of the new time is fully overwritten, so out may hold stale
// data from two steps earlier.
void step_into(const WaveFunction& psi, const CoinOperator& coin,
               WaveFunction& out);

// (SC)^t applied to the origin-localized initial state. The grid radius is
// t unless a larger radius is requested.
WaveFunction evolve(const InitialCoinState& state, const CoinOperator& coin,
                    int t, int radius = -1);
WaveFunction evolve(const InitialCoinState& state, CoinKind kind, int t,
                    int radius = -1);

}  // namespace sqw
