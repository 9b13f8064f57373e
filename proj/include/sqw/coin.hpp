#pragma once

#include <array>
#include <complex>
#include <set>
#include <string>
#include <utility>

namespace sqw {

using cplx = std::complex<double>;

// Coin basis ordering is fixed: l=0, u=1, d=2, r=3.
enum class CoinIndex : int { L = 0, U = 1, D = 2, R = 3 };

enum class CoinKind {
  Grover,
  SelfAvoidCoin,          // diagonal entries forced to zero
  SelfAvoidPosition,      // anti-directional entries forced to zero
  SelfAvoidCoinPosition,  // both patterns at once
};

// 4x4 complex coin matrix, row-major. Rows/columns indexed by CoinIndex.
struct CoinOperator {
  std::array<cplx, 16> m{};

  cplx& at(int r, int c) { return m[r * 4 + c]; }
  const cplx& at(int r, int c) const { return m[r * 4 + c]; }
  cplx& at(CoinIndex r, CoinIndex c) { return at(int(r), int(c)); }
  const cplx& at(CoinIndex r, CoinIndex c) const { return at(int(r), int(c)); }
};

CoinOperator build_coin(CoinKind kind);

bool is_unitary(const CoinOperator& c, double tol);

// Entries that the self-avoidance constraint forces to zero.
std::set<std::pair<CoinIndex, CoinIndex>> zero_pattern(CoinKind kind);

const char* coin_name(CoinKind kind);

}  // namespace sqw
