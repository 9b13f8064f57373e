#include "sqw/coin.hpp"

#include <cmath>

namespace sqw {

namespace {

CoinOperator scaled(double s, const int (&sign)[4][4]) {
  CoinOperator c;
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k) c.at(r, k) = cplx{s * sign[r][k], 0.0};
  return c;
}

}  // namespace

CoinOperator build_coin(CoinKind kind) {
  switch (kind) {
    case CoinKind::Grover: {
      static const int g[4][4] = {{-1, 1, 1, 1},
                                  {1, -1, 1, 1},
                                  {1, 1, -1, 1},
                                  {1, 1, 1, -1}};
      return scaled(0.5, g);
    }
    case CoinKind::SelfAvoidCoin: {
      static const int sc[4][4] = {{0, 1, 1, -1},
                                   {1, 0, 1, 1},
                                   {1, -1, 0, -1},
                                   {-1, -1, 1, 0}};
      return scaled(1.0 / std::sqrt(3.0), sc);
    }
    case CoinKind::SelfAvoidPosition: {
      static const int sp[4][4] = {{-1, -1, 1, 0},
                                   {1, -1, 0, -1},
                                   {1, 0, 1, 1},
                                   {0, 1, 1, -1}};
      return scaled(1.0 / std::sqrt(3.0), sp);
    }
    case CoinKind::SelfAvoidCoinPosition:
    default: {
      static const int scp[4][4] = {{0, -1, 1, 0},
                                    {1, 0, 0, -1},
                                    {1, 0, 0, 1},
                                    {0, 1, 1, 0}};
      return scaled(1.0 / std::sqrt(2.0), scp);
    }
  }
}

bool is_unitary(const CoinOperator& c, double tol) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      cplx s{0.0, 0.0};
      for (int k = 0; k < 4; ++k) s += std::conj(c.at(k, i)) * c.at(k, j);
      if (i == j) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst <= tol;
}

std::set<std::pair<CoinIndex, CoinIndex>> zero_pattern(CoinKind kind) {
  using CI = CoinIndex;
  std::set<std::pair<CI, CI>> diag = {
      {CI::L, CI::L}, {CI::U, CI::U}, {CI::D, CI::D}, {CI::R, CI::R}};
  // r<-l, d<-u, u<-d, l<-r: the transitions that would undo the last shift.
  std::set<std::pair<CI, CI>> anti = {
      {CI::R, CI::L}, {CI::D, CI::U}, {CI::U, CI::D}, {CI::L, CI::R}};
  switch (kind) {
    case CoinKind::Grover:
      return {};
    case CoinKind::SelfAvoidCoin:
      return diag;
    case CoinKind::SelfAvoidPosition:
      return anti;
    case CoinKind::SelfAvoidCoinPosition:
    default:
      diag.insert(anti.begin(), anti.end());
      return diag;
  }
}

const char* coin_name(CoinKind kind) {
  switch (kind) {
    case CoinKind::Grover: return "grover";
    case CoinKind::SelfAvoidCoin: return "sc";
    case CoinKind::SelfAvoidPosition: return "sp";
    case CoinKind::SelfAvoidCoinPosition:
    default: return "scp";
  }
}

}  // namespace sqw
