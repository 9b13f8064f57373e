#pragma once

#include <string>

#include "sqw/coin.hpp"
#include "sqw/state.hpp"
#include "sqw/stats.hpp"

namespace sqw {

// Shortest round-trip decimal representation.
std::string format_double(double v);

std::string format_complex(cplx v);  // "re+imj" form used by coin files

// Per-site CSV: x,y,re_l,im_l,re_u,im_u,re_d,im_d,re_r,im_r,p.
// One row per support site, y-major then x ascending. Throws when the
// probability column does not sum to 1 within tol.
void write_walk_csv(const std::string& path, const WaveFunction& psi,
                    double tol = 1e-9);

// x_center,y_center,value over [-1,1]^2 bin centers, row-major in x.
void write_grid_csv(const std::string& path, const Histogram& h);

// Parses "re+imj" (also plain "re" or "imj"), e.g. "0.5-0.5j".
cplx parse_complex(const std::string& token);

// 4 lines x 4 whitespace-separated entries; must be unitary within tol.
CoinOperator load_coin_file(const std::string& path, double tol = 1e-10);

}  // namespace sqw
