#include "sqw/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sqw {

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_complex(cplx v) {
  std::string s = format_double(v.real());
  if (v.imag() >= 0.0 || std::isnan(v.imag())) s += '+';
  s += format_double(v.imag());
  s += 'j';
  return s;
}

void write_walk_csv(const std::string& path, const WaveFunction& psi,
                    double tol) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "x,y,re_l,im_l,re_u,im_u,re_d,im_d,re_r,im_r,p\n";
  int t = psi.time();
  KahanSum total;
  for (int y = -t; y <= t; ++y) {
    int span = t - std::abs(y);
    int x0 = -span;
    if (((x0 + y + t) & 1) != 0) ++x0;
    for (int x = x0; x <= span; x += 2) {
      const cplx* a = psi.site(x, y);
      double p = std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]) +
                 std::norm(a[3]);
      total.add(p);
      out << x << ',' << y;
      for (int j = 0; j < 4; ++j)
        out << ',' << format_double(a[j].real()) << ','
            << format_double(a[j].imag());
      out << ',' << format_double(p) << '\n';
    }
  }
  if (std::abs(total.value() - 1.0) > tol) {
    std::ostringstream msg;
    msg << "walk CSV probability column sums to " << total.value();
    throw std::runtime_error(msg.str());
  }
}

void write_grid_csv(const std::string& path, const Histogram& h) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "x_center,y_center,value\n";
  int B = h.bins;
  for (int ix = 0; ix < B; ++ix) {
    double x = -1.0 + 2.0 * (ix + 0.5) / B;
    for (int iy = 0; iy < B; ++iy) {
      double y = -1.0 + 2.0 * (iy + 0.5) / B;
      out << format_double(x) << ',' << format_double(y) << ','
          << format_double(h.at(ix, iy)) << '\n';
    }
  }
}

cplx parse_complex(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("empty complex literal");
  std::string s = token;
  double im = 0.0;
  if (s.back() == 'j' || s.back() == 'i') {
    s.pop_back();
    // split at the last +/- that is not an exponent sign or leading sign
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    std::string im_str = split == std::string::npos ? s : s.substr(split);
    if (im_str.empty() || im_str == "+") im_str = "1";
    else if (im_str == "-") im_str = "-1";
    char* end = nullptr;
    im = std::strtod(im_str.c_str(), &end);
    if (end == im_str.c_str() || *end != '\0')
      throw std::invalid_argument("bad complex literal: " + token);
    if (split == std::string::npos) return cplx{0.0, im};
    s = s.substr(0, split);
  }
  char* end = nullptr;
  double re = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw std::invalid_argument("bad complex literal: " + token);
  return cplx{re, im};
}

CoinOperator load_coin_file(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coin file " + path);
  CoinOperator c;
  for (int r = 0; r < 4; ++r) {
    for (int k = 0; k < 4; ++k) {
      std::string token;
      if (!(in >> token))
        throw std::runtime_error("coin file " + path +
                                 ": expected 16 entries");
      c.at(r, k) = parse_complex(token);
    }
  }
  if (!is_unitary(c, tol))
    throw std::runtime_error("coin file " + path + " is not unitary");
  return c;
}

}  // namespace sqw
