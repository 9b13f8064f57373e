#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <stdexcept>

#include "sqw/evolve.hpp"
#include "sqw/limit.hpp"
#include "sqw/spectral.hpp"
#include "sqw/stats.hpp"

namespace py = pybind11;
using namespace sqw;

namespace {

CoinKind parse_kind(const std::string& name) {
  if (name == "grover") return CoinKind::Grover;
  if (name == "sc") return CoinKind::SelfAvoidCoin;
  if (name == "sp") return CoinKind::SelfAvoidPosition;
  if (name == "scp") return CoinKind::SelfAvoidCoinPosition;
  throw std::invalid_argument("unknown coin '" + name +
                              "' (expected grover|sc|sp|scp)");
}

LimitModel parse_model(const std::string& name) {
  if (name == "grover") return LimitModel::GroverWatabe;
  if (name == "sc") return LimitModel::SelfAvoidCoin;
  if (name == "scp") return LimitModel::SelfAvoidCoinPosition;
  throw std::invalid_argument("no closed-form limit law for '" + name + "'");
}

InitialCoinState parse_init(const std::array<cplx, 4>& a) {
  return {a[0], a[1], a[2], a[3]};
}

std::vector<std::vector<double>> hist_rows(const Histogram& h) {
  std::vector<std::vector<double>> rows(h.bins);
  for (int ix = 0; ix < h.bins; ++ix) {
    rows[ix].resize(h.bins);
    for (int iy = 0; iy < h.bins; ++iy) rows[ix][iy] = h.at(ix, iy);
  }
  return rows;
}

// Walk results exposed to python: distribution-level queries only.
struct Walk {
  Distribution dist;
  double total_norm;

  int time() const { return dist.time(); }
  double probability(int x, int y) const {
    if (std::abs(x) > dist.radius() || std::abs(y) > dist.radius()) return 0.0;
    return dist.mass(x, y);
  }
  double block(int r) const { return block_mass(dist, r); }
  double moment(int r1, int r2) const { return empirical_moment(dist, r1, r2); }
  std::vector<std::vector<double>> histogram(int bins) const {
    return hist_rows(rescaled_histogram(dist, bins));
  }
};

Walk run_walk(const std::array<cplx, 4>& init, const std::string& coin,
              int steps) {
  WaveFunction psi = evolve(parse_init(init), parse_kind(coin), steps);
  return {distribution(psi), norm(psi)};
}

}  // namespace

PYBIND11_MODULE(_sqwalk, m) {
  m.doc() = "2D four-state quantum walk simulator";

  py::class_<Walk>(m, "Walk")
      .def_property_readonly("time", &Walk::time)
      .def_property_readonly("norm", [](const Walk& w) { return w.total_norm; })
      .def("probability", &Walk::probability, py::arg("x"), py::arg("y"))
      .def("block_mass", &Walk::block, py::arg("r"))
      .def("moment", &Walk::moment, py::arg("r1"), py::arg("r2"))
      .def("rescaled_histogram", &Walk::histogram, py::arg("bins"));

  m.def("evolve", &run_walk, py::arg("init"), py::arg("coin"),
        py::arg("steps"), "Run the walk and return its distribution");

  m.def(
      "grover_delta",
      [](const std::array<cplx, 4>& init) {
        return grover_delta(parse_init(init));
      },
      py::arg("init"));

  m.def(
      "density",
      [](const std::string& model, double x, double y,
         const std::array<cplx, 4>& init) {
        InitialCoinState s = parse_init(init);
        switch (parse_model(model)) {
          case LimitModel::GroverWatabe: return grover_density(x, y, s);
          case LimitModel::SelfAvoidCoin: return sc_density(x, y, s);
          case LimitModel::SelfAvoidCoinPosition:
          default: return scp_density(x, y, s);
        }
      },
      py::arg("model"), py::arg("x"), py::arg("y"), py::arg("init"),
      "Closed-form limit density at a rescaled point");

  m.def(
      "quadrature_mass",
      [](const std::string& model, const std::array<cplx, 4>& init, int res) {
        return quadrature_mass(parse_model(model), parse_init(init), res);
      },
      py::arg("model"), py::arg("init"), py::arg("resolution") = 1024);

  m.def(
      "quadrature_moment",
      [](const std::string& model, const std::array<cplx, 4>& init, int r1,
         int r2, int res) {
        return quadrature_moment(parse_model(model), parse_init(init), r1, r2,
                                 res);
      },
      py::arg("model"), py::arg("init"), py::arg("r1"), py::arg("r2"),
      py::arg("resolution") = 1024);

  m.def(
      "oracle_histogram",
      [](const std::string& coin, const std::array<cplx, 4>& init, int grid,
         int bins) {
        OracleResult r =
            oracle_histogram(parse_kind(coin), parse_init(init), grid, bins);
        return py::make_tuple(hist_rows(r.hist), r.discarded_fraction);
      },
      py::arg("coin"), py::arg("init"), py::arg("grid") = 256,
      py::arg("bins") = 50,
      "Limit histogram from the momentum-space decomposition; returns "
      "(rows, discarded_fraction)");
}
