#pragma once

// Datacubes with attached sampling axes: the latent/reconstructed
// hyperspectral cube (wavenumber axis, 1/um) and the interferometric
// acquisition (optical path difference axis, um).

#include <Eigen/Core>

#include "fpirec/tensor.hpp"

namespace fpirec {

/// Uniform 1-D sampling grid.
struct AxisSpec {
  double start = 0.0;
  double step = 0.0;

  double value(Index i) const { return start + step * static_cast<double>(i); }

  Eigen::VectorXd grid(Index count) const {
    Eigen::VectorXd g(count);
    for (Index i = 0; i < count; ++i) g[i] = value(i);
    return g;
  }
};

/// Hyperspectral cube: channel k sampled at wavenumbers.value(k) [1/um].
struct SpectralCube {
  Cube3 values;
  AxisSpec wavenumbers;
};

/// Interferogram cube: sample l taken at opds.value(l) [um], acquired with
/// a cavity of the given mirror reflectivity.
struct InterferogramCube {
  Cube3 values;
  AxisSpec opds;
  double reflectivity = 0.0;
};

}  // namespace fpirec
