#pragma once

// Acquisition operator of a Fabry-Perot imaging spectrometer: Airy
// transmittance matrix construction, forward/adjoint application along the
// spectral mode, operator-norm estimation, and SNR-calibrated noise.

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <utility>

#include "fpirec/cube_types.hpp"
#include "fpirec/errors.hpp"
#include "fpirec/rng.hpp"
#include "fpirec/tensor.hpp"

namespace fpirec {

/// Cavity reflectivity plus the two sampling grids. OPDs are in um,
/// wavenumbers in 1/um, so their product is dimensionless.
struct TransmittanceSpec {
  double reflectivity = 0.255;
  double opd_start_um = 0.0;
  double opd_step_um = 0.025;
  Index opd_count = 319;
  double wn_min = 1.4;
  double wn_max = 2.5;
  Index wn_count = 366;

  void validate() const;

  double opd(Index l) const { return opd_start_um + opd_step_um * static_cast<double>(l); }
  double wn_step() const { return (wn_max - wn_min) / static_cast<double>(wn_count - 1); }
  double wavenumber(Index k) const { return wn_min + wn_step() * static_cast<double>(k); }

  AxisSpec opd_axis() const { return {opd_start_um, opd_step_um}; }
  AxisSpec wavenumber_axis() const { return {wn_min, wn_step()}; }
};

/// Realized opd_count x wn_count coefficient matrix with its cached
/// spectral norm.
struct TransmittanceMatrix {
  TransmittanceSpec spec;
  Eigen::MatrixXd a;
  double op_norm = 0.0;
};

/// a[l,k] = (1-R)^2 / (1 + R^2 - 2R cos(2 pi sigma_k delta_l)).
TransmittanceMatrix build_transmittance(const TransmittanceSpec& spec);

/// Lower and upper bounds of the Airy coefficients for a given reflectivity:
/// ((1-R)/(1+R))^2 at destructive interference, 1 at constructive.
inline double airy_min(double reflectivity) {
  const double q = (1.0 - reflectivity) / (1.0 + reflectivity);
  return q * q;
}

Cube3 apply(const TransmittanceMatrix& a, const Cube3& x);
Cube3 adjoint(const TransmittanceMatrix& a, const Cube3& y);

/// Largest singular value estimated by power iteration on the normal
/// operator. `fwd` and `adj` map between the two spaces; `v` is the start
/// vector (its space is the operator's domain). Stops when the estimate
/// changes by less than rtol relatively, or after max_iters rounds.
template <typename Vec, typename Fwd, typename Adj>
double power_iteration_norm(Fwd&& fwd, Adj&& adj, Vec v, double rtol = 1e-9,
                            int max_iters = 1000) {
  const double v0 = norm2(v);
  if (v0 == 0.0) return 0.0;
  v.array() /= v0;
  double estimate = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    Vec w = adj(fwd(v));
    const double wn = norm2(w);
    if (wn == 0.0) return 0.0;
    const double next = std::sqrt(wn);
    const bool settled = it > 0 && std::abs(next - estimate) < rtol * next;
    estimate = next;
    if (settled) break;
    v = std::move(w);
    v.array() /= wn;
  }
  return estimate;
}

/// Deterministic start vector for the power iteration.
Eigen::VectorXd power_iteration_seed_vector(Index n);

/// Spectral norm of a dense matrix via power_iteration_norm.
double operator_norm(const Eigen::MatrixXd& m);

/// y + e with e i.i.d. Gaussian, calibrated so that
/// 10 log10(Var(y)/Var(e)) == snr_db, Var(y) taken over all entries about
/// their global mean. Deterministic given the seed (single sequential
/// stream, see rng.hpp for the generator contract).
Cube3 add_noise(const Cube3& y, double snr_db, std::uint64_t seed);

}  // namespace fpirec
