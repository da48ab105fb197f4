#include "fpirec/forward_model.hpp"

#include <string>

namespace fpirec {

void TransmittanceSpec::validate() const {
  if (!(reflectivity >= 0.0) || !(reflectivity < 1.0))
    throw ParamError("reflectivity must lie in [0, 1), got " + std::to_string(reflectivity));
  if (!(opd_start_um >= 0.0))
    throw ParamError("opd_start_um must be >= 0, got " + std::to_string(opd_start_um));
  if (!(opd_step_um > 0.0))
    throw ParamError("opd_step_um must be > 0, got " + std::to_string(opd_step_um));
  if (opd_count < 1)
    throw ParamError("opd_count must be >= 1, got " + std::to_string(opd_count));
  if (wn_count < 2)
    throw ParamError("wn_count must be >= 2, got " + std::to_string(wn_count));
  if (!(wn_min < wn_max))
    throw ParamError("wavenumber range must satisfy wn_min < wn_max, got [" +
                     std::to_string(wn_min) + ", " + std::to_string(wn_max) + "]");
}

TransmittanceMatrix build_transmittance(const TransmittanceSpec& spec) {
  spec.validate();
  const double r = spec.reflectivity;
  const double peak = (1.0 - r) * (1.0 - r);
  TransmittanceMatrix out;
  out.spec = spec;
  out.a.resize(spec.opd_count, spec.wn_count);
  for (Index l = 0; l < spec.opd_count; ++l) {
    const double delta = spec.opd(l);
    for (Index k = 0; k < spec.wn_count; ++k) {
      const double phase = 2.0 * M_PI * spec.wavenumber(k) * delta;
      out.a(l, k) = peak / (1.0 + r * r - 2.0 * r * std::cos(phase));
    }
  }
  out.op_norm = operator_norm(out.a);
  return out;
}

Cube3 apply(const TransmittanceMatrix& a, const Cube3& x) {
  return contract_mode3(a.a, x);
}

Cube3 adjoint(const TransmittanceMatrix& a, const Cube3& y) {
  return contract_mode3(a.a.transpose(), y);
}

Eigen::VectorXd power_iteration_seed_vector(Index n) {
  RandomStream rng(0x243f6a8885a308d3ull);  // fixed seed: power-iteration starts are reproducible
  Eigen::VectorXd v(n);
  for (Index i = 0; i < n; ++i) v[i] = rng.uniform(-1.0, 1.0);
  return v;
}

double operator_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  return power_iteration_norm(
      [&](const Eigen::VectorXd& v) -> Eigen::VectorXd { return m * v; },
      [&](const Eigen::VectorXd& w) -> Eigen::VectorXd { return m.transpose() * w; },
      power_iteration_seed_vector(m.cols()));
}

Cube3 add_noise(const Cube3& y, double snr_db, std::uint64_t seed) {
  const double n = static_cast<double>(y.size());
  const double mean = y.array().sum() / n;
  const double variance = (y.array() - mean).square().sum() / n;
  const double sigma = std::sqrt(variance / std::pow(10.0, snr_db / 10.0));
  Cube3 out = y;
  RandomStream rng(seed);
  for (Index i = 0; i < out.size(); ++i) out.array()[i] += sigma * rng.gaussian();
  return out;
}

}  // namespace fpirec
