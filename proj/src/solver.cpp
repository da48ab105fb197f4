#include "fpirec/solver.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

namespace fpirec {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct DctRegularizer {
  using Dual = Cube3;
  DctOperator op;
  Dual apply(const Cube3& x) const { return dct_apply(op, x); }
  Cube3 adjoint(const Dual& z) const { return dct_adjoint(op, z); }
  double norm_value(const Dual& z) const { return z.array().abs().sum(); }
  void prox_conj(Dual& z, double lambda) const { prox_conj_l1_inplace(z, lambda); }
  double op_norm(Index, Index) const { return dct_operator_norm(op); }
};

struct TvRegularizer {
  using Dual = Field4;
  Dual apply(const Cube3& x) const { return tv_apply(x); }
  Cube3 adjoint(const Dual& t) const { return tv_adjoint(t); }
  double norm_value(const Dual& t) const { return group_l2_sum(t); }
  void prox_conj(Dual& t, double lambda) const { prox_conj_l2_groups_inplace(t, lambda); }
  double op_norm(Index rows, Index cols) const { return tv_operator_norm(rows, cols); }

  static double group_l2_sum(const Field4& t) {
    auto groups = t.group_matrix();
    double sum = 0.0;
    for (Index g = 0; g < groups.rows(); ++g)
      sum += std::hypot(groups(g, 0), groups(g, 1));
    return sum;
  }
};

struct CtvRegularizer {
  using Dual = Field4;
  DctOperator op;
  Dual apply(const Cube3& x) const { return ctv_apply(op, x); }
  Cube3 adjoint(const Dual& t) const { return ctv_adjoint(op, t); }
  double norm_value(const Dual& t) const { return TvRegularizer::group_l2_sum(t); }
  void prox_conj(Dual& t, double lambda) const { prox_conj_l2_groups_inplace(t, lambda); }
  double op_norm(Index rows, Index cols) const { return ctv_operator_norm(op, rows, cols); }
};

template <typename F>
auto with_regularizer(RegularizerChoice choice, Index channels, F&& f) {
  switch (choice) {
    case RegularizerChoice::Dct: return f(DctRegularizer{make_dct_operator(channels)});
    case RegularizerChoice::Tv: return f(TvRegularizer{});
    case RegularizerChoice::Ctv: return f(CtvRegularizer{make_dct_operator(channels)});
  }
  throw ParamError("invalid regularizer choice");
}

template <typename Reg>
std::pair<SpectralCube, SolverTrace> run_loris_verhoeven(const InterferogramCube& acq,
                                                         const TransmittanceMatrix& a,
                                                         const Reg& reg, double l_norm,
                                                         const SolverConfig& cfg) {
  const Cube3& y = acq.values;

  SolverTrace trace;
  trace.rho = cfg.rho;
  trace.a_op_norm = a.op_norm;
  trace.l_op_norm = l_norm;
  const double tau = cfg.tau_safety / (a.op_norm * a.op_norm);
  // A vanishing operator norm means L is the zero map on this shape; the
  // dual then never moves and the iteration degenerates to gradient steps.
  const double eta = l_norm > 0.0 ? 1.0 / (tau * l_norm * l_norm) : 0.0;
  trace.tau = tau;
  trace.eta = eta;

  Cube3 x = adjoint(a, y);
  typename Reg::Dual u = reg.apply(x);

  auto finish_record = [&](IterationRecord& rec, const Cube3& residual, const Cube3& state) {
    rec.fidelity = 0.5 * residual.array().square().sum();
    rec.objective = rec.fidelity + cfg.lambda * reg.norm_value(reg.apply(state));
  };

  int executed = 0;
  for (int q = 0; q < cfg.max_iters; ++q) {
    Cube3 residual = apply(a, x);
    axpy(-1.0, y, residual);
    if (executed > 0) finish_record(trace.iterations.back(), residual, x);

    const auto t0 = Clock::now();
    const Cube3 v = adjoint(a, residual);

    Cube3 grad = reg.adjoint(u);
    axpy(1.0, v, grad);
    Cube3 xh = x;
    axpy(-tau, grad, xh);

    typename Reg::Dual uh = reg.apply(xh);
    scale(uh, eta);
    axpy(1.0, u, uh);
    reg.prox_conj(uh, cfg.lambda);

    grad = reg.adjoint(uh);
    axpy(1.0, v, grad);
    Cube3 xn = x;
    axpy(-cfg.rho * tau, grad, xn);

    // u += rho (uh - u)
    axpy(-1.0, u, uh);
    axpy(cfg.rho, uh, u);

    const double x_norm = norm2(x);
    const double step_norm = (xn.array() - x.array()).matrix().norm();
    const double rel_change =
        x_norm > 0.0 ? step_norm / x_norm
                     : (step_norm > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    x = std::move(xn);
    ++executed;

    if (!all_finite(x) || !all_finite(u))
      throw DivergenceError("solver diverged: non-finite iterate at iteration " +
                                std::to_string(executed),
                            executed);

    IterationRecord rec;
    rec.rel_change = rel_change;
    rec.seconds = seconds_since(t0);
    trace.iterations.push_back(rec);

    if (cfg.stop_rtol > 0.0 && rel_change < cfg.stop_rtol) break;
  }

  if (!trace.iterations.empty()) {
    Cube3 residual = apply(a, x);
    axpy(-1.0, y, residual);
    finish_record(trace.iterations.back(), residual, x);
  }

  return {SpectralCube{std::move(x), a.spec.wavenumber_axis()}, std::move(trace)};
}

}  // namespace

void SolverConfig::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw ParamError("lambda must be positive and finite, got " + std::to_string(lambda));
  if (max_iters < 1)
    throw ParamError("max_iters must be >= 1, got " + std::to_string(max_iters));
  if (!(rho > 0.0) || !(rho < 2.0))
    throw ParamError("rho must lie in (0, 2), got " + std::to_string(rho));
  if (!(tau_safety > 0.0) || !(tau_safety <= 1.0))
    throw ParamError("tau_safety must lie in (0, 1], got " + std::to_string(tau_safety));
  if (!(stop_rtol >= 0.0))
    throw ParamError("stop_rtol must be >= 0, got " + std::to_string(stop_rtol));
}

std::pair<SpectralCube, SolverTrace> reconstruct(const InterferogramCube& acq,
                                                 const TransmittanceMatrix& a,
                                                 const SolverConfig& cfg) {
  cfg.validate();
  if (acq.values.channels() != a.a.rows())
    throw ShapeError("acquisition has " + std::to_string(acq.values.channels()) +
                     " samples but the transmittance matrix has " + std::to_string(a.a.rows()) +
                     " rows");
  if (!(a.op_norm > 0.0))
    throw ParamError("transmittance operator norm must be positive, got " +
                     std::to_string(a.op_norm));

  return with_regularizer(cfg.regularizer, a.a.cols(), [&](const auto& reg) {
    const double l_norm = reg.op_norm(acq.values.rows(), acq.values.cols());
    return run_loris_verhoeven(acq, a, reg, l_norm, cfg);
  });
}

double objective_value(const Cube3& x, const Cube3& y, const TransmittanceMatrix& a,
                       RegularizerChoice choice, double lambda) {
  Cube3 residual = apply(a, x);
  detail::require_same_shape(residual, y, "objective");
  axpy(-1.0, y, residual);
  const double fidelity = 0.5 * residual.array().square().sum();
  return with_regularizer(choice, x.channels(), [&](const auto& reg) {
    return fidelity + lambda * reg.norm_value(reg.apply(x));
  });
}

}  // namespace fpirec
