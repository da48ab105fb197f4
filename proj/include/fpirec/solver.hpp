#pragma once

// Over-relaxed Loris-Verhoeven primal-dual iteration for
//   min_X  1/2 ||Y - A(X)||^2 + lambda g(L X)
// generic over the regularization operator L and the conjugate prox of g.

#include <utility>
#include <vector>

#include "fpirec/cube_types.hpp"
#include "fpirec/errors.hpp"
#include "fpirec/forward_model.hpp"
#include "fpirec/proximal.hpp"
#include "fpirec/regularizers.hpp"
#include "fpirec/tensor.hpp"

namespace fpirec {

struct SolverConfig {
  double lambda = 0.0;   // regularization weight, required > 0
  int max_iters = 100;
  double rho = 1.9;         // over-relaxation factor
  double tau_safety = 0.99; // tau = tau_safety / ||A||_op^2
  double stop_rtol = 0.0;   // 0 = run all iterations
  RegularizerChoice regularizer = RegularizerChoice::Ctv;

  void validate() const;
};

struct IterationRecord {
  double objective = 0.0;
  double fidelity = 0.0;
  double rel_change = 0.0;
  double seconds = 0.0;
};

/// Step sizes actually used plus one record per executed iteration.
struct SolverTrace {
  double tau = 0.0;
  double eta = 0.0;
  double rho = 0.0;
  double a_op_norm = 0.0;
  double l_op_norm = 0.0;
  std::vector<IterationRecord> iterations;
};

/// Runs the full iteration:
///   X0 = A^T Y, U0 = L X0, tau = tau_safety/||A||^2, eta = 1/(tau ||L||^2)
///   V    = A^T (A X - Y)
///   Xh   = X - tau (V + L^T U)
///   Uh   = prox_conj(U + eta L Xh)
///   X    = X - rho tau (V + L^T Uh)
///   U    = U + rho (Uh - U)
/// until max_iters or the primal relative change drops below stop_rtol.
/// Throws DivergenceError if an iterate goes non-finite.
std::pair<SpectralCube, SolverTrace> reconstruct(const InterferogramCube& acq,
                                                 const TransmittanceMatrix& a,
                                                 const SolverConfig& cfg);

/// 1/2 ||Y - A X||^2 + lambda g(L X) with g matching the regularizer
/// choice (l1 for DCT, per-group l2 summed otherwise).
double objective_value(const Cube3& x, const Cube3& y, const TransmittanceMatrix& a,
                       RegularizerChoice reg, double lambda);

}  // namespace fpirec
