#include "fpirec/proximal.hpp"

#include <cmath>
#include <string>

namespace fpirec {

namespace {

void require_positive_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw ParamError("prox weight lambda must be positive and finite, got " +
                     std::to_string(lambda));
}

}  // namespace

void prox_conj_l2_groups_inplace(Field4& t, double lambda) {
  require_positive_lambda(lambda);
  auto groups = t.group_matrix();
  for (Index g = 0; g < groups.rows(); ++g) {
    const double n = std::hypot(groups(g, 0), groups(g, 1));
    if (n > lambda) {
      const double s = lambda / n;
      groups(g, 0) *= s;
      groups(g, 1) *= s;
    }
  }
}

void prox_conj_l1_inplace(Cube3& z, double lambda) {
  require_positive_lambda(lambda);
  z.array() = z.array().cwiseMax(-lambda).cwiseMin(lambda);
}

Field4 prox_conj_l2_groups(const Field4& t, double lambda) {
  Field4 out = t;
  prox_conj_l2_groups_inplace(out, lambda);
  return out;
}

Cube3 prox_conj_l1(const Cube3& z, double lambda) {
  Cube3 out = z;
  prox_conj_l1_inplace(out, lambda);
  return out;
}

}  // namespace fpirec
