#pragma once

// Proximal operators of the Fenchel conjugates used by the dual update:
// for the l_{1,1,1,2} norm this is the per-group projection onto the
// lambda-radius l2 ball; for the plain l1 norm it degenerates to an
// entrywise clamp.

#include "fpirec/errors.hpp"
#include "fpirec/tensor.hpp"

namespace fpirec {

void prox_conj_l2_groups_inplace(Field4& t, double lambda);
void prox_conj_l1_inplace(Cube3& z, double lambda);

Field4 prox_conj_l2_groups(const Field4& t, double lambda);
Cube3 prox_conj_l1(const Cube3& z, double lambda);

}  // namespace fpirec
