#pragma once

// The analysis operators behind the regularization term: a type-II DCT
// along the spectral mode, first-order spatial differences (TV) with
// Neumann boundaries, and their cascade (collaborative TV). All adjoints
// are exact algebraic transposes.

#include <Eigen/Core>

#include <string>

#include "fpirec/errors.hpp"
#include "fpirec/tensor.hpp"

namespace fpirec {

/// K x K spectral transform, w[i,j] = sqrt(2/K) cos(pi/K (j-1/2)(i-1))
/// with 1-based i, j. The first row has norm sqrt(2), the others norm 1;
/// the adjoint is the plain transpose.
struct DctOperator {
  Index channels = 0;
  Eigen::MatrixXd w;
};

DctOperator make_dct_operator(Index channels);

Cube3 dct_apply(const DctOperator& op, const Cube3& x);
Cube3 dct_adjoint(const DctOperator& op, const Cube3& z);

/// t[i,j,k,0] = x[i+1,j,k] - x[i,j,k] (zero on the last row),
/// t[i,j,k,1] = x[i,j+1,k] - x[i,j,k] (zero on the last column).
Field4 tv_apply(const Cube3& x);

/// Exact adjoint of tv_apply (negative divergence with matching boundary).
Cube3 tv_adjoint(const Field4& t);

Field4 ctv_apply(const DctOperator& dct, const Cube3& x);
Cube3 ctv_adjoint(const DctOperator& dct, const Field4& t);

/// Operator norms, estimated by power iteration (see forward_model.hpp).
/// The cascade norm factors exactly into the spatial and spectral parts
/// because the two operators act on disjoint modes.
double dct_operator_norm(const DctOperator& op);
double tv_operator_norm(Index rows, Index cols);
double ctv_operator_norm(const DctOperator& dct, Index rows, Index cols);

enum class RegularizerChoice { Dct, Tv, Ctv };

std::string to_string(RegularizerChoice choice);
RegularizerChoice parse_regularizer(const std::string& name);

double regularizer_operator_norm(RegularizerChoice choice, const DctOperator& dct,
                                 Index rows, Index cols);

}  // namespace fpirec
