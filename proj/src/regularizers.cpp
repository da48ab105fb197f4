#include "fpirec/regularizers.hpp"

#include <cmath>

#include "fpirec/forward_model.hpp"

namespace fpirec {

DctOperator make_dct_operator(Index channels) {
  if (channels < 1)
    throw ParamError("DCT channel count must be >= 1, got " + std::to_string(channels));
  DctOperator op;
  op.channels = channels;
  op.w.resize(channels, channels);
  const double k = static_cast<double>(channels);
  const double amplitude = std::sqrt(2.0 / k);
  for (Index i = 0; i < channels; ++i)
    for (Index j = 0; j < channels; ++j)
      op.w(i, j) = amplitude * std::cos(M_PI / k * (static_cast<double>(j) + 0.5) *
                                        static_cast<double>(i));
  return op;
}

Cube3 dct_apply(const DctOperator& op, const Cube3& x) {
  return contract_mode3(op.w, x);
}

Cube3 dct_adjoint(const DctOperator& op, const Cube3& z) {
  return contract_mode3(op.w.transpose(), z);
}

Field4 tv_apply(const Cube3& x) {
  const Index rows = x.rows(), cols = x.cols(), chans = x.channels();
  Field4 t(rows, cols, chans);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      const Index base = x.flat_index(i, j, 0);
      const Index down = i + 1 < rows ? x.flat_index(i + 1, j, 0) : -1;
      const Index right = j + 1 < cols ? x.flat_index(i, j + 1, 0) : -1;
      Index g = t.flat_index(i, j, 0, 0);
      for (Index k = 0; k < chans; ++k, g += 2) {
        const double center = x.array()[base + k];
        if (down >= 0) t.array()[g] = x.array()[down + k] - center;
        if (right >= 0) t.array()[g + 1] = x.array()[right + k] - center;
      }
    }
  }
  return t;
}

Cube3 tv_adjoint(const Field4& t) {
  const Index rows = t.rows(), cols = t.cols(), chans = t.channels();
  Cube3 out(rows, cols, chans);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      const Index base = out.flat_index(i, j, 0);
      const Index down = i + 1 < rows ? out.flat_index(i + 1, j, 0) : -1;
      const Index right = j + 1 < cols ? out.flat_index(i, j + 1, 0) : -1;
      Index g = t.flat_index(i, j, 0, 0);
      for (Index k = 0; k < chans; ++k, g += 2) {
        if (down >= 0) {
          const double d = t.array()[g];
          out.array()[base + k] -= d;
          out.array()[down + k] += d;
        }
        if (right >= 0) {
          const double d = t.array()[g + 1];
          out.array()[base + k] -= d;
          out.array()[right + k] += d;
        }
      }
    }
  }
  return out;
}

Field4 ctv_apply(const DctOperator& dct, const Cube3& x) {
  return tv_apply(dct_apply(dct, x));
}

Cube3 ctv_adjoint(const DctOperator& dct, const Field4& t) {
  return dct_adjoint(dct, tv_adjoint(t));
}

double dct_operator_norm(const DctOperator& op) { return operator_norm(op.w); }

double tv_operator_norm(Index rows, Index cols) {
  // Channel count does not matter: TV acts per channel, so iterate on a
  // single-channel image.
  Cube3 seed(rows, cols, 1);
  const Eigen::VectorXd v = power_iteration_seed_vector(seed.size());
  seed.array() = v.array();
  return power_iteration_norm([](const Cube3& x) { return tv_apply(x); },
                              [](const Field4& t) { return tv_adjoint(t); }, std::move(seed));
}

double ctv_operator_norm(const DctOperator& dct, Index rows, Index cols) {
  // The cascade is (TV kron W) on the flattened cube, so its largest
  // singular value is the product of the factors'.
  return tv_operator_norm(rows, cols) * dct_operator_norm(dct);
}

std::string to_string(RegularizerChoice choice) {
  switch (choice) {
    case RegularizerChoice::Dct: return "dct";
    case RegularizerChoice::Tv: return "tv";
    case RegularizerChoice::Ctv: return "ctv";
  }
  return "?";
}

RegularizerChoice parse_regularizer(const std::string& name) {
  if (name == "dct") return RegularizerChoice::Dct;
  if (name == "tv") return RegularizerChoice::Tv;
  if (name == "ctv") return RegularizerChoice::Ctv;
  throw ParamError("unknown regularizer '" + name + "' (expected dct, tv, or ctv)");
}

double regularizer_operator_norm(RegularizerChoice choice, const DctOperator& dct,
                                 Index rows, Index cols) {
  switch (choice) {
    case RegularizerChoice::Dct: return dct_operator_norm(dct);
    case RegularizerChoice::Tv: return tv_operator_norm(rows, cols);
    case RegularizerChoice::Ctv: return ctv_operator_norm(dct, rows, cols);
  }
  throw ParamError("invalid regularizer choice");
}

}  // namespace fpirec
