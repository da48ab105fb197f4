#pragma once

// Dense 3- and 4-mode tensors with the last mode fastest-varying, plus the
// small set of algebraic primitives the reconstruction pipeline is built on.
// Per-pixel fibers are contiguous, so mode-3 contraction maps onto a single
// dense matrix product over the (rows*cols) x channels fiber view.

#include <Eigen/Core>

#include <cmath>
#include <string>
#include <utility>

#include "fpirec/errors.hpp"

namespace fpirec {

using Index = Eigen::Index;

namespace detail {

inline std::string shape_string(Index a, Index b, Index c) {
  return std::to_string(a) + "x" + std::to_string(b) + "x" + std::to_string(c);
}

inline std::string shape_string(Index a, Index b, Index c, Index d) {
  return shape_string(a, b, c) + "x" + std::to_string(d);
}

}  // namespace detail

/// Rows x cols x channels tensor, channel index fastest-varying.
template <typename Scalar>
class Tensor3 {
public:
  using Flat = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
  using FiberMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  Tensor3() = default;

  Tensor3(Index rows, Index cols, Index channels)
      : rows_(rows), cols_(cols), channels_(channels) {
    if (rows < 1 || cols < 1 || channels < 1)
      throw ShapeError("Tensor3 dimensions must all be >= 1, got " +
                       detail::shape_string(rows, cols, channels));
    data_ = Flat::Zero(rows * cols * channels);
  }

  static Tensor3 constant(Index rows, Index cols, Index channels, Scalar value) {
    Tensor3 t(rows, cols, channels);
    t.data_.setConstant(value);
    return t;
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Index channels() const { return channels_; }
  Index size() const { return data_.size(); }

  Index flat_index(Index i, Index j, Index k) const {
    return (i * cols_ + j) * channels_ + k;
  }

  Scalar operator()(Index i, Index j, Index k) const { return data_[flat_index(i, j, k)]; }
  Scalar& operator()(Index i, Index j, Index k) { return data_[flat_index(i, j, k)]; }

  const Flat& array() const { return data_; }
  Flat& array() { return data_; }

  /// (rows*cols) x channels view; row p = flattened pixel (i*cols + j).
  Eigen::Map<FiberMatrix> fibers() {
    return Eigen::Map<FiberMatrix>(data_.data(), rows_ * cols_, channels_);
  }
  Eigen::Map<const FiberMatrix> fibers() const {
    return Eigen::Map<const FiberMatrix>(data_.data(), rows_ * cols_, channels_);
  }

  bool same_shape(const Tensor3& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && channels_ == o.channels_;
  }

  std::string shape_string() const { return detail::shape_string(rows_, cols_, channels_); }

private:
  Index rows_ = 0, cols_ = 0, channels_ = 0;
  Flat data_;
};

/// Rows x cols x channels x 2 tensor; the trailing mode holds the two
/// spatial difference directions and is fastest-varying.
template <typename Scalar>
class Tensor4 {
public:
  static constexpr Index kDirections = 2;

  using Flat = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
  using GroupMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, kDirections, Eigen::RowMajor>;

  Tensor4() = default;

  Tensor4(Index rows, Index cols, Index channels)
      : rows_(rows), cols_(cols), channels_(channels) {
    if (rows < 1 || cols < 1 || channels < 1)
      throw ShapeError("Tensor4 dimensions must all be >= 1, got " +
                       detail::shape_string(rows, cols, channels, kDirections));
    data_ = Flat::Zero(rows * cols * channels * kDirections);
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Index channels() const { return channels_; }
  Index groups() const { return rows_ * cols_ * channels_; }
  Index size() const { return data_.size(); }

  Index flat_index(Index i, Index j, Index k, Index d) const {
    return ((i * cols_ + j) * channels_ + k) * kDirections + d;
  }

  Scalar operator()(Index i, Index j, Index k, Index d) const {
    return data_[flat_index(i, j, k, d)];
  }
  Scalar& operator()(Index i, Index j, Index k, Index d) {
    return data_[flat_index(i, j, k, d)];
  }

  const Flat& array() const { return data_; }
  Flat& array() { return data_; }

  /// (rows*cols*channels) x 2 view; one row per difference group.
  Eigen::Map<GroupMatrix> group_matrix() {
    return Eigen::Map<GroupMatrix>(data_.data(), groups(), kDirections);
  }
  Eigen::Map<const GroupMatrix> group_matrix() const {
    return Eigen::Map<const GroupMatrix>(data_.data(), groups(), kDirections);
  }

  bool same_shape(const Tensor4& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && channels_ == o.channels_;
  }

  std::string shape_string() const {
    return detail::shape_string(rows_, cols_, channels_, kDirections);
  }

private:
  Index rows_ = 0, cols_ = 0, channels_ = 0;
  Flat data_;
};

using Cube3 = Tensor3<double>;
using Field4 = Tensor4<double>;

/// out[i,j,l] = sum_k matrix[l,k] * cube[i,j,k].
template <typename Scalar, typename Derived>
Tensor3<Scalar> contract_mode3(const Eigen::MatrixBase<Derived>& matrix,
                               const Tensor3<Scalar>& cube) {
  if (matrix.cols() != cube.channels())
    throw ShapeError("mode-3 contraction: matrix " + std::to_string(matrix.rows()) + "x" +
                     std::to_string(matrix.cols()) + " does not match cube " +
                     cube.shape_string());
  Tensor3<Scalar> out(cube.rows(), cube.cols(), matrix.rows());
  out.fibers().noalias() = cube.fibers() * matrix.transpose();
  return out;
}

namespace detail {

template <typename T>
void require_same_shape(const T& a, const T& b, const char* op) {
  if (!a.same_shape(b))
    throw ShapeError(std::string(op) + ": shape " + a.shape_string() + " vs " +
                     b.shape_string());
}

}  // namespace detail

template <typename Scalar>
Scalar inner(const Tensor3<Scalar>& a, const Tensor3<Scalar>& b) {
  detail::require_same_shape(a, b, "inner");
  return a.array().matrix().dot(b.array().matrix());
}

template <typename Scalar>
Scalar inner(const Tensor4<Scalar>& a, const Tensor4<Scalar>& b) {
  detail::require_same_shape(a, b, "inner");
  return a.array().matrix().dot(b.array().matrix());
}

/// y += alpha * x
template <typename T, typename Scalar = typename T::Flat::Scalar>
void axpy(Scalar alpha, const T& x, T& y) {
  detail::require_same_shape(x, y, "axpy");
  y.array() += alpha * x.array();
}

template <typename T, typename Scalar = typename T::Flat::Scalar>
void scale(T& x, Scalar alpha) {
  x.array() *= alpha;
}

template <typename T>
auto norm2(const T& x) {
  return x.array().matrix().norm();
}

template <typename T>
bool all_finite(const T& x) {
  return x.array().allFinite();
}

}  // namespace fpirec
