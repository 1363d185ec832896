// tmsv/ops.hpp
//
// Copyright 2026 The tmsv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Dense per-frame operations on channels-by-frames matrices. All functions
// are pure and templated on the scalar type; double is the default precision
// everywhere else in the library, float instantiations exist for speed.

#ifndef TMSV_OPS_HPP_
#define TMSV_OPS_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "tmsv/common.hpp"

namespace tmsv {

// Weights of a 1D convolution stored as one out_channels x in_channels
// matrix per kernel tap.
template <typename Scalar>
struct ConvParamsT {
  int out_channels = 0;
  int in_channels = 0;
  int kernel_size = 1;
  int dilation = 1;
  std::vector<MatrixX<Scalar>> weight;  // kernel_size taps
  VectorX<Scalar> bias;                 // out_channels
};

using ConvParams = ConvParamsT<double>;

// Deterministic init: uniform in [-1/sqrt(fan_in), 1/sqrt(fan_in)],
// fan_in = in_channels * kernel_size. Taps are filled in order, each tap
// row-major, then the bias.
template <typename Scalar = double>
ConvParamsT<Scalar> conv_init(int out_channels, int in_channels,
                              int kernel_size, int dilation, Rng& rng) {
  if (out_channels < 1 || in_channels < 1 || kernel_size < 1 || dilation < 1)
    throw ConfigError("conv_init: channel/kernel/dilation counts must be >= 1");
  const double bound = 1.0 / std::sqrt(static_cast<double>(in_channels) *
                                       static_cast<double>(kernel_size));
  ConvParamsT<Scalar> p;
  p.out_channels = out_channels;
  p.in_channels = in_channels;
  p.kernel_size = kernel_size;
  p.dilation = dilation;
  p.weight.reserve(kernel_size);
  for (int k = 0; k < kernel_size; ++k) {
    MatrixX<Scalar> w(out_channels, in_channels);
    for (int r = 0; r < out_channels; ++r)
      for (int c = 0; c < in_channels; ++c)
        w(r, c) = static_cast<Scalar>(rng.uniform(-bound, bound));
    p.weight.push_back(std::move(w));
  }
  p.bias.resize(out_channels);
  for (int r = 0; r < out_channels; ++r)
    p.bias(r) = static_cast<Scalar>(rng.uniform(-bound, bound));
  return p;
}

// out[q,t] = bias[q] + sum_c W[q,c] * x[c,t]. Kernel size must be 1.
template <typename Scalar>
MatrixX<Scalar> pointwise_conv(const MatrixX<Scalar>& x,
                               const ConvParamsT<Scalar>& p) {
  if (p.kernel_size != 1)
    throw ConfigError("pointwise_conv: kernel_size must be 1, got " +
                      std::to_string(p.kernel_size));
  if (x.rows() != p.in_channels)
    throw DimensionError("pointwise_conv: input has " +
                         std::to_string(x.rows()) + " channels, params expect " +
                         std::to_string(p.in_channels));
  MatrixX<Scalar> out = p.bias.replicate(1, x.cols());
  out.noalias() += p.weight[0] * x;
  return out;
}

// Dilated cross-correlation with symmetric zero padding; output keeps the
// input frame count. Kernel size must be odd.
template <typename Scalar>
MatrixX<Scalar> dilated_conv1d(const MatrixX<Scalar>& x,
                               const ConvParamsT<Scalar>& p) {
  if (p.kernel_size % 2 == 0)
    throw ConfigError("dilated_conv1d: kernel_size must be odd, got " +
                      std::to_string(p.kernel_size));
  if (x.rows() != p.in_channels)
    throw DimensionError("dilated_conv1d: input has " +
                         std::to_string(x.rows()) + " channels, params expect " +
                         std::to_string(p.in_channels));
  const int frames = static_cast<int>(x.cols());
  const int half = (p.kernel_size - 1) / 2;
  MatrixX<Scalar> out = p.bias.replicate(1, frames);
  for (int k = 0; k < p.kernel_size; ++k) {
    const int off = (k - half) * p.dilation;
    const int t0 = std::max(0, -off);
    const int t1 = std::min(frames, frames - off);
    if (t0 >= t1) continue;
    out.middleCols(t0, t1 - t0).noalias() +=
        p.weight[k] * x.middleCols(t0 + off, t1 - t0);
  }
  return out;
}

// Temporal moving average with edge replication; shape preserving. The mean
// is accumulated relative to the window's first sample so constant inputs
// pass through bit-exactly.
template <typename Scalar>
MatrixX<Scalar> moving_avg_pool(const MatrixX<Scalar>& x, int window) {
  if (window < 1 || window % 2 == 0)
    throw ConfigError("moving_avg_pool: window must be odd and positive, got " +
                      std::to_string(window));
  if (window == 1) return x;
  const int frames = static_cast<int>(x.cols());
  const int half = window / 2;
  const Scalar inv_w = Scalar(1) / static_cast<Scalar>(window);
  MatrixX<Scalar> out(x.rows(), frames);
  VectorX<Scalar> acc(x.rows());
  for (int t = 0; t < frames; ++t) {
    const int anchor = std::clamp(t - half, 0, frames - 1);
    acc.setZero();
    for (int d = -half; d <= half; ++d) {
      const int u = std::clamp(t + d, 0, frames - 1);
      acc += x.col(u) - x.col(anchor);
    }
    out.col(t) = x.col(anchor) + acc * inv_w;
  }
  return out;
}

// Per-frame Z-score normalization over the channel axis (population std,
// guarded denominator).
template <typename Scalar>
MatrixX<Scalar> znorm_frames(const MatrixX<Scalar>& x) {
  const RowVectorX<Scalar> mu = x.colwise().mean();
  MatrixX<Scalar> centered = x.rowwise() - mu;
  const RowVectorX<Scalar> sigma =
      centered.array().square().colwise().mean().sqrt();
  const Scalar eps = static_cast<Scalar>(kZnormEpsilon);
  return centered.array().rowwise() / (sigma.array() + eps);
}

// Per-channel temporal mean and population std, concatenated to length 2C.
template <typename Scalar>
VectorX<Scalar> stats_pooling(const MatrixX<Scalar>& x) {
  const VectorX<Scalar> mean = x.rowwise().mean();
  const MatrixX<Scalar> centered = x.colwise() - mean;
  const VectorX<Scalar> sd =
      centered.array().square().rowwise().mean().sqrt();
  VectorX<Scalar> out(2 * x.rows());
  out << mean, sd;
  return out;
}

template <typename Scalar>
MatrixX<Scalar> relu(const MatrixX<Scalar>& x) {
  return x.cwiseMax(Scalar(0));
}

// Mean of same-shaped matrices; the accumulation is carried out in list
// order so results are deterministic.
template <typename Scalar>
MatrixX<Scalar> mean_of(const std::vector<MatrixX<Scalar>>& xs) {
  if (xs.empty()) throw UsageError("mean_of: empty list");
  MatrixX<Scalar> acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i].rows() != acc.rows() || xs[i].cols() != acc.cols())
      throw DimensionError("mean_of: shape mismatch at element " +
                           std::to_string(i));
    acc += xs[i];
  }
  return acc * (Scalar(1) / static_cast<Scalar>(xs.size()));
}

// Stack two matrices along the channel axis.
template <typename Scalar>
MatrixX<Scalar> concat_channels(const MatrixX<Scalar>& a,
                                const MatrixX<Scalar>& b) {
  if (a.cols() != b.cols())
    throw DimensionError("concat_channels: frame counts differ (" +
                         std::to_string(a.cols()) + " vs " +
                         std::to_string(b.cols()) + ")");
  MatrixX<Scalar> out(a.rows() + b.rows(), a.cols());
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

// Join matrices along the frame axis.
template <typename Scalar>
MatrixX<Scalar> concat_frames(const std::vector<MatrixX<Scalar>>& xs) {
  if (xs.empty()) throw UsageError("concat_frames: empty list");
  Eigen::Index cols = 0;
  for (const auto& x : xs) {
    if (x.rows() != xs[0].rows())
      throw DimensionError("concat_frames: channel counts differ");
    cols += x.cols();
  }
  MatrixX<Scalar> out(xs[0].rows(), cols);
  Eigen::Index at = 0;
  for (const auto& x : xs) {
    out.middleCols(at, x.cols()) = x;
    at += x.cols();
  }
  return out;
}

// Unit-normalize a column vector; guarded by max(norm, eps) so the result is
// exactly unit length for any non-degenerate input.
template <typename Scalar>
VectorX<Scalar> l2_normalize(const VectorX<Scalar>& v) {
  const Scalar n = v.norm();
  return v / std::max(n, static_cast<Scalar>(kEpsilon));
}

}  // namespace tmsv

#endif  // TMSV_OPS_HPP_
