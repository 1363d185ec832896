// tmsv/tape.hpp
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
// Reverse-mode gradient tape over dense matrices. Every node holds one
// matrix (scalars are 1x1, vectors are single columns). Recorded ops carry a
// replay closure (so a finished tape can be re-executed and checked
// bit-for-bit) and a backprop closure (the analytic vector-Jacobian
// product). A tape is single-writer: one forward/backward pass is one
// single-threaded unit of work.

#ifndef TMSV_TAPE_HPP_
#define TMSV_TAPE_HPP_

#include <functional>
#include <vector>

#include "tmsv/common.hpp"
#include "tmsv/ops.hpp"

namespace tmsv::ad {

class Tape;

// Lightweight handle to a tape node.
struct Var {
  Tape* tape = nullptr;
  int id = -1;
};

class Tape {
 public:
  Var leaf(Matrixd value);
  Var record(Matrixd value, std::function<Matrixd(const Tape&)> replay,
             std::function<void(Tape&)> backprop);

  const Matrixd& value(Var v) const { return nodes_[check(v)].value; }
  const Matrixd& grad(Var v) const { return nodes_[check(v)].grad; }
  Matrixd& grad_mut(Var v) { return nodes_[check(v)].grad; }

  // Reverse accumulation from a scalar (1x1) node; seed is the upstream
  // gradient d(final)/d(loss), 1 by default.
  void backward(Var loss, double seed = 1.0);

  // Re-runs every recorded op on the current leaf values and reports whether
  // all recomputed outputs are bitwise identical to the stored ones.
  bool replay_matches() const;

  std::size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Matrixd value;
    Matrixd grad;
    std::function<Matrixd(const Tape&)> replay;  // null for leaves
    std::function<void(Tape&)> backprop;         // null for leaves
  };

  int check(Var v) const;

  std::vector<Node> nodes_;
};

// Convolution parameters registered on a tape, one Var per tap plus bias.
struct TapeConv {
  int out_channels = 0;
  int in_channels = 0;
  int kernel_size = 1;
  int dilation = 1;
  std::vector<Var> weight;
  Var bias;
};

TapeConv register_conv(Tape& tape, const ConvParams& p);
// Reads the current tape values back into plain parameters.
ConvParams conv_values(const TapeConv& p);

// ---- differentiable ops ---------------------------------------------------
// Forward values are produced by the pure kernels in ops.hpp, so a taped
// forward pass is numerically identical to the untaped one.

Var pointwise_conv(Var x, const TapeConv& p);
Var dilated_conv1d(Var x, const TapeConv& p);
Var moving_avg_pool(Var x, int window);
Var znorm_frames(Var x);
Var stats_pooling(Var x);
Var relu(Var x);
Var add(Var a, Var b);
Var mean_of(const std::vector<Var>& xs);
Var concat_channels(Var a, Var b);
Var concat_frames(const std::vector<Var>& xs);
Var slice_channels(Var x, int start, int count);
Var l2_normalize(Var v);
Var sum_all(Var x);

// Additive-angular-margin softmax loss on a unit embedding (E x 1) against
// row-normalized class weights (K x E). Returns a 1x1 loss node;
// backpropagates into both the embedding and the weights.
Var aam_softmax_loss(Var embedding, Var class_weights, int label,
                     double margin, double scale);

}  // namespace tmsv::ad

#endif  // TMSV_TAPE_HPP_
