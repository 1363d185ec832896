// tmsv/partition.hpp
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
// Splitting a feature along its channel axis into equal-width, optionally
// overlapping subsets, and re-assembling processed subsets.

#ifndef TMSV_PARTITION_HPP_
#define TMSV_PARTITION_HPP_

#include <vector>

#include "tmsv/common.hpp"

namespace tmsv {

struct PartitionPlan {
  int feature_dim = 0;   // N: channels of the full feature
  int subset_dim = 0;    // L: channels per subset
  double overlap_fraction = 0.0;
  int overlap_dims = 0;  // round-half-up of overlap_fraction * L
  int stride = 0;        // L - overlap_dims
  int subset_count = 0;  // J
  std::vector<int> starts;
};

// Derives the subset layout. (N - L) must tile exactly by the stride;
// anything else is a configuration error, not silent padding.
PartitionPlan plan_partition(int feature_dim, int subset_dim,
                             double overlap_fraction);

// Copies channel windows [starts[i], starts[i] + L) out of the feature.
// Overlapping channels are duplicated by value.
std::vector<Matrixd> split(const Matrixd& feature, const PartitionPlan& plan);

// Channel-wise stacking in subset order; the inverse of split for
// non-overlapping plans.
Matrixd concat_subsets(const std::vector<Matrixd>& subsets);

}  // namespace tmsv

#endif  // TMSV_PARTITION_HPP_
