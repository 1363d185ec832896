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

#include "tmsv/partition.hpp"

#include <cmath>
#include <string>

namespace tmsv {

PartitionPlan plan_partition(int feature_dim, int subset_dim,
                             double overlap_fraction) {
  if (subset_dim < 1 || subset_dim > feature_dim)
    throw PartitionError("plan_partition: need 1 <= L <= N, got N=" +
                         std::to_string(feature_dim) +
                         " L=" + std::to_string(subset_dim));
  if (!(overlap_fraction >= 0.0) || overlap_fraction >= 1.0)
    throw PartitionError("plan_partition: overlap must be in [0, 1), got " +
                         std::to_string(overlap_fraction));
  PartitionPlan plan;
  plan.feature_dim = feature_dim;
  plan.subset_dim = subset_dim;
  plan.overlap_fraction = overlap_fraction;
  // Round half up: 25% of L=20 -> 5 overlapping dims.
  plan.overlap_dims =
      static_cast<int>(std::floor(overlap_fraction * subset_dim + 0.5));
  plan.stride = subset_dim - plan.overlap_dims;
  if (plan.stride < 1)
    throw PartitionError("plan_partition: stride must be >= 1, got " +
                         std::to_string(plan.stride) + " (N=" +
                         std::to_string(feature_dim) + ", L=" +
                         std::to_string(subset_dim) + ")");
  const int span = feature_dim - subset_dim;
  if (span % plan.stride != 0)
    throw PartitionError(
        "plan_partition: (N - L) = " + std::to_string(span) +
        " is not divisible by stride " + std::to_string(plan.stride) +
        " (N=" + std::to_string(feature_dim) +
        ", L=" + std::to_string(subset_dim) + ")");
  plan.subset_count = span / plan.stride + 1;
  plan.starts.reserve(plan.subset_count);
  for (int i = 0; i < plan.subset_count; ++i)
    plan.starts.push_back(i * plan.stride);
  return plan;
}

std::vector<Matrixd> split(const Matrixd& feature, const PartitionPlan& plan) {
  if (feature.rows() != plan.feature_dim)
    throw DimensionError("split: feature has " + std::to_string(feature.rows()) +
                         " channels, plan expects " +
                         std::to_string(plan.feature_dim));
  std::vector<Matrixd> subsets;
  subsets.reserve(plan.starts.size());
  for (int start : plan.starts)
    subsets.emplace_back(feature.middleRows(start, plan.subset_dim));
  return subsets;
}

Matrixd concat_subsets(const std::vector<Matrixd>& subsets) {
  if (subsets.empty()) throw DimensionError("concat_subsets: empty list");
  const Eigen::Index rows = subsets[0].rows();
  const Eigen::Index cols = subsets[0].cols();
  for (const auto& s : subsets)
    if (s.rows() != rows || s.cols() != cols)
      throw DimensionError("concat_subsets: subsets must share one shape");
  Matrixd out(rows * static_cast<Eigen::Index>(subsets.size()), cols);
  for (std::size_t i = 0; i < subsets.size(); ++i)
    out.middleRows(static_cast<Eigen::Index>(i) * rows, rows) = subsets[i];
  return out;
}

}  // namespace tmsv
