// tmsv/common.hpp
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

#ifndef TMSV_COMMON_HPP_
#define TMSV_COMMON_HPP_

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace tmsv {

// Feature layout convention used throughout: rows are channels (feature
// dimensions), columns are frames. A "vector" is a single-column matrix.
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVectorX = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using Matrixd = MatrixX<double>;
using Matrixf = MatrixX<float>;
using Vectord = VectorX<double>;
using Vectorf = VectorX<float>;

// Generic denominator guard.
inline constexpr double kEpsilon = 1e-8;
// Tighter guard for per-frame Z-score normalization so that the output std
// stays within 1e-6 of 1 for input frame std >= 1e-3.
inline constexpr double kZnormEpsilon = 1e-9;

// ---- error taxonomy ----------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Shapes of operands do not line up.
struct DimensionError : Error {
  using Error::Error;
};
// A configuration (file or constructed) is invalid.
struct ConfigError : Error {
  using Error::Error;
};
// A file does not match its declared format.
struct FormatError : Error {
  using Error::Error;
};
// API used outside its contract.
struct UsageError : Error {
  using Error::Error;
};
// User-supplied data is unusable.
struct InputError : Error {
  using Error::Error;
};
// A feature partition request cannot be tiled exactly.
struct PartitionError : Error {
  using Error::Error;
};

// ---- deterministic RNG ---------------------------------------------------
//
// Thin wrapper over mt19937_64 that maps raw bits to doubles itself, so every
// stream is reproducible bit-for-bit across platforms and library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; caches the second draw of each pair.
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

  // Uniform integer in [0, n).
  std::uint64_t index(std::uint64_t n) { return gen_() % n; }

 private:
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

inline Matrixd random_matrix(int rows, int cols, Rng& rng, double lo = -1.0,
                             double hi = 1.0) {
  Matrixd m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = rng.uniform(lo, hi);
  return m;
}

inline Matrixd random_normal_matrix(int rows, int cols, Rng& rng) {
  Matrixd m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = rng.normal();
  return m;
}

// ---- thread cap ----------------------------------------------------------

// Upper bound on worker threads for per-subset parallel sections. 1 (the
// default) runs everything on the calling thread.
void set_max_threads(int n);
int max_threads();

}  // namespace tmsv

#endif  // TMSV_COMMON_HPP_
