// tmsv/io.hpp
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
// FMAT1 binary feature-matrix format:
//   magic "FMAT1" (5 bytes), u32 LE channels, u32 LE frames,
//   u8 dtype (0 = f64, 1 = f32), row-major (channel, frame) payload.
// CSV: one row per channel, comma separated.

#ifndef TMSV_IO_HPP_
#define TMSV_IO_HPP_

#include <iosfwd>
#include <string>

#include "tmsv/common.hpp"

namespace tmsv {

enum class FmatDtype : unsigned char { kF64 = 0, kF32 = 1 };

void write_fmat(std::ostream& os, const Matrixd& m,
                FmatDtype dtype = FmatDtype::kF64);
void write_fmat(const std::string& path, const Matrixd& m,
                FmatDtype dtype = FmatDtype::kF64);

// Reads either dtype; f32 payloads are widened to double. The stored dtype is
// reported through *dtype when non-null.
Matrixd read_fmat(std::istream& is, FmatDtype* dtype = nullptr);
Matrixd read_fmat(const std::string& path, FmatDtype* dtype = nullptr);

void write_csv(std::ostream& os, const Matrixd& m);
void write_csv(const std::string& path, const Matrixd& m);
Matrixd read_csv(std::istream& is);
Matrixd read_csv(const std::string& path);

}  // namespace tmsv

#endif  // TMSV_IO_HPP_
