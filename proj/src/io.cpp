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

#include "tmsv/io.hpp"

#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace tmsv {

namespace {

constexpr char kMagic[5] = {'F', 'M', 'A', 'T', '1'};

void put_u32le(std::ostream& os, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32le(std::istream& is, const char* field) {
  unsigned char b[4];
  if (!is.read(reinterpret_cast<char*>(b), 4))
    throw FormatError(std::string("FMAT1: truncated ") + field);
  return static_cast<std::uint32_t>(b[0]) |
         (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

template <typename T>
void write_payload(std::ostream& os, const Matrixd& m) {
  // Row-major (channel, frame) order.
  std::vector<T> row(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row[static_cast<std::size_t>(c)] = static_cast<T>(m(r, c));
    os.write(reinterpret_cast<const char*>(row.data()),
             static_cast<std::streamsize>(row.size() * sizeof(T)));
  }
}

template <typename T>
Matrixd read_payload(std::istream& is, std::uint32_t channels,
                     std::uint32_t frames) {
  Matrixd m(channels, frames);
  std::vector<T> row(frames);
  for (std::uint32_t r = 0; r < channels; ++r) {
    if (!is.read(reinterpret_cast<char*>(row.data()),
                 static_cast<std::streamsize>(row.size() * sizeof(T))))
      throw FormatError("FMAT1: truncated payload at channel " +
                        std::to_string(r));
    for (std::uint32_t c = 0; c < frames; ++c)
      m(r, c) = static_cast<double>(row[c]);
  }
  return m;
}

}  // namespace

void write_fmat(std::ostream& os, const Matrixd& m, FmatDtype dtype) {
  if (m.rows() < 1 || m.cols() < 1)
    throw UsageError("write_fmat: matrix must be non-empty");
  os.write(kMagic, 5);
  put_u32le(os, static_cast<std::uint32_t>(m.rows()));
  put_u32le(os, static_cast<std::uint32_t>(m.cols()));
  const unsigned char d = static_cast<unsigned char>(dtype);
  os.write(reinterpret_cast<const char*>(&d), 1);
  if (dtype == FmatDtype::kF64)
    write_payload<double>(os, m);
  else
    write_payload<float>(os, m);
}

void write_fmat(const std::string& path, const Matrixd& m, FmatDtype dtype) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InputError("write_fmat: cannot open " + path);
  write_fmat(os, m, dtype);
  if (!os) throw InputError("write_fmat: write failed for " + path);
}

Matrixd read_fmat(std::istream& is, FmatDtype* dtype) {
  char magic[5];
  if (!is.read(magic, 5) || std::memcmp(magic, kMagic, 5) != 0)
    throw FormatError("FMAT1: bad magic");
  const std::uint32_t channels = get_u32le(is, "channels");
  const std::uint32_t frames = get_u32le(is, "frames");
  if (channels == 0 || frames == 0)
    throw FormatError("FMAT1: zero channels or frames");
  unsigned char d = 0;
  if (!is.read(reinterpret_cast<char*>(&d), 1))
    throw FormatError("FMAT1: truncated dtype");
  if (d > 1) throw FormatError("FMAT1: unknown dtype " + std::to_string(d));
  if (dtype) *dtype = static_cast<FmatDtype>(d);
  Matrixd m = (d == 0) ? read_payload<double>(is, channels, frames)
                       : read_payload<float>(is, channels, frames);
  if (!m.allFinite()) throw FormatError("FMAT1: non-finite values in payload");
  return m;
}

Matrixd read_fmat(const std::string& path, FmatDtype* dtype) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw InputError("read_fmat: cannot open " + path);
  return read_fmat(is, dtype);
}

void write_csv(std::ostream& os, const Matrixd& m) {
  std::ostringstream line;
  line.precision(17);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    line.str("");
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) line << ',';
      line << m(r, c);
    }
    os << line.str() << '\n';
  }
}

void write_csv(const std::string& path, const Matrixd& m) {
  std::ofstream os(path);
  if (!os) throw InputError("write_csv: cannot open " + path);
  write_csv(os, m);
}

Matrixd read_csv(std::istream& is) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      std::size_t pos = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &pos);
      } catch (const std::exception&) {
        throw FormatError("CSV: bad number '" + cell + "' in row " +
                          std::to_string(rows.size()));
      }
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows[0].size())
      throw FormatError("CSV: ragged row " + std::to_string(rows.size()) +
                        " (" + std::to_string(row.size()) + " vs " +
                        std::to_string(rows[0].size()) + " columns)");
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows[0].empty()) throw FormatError("CSV: empty input");
  Matrixd m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          rows[r][c];
  if (!m.allFinite()) throw FormatError("CSV: non-finite values");
  return m;
}

Matrixd read_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InputError("read_csv: cannot open " + path);
  return read_csv(is);
}

}  // namespace tmsv
