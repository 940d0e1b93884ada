// Copyright 2026 The qumera Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qumera/tensnet/serialize.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>

#include "qumera/error.hpp"

namespace qumera::tensnet {

namespace {

constexpr std::array<char, 4> kMagic{'Q', 'M', 'T', '1'};
constexpr std::uint32_t kMaxRank = 64;

template <class U>
void put_le(std::ostream& out, U value) {
  std::array<char, sizeof(U)> bytes;
  for (std::size_t i = 0; i < sizeof(U); ++i) {
    bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
  }
  out.write(bytes.data(), bytes.size());
}

template <class U>
U get_le(std::istream& in) {
  std::array<unsigned char, sizeof(U)> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!in) throw IoError("tensor record truncated");
  U value = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) value |= static_cast<U>(bytes[i]) << (8 * i);
  return value;
}

}  // namespace

void write_tensor(std::ostream& out, const Tensor& t) {
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(t.rank()));
  for (auto d : t.shape()) put_le<std::uint32_t>(out, static_cast<std::uint32_t>(d));
  for (const auto& z : t.data()) {
    put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(z.real()));
    put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(z.imag()));
  }
  if (!out) throw IoError("failed writing tensor record");
}

Tensor read_tensor(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw IoError("bad tensor magic, expected QMT1");
  const auto rank = get_le<std::uint32_t>(in);
  if (rank > kMaxRank) throw IoError("tensor record rank too large");
  Shape shape(rank);
  std::size_t volume = 1;
  for (auto& d : shape) {
    d = get_le<std::uint32_t>(in);
    if (d == 0) throw IoError("tensor record has a zero dimension");
    volume *= d;
    if (volume > (std::size_t{1} << 32)) throw IoError("tensor record too large");
  }
  std::vector<Complex> data(volume);
  for (auto& z : data) {
    const double re = std::bit_cast<double>(get_le<std::uint64_t>(in));
    const double im = std::bit_cast<double>(get_le<std::uint64_t>(in));
    z = {re, im};
  }
  Tensor t(std::move(shape), std::move(data));
  require_finite(t, "read_tensor");
  return t;
}

void save_tensor(const std::string& path, const Tensor& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_tensor(out, t);
}

Tensor load_tensor(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return read_tensor(in);
}

}  // namespace qumera::tensnet
