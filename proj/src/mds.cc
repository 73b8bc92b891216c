// Copyright 2026 The sccpda Authors
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

#include "sccpda/mds.h"

#include <cstddef>
#include <cstdint>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace sccpda {
namespace {

// MSB-first bit stream helpers.
class BitWriter {
 public:
  void Put(std::uint32_t value, int bits) {
    for (int b = bits - 1; b >= 0; --b) {
      if (filled_ == 0) bytes_.push_back(0);
      if ((value >> b) & 1) bytes_.back() |= std::uint8_t(0x80 >> filled_);
      filled_ = (filled_ + 1) % 8;
    }
  }
  std::vector<std::uint8_t> Take() { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
  int filled_ = 0;
};

}  // namespace

std::string SymbolMatrix::ToString() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out += ' ';
      absl::StrAppendFormat(&out, "%x", at(r, c));
    }
    out += '\n';
  }
  return out;
}

absl::StatusOr<SymbolMatrix> CauchyMatrix(std::size_t n,
                                          const GaloisField& field) {
  if (n == 0) return absl::InvalidArgumentError("Cauchy matrix of size 0");
  if (2 * n > field.size()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "%d x %d Cauchy matrix needs %d distinct points but %s has %d", n, n,
        2 * n, field.spec().ToString(), field.size()));
  }
  SymbolMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Symbol x = static_cast<Symbol>(i);
      const Symbol y = static_cast<Symbol>(n + j);
      absl::StatusOr<Symbol> inv = field.Inv(GaloisField::Add(x, y));
      if (!inv.ok()) return inv.status();
      m.at(i, j) = *inv;
    }
  }
  return m;
}

absl::StatusOr<SymbolMatrix> InvertMatrix(const SymbolMatrix& m,
                                          const GaloisField& field) {
  const std::size_t n = m.rows();
  if (m.cols() != n) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "cannot invert a %d x %d matrix", m.rows(), m.cols()));
  }
  SymbolMatrix work = m;
  SymbolMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return absl::InternalError("singular matrix");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work.at(pivot, c), work.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    const Symbol scale = field.Div(1, work.at(col, col));
    field.Scale(work.row(col), scale);
    field.Scale(inv.row(col), scale);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work.at(r, col) == 0) continue;
      const Symbol f = work.at(r, col);
      field.MulAdd(work.row(r), work.row(col), f);
      field.MulAdd(inv.row(r), inv.row(col), f);
    }
  }
  return inv;
}

absl::StatusOr<std::vector<ShareVector>> EncodeShares(
    std::span<const ShareVector> subfiles,
    std::span<const ShareVector> randomness, const SymbolMatrix& enc,
    const GaloisField& field) {
  const std::size_t f = enc.rows();
  if (enc.cols() != f || subfiles.size() + randomness.size() != f) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "%d subfiles + %d randomness vectors do not match a %d x %d encoder",
        subfiles.size(), randomness.size(), enc.rows(), enc.cols()));
  }
  if (subfiles.empty()) {
    return absl::InvalidArgumentError("at least one subfile is required");
  }
  const std::size_t len = subfiles.front().size();
  std::vector<const ShareVector*> inputs;
  inputs.reserve(f);
  for (const ShareVector& v : subfiles) inputs.push_back(&v);
  for (const ShareVector& v : randomness) inputs.push_back(&v);
  for (const ShareVector* v : inputs) {
    if (v->size() != len) {
      return absl::InvalidArgumentError(
          "subfile and randomness lengths differ");
    }
  }

  std::vector<ShareVector> shares(f, ShareVector(len, 0));
  for (std::size_t j = 0; j < f; ++j) {
    for (std::size_t i = 0; i < f; ++i) {
      field.MulAdd(shares[j], *inputs[i], enc.at(j, i));
    }
  }
  return shares;
}

absl::StatusOr<std::vector<ShareVector>> ReconstructFile(
    std::span<const ShareVector> shares, const SymbolMatrix& enc,
    std::size_t num_subfiles, const GaloisField& field) {
  if (shares.size() != enc.rows()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "reconstruction needs all %d shares, got %d", enc.rows(),
        shares.size()));
  }
  if (num_subfiles == 0 || num_subfiles > shares.size()) {
    return absl::InvalidArgumentError("bad subfile count");
  }
  const std::size_t len = shares.front().size();
  for (const ShareVector& s : shares) {
    if (s.size() != len) {
      return absl::InvalidArgumentError("share lengths differ");
    }
  }
  absl::StatusOr<SymbolMatrix> inv = InvertMatrix(enc, field);
  if (!inv.ok()) return inv.status();

  std::vector<ShareVector> out(num_subfiles, ShareVector(len, 0));
  for (std::size_t i = 0; i < num_subfiles; ++i) {
    for (std::size_t j = 0; j < shares.size(); ++j) {
      field.MulAdd(out[i], shares[j], inv->at(i, j));
    }
  }
  return out;
}

std::size_t SymbolsPerSubfile(std::size_t file_bytes, std::size_t num_subfiles,
                              int bits) {
  const std::size_t chunk = num_subfiles * static_cast<std::size_t>(bits);
  const std::size_t total_bits = file_bytes * 8;
  const std::size_t padded = (total_bits + chunk - 1) / chunk * chunk;
  return padded / chunk;
}

SplitFile SplitIntoSubfiles(std::span<const std::uint8_t> file,
                            std::size_t num_subfiles, int bits) {
  const std::size_t per_subfile =
      SymbolsPerSubfile(file.size(), num_subfiles, bits);
  const std::size_t total_bits = file.size() * 8;
  SplitFile out;
  out.padding_bits = per_subfile * num_subfiles * bits - total_bits;
  out.subfiles.assign(num_subfiles, ShareVector(per_subfile, 0));

  std::size_t bit = 0;
  for (std::size_t s = 0; s < num_subfiles; ++s) {
    for (std::size_t k = 0; k < per_subfile; ++k) {
      Symbol v = 0;
      for (int b = 0; b < bits; ++b, ++bit) {
        v <<= 1;
        if (bit < total_bits && ((file[bit / 8] >> (7 - bit % 8)) & 1)) v |= 1;
      }
      out.subfiles[s][k] = v;
    }
  }
  return out;
}

absl::StatusOr<std::vector<std::uint8_t>> JoinSubfiles(
    std::span<const ShareVector> subfiles, std::size_t padding_bits,
    int bits) {
  BitWriter w;
  std::size_t total_bits = 0;
  for (const ShareVector& s : subfiles) {
    for (Symbol v : s) {
      w.Put(v, bits);
      total_bits += bits;
    }
  }
  if (padding_bits > total_bits || (total_bits - padding_bits) % 8 != 0) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "padding of %d bits does not leave whole bytes out of %d bits",
        padding_bits, total_bits));
  }
  std::vector<std::uint8_t> bytes = w.Take();
  const std::size_t keep = (total_bits - padding_bits) / 8;
  for (std::size_t i = keep; i < bytes.size(); ++i) {
    if (bytes[i] != 0) {
      return absl::DataLossError("nonzero bits in padding");
    }
  }
  bytes.resize(keep);
  return bytes;
}

std::vector<std::uint8_t> PackSymbols(std::span<const Symbol> symbols,
                                      int bits) {
  BitWriter w;
  for (Symbol v : symbols) w.Put(v, bits);
  return w.Take();
}

}  // namespace sccpda
