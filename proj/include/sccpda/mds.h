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

#ifndef SCCPDA_MDS_H_
#define SCCPDA_MDS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "sccpda/gf.h"

namespace sccpda {

// Dense row-major matrix of field symbols.
class SymbolMatrix {
 public:
  SymbolMatrix() = default;
  SymbolMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Symbol& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  Symbol at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<Symbol> row(std::size_t r) {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Symbol> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  // Whitespace-separated hex symbols, one line per row.
  std::string ToString() const;

  friend bool operator==(const SymbolMatrix&, const SymbolMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Symbol> entries_;
};

// One share, subfile, key or transmission payload: a run of field symbols.
using ShareVector = std::vector<Symbol>;

// n x n Cauchy matrix with entry (i, j) = 1 / (x_i + y_j), where
// x_i = i and y_j = n + j (0-based). Needs 2n <= 2^l.
absl::StatusOr<SymbolMatrix> CauchyMatrix(std::size_t n,
                                          const GaloisField& field);

// Inverse by Gauss-Jordan elimination. Fails on a singular matrix.
absl::StatusOr<SymbolMatrix> InvertMatrix(const SymbolMatrix& m,
                                          const GaloisField& field);

// (Z, F) non-perfect secret sharing. The input column is the F-Z subfiles
// stacked above the Z randomness vectors; share j is row j of `enc` applied
// symbol-wise to that column.
absl::StatusOr<std::vector<ShareVector>> EncodeShares(
    std::span<const ShareVector> subfiles,
    std::span<const ShareVector> randomness, const SymbolMatrix& enc,
    const GaloisField& field);

// Inverts EncodeShares: needs all F shares and returns the first
// `num_subfiles` rows of enc^-1 * shares.
absl::StatusOr<std::vector<ShareVector>> ReconstructFile(
    std::span<const ShareVector> shares, const SymbolMatrix& enc,
    std::size_t num_subfiles, const GaloisField& field);

// A file cut into equal subfiles of l-bit symbols. Bits are taken MSB first;
// the tail is zero-padded so the bit length is a multiple of
// num_subfiles * l.
struct SplitFile {
  std::vector<ShareVector> subfiles;
  std::size_t padding_bits = 0;
};

// Number of symbols per subfile for a file of `file_bytes` bytes.
std::size_t SymbolsPerSubfile(std::size_t file_bytes, std::size_t num_subfiles,
                              int bits);

SplitFile SplitIntoSubfiles(std::span<const std::uint8_t> file,
                            std::size_t num_subfiles, int bits);

// Concatenates subfiles and drops the trailing `padding_bits`. Fails if the
// dropped bits are not all zero or the result is not whole bytes.
absl::StatusOr<std::vector<std::uint8_t>> JoinSubfiles(
    std::span<const ShareVector> subfiles, std::size_t padding_bits, int bits);

// Packs l-bit symbols MSB first into bytes, zero-filling the last byte.
std::vector<std::uint8_t> PackSymbols(std::span<const Symbol> symbols,
                                      int bits);

}  // namespace sccpda

#endif  // SCCPDA_MDS_H_
