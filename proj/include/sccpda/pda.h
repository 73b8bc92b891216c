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

#ifndef SCCPDA_PDA_H_
#define SCCPDA_PDA_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "sccpda/rational.h"

namespace sccpda {

// A PDA cell: the star symbol or a positive integer.
class PdaEntry {
 public:
  constexpr PdaEntry() = default;
  static constexpr PdaEntry Star() { return PdaEntry(); }
  static constexpr PdaEntry Int(int value) { return PdaEntry(value); }

  constexpr bool is_star() const { return value_ == 0; }
  // Only meaningful when !is_star().
  constexpr int value() const { return value_; }

  friend constexpr bool operator==(PdaEntry, PdaEntry) = default;

 private:
  constexpr explicit PdaEntry(int value) : value_(value) {}
  int value_ = 0;
};

// Row-major F x Lambda grid of entries.
using PdaGrid = std::vector<std::vector<PdaEntry>>;

// (Lambda, F, Z, S) of a valid PDA.
struct PdaParams {
  int num_caches = 0;  // Lambda
  int rows = 0;        // F
  int stars = 0;       // Z, stars per column
  int max_int = 0;     // S

  Rational memory_ratio() const { return Rational(stars, rows); }
  friend bool operator==(const PdaParams&, const PdaParams&) = default;
};

// The first condition a grid breaks. Coordinates are 0-based.
struct PdaViolation {
  enum class Kind { kShape, kC1, kC2, kC3 };
  Kind kind = Kind::kShape;
  // kC1: offending column and its star count (expected = `expected`).
  // kC2: the missing integer in `value`.
  // kC3: the two cells holding `value`.
  int row1 = -1, col1 = -1, row2 = -1, col2 = -1;
  int value = 0;
  int count = 0;
  int expected = 0;
  std::string detail;

  // e.g. "C3 violation at (1,4)/(2,3): ..." with 1-based coordinates.
  std::string ToString() const;
};

// Returns the first violated condition of Definition C1-C3, or nullopt.
// Checks run shape, C1, C2, then C3 in row-major order. A grid with no
// stars (Z = 0) is reported as a C1 violation because the scheme needs
// 0 < Z < F.
std::optional<PdaViolation> FindViolation(const PdaGrid& grid);

// (Lambda, F, Z, S) if the grid is a PDA, InvalidArgument with the
// violation text otherwise.
absl::StatusOr<PdaParams> Validate(const PdaGrid& grid);

// An immutable, validated placement delivery array. Columns are caches,
// rows are shares.
class Pda {
 public:
  static absl::StatusOr<Pda> Create(PdaGrid grid);

  const PdaParams& params() const { return params_; }
  int num_caches() const { return params_.num_caches; }
  int rows() const { return params_.rows; }
  int stars() const { return params_.stars; }
  int max_int() const { return params_.max_int; }

  PdaEntry at(int row, int col) const { return grid_[row][col]; }
  const PdaGrid& grid() const { return grid_; }

  // tau_s: the smallest (0-based) column containing integer s, 1 <= s <= S.
  int Tau(int s) const { return tau_[s - 1]; }

  // Number of occurrences of integer s.
  int Occurrences(int s) const { return occurrences_[s - 1]; }

  // New PDA whose column c is column `order[c]` of this one.
  Pda WithColumnOrder(std::span<const int> order) const;

  friend bool operator==(const Pda& a, const Pda& b) {
    return a.grid_ == b.grid_;
  }

 private:
  Pda(PdaGrid grid, PdaParams params);

  PdaGrid grid_;
  PdaParams params_;
  std::vector<int> tau_;
  std::vector<int> occurrences_;
};

// MN PDA on Lambda caches with t caches per row subset: rows are the
// t-subsets of [Lambda] in lexicographic order, cell (T, c) is a star if
// c is in T, else the 1-based lexicographic rank of T u {c} among the
// (t+1)-subsets. Requires 1 <= t <= Lambda - 1.
absl::StatusOr<Pda> MnPda(int num_caches, int t);

// Text format: header "Lambda F Z S", then F lines of Lambda tokens, each
// "*" (or U+22C6) or a positive integer. Lines starting with '#' and blank
// lines are skipped. The header must agree with the grid.
absl::StatusOr<Pda> ParsePda(std::string_view text);

// Inverse of ParsePda: single spaces, '*' for stars, trailing newline.
std::string FormatPda(const Pda& pda);

}  // namespace sccpda

#endif  // SCCPDA_PDA_H_
