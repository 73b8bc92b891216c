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

#include "sccpda/pda.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"

namespace sccpda {
namespace {

constexpr absl::string_view kUnicodeStar = "\xE2\x8B\x86";
constexpr int kMaxMnCaches = 20;

// All k-subsets of {0..n-1} as sorted index vectors, lexicographic.
std::vector<std::vector<int>> Subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::uint32_t Mask(const std::vector<int>& subset) {
  std::uint32_t m = 0;
  for (int c : subset) m |= std::uint32_t{1} << c;
  return m;
}

}  // namespace

std::string PdaViolation::ToString() const {
  switch (kind) {
    case Kind::kShape:
      return absl::StrCat("malformed grid: ", detail);
    case Kind::kC1:
      if (!detail.empty()) return absl::StrCat("C1 violation: ", detail);
      return absl::StrFormat(
          "C1 violation at column %d: %d stars, expected %d", col1 + 1,
          count, expected);
    case Kind::kC2:
      return absl::StrFormat("C2 violation: integer %d does not occur",
                             value);
    case Kind::kC3:
      return absl::StrFormat("C3 violation at (%d,%d)/(%d,%d): %s", row1 + 1,
                             col1 + 1, row2 + 1, col2 + 1, detail);
  }
  return "unknown violation";
}

std::optional<PdaViolation> FindViolation(const PdaGrid& grid) {
  using Kind = PdaViolation::Kind;
  if (grid.empty() || grid.front().empty()) {
    return PdaViolation{.kind = Kind::kShape, .detail = "empty grid"};
  }
  const int f = static_cast<int>(grid.size());
  const int caches = static_cast<int>(grid.front().size());
  int max_int = 0;
  for (int j = 0; j < f; ++j) {
    if (static_cast<int>(grid[j].size()) != caches) {
      return PdaViolation{
          .kind = Kind::kShape,
          .row1 = j,
          .detail = absl::StrFormat("row %d has %d entries, expected %d",
                                    j + 1, grid[j].size(), caches)};
    }
    for (int c = 0; c < caches; ++c) {
      const PdaEntry e = grid[j][c];
      if (!e.is_star() && e.value() < 1) {
        return PdaViolation{
            .kind = Kind::kShape,
            .row1 = j,
            .col1 = c,
            .detail = absl::StrFormat("entry (%d,%d) is not a positive integer",
                                      j + 1, c + 1)};
      }
      if (!e.is_star()) max_int = std::max(max_int, e.value());
    }
  }

  // C1
  auto stars_in = [&](int c) {
    int n = 0;
    for (int j = 0; j < f; ++j) n += grid[j][c].is_star() ? 1 : 0;
    return n;
  };
  const int z = stars_in(0);
  for (int c = 1; c < caches; ++c) {
    const int n = stars_in(c);
    if (n != z) {
      return PdaViolation{
          .kind = Kind::kC1, .col1 = c, .count = n, .expected = z};
    }
  }
  if (z == 0) {
    return PdaViolation{.kind = Kind::kC1,
                        .detail = "no column contains a star (Z = 0)"};
  }

  // C2
  std::vector<std::vector<std::pair<int, int>>> cells(max_int + 1);
  for (int j = 0; j < f; ++j) {
    for (int c = 0; c < caches; ++c) {
      if (!grid[j][c].is_star()) cells[grid[j][c].value()].emplace_back(j, c);
    }
  }
  if (max_int == 0) return PdaViolation{.kind = Kind::kC2, .value = 1};
  for (int s = 1; s <= max_int; ++s) {
    if (cells[s].empty()) return PdaViolation{.kind = Kind::kC2, .value = s};
  }

  // C3
  for (int s = 1; s <= max_int; ++s) {
    const auto& occ = cells[s];
    for (std::size_t a = 0; a < occ.size(); ++a) {
      for (std::size_t b = a + 1; b < occ.size(); ++b) {
        const auto [j1, c1] = occ[a];
        const auto [j2, c2] = occ[b];
        PdaViolation v{.kind = Kind::kC3,
                       .row1 = j1,
                       .col1 = c1,
                       .row2 = j2,
                       .col2 = c2,
                       .value = s};
        if (j1 == j2) {
          v.detail = absl::StrFormat("integer %d repeats in row %d", s, j1 + 1);
          return v;
        }
        if (c1 == c2) {
          v.detail =
              absl::StrFormat("integer %d repeats in column %d", s, c1 + 1);
          return v;
        }
        if (!grid[j1][c2].is_star() || !grid[j2][c1].is_star()) {
          v.detail = absl::StrFormat(
              "integer %d: cells (%d,%d) and (%d,%d) must both be stars", s,
              j1 + 1, c2 + 1, j2 + 1, c1 + 1);
          return v;
        }
      }
    }
  }
  return std::nullopt;
}

absl::StatusOr<PdaParams> Validate(const PdaGrid& grid) {
  if (std::optional<PdaViolation> v = FindViolation(grid); v.has_value()) {
    return absl::InvalidArgumentError(v->ToString());
  }
  PdaParams p;
  p.rows = static_cast<int>(grid.size());
  p.num_caches = static_cast<int>(grid.front().size());
  for (const auto& row : grid) {
    p.stars += row.front().is_star() ? 1 : 0;
    for (PdaEntry e : row) {
      if (!e.is_star()) p.max_int = std::max(p.max_int, e.value());
    }
  }
  // Each column holds F - Z integers, none repeated within a column.
  if (p.max_int > p.num_caches * (p.rows - p.stars)) {
    return absl::InternalError("S exceeds Lambda (F - Z) on a valid PDA");
  }
  return p;
}

Pda::Pda(PdaGrid grid, PdaParams params)
    : grid_(std::move(grid)), params_(params) {
  tau_.assign(params_.max_int, params_.num_caches);
  occurrences_.assign(params_.max_int, 0);
  for (int j = 0; j < params_.rows; ++j) {
    for (int c = 0; c < params_.num_caches; ++c) {
      const PdaEntry e = grid_[j][c];
      if (e.is_star()) continue;
      tau_[e.value() - 1] = std::min(tau_[e.value() - 1], c);
      ++occurrences_[e.value() - 1];
    }
  }
}

absl::StatusOr<Pda> Pda::Create(PdaGrid grid) {
  absl::StatusOr<PdaParams> params = Validate(grid);
  if (!params.ok()) return params.status();
  return Pda(std::move(grid), *params);
}

Pda Pda::WithColumnOrder(std::span<const int> order) const {
  PdaGrid g(grid_.size(), std::vector<PdaEntry>(order.size()));
  for (std::size_t j = 0; j < grid_.size(); ++j) {
    for (std::size_t c = 0; c < order.size(); ++c) {
      g[j][c] = grid_[j][order[c]];
    }
  }
  // Column permutations preserve C1-C3 and (Lambda, F, Z, S).
  return Pda(std::move(g), params_);
}

absl::StatusOr<Pda> MnPda(int num_caches, int t) {
  if (num_caches < 2 || num_caches > kMaxMnCaches) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "MN PDA needs 2 <= Lambda <= %d, got %d", kMaxMnCaches, num_caches));
  }
  if (t < 1 || t > num_caches - 1) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "MN PDA needs 1 <= t <= Lambda - 1 = %d, got %d", num_caches - 1, t));
  }
  std::vector<int> rank(std::size_t{1} << num_caches, 0);
  int next = 1;
  for (const auto& subset : Subsets(num_caches, t + 1)) {
    rank[Mask(subset)] = next++;
  }
  PdaGrid grid;
  for (const auto& subset : Subsets(num_caches, t)) {
    const std::uint32_t m = Mask(subset);
    std::vector<PdaEntry> row(num_caches);
    for (int c = 0; c < num_caches; ++c) {
      const std::uint32_t bit = std::uint32_t{1} << c;
      row[c] = (m & bit) ? PdaEntry::Star() : PdaEntry::Int(rank[m | bit]);
    }
    grid.push_back(std::move(row));
  }
  return Pda::Create(std::move(grid));
}

absl::StatusOr<Pda> ParsePda(std::string_view text) {
  std::vector<std::pair<int, std::vector<absl::string_view>>> lines;
  int line_no = 0;
  const absl::string_view input(text.data(), text.size());
  for (absl::string_view line : absl::StrSplit(input, '\n')) {
    ++line_no;
    line = absl::StripAsciiWhitespace(line);
    if (line.empty() || line.front() == '#') continue;
    lines.emplace_back(line_no, absl::StrSplit(line, absl::ByAnyChar(" \t"),
                                               absl::SkipEmpty()));
  }
  if (lines.empty()) {
    return absl::InvalidArgumentError("parse error: no PDA header");
  }

  const auto& [header_line, header] = lines.front();
  int dims[4];
  if (header.size() != 4) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "parse error at line %d: header must be 'Lambda F Z S'", header_line));
  }
  for (int i = 0; i < 4; ++i) {
    if (!absl::SimpleAtoi(header[i], &dims[i]) || dims[i] < 0) {
      return absl::InvalidArgumentError(
          absl::StrFormat("parse error at line %d, column %d: '%s'",
                          header_line, i + 1, header[i]));
    }
  }
  const int caches = dims[0];
  const int f = dims[1];
  if (static_cast<int>(lines.size()) - 1 != f) {
    return absl::InvalidArgumentError(
        absl::StrFormat("parse error: header declares %d rows, found %d", f,
                        lines.size() - 1));
  }

  PdaGrid grid;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto& [ln, tokens] = lines[r];
    if (static_cast<int>(tokens.size()) != caches) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "parse error at line %d: row %d has %d entries, expected %d", ln, r,
          tokens.size(), caches));
    }
    std::vector<PdaEntry> row;
    for (std::size_t c = 0; c < tokens.size(); ++c) {
      absl::string_view tok = tokens[c];
      int v = 0;
      if (tok == "*" || tok == kUnicodeStar) {
        row.push_back(PdaEntry::Star());
      } else if (absl::SimpleAtoi(tok, &v) && v >= 1) {
        row.push_back(PdaEntry::Int(v));
      } else {
        return absl::InvalidArgumentError(
            absl::StrFormat("parse error at line %d, column %d: '%s'", ln,
                            c + 1, tok));
      }
    }
    grid.push_back(std::move(row));
  }

  absl::StatusOr<Pda> pda = Pda::Create(std::move(grid));
  if (!pda.ok()) return pda.status();
  const PdaParams& p = pda->params();
  if (p.stars != dims[2] || p.max_int != dims[3]) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "header declares Z=%d S=%d but the grid has Z=%d S=%d", dims[2],
        dims[3], p.stars, p.max_int));
  }
  return pda;
}

std::string FormatPda(const Pda& pda) {
  const PdaParams& p = pda.params();
  std::string out = absl::StrCat(p.num_caches, " ", p.rows, " ", p.stars, " ",
                                 p.max_int, "\n");
  for (const auto& row : pda.grid()) {
    absl::StrAppend(&out, absl::StrJoin(row, " ", [](std::string* o,
                                                     PdaEntry e) {
                      if (e.is_star()) {
                        o->append("*");
                      } else {
                        absl::StrAppend(o, e.value());
                      }
                    }),
                    "\n");
  }
  return out;
}

}  // namespace sccpda
