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

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "sccpda/gf.h"

namespace sccpda {
namespace {

using ::testing::ElementsAre;
using ::testing::SizeIs;

// Bit-level product, independent of GaloisField's tables.
Symbol SchoolbookMul(Symbol a, Symbol b, const FieldSpec& spec) {
  std::uint64_t p = 0;
  for (int i = 0; i < spec.bits(); ++i) {
    if ((b >> i) & 1) p ^= std::uint64_t{a} << i;
  }
  for (int d = 2 * spec.bits() - 2; d >= spec.bits(); --d) {
    if ((p >> d) & 1) p ^= std::uint64_t{spec.polynomial()} << (d - spec.bits());
  }
  return static_cast<Symbol>(p);
}

// Determinant by summing over all permutations (characteristic 2, so
// no signs).
Symbol PermutationDeterminant(const SymbolMatrix& m,
                              const std::vector<int>& rows,
                              const std::vector<int>& cols,
                              const FieldSpec& spec) {
  std::vector<int> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  Symbol det = 0;
  do {
    Symbol term = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      term = SchoolbookMul(term, m.at(rows[i], cols[perm[i]]), spec);
    }
    det ^= term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::vector<std::vector<int>> AllSubsets(int n, int k) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1 << i)) s.push_back(i);
    }
    out.push_back(s);
  }
  return out;
}

void ExpectEverySquareSubmatrixInvertible(const SymbolMatrix& m,
                                          const FieldSpec& spec) {
  const int n = static_cast<int>(m.rows());
  for (int k = 1; k <= n; ++k) {
    for (const auto& rows : AllSubsets(n, k)) {
      for (const auto& cols : AllSubsets(n, k)) {
        ASSERT_NE(PermutationDeterminant(m, rows, cols, spec), 0)
            << spec.ToString() << " n=" << n << " k=" << k;
      }
    }
  }
}

ShareVector RandomVector(std::size_t len, const FieldSpec& spec,
                         std::mt19937_64& rng) {
  ShareVector v(len);
  for (Symbol& s : v) s = rng() & (spec.size() - 1);
  return v;
}

TEST(CauchyMatrixTest, FourByFourOverGf8HasInvertibleSubmatrices) {
  const FieldSpec spec = *FieldSpec::ForBits(3);
  GaloisField gf(spec);
  absl::StatusOr<SymbolMatrix> m = CauchyMatrix(4, gf);
  ASSERT_TRUE(m.ok()) << m.status();
  EXPECT_EQ(m->rows(), 4u);
  ExpectEverySquareSubmatrixInvertible(*m, spec);
}

TEST(CauchyMatrixTest, EntriesAreInversesOfPointSums) {
  const FieldSpec spec = *FieldSpec::ForBits(3);
  GaloisField gf(spec);
  SymbolMatrix m = *CauchyMatrix(4, gf);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_EQ(SchoolbookMul(m.at(i, j), i ^ (4 + j), spec), 1);
    }
  }
}

TEST(CauchyMatrixTest, OneByOne) {
  GaloisField gf(FieldSpec::Default());
  SymbolMatrix m = *CauchyMatrix(1, gf);
  ASSERT_EQ(m.rows(), 1u);
  // x_1 = 0, y_1 = 1.
  EXPECT_EQ(m.at(0, 0), 1);
}

TEST(CauchyMatrixTest, RejectsFieldTooSmall) {
  GaloisField gf(*FieldSpec::ForBits(2));
  EXPECT_EQ(CauchyMatrix(4, gf).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_TRUE(CauchyMatrix(2, gf).ok());
}

TEST(CauchyMatrixTest, SubmatrixPropertyForSmallSizesAndFields) {
  for (int bits = 3; bits <= 8; ++bits) {
    const FieldSpec spec = *FieldSpec::ForBits(bits);
    GaloisField gf(spec);
    for (int n = 1; n <= 6 && 2 * n <= static_cast<int>(spec.size()); ++n) {
      ExpectEverySquareSubmatrixInvertible(*CauchyMatrix(n, gf), spec);
    }
  }
}

TEST(CauchyMatrixTest, PrintsHex) {
  GaloisField gf(*FieldSpec::ForBits(3));
  const std::string text = CauchyMatrix(2, gf)->ToString();
  EXPECT_THAT(text, ::testing::MatchesRegex("([0-9a-f]+ [0-9a-f]+\n){2}"));
}

TEST(EncodeSharesTest, ZeroInputGivesZeroShares) {
  GaloisField gf(*FieldSpec::ForBits(3));
  SymbolMatrix enc = *CauchyMatrix(4, gf);
  std::vector<ShareVector> sub(2, ShareVector(3, 0));
  std::vector<ShareVector> rnd(2, ShareVector(3, 0));
  auto shares = EncodeShares(sub, rnd, enc, gf);
  ASSERT_TRUE(shares.ok());
  for (const auto& s : *shares) EXPECT_THAT(s, ElementsAre(0, 0, 0));
}

TEST(EncodeSharesTest, MatchesNaiveMatrixVectorProduct) {
  const FieldSpec spec = *FieldSpec::ForBits(3);
  GaloisField gf(spec);
  SymbolMatrix enc = *CauchyMatrix(4, gf);
  // Column [W1; W2; V1; V2], two symbol positions each.
  const std::vector<ShareVector> sub = {{5, 1}, {3, 7}};
  const std::vector<ShareVector> rnd = {{6, 0}, {2, 4}};
  std::vector<ShareVector> input = {sub[0], sub[1], rnd[0], rnd[1]};

  auto shares = EncodeShares(sub, rnd, enc, gf);
  ASSERT_TRUE(shares.ok());
  for (int j = 0; j < 4; ++j) {
    for (int pos = 0; pos < 2; ++pos) {
      Symbol expected = 0;
      for (int i = 0; i < 4; ++i) {
        expected ^= SchoolbookMul(enc.at(j, i), input[i][pos], spec);
      }
      EXPECT_EQ((*shares)[j][pos], expected) << "share " << j;
    }
  }
}

TEST(EncodeSharesTest, DimensionMismatch) {
  GaloisField gf(FieldSpec::Default());
  SymbolMatrix enc = *CauchyMatrix(4, gf);
  std::vector<ShareVector> sub(2, ShareVector(3, 0));
  std::vector<ShareVector> rnd(1, ShareVector(3, 0));
  EXPECT_FALSE(EncodeShares(sub, rnd, enc, gf).ok());
  rnd = {ShareVector(3, 0), ShareVector(2, 0)};
  EXPECT_FALSE(EncodeShares(sub, rnd, enc, gf).ok());
}

TEST(ReconstructFileTest, RoundTripsRandomInputsForAllShapes) {
  const FieldSpec spec = FieldSpec::Default();
  GaloisField gf(spec);
  std::mt19937_64 rng(11);
  for (int f = 2; f <= 16; ++f) {
    SymbolMatrix enc = *CauchyMatrix(f, gf);
    for (int z = 1; z < f; ++z) {
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<ShareVector> sub, rnd;
        for (int i = 0; i < f - z; ++i) sub.push_back(RandomVector(3, spec, rng));
        for (int i = 0; i < z; ++i) rnd.push_back(RandomVector(3, spec, rng));
        auto shares = EncodeShares(sub, rnd, enc, gf);
        ASSERT_TRUE(shares.ok());
        auto back = ReconstructFile(*shares, enc, f - z, gf);
        ASSERT_TRUE(back.ok()) << back.status();
        ASSERT_EQ(*back, sub) << "F=" << f << " Z=" << z;
      }
    }
  }
}

TEST(ReconstructFileTest, NeedsAllShares) {
  GaloisField gf(FieldSpec::Default());
  SymbolMatrix enc = *CauchyMatrix(4, gf);
  std::vector<ShareVector> three(3, ShareVector(2, 1));
  EXPECT_EQ(ReconstructFile(three, enc, 2, gf).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(ReconstructFileTest, FileBytesRoundTrip) {
  for (int bits : {3, 8, 11}) {
    GaloisField gf(*FieldSpec::ForBits(bits));
    const std::string text = "abcdefghijklmnopqrstuvwxyz0123456789";
    const std::vector<std::uint8_t> file(text.begin(), text.end());
    SymbolMatrix enc = *CauchyMatrix(4, gf);
    SplitFile split = SplitIntoSubfiles(file, 2, bits);
    std::mt19937_64 rng(3);
    std::vector<ShareVector> rnd = {
        RandomVector(split.subfiles[0].size(), gf.spec(), rng),
        RandomVector(split.subfiles[0].size(), gf.spec(), rng)};
    auto shares = EncodeShares(split.subfiles, rnd, enc, gf);
    ASSERT_TRUE(shares.ok());
    auto sub = ReconstructFile(*shares, enc, 2, gf);
    ASSERT_TRUE(sub.ok());
    auto bytes = JoinSubfiles(*sub, split.padding_bits, bits);
    ASSERT_TRUE(bytes.ok()) << bytes.status();
    EXPECT_EQ(*bytes, file) << "l=" << bits;
  }
}

TEST(SplitIntoSubfilesTest, HalvesWithoutPaddingWhenDivisible) {
  // B = 48 bits, F - Z = 2, l = 3: two subfiles of B/2 = 24 bits.
  const std::vector<std::uint8_t> file(6, 0xA5);
  SplitFile split = SplitIntoSubfiles(file, 2, 3);
  EXPECT_THAT(split.subfiles, SizeIs(2));
  EXPECT_EQ(split.padding_bits, 0u);
  EXPECT_EQ(split.subfiles[0].size() * 3, 24u);
}

TEST(SplitIntoSubfilesTest, EachShareCarriesBOverFMinusZBits) {
  for (int sub : {1, 2, 3, 4, 6}) {
    const std::size_t bytes = 8 * sub * 3;
    const std::vector<std::uint8_t> file(bytes, 0x3C);
    SplitFile split = SplitIntoSubfiles(file, sub, 8);
    EXPECT_EQ(split.padding_bits, 0u);
    EXPECT_EQ(split.subfiles[0].size() * 8, bytes * 8 / sub);
  }
}

TEST(SplitIntoSubfilesTest, PadsAndStripsTail) {
  const std::vector<std::uint8_t> file = {0xFF, 0x01, 0x80};
  SplitFile split = SplitIntoSubfiles(file, 2, 8);
  EXPECT_EQ(split.padding_bits, 8u);
  EXPECT_THAT(split.subfiles[0], ElementsAre(0xFF, 0x01));
  EXPECT_THAT(split.subfiles[1], ElementsAre(0x80, 0x00));
  EXPECT_EQ(*JoinSubfiles(split.subfiles, split.padding_bits, 8), file);
}

TEST(SplitIntoSubfilesTest, JoinRejectsNonzeroPadding) {
  std::vector<ShareVector> sub = {{0xFF, 0x01}, {0x80, 0x07}};
  EXPECT_EQ(JoinSubfiles(sub, 8, 8).status().code(),
            absl::StatusCode::kDataLoss);
}

TEST(PackSymbolsTest, MsbFirst) {
  const std::vector<Symbol> s = {0b101, 0b011, 0b111};
  // 101 011 111 -> 10101111 1(0000000)
  EXPECT_THAT(PackSymbols(s, 3), ElementsAre(0xAF, 0x80));
}

TEST(InvertMatrixTest, SingularIsInternalError) {
  GaloisField gf(FieldSpec::Default());
  SymbolMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 6;
  m.at(1, 0) = 1;
  m.at(1, 1) = 6;
  EXPECT_EQ(InvertMatrix(m, gf).status().code(), absl::StatusCode::kInternal);
}

}  // namespace
}  // namespace sccpda
