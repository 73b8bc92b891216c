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

#include "sccpda/gf.h"

#include <array>
#include <cassert>
#include <cstdint>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace sccpda {
namespace {

// Index = degree. Entry 0 and 1 unused.
constexpr std::array<std::uint32_t, FieldSpec::kMaxBits + 1>
    kCanonicalPolynomials = {
        0,        0,
        0x7,      // x^2+x+1
        0xB,      // x^3+x+1
        0x13,     // x^4+x+1
        0x25,     // x^5+x^2+1
        0x43,     // x^6+x+1
        0x89,     // x^7+x^3+1
        0x11B,    // x^8+x^4+x^3+x+1
        0x211,    // x^9+x^4+1
        0x409,    // x^10+x^3+1
        0x805,    // x^11+x^2+1
        0x1053,   // x^12+x^6+x^4+x+1
        0x201B,   // x^13+x^4+x^3+x+1
        0x4443,   // x^14+x^10+x^6+x+1
        0x8003,   // x^15+x+1
        0x1100B,  // x^16+x^12+x^3+x+1
};

int Degree(std::uint32_t p) {
  int d = -1;
  while (p != 0) {
    ++d;
    p >>= 1;
  }
  return d;
}

// Remainder of a by b in GF(2)[x]; b != 0.
std::uint32_t PolyMod(std::uint32_t a, std::uint32_t b) {
  const int db = Degree(b);
  for (int da = Degree(a); da >= db; da = Degree(a)) {
    a ^= b << (da - db);
  }
  return a;
}

// Multiply in GF(2)[x] then reduce. Only used while building tables.
std::uint32_t SlowMul(std::uint32_t a, std::uint32_t b, std::uint32_t poly,
                      int bits) {
  std::uint32_t acc = 0;
  while (b != 0) {
    if (b & 1) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (std::uint32_t{1} << bits)) a ^= poly;
  }
  return acc;
}

}  // namespace

bool IsIrreducible(std::uint32_t polynomial, int degree) {
  if (degree < 1 || Degree(polynomial) != degree) return false;
  for (std::uint32_t divisor = 2; Degree(divisor) <= degree / 2; ++divisor) {
    if (PolyMod(polynomial, divisor) == 0) return false;
  }
  return true;
}

absl::StatusOr<FieldSpec> FieldSpec::Create(int bits,
                                            std::uint32_t polynomial) {
  if (bits < kMinBits || bits > kMaxBits) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "field degree %d outside [%d, %d]", bits, kMinBits, kMaxBits));
  }
  if (!IsIrreducible(polynomial, bits)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "polynomial 0x%x is not irreducible of degree %d", polynomial, bits));
  }
  return FieldSpec(bits, polynomial);
}

absl::StatusOr<FieldSpec> FieldSpec::ForBits(int bits) {
  if (bits < kMinBits || bits > kMaxBits) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "field degree %d outside [%d, %d]", bits, kMinBits, kMaxBits));
  }
  return Create(bits, kCanonicalPolynomials[bits]);
}

FieldSpec FieldSpec::Default() { return FieldSpec(8, 0x11B); }

std::string FieldSpec::ToString() const {
  return absl::StrFormat("GF(2^%d)/0x%x", bits_, polynomial_);
}

GaloisField::GaloisField(FieldSpec spec) : spec_(spec) {
  const std::uint32_t q = spec_.size();
  const std::uint32_t order = q - 1;
  log_.assign(q, 0);
  exp_.assign(2 * order, 0);
  for (std::uint32_t g = 2; g < q; ++g) {
    std::uint32_t x = 1;
    std::uint32_t k = 0;
    bool primitive = true;
    for (; k < order; ++k) {
      if (k > 0 && x == 1) {
        primitive = false;
        break;
      }
      exp_[k] = static_cast<Symbol>(x);
      x = SlowMul(x, g, spec_.polynomial(), spec_.bits());
    }
    if (primitive) {
      primitive_ = static_cast<Symbol>(g);
      break;
    }
  }
  // GF(2^l)^* is cyclic, so some g in [2, q) is always primitive.
  assert(primitive_ != 0);
  for (std::uint32_t k = 0; k < order; ++k) {
    log_[exp_[k]] = k;
    exp_[k + order] = exp_[k];
  }
}

absl::StatusOr<Symbol> GaloisField::Inv(Symbol a) const {
  if (a == 0) return absl::InvalidArgumentError("inverse of zero");
  if (a >= size()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("symbol %d outside field of size %d", a, size()));
  }
  const std::uint32_t order = size() - 1;
  return exp_[(order - log_[a]) % order];
}

Symbol GaloisField::Div(Symbol a, Symbol b) const {
  assert(b != 0);
  if (a == 0) return 0;
  const std::uint32_t order = size() - 1;
  return exp_[log_[a] + order - log_[b]];
}

void GaloisField::MulAdd(std::span<Symbol> dst, std::span<const Symbol> src,
                         Symbol scale) const {
  assert(dst.size() == src.size());
  if (scale == 0) return;
  if (scale == 1) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
    return;
  }
  const std::uint32_t ls = log_[scale];
  for (std::size_t i = 0; i < dst.size(); ++i) {
    if (src[i] != 0) dst[i] ^= exp_[log_[src[i]] + ls];
  }
}

void GaloisField::Scale(std::span<Symbol> v, Symbol scale) const {
  for (Symbol& x : v) x = Mul(x, scale);
}

}  // namespace sccpda
