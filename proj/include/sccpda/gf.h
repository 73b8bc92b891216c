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

#ifndef SCCPDA_GF_H_
#define SCCPDA_GF_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace sccpda {

// One element of GF(2^l), stored as its bit pattern. l <= 16.
using Symbol = std::uint16_t;

// Describes a binary extension field GF(2^l) by its degree and reduction
// polynomial. The polynomial is stored with the x^l term included, e.g.
// x^3 + x + 1 is 0b1011.
class FieldSpec {
 public:
  static constexpr int kMinBits = 2;
  static constexpr int kMaxBits = 16;

  // Validates `bits` and checks that `polynomial` is irreducible of degree
  // `bits` by trial division against every polynomial of degree <= bits/2.
  static absl::StatusOr<FieldSpec> Create(int bits, std::uint32_t polynomial);

  // The canonical polynomial for `bits`. GF(2^8) uses x^8+x^4+x^3+x+1 and
  // GF(2^3) uses x^3+x+1.
  static absl::StatusOr<FieldSpec> ForBits(int bits);

  // GF(2^8), the byte field.
  static FieldSpec Default();

  int bits() const { return bits_; }
  std::uint32_t polynomial() const { return polynomial_; }
  std::uint32_t size() const { return std::uint32_t{1} << bits_; }

  std::string ToString() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(int bits, std::uint32_t polynomial)
      : bits_(bits), polynomial_(polynomial) {}

  int bits_;
  std::uint32_t polynomial_;
};

// True iff `polynomial` (a GF(2)[x] bit pattern) has exact degree `degree`
// and no nontrivial factor.
bool IsIrreducible(std::uint32_t polynomial, int degree);

// Arithmetic over a FieldSpec. Multiplication goes through log/antilog
// tables built from a primitive element found at construction.
class GaloisField {
 public:
  explicit GaloisField(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t size() const { return spec_.size(); }

  static Symbol Add(Symbol a, Symbol b) { return a ^ b; }

  Symbol Mul(Symbol a, Symbol b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  // inv(0) is an error, not a value.
  absl::StatusOr<Symbol> Inv(Symbol a) const;

  // Division by a nonzero divisor. Callers must have checked `b != 0`.
  Symbol Div(Symbol a, Symbol b) const;

  // dst[i] ^= scale * src[i]. Spans must have equal length.
  void MulAdd(std::span<Symbol> dst, std::span<const Symbol> src,
              Symbol scale) const;

  // v[i] *= scale.
  void Scale(std::span<Symbol> v, Symbol scale) const;

  // The generator used for the log tables.
  Symbol primitive_element() const { return primitive_; }

 private:
  FieldSpec spec_;
  Symbol primitive_ = 0;
  std::vector<std::uint32_t> log_;
  // Doubled so Mul never needs a modulo.
  std::vector<Symbol> exp_;
};

}  // namespace sccpda

#endif  // SCCPDA_GF_H_
