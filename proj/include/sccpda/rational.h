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

#ifndef SCCPDA_RATIONAL_H_
#define SCCPDA_RATIONAL_H_

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace sccpda {

// All rate and memory arithmetic is exact. Compare against Rational(n), not
// a bare integer: with Boost 1.74 under C++20 the mixed operator== recurses.
using Rational = boost::rational<std::int64_t>;

// "p/q", or "p" when q == 1.
std::string ToFractionString(const Rational& r);

// Decimal rendering with at most `max_digits` fractional digits, rounded
// half away from zero, trailing zeros trimmed. 7/2 -> "3.5", 1/3 ->
// "0.333333", 10 -> "10".
std::string ToDecimalString(const Rational& r, int max_digits = 6);

// Parses "p", "p/q" or a finite decimal such as "2.5".
bool ParseRational(const std::string& text, Rational* out);

}  // namespace sccpda

#endif  // SCCPDA_RATIONAL_H_
