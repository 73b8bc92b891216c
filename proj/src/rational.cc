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

#include "sccpda/rational.h"

#include <cstdint>
#include <string>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"

namespace sccpda {

std::string ToFractionString(const Rational& r) {
  if (r.denominator() == 1) return absl::StrCat(r.numerator());
  return absl::StrCat(r.numerator(), "/", r.denominator());
}

std::string ToDecimalString(const Rational& r, int max_digits) {
  const bool negative = r < 0;
  const std::int64_t num = negative ? -r.numerator() : r.numerator();
  const std::int64_t den = r.denominator();

  std::int64_t scale = 1;
  for (int i = 0; i < max_digits; ++i) scale *= 10;
  // Round half away from zero at max_digits.
  const __int128 scaled = static_cast<__int128>(num) * scale;
  __int128 q = scaled / den;
  if ((scaled % den) * 2 >= den) ++q;

  const std::int64_t whole = static_cast<std::int64_t>(q / scale);
  std::int64_t frac = static_cast<std::int64_t>(q % scale);
  std::string out = negative && q != 0 ? "-" : "";
  absl::StrAppend(&out, whole);
  if (frac == 0) return out;

  std::string digits(max_digits, '0');
  for (int i = max_digits - 1; i >= 0; --i) {
    digits[i] = static_cast<char>('0' + frac % 10);
    frac /= 10;
  }
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
  absl::StrAppend(&out, ".", digits);
  return out;
}

bool ParseRational(const std::string& text, Rational* out) {
  absl::string_view s = text;
  if (s.find('/') != absl::string_view::npos) {
    std::pair<absl::string_view, absl::string_view> parts =
        absl::StrSplit(s, absl::MaxSplits('/', 1));
    std::int64_t p = 0;
    std::int64_t q = 0;
    if (!absl::SimpleAtoi(parts.first, &p) ||
        !absl::SimpleAtoi(parts.second, &q) || q == 0) {
      return false;
    }
    *out = Rational(p, q);
    return true;
  }
  const std::size_t dot = s.find('.');
  if (dot == absl::string_view::npos) {
    std::int64_t p = 0;
    if (!absl::SimpleAtoi(s, &p)) return false;
    *out = Rational(p);
    return true;
  }
  absl::string_view whole = s.substr(0, dot);
  absl::string_view frac = s.substr(dot + 1);
  if (frac.empty() || frac.size() > 12) return false;
  for (char c : frac) {
    if (c < '0' || c > '9') return false;
  }
  std::int64_t w = 0;
  const bool negative = !whole.empty() && whole.front() == '-';
  if (!whole.empty() && whole != "-" && !absl::SimpleAtoi(whole, &w)) {
    return false;
  }
  std::int64_t f = 0;
  std::int64_t scale = 1;
  for (char c : frac) {
    f = f * 10 + (c - '0');
    scale *= 10;
  }
  Rational value = Rational(negative ? -w : w) + Rational(f, scale);
  *out = negative ? -value : value;
  return true;
}

}  // namespace sccpda
