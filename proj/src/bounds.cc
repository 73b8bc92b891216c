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

#include "sccpda/bounds.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_replace.h"
#include "sccpda/scheme.h"

namespace sccpda {
namespace {

absl::Status CheckProfile(std::span<const int> profile) {
  if (profile.empty()) return absl::InvalidArgumentError("empty profile");
  for (std::size_t c = 0; c < profile.size(); ++c) {
    if (profile[c] < 0 || (c > 0 && profile[c] > profile[c - 1])) {
      return absl::InvalidArgumentError(
          "profile must be nonnegative and nonincreasing");
    }
  }
  return absl::OkStatus();
}

std::vector<int> Sorted(std::span<const int> profile) {
  std::vector<int> out(profile.begin(), profile.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

absl::StatusOr<int> LambdaOfS(std::span<const int> profile, int s) {
  if (absl::Status st = CheckProfile(profile); !st.ok()) return st;
  int cumulative = 0;
  for (std::size_t c = 0; c < profile.size(); ++c) {
    cumulative += profile[c];
    if (s >= 1 && cumulative >= s) return static_cast<int>(c) + 1;
  }
  return absl::OutOfRangeError(
      absl::StrFormat("s = %d outside [1, %d]", s, cumulative));
}

Rational CutsetTerm(int s, int lambda_s, int num_files,
                    const Rational& helper_memory,
                    const Rational& user_memory) {
  const int q = num_files / s;
  return (Rational(s * q - 1) - Rational(lambda_s - 1) * helper_memory -
          Rational(s - 1) * user_memory) /
         Rational(q - 1);
}

Rational CutsetTermUnitUserMemory(int s, int lambda_s, int num_files,
                                  const Rational& helper_memory) {
  const int q = num_files / s;
  return Rational(s) - Rational(lambda_s - 1) * helper_memory / Rational(q - 1);
}

absl::StatusOr<BoundResult> CutsetBound(const BoundQuery& query) {
  if (absl::Status st = CheckProfile(query.profile); !st.ok()) return st;
  if (query.user_memory < 1) {
    return absl::InvalidArgumentError("the bound needs M_U >= 1");
  }
  if (query.helper_memory < 0) {
    return absl::InvalidArgumentError("M must be nonnegative");
  }
  const int k = std::accumulate(query.profile.begin(), query.profile.end(), 0);
  BoundResult out;
  if (query.num_files < 2) {
    out.note = "N < 2: no admissible s, bound is 0";
    return out;
  }
  const int s_max = std::min(query.num_files / 2, k);
  for (int s = 1; s <= s_max; ++s) {
    absl::StatusOr<int> lambda = LambdaOfS(query.profile, s);
    if (!lambda.ok()) return lambda.status();
    const Rational term = CutsetTerm(s, *lambda, query.num_files,
                                     query.helper_memory, query.user_memory);
    if (term > out.value) {
      out.value = term;
      out.best_s = s;
    }
  }
  if (out.best_s == 0) out.note = "every term is nonpositive; clamped to 0";
  return out;
}

absl::StatusOr<OptimalityReport> OptimalityRatio(
    const Pda& pda, int num_files, std::span<const int> profile) {
  const std::vector<int> sorted = Sorted(profile);
  absl::StatusOr<RateReport> rate = ComputeRate(pda, sorted);
  if (!rate.ok()) return rate.status();
  const int k = std::accumulate(sorted.begin(), sorted.end(), 0);
  absl::StatusOr<BoundResult> bound = CutsetBound(
      {.num_files = num_files,
       .helper_memory = MemoryForPda(pda.params(), num_files),
       .profile = sorted});
  if (!bound.ok()) return bound.status();
  if (bound->value == Rational(0)) {
    return absl::FailedPreconditionError(
        absl::StrCat("lower bound is 0, ratio undefined: ", bound->note));
  }
  OptimalityReport out;
  out.rate = rate->rate;
  out.bound = bound->value;
  out.ratio = out.rate / out.bound;
  out.in_regime = num_files >= 2 * k;
  return out;
}

absl::StatusOr<std::vector<NamedPda>> MnPdaFamily(int num_caches) {
  std::vector<NamedPda> out;
  for (int t = 1; t < num_caches; ++t) {
    absl::StatusOr<Pda> pda = MnPda(num_caches, t);
    if (!pda.ok()) return pda.status();
    out.push_back({absl::StrCat("mn:", num_caches, ",", t), *std::move(pda)});
  }
  return out;
}

absl::StatusOr<std::vector<SweepPoint>> Sweep(int num_files,
                                              std::span<const int> profile,
                                              std::span<const NamedPda> pdas) {
  const std::vector<int> sorted = Sorted(profile);
  if (absl::Status st = CheckProfile(sorted); !st.ok()) return st;
  const int k = std::accumulate(sorted.begin(), sorted.end(), 0);
  auto bound_at = [&](const Rational& m) -> absl::StatusOr<Rational> {
    absl::StatusOr<BoundResult> b = CutsetBound(
        {.num_files = num_files, .helper_memory = m, .profile = sorted});
    if (!b.ok()) return b.status();
    return b->value;
  };

  std::vector<SweepPoint> points;
  absl::StatusOr<Rational> b0 = bound_at(0);
  if (!b0.ok()) return b0.status();
  points.push_back({.memory = 0,
                    .rate_achievable = k,
                    .rate_lower_bound = *b0,
                    .subpacketization = 1,
                    .pda_id = "baseline:M=0"});
  for (const NamedPda& named : pdas) {
    if (named.pda.num_caches() != static_cast<int>(sorted.size())) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "PDA %s has %d columns for %d caches", named.id,
          named.pda.num_caches(), sorted.size()));
    }
    absl::StatusOr<RateReport> rate = ComputeRate(named.pda, sorted);
    if (!rate.ok()) return rate.status();
    const Rational m = MemoryForPda(named.pda.params(), num_files);
    absl::StatusOr<Rational> b = bound_at(m);
    if (!b.ok()) return b.status();
    points.push_back({.memory = m,
                      .rate_achievable = rate->rate,
                      .rate_lower_bound = *b,
                      .subpacketization = named.pda.rows(),
                      .pda_id = named.id});
  }
  std::stable_sort(points.begin(), points.end(),
                   [](const SweepPoint& a, const SweepPoint& b) {
                     if (a.memory != b.memory) return a.memory < b.memory;
                     return a.rate_achievable < b.rate_achievable;
                   });
  // At equal M a point survives only if no lower-rate point also has
  // lower or equal subpacketization.
  std::vector<SweepPoint> out;
  for (SweepPoint& p : points) {
    const bool dominated =
        std::any_of(out.begin(), out.end(), [&](const SweepPoint& q) {
          return q.memory == p.memory &&
                 q.subpacketization <= p.subpacketization;
        });
    if (!dominated) out.push_back(std::move(p));
  }
  return out;
}

std::vector<SweepPoint> LowerConvexEnvelope(
    std::span<const SweepPoint> points) {
  std::vector<SweepPoint> sorted(points.begin(), points.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const SweepPoint& a, const SweepPoint& b) {
                     if (a.memory != b.memory) return a.memory < b.memory;
                     return a.rate_achievable < b.rate_achievable;
                   });
  // Cross product sign of (b - a) x (c - a).
  auto cross = [](const SweepPoint& a, const SweepPoint& b,
                  const SweepPoint& c) {
    return (b.memory - a.memory) * (c.rate_achievable - a.rate_achievable) -
           (b.rate_achievable - a.rate_achievable) * (c.memory - a.memory);
  };
  std::vector<SweepPoint> hull;
  for (const SweepPoint& p : sorted) {
    if (!hull.empty() && hull.back().memory == p.memory) continue;
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), p) <= 0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return hull;
}

Rational EnvelopeRate(std::span<const SweepPoint> hull,
                      const Rational& memory) {
  if (hull.empty()) return 0;
  if (memory <= hull.front().memory) return hull.front().rate_achievable;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    if (memory <= hull[i].memory) {
      const SweepPoint& a = hull[i - 1];
      const SweepPoint& b = hull[i];
      const Rational w = (memory - a.memory) / (b.memory - a.memory);
      return a.rate_achievable + w * (b.rate_achievable - a.rate_achievable);
    }
  }
  return hull.back().rate_achievable;
}

absl::StatusOr<std::vector<SweepPoint>> MemorySharingPoints(
    std::span<const SweepPoint> hull, int steps, int num_files,
    std::span<const int> profile) {
  const std::vector<int> sorted = Sorted(profile);
  std::vector<SweepPoint> out;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    for (int step = 1; step <= steps; ++step) {
      const Rational w(step, steps + 1);
      SweepPoint p;
      p.memory = hull[i - 1].memory + w * (hull[i].memory - hull[i - 1].memory);
      p.rate_achievable = EnvelopeRate(hull, p.memory);
      absl::StatusOr<BoundResult> b = CutsetBound(
          {.num_files = num_files, .helper_memory = p.memory,
           .profile = sorted});
      if (!b.ok()) return b.status();
      p.rate_lower_bound = b->value;
      p.subpacketization = hull[i - 1].subpacketization +
                           hull[i].subpacketization;
      p.pda_id = "sharing";
      out.push_back(std::move(p));
    }
  }
  return out;
}

namespace {

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  return absl::StrCat("\"", absl::StrReplaceAll(s, {{"\"", "\"\""}}), "\"");
}

}  // namespace

std::string FormatSweepCsv(std::span<const SweepPoint> points) {
  std::string out = "M,rate_achievable,rate_lower_bound,F,pda_id\n";
  for (const SweepPoint& p : points) {
    absl::StrAppend(&out, ToDecimalString(p.memory), ",",
                    ToDecimalString(p.rate_achievable), ",",
                    ToDecimalString(p.rate_lower_bound), ",",
                    p.subpacketization, ",", CsvField(p.pda_id), "\n");
  }
  return out;
}

}  // namespace sccpda
