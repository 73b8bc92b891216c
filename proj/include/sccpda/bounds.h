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

#ifndef SCCPDA_BOUNDS_H_
#define SCCPDA_BOUNDS_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "sccpda/pda.h"
#include "sccpda/rational.h"

namespace sccpda {

// Cache (1-based) of the s-th user (1-based) when users are listed cache by
// cache in profile order: min{c : L_1 + ... + L_c >= s}. The profile must
// be nonincreasing.
absl::StatusOr<int> LambdaOfS(std::span<const int> profile, int s);

struct BoundQuery {
  int num_files = 0;           // N
  Rational helper_memory = 0;  // M
  Rational user_memory = 1;    // M_U >= 1
  std::vector<int> profile;    // nonincreasing; sums to K
};

struct BoundResult {
  Rational value = 0;
  int best_s = 0;    // 0 when no s is admissible
  std::string note;  // why the bound is trivially 0, if it is
};

// (s floor(N/s) - 1 - (lambda_s - 1) M - (s - 1) M_U) / (floor(N/s) - 1)
// for one s. Requires floor(N/s) >= 2.
Rational CutsetTerm(int s, int lambda_s, int num_files,
                    const Rational& helper_memory,
                    const Rational& user_memory);

// The same term written for M_U = 1: s - (lambda_s - 1) M / (floor(N/s) - 1).
Rational CutsetTermUnitUserMemory(int s, int lambda_s, int num_files,
                                  const Rational& helper_memory);

// Max of CutsetTerm over 1 <= s <= min(floor(N/2), K), clamped at 0.
absl::StatusOr<BoundResult> CutsetBound(const BoundQuery& query);

struct OptimalityReport {
  Rational rate = 0;
  Rational bound = 0;
  Rational ratio = 0;
  // N >= 2K, where 1 <= ratio <= Lambda is guaranteed.
  bool in_regime = false;
};

// Achievable rate of `pda` over the cut-set bound at M = N Z / (F - Z).
// `profile` is sorted into nonincreasing order first.
absl::StatusOr<OptimalityReport> OptimalityRatio(const Pda& pda,
                                                 int num_files,
                                                 std::span<const int> profile);

struct SweepPoint {
  Rational memory = 0;
  Rational rate_achievable = 0;
  Rational rate_lower_bound = 0;
  int subpacketization = 0;
  std::string pda_id;
};

struct NamedPda {
  std::string id;
  Pda pda;
};

// mn_pda(Lambda, t) for t = 1 .. Lambda - 1, ids "mn:Lambda,t".
absl::StatusOr<std::vector<NamedPda>> MnPdaFamily(int num_caches);

// One point per PDA plus the M = 0 baseline (rate K, F = 1), sorted by M.
// Points with equal M keep the lowest rate, plus any higher-rate point with
// strictly smaller F.
absl::StatusOr<std::vector<SweepPoint>> Sweep(int num_files,
                                              std::span<const int> profile,
                                              std::span<const NamedPda> pdas);

// Lower convex envelope of (memory, rate_achievable).
std::vector<SweepPoint> LowerConvexEnvelope(std::span<const SweepPoint> points);

// Memory-sharing rate at `memory` on an envelope from LowerConvexEnvelope.
// Beyond the last point the last rate is kept.
Rational EnvelopeRate(std::span<const SweepPoint> hull,
                      const Rational& memory);

// `steps` evenly spaced memory-sharing points strictly inside each hull
// segment, pda_id "sharing", with their lower bounds filled in.
absl::StatusOr<std::vector<SweepPoint>> MemorySharingPoints(
    std::span<const SweepPoint> hull, int steps, int num_files,
    std::span<const int> profile);

// Header "M,rate_achievable,rate_lower_bound,F,pda_id", decimals with up to
// six fractional digits.
std::string FormatSweepCsv(std::span<const SweepPoint> points);

}  // namespace sccpda

#endif  // SCCPDA_BOUNDS_H_
