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

#ifndef SCCPDA_SCHEME_H_
#define SCCPDA_SCHEME_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "sccpda/gf.h"
#include "sccpda/mds.h"
#include "sccpda/pda.h"
#include "sccpda/rational.h"

namespace sccpda {

// Every random draw (share randomness, keys, synthetic files) comes from
// this engine. mt19937_64 output is fixed by the standard, so a seed
// reproduces a run on any platform.
using Rng = std::mt19937_64;

// A (Lambda, K, M, N) shared-cache instance with unit user memory.
struct SystemConfig {
  int num_caches = 0;           // Lambda
  int num_users = 0;            // K
  Rational helper_memory = 0;   // M, in files
  int num_files = 0;            // N
  Rational user_memory = 1;     // M_U, must be 1
  std::size_t file_bytes = 0;   // B / 8
  FieldSpec field = FieldSpec::Default();
  std::uint64_t seed = 0;

  absl::Status Validate() const;
};

// M solving Z/F = M/(M+N), i.e. M = N Z / (F - Z).
Rational MemoryForPda(const PdaParams& params, int num_files);

// OK iff Z/F == M/(M+N) exactly.
absl::Status CheckMemoryRatio(const PdaParams& params,
                              const SystemConfig& config);

// User-to-cache association after relabeling caches so the profile is
// nonincreasing. Users are 0-based; caches below are relabeled indices.
struct Association {
  std::vector<int> profile;              // L, nonincreasing
  std::vector<std::vector<int>> groups;  // U_c, ascending user ids
  std::vector<int> user_to_cache;        // lambda_k
  // Relabeled cache c is original cache cache_order[c].
  std::vector<int> cache_order;

  int num_users() const { return static_cast<int>(user_to_cache.size()); }
  int num_caches() const { return static_cast<int>(profile.size()); }
  // 1-based position of `user` within its cache group.
  int RankOf(int user) const;
};

// Builds the association from each user's original cache. Caches are
// relabeled by a stable sort on load, so ties keep their original order.
absl::StatusOr<Association> Associate(int num_caches,
                                      std::span<const int> user_to_cache);

// Users are handed out consecutively: the first loads[0] users go to
// original cache 0, the next loads[1] to cache 1, and so on.
absl::StatusOr<Association> AssociationFromLoads(std::span<const int> loads);

// Transmission label (s, i): PDA integer s and user rank i, both 1-based.
struct Pair {
  int s = 0;
  int i = 0;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

std::string ToString(const Pair& p);

// The F x K generalized array. Column k belongs to user k.
class GArray {
 public:
  GArray(int rows, int users)
      : rows_(rows), users_(users), cells_(std::size_t(rows) * users) {}

  int rows() const { return rows_; }
  int users() const { return users_; }

  const std::optional<Pair>& at(int row, int user) const {
    return cells_[std::size_t(row) * users_ + user];
  }
  std::optional<Pair>& at(int row, int user) {
    return cells_[std::size_t(row) * users_ + user];
  }

  // Distinct pairs, s-major then i.
  std::vector<Pair> DistinctPairs() const;

  // (row, user) cells holding `p`, ordered by user.
  std::vector<std::pair<int, int>> Occurrences(const Pair& p) const;

  // Transpose rendering: one line per user, entries "*" or "(s,i)".
  std::string ToTransposeString() const;

 private:
  int rows_;
  int users_;
  std::vector<std::optional<Pair>> cells_;
};

// Replicates column lambda_k of `pda` for each user k, tagging integer g
// as (g, rank of k in its cache). `pda` must already be in relabeled order.
absl::StatusOr<GArray> BuildGArray(const Pda& pda,
                                   const Association& association);

// Equal-length files.
struct Library {
  std::vector<std::vector<std::uint8_t>> files;
  std::size_t file_bytes() const {
    return files.empty() ? 0 : files.front().size();
  }
};

absl::StatusOr<Library> SyntheticLibrary(int num_files, std::size_t bytes,
                                         std::uint64_t seed);

// Regular files of `dir` in lexicographic name order; all must have the
// same size.
absl::StatusOr<Library> LoadLibrary(const std::filesystem::path& dir);

// Shares of every file and what each helper cache holds.
struct HelperPlacement {
  SymbolMatrix encoder;  // F x F Cauchy
  int num_subfiles = 0;  // F - Z
  std::size_t symbols_per_share = 0;
  std::size_t padding_bits = 0;
  std::vector<std::vector<ShareVector>> shares;      // [n][j]
  std::vector<std::vector<ShareVector>> randomness;  // [n][z]
  std::vector<std::vector<int>> cache_rows;          // rows j stored by cache
};

absl::StatusOr<HelperPlacement> PlaceHelperCaches(const Pda& pda,
                                                  const SystemConfig& config,
                                                  const Library& library,
                                                  const GaloisField& field,
                                                  Rng& rng);

// One key per distinct pair; user k holds the keys of the pairs in its
// G column.
struct KeyPlacement {
  std::map<Pair, ShareVector> pool;
  std::vector<std::vector<Pair>> user_pairs;
};

KeyPlacement PlaceUserKeys(const GArray& g, std::size_t symbols_per_share,
                           const GaloisField& field, Rng& rng);

struct Participant {
  int user = 0;
  int row = 0;
};

struct Transmission {
  Pair pair;
  ShareVector payload;
  std::vector<Participant> participants;
  bool padded = true;
};

struct DeliveryOptions {
  // Sabotage for tests: send the XOR of shares without the key.
  bool strip_pads = false;
};

absl::Status ValidateDemands(std::span<const int> demands, int num_users,
                             int num_files);

// (0, 1, ..., K-1); needs N >= K.
absl::StatusOr<std::vector<int>> WorstCaseDemands(int num_users,
                                                  int num_files);

absl::StatusOr<std::vector<Transmission>> Deliver(
    const GArray& g, const HelperPlacement& placement,
    const KeyPlacement& keys, std::span<const int> demands,
    DeliveryOptions options = {});

// Everything one run of the scheme produces.
struct Session {
  SystemConfig config;
  Pda pda;  // column c belongs to relabeled cache c
  Association association;
  GArray g;
  HelperPlacement placement;
  KeyPlacement keys;
  std::vector<int> demands;
  std::vector<Transmission> transmissions;
  bool delivered = false;
};

// Placement phases: helper caches, association, G, user keys. Relabeled
// cache c (original cache association.cache_order[c]) takes column c of
// `pda`, so the most loaded cache always gets the first column.
absl::StatusOr<Session> PlaceSession(const Pda& pda,
                                     const SystemConfig& config,
                                     const Association& association,
                                     const Library& library);

absl::Status DeliverSession(Session& session, std::span<const int> demands,
                            DeliveryOptions options = {});

// User k's view: its helper cache, its keys and the broadcast. Fails if
// the transmissions reference a share the user cannot see.
absl::StatusOr<std::vector<std::uint8_t>> Decode(int user,
                                                 const Session& session);

struct RateReport {
  int num_transmissions = 0;
  Rational rate = 0;
  std::vector<int> per_s_multiplicity;  // L_{tau_s} for s = 1..S
  int subpacketization = 0;
};

// sum_s L_{tau_s} / (F - Z). `profile` is in the PDA's column order and
// must be nonincreasing.
absl::StatusOr<RateReport> ComputeRate(const Pda& pda,
                                       std::span<const int> profile);

// M = 0: user k caches a one-time pad as long as a file and the server
// sends W_{d_k} + K_k to each user.
struct BaselineSession {
  SystemConfig config;
  std::size_t symbols_per_file = 0;
  std::size_t padding_bits = 0;
  std::vector<ShareVector> files;  // file symbols
  std::vector<ShareVector> keys;   // per user
  std::vector<int> demands;
  std::vector<ShareVector> transmissions;  // per user
  Rational rate = 0;
};

absl::StatusOr<BaselineSession> RunBaselineM0(const SystemConfig& config,
                                              const Library& library,
                                              std::span<const int> demands);

absl::StatusOr<std::vector<std::uint8_t>> DecodeBaseline(
    int user, const BaselineSession& session);

}  // namespace sccpda

#endif  // SCCPDA_SCHEME_H_
